"""Constructors for the witness modules of the finitistic-dimension family.

``build_Z(algebra, m)`` is the level-``m`` witness: a module over any
family algebra of level at least ``m`` whose minimal syzygy is the level
``m-1`` witness, so its projective dimension is exactly ``r + m``.

``build_Zt(algebra, m, t)`` is the ``t``-th member of the direct system
refining the witness (``t = 1`` gives the witness itself), and
``build_phi`` the connecting map into the next member, whose kernel
``build_U`` is nonzero only for levels two and below.  The direct limits
themselves are infinite-dimensional and out of scope; only the finite
members and maps are built.

Walk transcriptions for fixed levels live in ``data/walks.json``; the
level patterns beyond five are generated and cross-checked against the
stored ones in the tests.
"""

from __future__ import annotations

import random
from typing import List, Optional, Tuple

from .decomp import _WALKS
from .families import arrow_name, vname
from .homology import cokernel_of, hom_basis, projective_cover, projdim
from .matrices import Matrix
from .presentation import ALPHA, BETA
from .reps import (Algebra, ModuleMap, Representation, StringWord,
                   direct_sum, string_module)

Letter = Tuple[str, int]


def _al(src: str, tgt: str) -> str:
    return arrow_name(ALPHA, src, tgt)


def _be(src: str, tgt: str) -> str:
    return arrow_name(BETA, src, tgt)


def z_walk(m: int) -> StringWord:
    """The string part of the level-``m`` witness, for m >= 1."""
    if m < 1:
        raise ValueError("the level-0 witness is not a string")
    if str(m) in _WALKS["Z"]:
        spec = _WALKS["Z"][str(m)]
        return StringWord(spec["base"], [tuple(x) for x in spec["letters"]])
    return StringWord(vname("a", m), _z_block(m))


def _z_block(m: int) -> List[Letter]:
    """Walk letters of the short witness string at level m >= 3."""
    am, bm = vname("a", m), vname("b", m)
    am1, bm1 = vname("a", m - 1), vname("b", m - 1)
    if m == 3:
        return [(_be("a3", "b2"), 1), (_al("b3", "b2"), -1),
                (_be("b3", "c2"), 1), (_al("a2", "c2"), -1)]
    if m % 2 == 0:
        return [(_al(am, bm1), 1), (_be(bm, bm1), -1), (_al(bm, am1), 1)]
    return [(_be(am, bm1), 1), (_al(bm, bm1), -1), (_be(bm, am1), 1)]


def build_Z(algebra: Algebra, m: int) -> Representation:
    """Level-``m`` witness module; algebra must contain level ``m``."""
    if m < 0:
        raise ValueError("level must be nonnegative")
    if m == 0:
        parts = [algebra.simple("d0"), algebra.projective("a0"),
                 algebra.projective("b0"), algebra.projective("c0"),
                 algebra.simple("d1")]
        total, _, _ = direct_sum(algebra, parts)
        return total
    if m == 1:
        s = string_module(algebra, z_walk(1))
        total, _, _ = direct_sum(algebra, [s, algebra.simple("d0")])
        return total
    return string_module(algebra, z_walk(m))


def zt_walk(m: int, t: int) -> StringWord:
    """The string part of the ``t``-fold member at level m >= 1."""
    if t < 1:
        raise ValueError("t must be at least 1")
    if m == 1:
        letters: List[Letter] = [(_be("a1", "a0"), 1)]
        block = [(_al("c1", "a0"), -1), (_be("c1", "b0"), 1),
                 (_al("b1", "b0"), -1), (_be("b1", "c0"), 1),
                 (_al("a0", "c0"), -1)]
        for _ in range(t):
            letters += block
        letters.append((_be("a0", "u"), 1))
        return StringWord("a1", letters)
    if m == 2:
        letters = [(_al("a2", "c2"), 1), (_al("c2", "c1"), 1)]
        block = [(_be("b2", "c1"), -1), (_al("b2", "b1"), 1),
                 (_be("c2", "b1"), -1), (_al("c2", "c1"), 1)]
        for _ in range(t):
            letters += block
        letters += [(_al("c1", "a0"), 1), (_be("a1", "a0"), -1)]
        return StringWord("a2", letters)
    if m >= 3:
        block = _z_block(m)
        am, am1 = vname("a", m), vname("a", m - 1)
        junction: Letter = ((_al(am, am1), -1) if m % 2 == 1
                            else (_be(am, am1), -1))
        letters = list(block)
        for _ in range(t - 1):
            letters.append(junction)
            letters += block
        return StringWord(am, letters)
    raise ValueError("level-0 members are not strings")


def build_Zt(algebra: Algebra, m: int, t: int) -> Representation:
    """The ``t``-th member of the direct system at level ``m``."""
    if t < 1:
        raise ValueError("t must be at least 1")
    if m == 0:
        parts = [algebra.simple("d0"), algebra.projective("a0")]
        for _ in range(t):
            parts += [algebra.projective("b0"), algebra.projective("c0")]
        parts.append(algebra.simple("d1"))
        total, _, _ = direct_sum(algebra, parts)
        return total
    if m == 1:
        s = string_module(algebra, zt_walk(1, t))
        total, _, _ = direct_sum(algebra, [s, algebra.simple("d0")])
        return total
    return string_module(algebra, zt_walk(m, t))


def _string_prefix_map(algebra: Algebra, src_word: StringWord,
                       tgt_word: StringWord, keep: int
                       ) -> Tuple[Representation, Representation, ModuleMap]:
    """Map between two string modules sending walk position i to position i
    for i < keep and the rest to zero; the walks must agree up to keep."""
    pres = algebra.pres
    src_verts = src_word.walk_vertices(pres)
    tgt_verts = tgt_word.walk_vertices(pres)
    if src_verts[:keep] != tgt_verts[:keep]:
        raise ValueError("walk prefixes disagree")
    src = string_module(algebra, src_word)
    tgt = string_module(algebra, tgt_word)

    def local_indices(verts: List[str]) -> List[int]:
        counts = {}
        out = []
        for v in verts:
            out.append(counts.get(v, 0))
            counts[v] = counts.get(v, 0) + 1
        return out

    src_local = local_indices(src_verts)
    tgt_local = local_indices(tgt_verts)
    field = algebra.field
    mats = {v: Matrix.zeros(field, tgt.dims[v], src.dims[v])
            for v in algebra.vertices}
    for i in range(keep):
        v = src_verts[i]
        mats[v].data[tgt_local[i]][src_local[i]] = field.one
    return src, tgt, ModuleMap(src, tgt, mats)


def build_phi(algebra: Algebra, m: int, t: int) -> ModuleMap:
    """Connecting map from the ``t``-th to the ``(t+1)``-st member."""
    if t < 1:
        raise ValueError("t must be at least 1")
    field = algebra.field
    if m == 0:
        src = build_Zt(algebra, 0, t)
        tgt = build_Zt(algebra, 0, t + 1)
        # Component layout: d0, P(a0), t blocks of (P(b0), P(c0)), d1.
        mats = {v: Matrix.zeros(field, tgt.dims[v], src.dims[v])
                for v in algebra.vertices}
        # All components except the final d1 summand map identically; the
        # target's extra block and its own d1 receive nothing.  Only the d1
        # summand itself contributes a d1 coordinate, and it comes last.
        for v in algebra.vertices:
            n = src.dims[v] - (1 if v == "d1" else 0)
            for i in range(n):
                mats[v].data[i][i] = field.one
        phi = ModuleMap(src, tgt, mats)
        if not phi.is_morphism():
            raise AssertionError("connecting map failed at level 0")
        return phi
    if m == 1:
        s_src, s_tgt, smap = _string_prefix_map(
            algebra, zt_walk(1, t), zt_walk(1, t + 1), keep=5 * t + 2)
        src, src_inj, _ = direct_sum(algebra, [s_src, algebra.simple("d0")])
        tgt, tgt_inj, _ = direct_sum(algebra, [s_tgt, algebra.simple("d0")])
        mats = {}
        for v in algebra.vertices:
            block = tgt_inj[0].mats[v] @ smap.mats[v]
            zero_cols = Matrix.zeros(field, tgt.dims[v],
                                     src.dims[v] - block.cols)
            mats[v] = block.hstack(zero_cols)
        phi = ModuleMap(src, tgt, mats)
        if not phi.is_morphism():
            raise AssertionError("connecting map failed at level 1")
        return phi
    if m == 2:
        keep = 4 * t + 3
    else:
        keep = len(zt_walk(m, t)) + 1
    _, _, phi = _string_prefix_map(algebra, zt_walk(m, t),
                                   zt_walk(m, t + 1), keep=keep)
    if not phi.is_morphism():
        raise AssertionError(f"connecting map failed at level {m}")
    return phi


def build_U(algebra: Algebra, m: int, t: int) -> Representation:
    """Kernel shape of the connecting map: zero from level three up."""
    if t < 1:
        raise ValueError("t must be at least 1")
    if m == 0:
        return algebra.simple("d1")
    if m == 1:
        total, _, _ = direct_sum(
            algebra, [algebra.simple("u"), algebra.simple("d0")])
        return total
    if m == 2:
        return string_module(algebra, StringWord("a1", [(_be("a1", "a0"), 1)]))
    return algebra.zero_module()


# -- finite-projective-dimension samples --------------------------------------


def finite_pd_pool(algebra: Algebra) -> List[Representation]:
    """Seed modules of certified finite projective dimension over a level-2
    algebra: projectives, chain simples, and the low-level witnesses."""
    r = algebra.pres.meta.get("r", 1)
    pool: List[Representation] = [algebra.projective(v) for v in algebra.vertices]
    pool += [algebra.simple(vname("d", i)) for i in range(r + 1)]
    pool.append(build_Z(algebra, 0))
    pool.append(build_Z(algebra, 1))
    pool.append(build_Z(algebra, 2))
    return pool


def random_extension(algebra: Algebra, base: Representation,
                     top: Representation, rng: random.Random) -> Representation:
    """A random extension of ``top`` by ``base``; its projective dimension
    is bounded by the larger of the two."""
    cover = projective_cover(top)
    homs = hom_basis(cover.syzygy, base)
    g = ModuleMap.zero(cover.syzygy, base)
    for h in homs:
        c = rng.choice((-1, 0, 0, 1))
        if c:
            g = g + h.scale(algebra.field(c))
    # Pushout: (cover (+) base) / graph of (inclusion, -g).
    total, _, _ = direct_sum(algebra, [cover.cover, base])
    field = algebra.field
    mats = {}
    for v in algebra.vertices:
        upper = cover.inclusion.mats[v]
        lower = g.mats[v].scale(-field.one)
        m = Matrix.zeros(field, total.dims[v], cover.syzygy.dims[v])
        for i in range(upper.rows):
            for j in range(upper.cols):
                m.data[i][j] = upper.data[i][j]
        off = upper.rows
        for i in range(lower.rows):
            for j in range(lower.cols):
                m.data[off + i][j] = lower.data[i][j]
        mats[v] = m
    graph = ModuleMap(cover.syzygy, total, mats)
    ext, _ = cokernel_of(graph)
    return ext


def sample_finite_pd_modules(algebra: Algebra, count: int, seed: int,
                             max_dim: int = 60, cutoff: Optional[int] = None
                             ) -> List[Tuple[Representation, "object"]]:
    """Certified finite-pd modules over a level-2 algebra, with reports.

    Built from the seed pool by direct sums and random extensions (both
    preserve finite projective dimension); every sample's verdict is
    certified by the syzygy chain before it is returned.
    """
    r = algebra.pres.meta.get("r", 1)
    if cutoff is None:
        cutoff = r + 2 + 4
    rng = random.Random(f"finite-pd-samples:{seed}")
    pool = finite_pd_pool(algebra)
    out = []
    attempts = 0
    while len(out) < count and attempts < count * 20:
        attempts += 1
        kind = rng.random()
        if kind < 0.4:
            parts = [rng.choice(pool) for _ in range(rng.randint(1, 3))]
            m, _, _ = direct_sum(algebra, parts)
        else:
            top = rng.choice(pool)
            base = rng.choice(pool)
            m = random_extension(algebra, base, top, rng)
        if not 0 < m.total_dim() <= max_dim:
            continue
        report = projdim(m, cutoff=cutoff, seed=seed)
        if report.verdict != "finite":
            # Extensions of finite-pd modules stay finite; a miss here is a bug.
            raise AssertionError(f"sample unexpectedly not finite: {report.verdict}")
        out.append((m, report))
    if len(out) < count:
        raise RuntimeError("could not build enough finite-pd samples")
    return out
