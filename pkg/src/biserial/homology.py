"""The homological engine: radicals, covers, syzygies, Hom spaces,
certified isomorphism, summand tests, and projective dimension.

Projective dimension is decided by iterating minimal syzygies.  A finite
verdict means the chain literally reaches zero.  An infinite verdict is a
theorem: it carries a verified isomorphism between two distinct nonzero
syzygies, which forces the chain to cycle forever.  When neither happens
within the cutoff the report says so; an inconclusive outcome is never
silently treated as finite.

Positive isomorphism answers are certificates (an explicit intertwining
map, invertible at every vertex).  Negative answers from the random
search are only "no isomorphism found" -- except for the dimension-vector
and Hom-dimension fast paths, which are sound.
"""

from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .matrices import Matrix
from .fields import PrimeField
from .reps import ModuleMap, Representation, direct_sum


# -- subspace plumbing -------------------------------------------------------


def radical(module: Representation) -> Tuple[Representation, ModuleMap]:
    """rad M = sum of all arrow images, with its inclusion into M."""
    algebra = module.algebra
    field = algebra.field
    incl_mats: Dict[str, Matrix] = {}
    for v in algebra.vertices:
        cols = Matrix.zeros(field, module.dims[v], 0)
        for a in algebra.pres.quiver.arrows_into(v):
            m = module.mats[a.name]
            if m.cols:
                cols = cols.hstack(m)
        incl_mats[v] = cols.image_basis()
    return _sub_representation(module, incl_mats)


def _sub_representation(module: Representation, incl_mats: Dict[str, Matrix]
                        ) -> Tuple[Representation, ModuleMap]:
    """Subrepresentation spanned by given independent columns per vertex.

    The spans must be arrow-stable; the induced action is solved exactly.
    """
    algebra = module.algebra
    dims = {v: incl_mats[v].cols for v in algebra.vertices}
    mats: Dict[str, Matrix] = {}
    for a in algebra.pres.quiver.arrows.values():
        image = module.mats[a.name] @ incl_mats[a.source]
        induced = incl_mats[a.target].solve(image)
        if induced is None:
            raise ValueError(f"span not stable under arrow {a.name}")
        mats[a.name] = induced
    sub = Representation(algebra, dims, mats, check=False)
    return sub, ModuleMap(sub, module, incl_mats)


def top_dims(module: Representation) -> Dict[str, int]:
    """Dimension vector of M / rad M."""
    algebra = module.algebra
    out = {}
    for v in algebra.vertices:
        cols = Matrix.zeros(algebra.field, module.dims[v], 0)
        for a in algebra.pres.quiver.arrows_into(v):
            m = module.mats[a.name]
            if m.cols:
                cols = cols.hstack(m)
        out[v] = module.dims[v] - cols.rank()
    return out


def kernel_of(f: ModuleMap) -> Tuple[Representation, ModuleMap]:
    """Vertexwise kernel with induced arrow action and inclusion."""
    incl = {v: f.mats[v].kernel_basis() for v in f.source.algebra.vertices}
    return _sub_representation(f.source, incl)


def cokernel_of(f: ModuleMap) -> Tuple[Representation, ModuleMap]:
    """Vertexwise cokernel with induced action and the projection map."""
    algebra = f.target.algebra
    field = algebra.field
    proj_mats: Dict[str, Matrix] = {}
    section_mats: Dict[str, Matrix] = {}
    for v in algebra.vertices:
        n = f.target.dims[v]
        image = f.mats[v].image_basis()
        # Extend the image basis by unit vectors and read off coordinates.
        ext = image
        chosen: List[int] = []
        rank = image.rank()
        for i in range(n):
            if ext.cols == n:
                break
            unit = Matrix.zeros(field, n, 1)
            unit.data[i][0] = field.one
            candidate = ext.hstack(unit)
            if candidate.rank() > ext.cols:
                ext = candidate
                chosen.append(i)
        full = ext
        inv = full.inverse()
        if inv is None:
            raise ValueError("basis extension failed")
        # Quotient coordinates are the rows of the inverse past the image part.
        proj = Matrix(field, n - rank, n, inv.data[rank:])
        proj_mats[v] = proj
        section = Matrix.zeros(field, n, n - rank)
        for k, i in enumerate(chosen):
            section.data[i][k] = field.one
        section_mats[v] = section
    dims = {v: proj_mats[v].rows for v in algebra.vertices}
    mats = {}
    for a in algebra.pres.quiver.arrows.values():
        mats[a.name] = (proj_mats[a.target] @ f.target.mats[a.name]
                        @ section_mats[a.source])
    coker = Representation(algebra, dims, mats, check=False)
    return coker, ModuleMap(f.target, coker, proj_mats)


def image_of(f: ModuleMap) -> Tuple[Representation, ModuleMap]:
    """Vertexwise image as a subrepresentation of the target."""
    incl = {v: f.mats[v].image_basis() for v in f.target.algebra.vertices}
    return _sub_representation(f.target, incl)


# -- covers and syzygies -----------------------------------------------------


@dataclass
class CoverData:
    """Minimal projective cover of a module with its syzygy."""

    module: Representation
    cover: Representation
    cover_map: ModuleMap
    syzygy: Representation
    inclusion: ModuleMap
    multiplicities: Dict[str, int]

    def verify(self) -> bool:
        """Surjectivity, exactness of dims, and cover minimality."""
        m = self.module
        for v in m.algebra.vertices:
            if self.cover_map.mats[v].rank() != m.dims[v]:
                return False
            if self.cover.dims[v] - self.syzygy.dims[v] != m.dims[v]:
                return False
        if not self.cover_map.is_morphism() or not self.inclusion.is_morphism():
            return False
        composite = self.cover_map.compose(self.inclusion)
        if any(not composite.mats[v].is_zero() for v in m.algebra.vertices):
            return False
        return top_dims(self.cover) == top_dims(self.module)


def projective_cover(module: Representation) -> CoverData:
    """Minimal cover: one projective summand per top basis vector."""
    algebra = module.algebra
    field = algebra.field
    _, rad_incl = radical(module)
    summands: List[Representation] = []
    generators: List[Tuple[str, Matrix]] = []  # (vertex, chosen lift column)
    multiplicities: Dict[str, int] = {}
    for v in algebra.vertices:
        n = module.dims[v]
        if n == 0:
            continue
        rad_cols = rad_incl.mats[v]
        ext = rad_cols
        for i in range(n):
            if ext.cols == n:
                break
            unit = Matrix.zeros(field, n, 1)
            unit.data[i][0] = field.one
            candidate = ext.hstack(unit)
            if candidate.rank() > ext.cols:
                ext = candidate
                lift = Matrix.zeros(field, n, 1)
                lift.data[i][0] = field.one
                generators.append((v, lift))
                summands.append(algebra.projective(v))
                multiplicities[v] = multiplicities.get(v, 0) + 1
    if not summands:
        zero = algebra.zero_module()
        return CoverData(module, zero, ModuleMap.zero(zero, module),
                         zero, ModuleMap.zero(zero, zero), {})
    cover, injections, _ = direct_sum(algebra, summands)
    cover_mats = {v: Matrix.zeros(field, module.dims[v], cover.dims[v])
                  for v in algebra.vertices}
    basis = algebra.basis
    for (vertex, lift), summand, inj in zip(generators, summands, injections):
        # The projective summand's basis classes are the path classes at
        # ``vertex``; each maps to path-action on the chosen top lift.
        ids = basis.classes_from(vertex)
        local: Dict[str, List[int]] = {}
        for i in ids:
            local.setdefault(basis.class_target(i), []).append(i)
        for tgt, grp in local.items():
            for k, class_id in enumerate(grp):
                path = basis.class_path(class_id)
                vec = lift if not path else module.path_matrix(path) @ lift
                # Column of this class inside the summand, then the sum.
                col_in_summand = Matrix.zeros(field, summand.dims[tgt], 1)
                col_in_summand.data[k][0] = field.one
                col_in_cover = inj.mats[tgt] @ col_in_summand
                j = next(idx for idx in range(col_in_cover.rows)
                         if col_in_cover.data[idx][0])
                for row in range(module.dims[tgt]):
                    cover_mats[tgt].data[row][j] = vec.data[row][0]
    cover_map = ModuleMap(cover, module, cover_mats)
    syzygy_rep, inclusion = kernel_of(cover_map)
    return CoverData(module, cover, cover_map, syzygy_rep, inclusion,
                     multiplicities)


def syzygy(module: Representation) -> Representation:
    return projective_cover(module).syzygy


# -- Hom spaces and isomorphism ----------------------------------------------


def hom_basis(source: Representation, target: Representation) -> List[ModuleMap]:
    """Basis of the intertwining solution space Hom(source, target)."""
    if source.algebra.pres is not target.algebra.pres:
        raise ValueError("hom across different presentations")
    algebra = source.algebra
    field = algebra.field
    offsets: Dict[str, int] = {}
    total = 0
    for v in algebra.vertices:
        offsets[v] = total
        total += target.dims[v] * source.dims[v]
    if total == 0:
        return []
    rows: List[List] = []
    zero = field.zero
    for a in algebra.pres.quiver.arrows.values():
        x, y = a.source, a.target
        A = source.mats[a.name]   # dims[y] x dims[x]
        B = target.mats[a.name]
        # Equation F_y A - B F_x = 0, entrywise over unknowns F_v[i][j].
        for i in range(target.dims[y]):
            for j in range(source.dims[x]):
                row = [zero] * total
                base_y = offsets[y]
                for k in range(source.dims[y]):
                    coeff = A.data[k][j]
                    if coeff:
                        row[base_y + i * source.dims[y] + k] += coeff
                base_x = offsets[x]
                for k in range(target.dims[x]):
                    coeff = B.data[i][k]
                    if coeff:
                        row[base_x + k * source.dims[x] + j] -= coeff
                if any(row):
                    rows.append(row)
    if not rows:
        kernel = Matrix.identity(field, total)
    else:
        kernel = Matrix(field, len(rows), total,
                        [[field(x) for x in row] for row in rows]).kernel_basis()
    out: List[ModuleMap] = []
    for c in range(kernel.cols):
        mats: Dict[str, Matrix] = {}
        for v in algebra.vertices:
            m = Matrix.zeros(field, target.dims[v], source.dims[v])
            base = offsets[v]
            for i in range(target.dims[v]):
                for j in range(source.dims[v]):
                    m.data[i][j] = kernel.data[base + i * source.dims[v] + j][c]
            mats[v] = m
        out.append(ModuleMap(source, target, mats))
    return out


def hom_dim(source: Representation, target: Representation) -> int:
    return len(hom_basis(source, target))


def certified_iso(m: Representation, n: Representation, trials: Optional[int] = None,
                  seed: int = 0) -> Optional[ModuleMap]:
    """Search for a verified isomorphism; None means none was found.

    A returned map is a certificate: intertwining and invertible at every
    vertex.  None is a sound negative only when the dimension vectors
    differ or one of the Hom spaces is zero; otherwise it just reports
    that ``trials`` random combinations of a Hom basis all failed.
    """
    if m.dims != n.dims:
        return None
    if m.is_zero():
        return ModuleMap.zero(m, n)
    field = m.algebra.field
    if trials is None:
        trials = 40 if isinstance(field, PrimeField) else 20
    basis = hom_basis(m, n)
    if not basis:
        return None
    if hom_dim(n, m) == 0:
        return None
    rng = random.Random(f"certified-iso:{seed}")
    verts = m.algebra.vertices
    if isinstance(field, PrimeField):
        coeff_pool = list(range(field.p))
    else:
        coeff_pool = list(range(-9, 10))
    for _ in range(trials):
        cand = basis[0].scale(field(rng.choice(coeff_pool)))
        for h in basis[1:]:
            cand = cand + h.scale(field(rng.choice(coeff_pool)))
        if all(cand.mats[v].rank() == m.dims[v] for v in verts):
            return cand
    return None


def is_direct_summand_simple(vertex: str, module: Representation
                             ) -> Tuple[bool, Optional[Tuple[ModuleMap, ModuleMap]]]:
    """Split-pair test for the simple at ``vertex`` inside ``module``.

    Sound in both directions: the simple is a summand iff the composition
    pairing Hom(S, M) x Hom(M, S) -> k is nonzero; the witness pair
    composes to the identity of the simple.
    """
    algebra = module.algebra
    simple = algebra.simple(vertex)
    sections = hom_basis(simple, module)
    retractions = hom_basis(module, simple)
    for s in sections:
        for p in retractions:
            val = (p.mats[vertex] @ s.mats[vertex]).data[0][0]
            if val:
                inv = algebra.field.one / val if not isinstance(algebra.field, PrimeField) \
                    else pow(val, algebra.field.p - 2, algebra.field.p)
                return True, (s, p.scale(inv))
    return False, None


# -- projective dimension ----------------------------------------------------


@dataclass
class PdReport:
    """Outcome of a syzygy-chain run.

    ``verdict`` is one of ``finite``, ``infinite``, ``inconclusive``,
    ``minus_infinity`` (the zero module).  ``chain`` records the dimension
    vectors of the successive syzygies, starting with the module itself.
    """

    verdict: str
    chain: List[Tuple[Tuple[str, int], ...]]
    value: Optional[int] = None           # finite: the projective dimension
    cycle: Optional[Tuple[int, int]] = None
    cutoff: Optional[int] = None
    seed: int = 0
    iso: Optional[ModuleMap] = None

    def is_finite(self) -> bool:
        return self.verdict == "finite"

    def describe(self) -> str:
        if self.verdict == "finite":
            return f"Finite({self.value})"
        if self.verdict == "infinite":
            return f"Infinite (cycle {self.cycle[0]}≅{self.cycle[1]})"
        if self.verdict == "minus_infinity":
            return "MinusInfinity (zero module)"
        return f"Inconclusive (cutoff {self.cutoff})"

    def to_record(self) -> dict:
        rec = {
            "verdict": self.verdict,
            "chain": [[[v, d] for v, d in dims] for dims in self.chain],
            "seed": self.seed,
        }
        if self.value is not None:
            rec["pd"] = self.value
        if self.cycle is not None:
            rec["cycle"] = list(self.cycle)
        if self.cutoff is not None:
            rec["cutoff"] = self.cutoff
        return rec


def _fingerprint(module: Representation) -> tuple:
    tops = top_dims(module)
    return (module.dim_vector(),
            hom_dim(module, module),
            tuple(sorted((v, d) for v, d in tops.items() if d)))


def projdim(module: Representation, cutoff: int = 32, seed: int = 0,
            trials: Optional[int] = None) -> PdReport:
    """Projective dimension by iterated minimal syzygies.

    Finite(n) when the (n+1)-st syzygy vanishes; Infinite when some
    syzygy is certified isomorphic to an earlier nonzero one (the chain
    then cycles forever, since minimal syzygies are isomorphism
    invariants); Inconclusive after ``cutoff`` steps.  The zero module
    gets the distinct verdict ``minus_infinity``.
    """
    if cutoff < 1:
        raise ValueError("cutoff must be at least 1")
    current = module
    chain = [current.dim_vector()]
    if current.is_zero():
        return PdReport("minus_infinity", chain, seed=seed)
    seen: List[Tuple[tuple, Representation, int]] = [(_fingerprint(current), current, 0)]
    for step in range(1, cutoff + 1):
        current = syzygy(current)
        chain.append(current.dim_vector())
        if current.is_zero():
            return PdReport("finite", chain, value=step - 1, seed=seed)
        fp = _fingerprint(current)
        for old_fp, old_rep, old_idx in seen:
            if old_fp == fp:
                iso = certified_iso(old_rep, current, trials=trials, seed=seed)
                if iso is not None:
                    return PdReport("infinite", chain, cycle=(old_idx, step),
                                    seed=seed, iso=iso)
        seen.append((fp, current, step))
    return PdReport("inconclusive", chain, cutoff=cutoff, seed=seed)


def record_digest(record) -> str:
    """Stable short digest of a JSON-serializable record."""
    blob = json.dumps(record, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:16]
