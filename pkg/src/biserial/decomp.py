"""Constructive splitting of modules over the pruned level-2 algebra.

Three layers, each producing a verified certificate:

* ``strip_pc2`` splits off every direct summand isomorphic to the
  projective-injective P(c2); the count is the rank of the long alpha
  path out of c2, and the split is certified by an explicit isomorphism.
* ``interval_decompose`` decomposes a representation of a path-shaped
  quiver (arbitrary arrow orientations) into interval summands.  Interval
  modules are bricks, so a summand copy exists iff the composition
  pairing Hom(J, V) x Hom(V, J) is nonzero, and one copy can be peeled
  off deterministically from any nonzero pairing entry.  Iterating yields
  the multiset of intervals and an invertible vertexwise basis change.
* ``lemma2_split`` combines the two: after stripping P(c2) copies, the
  restriction to the six-vertex path subquiver decomposes into intervals;
  those whose support contains c2 assemble into a submodule isomorphic to
  a sum of the ten canonical c2-strings, and the rest extends to a
  complement with zero c2-component.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from importlib import resources
from typing import Dict, List, Optional, Sequence, Tuple

from .families import build_subquiver_U
from .fields import PrimeField
from .homology import _sub_representation, hom_basis, kernel_of
from .matrices import Matrix
from .presentation import Presentation, PresentationError
from .reps import (Algebra, ModuleMap, Representation, RepresentationError,
                   StringWord, direct_sum, string_module)


class NotPathQuiver(ValueError):
    """interval_decompose input whose underlying graph is not a path."""


class CertificateFailure(RuntimeError):
    """A splitting certificate failed verification: an implementation bug,
    not a mathematical failure."""


def _load_walks() -> dict:
    with resources.files("biserial.data").joinpath("walks.json").open() as fh:
        return json.load(fh)


_WALKS = _load_walks()


def xset(algebra: Algebra) -> List[Representation]:
    """The ten canonical strings through c2, in figure order.

    Row one (ending with a beta step to b1) then row two; entry 10 is the
    simple at c2.  Each has one-dimensional c2 component.
    """
    out = []
    for spec in _WALKS["X"]:
        word = StringWord(spec["base"], [tuple(x) for x in spec["letters"]])
        out.append(string_module(algebra, word))
    return out


# -- stripping projective-injective c2 summands ------------------------------


def _c2_amalgam_paths(pres: Presentation) -> Tuple[Tuple[str, ...], Tuple[str, ...]]:
    """The identified alpha-power and beta-power paths out of c2."""
    for rel in pres.relations:
        if rel.kind == "eq" and pres.path_endpoints(rel.left)[0] == "c2":
            return rel.left, rel.right
    raise PresentationError(f"{pres.name} has no amalgam relation at c2")


def solve_retraction(embed: ModuleMap) -> Optional[ModuleMap]:
    """A module map r with r o embed = id on embed's source, if one exists."""
    M, N = embed.target, embed.source
    basis = hom_basis(M, N)
    if not basis:
        return None if N.total_dim() else ModuleMap.zero(M, N)
    composites = [h.compose(embed) for h in basis]
    field = M.algebra.field
    rows: List[List] = []
    rhs: List[List] = []
    for v in M.algebra.vertices:
        d = N.dims[v]
        for i in range(d):
            for j in range(d):
                rows.append([c.mats[v].data[i][j] for c in composites])
                rhs.append([field.one if i == j else field.zero])
    system = Matrix(field, len(rows), len(basis), rows)
    sol = system.solve(Matrix(field, len(rhs), 1, rhs))
    if sol is None:
        return None
    r = ModuleMap.zero(M, N)
    for k, h in enumerate(basis):
        c = sol.data[k][0]
        if c:
            r = r + h.scale(c)
    return r


@dataclass
class StripResult:
    multiplicity: int
    complement: Representation
    complement_inclusion: ModuleMap      # complement -> M
    projective_embedding: ModuleMap      # P(c2)^multiplicity -> M
    certificate: ModuleMap               # P(c2)^a (+) complement -> M


def strip_pc2(module: Representation) -> StripResult:
    """Split off all P(c2) direct summands, certified.

    The multiplicity equals the rank of the long alpha path acting on the
    c2 component; the orthogonal complement of its kernel (chosen by rref
    pivots) generates the projective part, which splits off because P(c2)
    is also injective.
    """
    algebra = module.algebra
    field = algebra.field
    alpha_path, beta_path = _c2_amalgam_paths(algebra.pres)
    long_alpha = module.path_matrix(alpha_path)
    kernel = long_alpha.kernel_basis()
    a = module.dims["c2"] - kernel.cols

    if a == 0:
        zero_p = algebra.zero_module()
        cert_total, _, _ = direct_sum(algebra, [zero_p, module])
        cert = _assemble_sum_map(
            cert_total, [ModuleMap.zero(zero_p, module), ModuleMap.identity(module)], module)
        return StripResult(0, module, ModuleMap.identity(module),
                           ModuleMap.zero(zero_p, module), cert)

    # Complement of the kernel inside the c2 space, chosen deterministically.
    ext = kernel
    chosen: List[int] = []
    n = module.dims["c2"]
    for i in range(n):
        if ext.cols == n:
            break
        unit = Matrix.zeros(field, n, 1)
        unit.data[i][0] = field.one
        candidate = ext.hstack(unit)
        if candidate.rank() > ext.cols:
            ext = candidate
            chosen.append(i)
    assert len(chosen) == a

    pc2 = algebra.projective("c2")
    copies = [pc2] * a
    psum, inj, _ = direct_sum(algebra, copies)
    basis = algebra.basis
    ids = basis.classes_from("c2")
    local: Dict[str, List[int]] = {}
    for i in ids:
        local.setdefault(basis.class_target(i), []).append(i)
    embed_mats = {v: Matrix.zeros(field, module.dims[v], psum.dims[v])
                  for v in algebra.vertices}
    for copy_idx, i0 in enumerate(chosen):
        gen = Matrix.zeros(field, n, 1)
        gen.data[i0][0] = field.one
        for tgt, grp in local.items():
            for k, class_id in enumerate(grp):
                path = basis.class_path(class_id)
                vec = gen if not path else module.path_matrix(path) @ gen
                # Column index inside the sum: injection of this copy.
                col_local = Matrix.zeros(field, pc2.dims[tgt], 1)
                col_local.data[k][0] = field.one
                col_sum = inj[copy_idx].mats[tgt] @ col_local
                j = next(idx for idx in range(col_sum.rows) if col_sum.data[idx][0])
                for row in range(module.dims[tgt]):
                    embed_mats[tgt].data[row][j] = vec.data[row][0]
    embedding = ModuleMap(psum, module, embed_mats)
    if not embedding.is_morphism():
        raise CertificateFailure("projective embedding is not a module map")
    retraction = solve_retraction(embedding)
    if retraction is None:
        raise CertificateFailure("no retraction onto the projective part")
    complement, incl = kernel_of(retraction)
    total, _, _ = direct_sum(algebra, [psum, complement])
    cert = _assemble_sum_map(total, [embedding, incl], module)
    if not cert.is_iso():
        raise CertificateFailure("strip certificate is not an isomorphism")
    # The complement carries no surviving long alpha path out of c2.
    comp_alpha = complement.path_matrix(alpha_path)
    comp_beta = complement.path_matrix(beta_path)
    if not comp_alpha.is_zero() or not comp_beta.is_zero():
        raise CertificateFailure("complement still has a projective c2 summand")
    return StripResult(a, complement, incl, embedding, cert)


def _assemble_sum_map(total: Representation, maps: Sequence[ModuleMap],
                      target: Representation) -> ModuleMap:
    """Map out of a direct sum given maps out of its summands, by hstack."""
    field = total.algebra.field
    mats = {}
    for v in total.algebra.vertices:
        m = Matrix.zeros(field, target.dims[v], 0)
        for f in maps:
            m = m.hstack(f.mats[v])
        mats[v] = m
    return ModuleMap(total, target, mats)


# -- interval decomposition over path quivers --------------------------------


def path_order(pres: Presentation) -> List[str]:
    """Vertices of a path-shaped quiver in path order; rejects others."""
    quiver = pres.quiver
    verts = list(quiver.vertices)
    if not verts:
        raise NotPathQuiver("empty quiver")
    neighbors: Dict[str, List[str]] = {v: [] for v in verts}
    edge_count = 0
    for a in quiver.arrows.values():
        if a.source == a.target:
            raise NotPathQuiver(f"loop at {a.source}")
        neighbors[a.source].append(a.target)
        neighbors[a.target].append(a.source)
        edge_count += 1
    if edge_count != len(verts) - 1:
        raise NotPathQuiver("edge count does not match a path")
    if any(len(ns) > 2 for ns in neighbors.values()):
        raise NotPathQuiver("vertex of degree greater than two")
    ends = sorted(v for v, ns in neighbors.items() if len(ns) <= 1)
    if len(verts) == 1:
        return verts
    if len(ends) != 2:
        raise NotPathQuiver("not exactly two endpoints")
    order = [ends[0]]
    prev = None
    while len(order) < len(verts):
        nxt = [u for u in neighbors[order[-1]] if u != prev]
        if not nxt:
            raise NotPathQuiver("disconnected quiver")
        prev = order[-1]
        order.append(nxt[0])
    return order


def interval_module(algebra: Algebra, order: List[str], lo: int, hi: int
                    ) -> Representation:
    """Thin representation supported on order[lo..hi] with identity maps."""
    field = algebra.field
    dims = {v: (1 if lo <= order.index(v) <= hi else 0) for v in order}
    mats = {}
    for a in algebra.pres.quiver.arrows.values():
        i, j = order.index(a.source), order.index(a.target)
        if lo <= i <= hi and lo <= j <= hi:
            mats[a.name] = Matrix.identity(field, 1)
    return Representation(algebra, dims, mats)


@dataclass
class IntervalSummand:
    interval: Tuple[str, ...]
    multiplicity: int


@dataclass
class IntervalDecomposition:
    order: List[str]
    summands: List[IntervalSummand]
    pieces: List[Tuple[Tuple[int, int], ModuleMap]]  # each embeds into the input
    certificate: ModuleMap  # direct sum of interval copies -> input, an iso

    def total_dim(self) -> int:
        return sum(s.multiplicity * len(s.interval) for s in self.summands)


def interval_decompose(module: Representation,
                       order: Optional[List[str]] = None) -> IntervalDecomposition:
    """Decompose a path-quiver representation into interval summands.

    Deterministic split-pair peeling: intervals are scanned longest first;
    a nonzero entry of the composition pairing yields an idempotent that
    splits one copy off exactly.  The certificate is the assembled
    isomorphism from the direct sum of the found intervals.

    ``order`` fixes the path orientation used for interval bookkeeping;
    by default one of the two endpoint orders is chosen.
    """
    algebra = module.algebra
    computed = path_order(algebra.pres)
    if order is None:
        order = computed
    elif list(order) not in (computed, computed[::-1]):
        raise NotPathQuiver(f"given order {order} does not match the quiver path")
    n = len(order)
    candidates = sorted(((lo, hi) for lo in range(n) for hi in range(lo, n)),
                        key=lambda t: (-(t[1] - t[0]), t[0]))
    pieces: List[Tuple[Tuple[int, int], ModuleMap]] = []
    current = module
    into_original = ModuleMap.identity(module)
    while current.total_dim():
        peeled = False
        for lo, hi in candidates:
            if any(current.dims[order[k]] == 0 for k in range(lo, hi + 1)):
                continue
            try:
                j_rep = interval_module(algebra, order, lo, hi)
            except RepresentationError:
                # Relations on the path quiver can rule an interval out.
                continue
            sections = hom_basis(j_rep, current)
            if not sections:
                continue
            retractions = hom_basis(current, j_rep)
            pair = _nonzero_pairing(j_rep, order[lo], sections, retractions)
            if pair is None:
                continue
            s, p = pair
            complement, incl = kernel_of(p)
            pieces.append(((lo, hi), into_original.compose(s)))
            into_original = into_original.compose(incl)
            current = complement
            peeled = True
            break
        if not peeled:
            raise CertificateFailure(
                "no interval summand found in a nonzero path-quiver module")
    counts: Dict[Tuple[int, int], int] = {}
    for rng, _ in pieces:
        counts[rng] = counts.get(rng, 0) + 1
    summands = [IntervalSummand(tuple(order[rng[0]:rng[1] + 1]), mult)
                for rng, mult in sorted(counts.items())]
    reps = [interval_module(algebra, order, lo, hi) for (lo, hi), _ in pieces]
    if reps:
        total, _, _ = direct_sum(algebra, reps)
    else:
        total = algebra.zero_module()
    certificate = _assemble_sum_map(total, [f for _, f in pieces], module)
    if not certificate.is_iso():
        raise CertificateFailure("interval decomposition certificate failed")
    return IntervalDecomposition(order, summands, pieces, certificate)


def _nonzero_pairing(j_rep: Representation, probe_vertex: str,
                     sections: Sequence[ModuleMap],
                     retractions: Sequence[ModuleMap]
                     ) -> Optional[Tuple[ModuleMap, ModuleMap]]:
    """A pair (s, p) with p o s = id; interval modules are bricks, so any
    nonzero composite is a scalar and can be normalized."""
    field = j_rep.algebra.field
    for s in sections:
        for p in retractions:
            comp = p.compose(s)
            val = comp.mats[probe_vertex].data[0][0]
            if val:
                inv = pow(val, field.p - 2, field.p) if isinstance(field, PrimeField) \
                    else field.one / val
                return s, p.scale(inv)
    return None


# -- the full splitting -------------------------------------------------------


def u_algebra(algebra: Algebra) -> Tuple[Algebra, List[str]]:
    """Algebra of the six-vertex path subquiver, plus its path order."""
    u_verts = build_subquiver_U()
    pres = algebra.pres
    removed = [v for v in pres.quiver.vertices if v not in u_verts]
    sub = pres.delete_vertices(removed, pres.name + "|U")
    return Algebra(sub, field=algebra.field), u_verts


def restrict_to_vertices(module: Representation, sub: Algebra) -> Representation:
    dims = {v: module.dims[v] for v in sub.vertices}
    mats = {name: module.mats[name] for name in sub.pres.quiver.arrows}
    return Representation(sub, dims, mats, check=False)


_X_POSITIONS = {  # (lo, hi) in U path order -> 1-based index in the figure
    (0, 5): 1, (1, 5): 2, (2, 5): 3, (3, 5): 4, (4, 5): 5,
    (0, 4): 6, (1, 4): 7, (2, 4): 8, (3, 4): 9, (4, 4): 10,
}


@dataclass
class Lemma2Split:
    """Certified decomposition M = X (+) P(c2)^a (+) M'."""

    module: Representation
    x_part: Representation
    x_multiplicities: List[int]           # per figure entry, 10 numbers
    a: int
    m_prime: Representation
    certificate: ModuleMap                # X (+) P(c2)^a (+) M' -> M
    proof_checks: Dict[str, bool]

    def to_record(self) -> dict:
        rec = {
            "x_multiplicities": self.x_multiplicities,
            "pc2_copies": self.a,
            "m_prime_dims": [[v, d] for v, d in self.m_prime.dim_vector()],
            "certificate_checksum": _map_checksum(self.certificate),
        }
        return rec


def _map_checksum(f: ModuleMap) -> str:
    field = f.source.algebra.field
    payload = {v: [[field.format(x) for x in row] for row in m.data]
               for v, m in sorted(f.mats.items())}
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


def lemma2_split(module: Representation) -> Lemma2Split:
    """Split a module over the pruned level-2 algebra as X (+) P(c2)^a (+) M'.

    X collects the interval summands of the restriction to the path
    subquiver whose support contains c2, realized as canonical strings;
    M' agrees with the module away from the subquiver and with the
    complementary intervals on it, and has zero c2 component.  The final
    isomorphism is verified; failure raises CertificateFailure.
    """
    algebra = module.algebra
    stripped = strip_pc2(module)
    core = stripped.complement

    sub, u_verts = u_algebra(algebra)
    core_u = restrict_to_vertices(core, sub)
    decomposition = interval_decompose(core_u, order=u_verts)
    c2_pos = u_verts.index("c2")

    x_walks = xset(algebra)
    x_mult = [0] * 10
    x_embeddings: List[Tuple[Representation, ModuleMap]] = []
    y_pieces: List[ModuleMap] = []
    for (lo, hi), emb in decomposition.pieces:
        if lo <= c2_pos <= hi:
            idx = _X_POSITIONS[(lo, hi)]
            x_mult[idx - 1] += 1
            x_embeddings.append((x_walks[idx - 1], emb))
        else:
            y_pieces.append(emb)

    field = algebra.field
    # Assemble X as a sum of canonical strings, embedded into core.
    x_parts = [walk for walk, _ in x_embeddings]
    if x_parts:
        x_rep, _, _ = direct_sum(algebra, x_parts)
    else:
        x_rep = algebra.zero_module()
    x_map_mats = {v: Matrix.zeros(field, core.dims[v], 0) for v in algebra.vertices}
    for walk, emb in x_embeddings:
        for v in algebra.vertices:
            if v in u_verts:
                block = emb.mats[v]
            else:
                block = Matrix.zeros(field, core.dims[v], walk.dims[v])
            x_map_mats[v] = x_map_mats[v].hstack(block)
    x_into_core = ModuleMap(x_rep, core, x_map_mats)
    if not x_into_core.is_morphism():
        raise CertificateFailure("c2-interval part is not a submodule")

    # M' spans the complementary intervals on U and everything off U.
    incl_mats: Dict[str, Matrix] = {}
    for v in algebra.vertices:
        if v in u_verts:
            cols = Matrix.zeros(field, core.dims[v], 0)
            for emb in y_pieces:
                cols = cols.hstack(emb.mats[v])
            incl_mats[v] = cols
        else:
            incl_mats[v] = Matrix.identity(field, core.dims[v])
    try:
        m_prime, m_prime_incl = _sub_representation(core, incl_mats)
    except ValueError as exc:
        raise CertificateFailure(f"complement part is not a submodule: {exc}") from exc

    # Certificate: X (+) P(c2)^a (+) M' -> M.
    psum = stripped.projective_embedding.source
    total, _, _ = direct_sum(algebra, [x_rep, psum, m_prime])
    cert = _assemble_sum_map(
        total,
        [stripped.complement_inclusion.compose(x_into_core),
         stripped.projective_embedding,
         stripped.complement_inclusion.compose(m_prime_incl)],
        module)
    if not cert.is_iso():
        raise CertificateFailure("final splitting certificate failed")

    proof_checks = _proof_obligations(algebra, core, x_into_core, x_rep)
    if not all(proof_checks.values()):
        raise CertificateFailure(f"proof obligations failed: {proof_checks}")

    return Lemma2Split(module, x_rep, x_mult, stripped.multiplicity,
                       m_prime, cert, proof_checks)


def _proof_obligations(algebra: Algebra, core: Representation,
                       x_into_core: ModuleMap, x_rep: Representation
                       ) -> Dict[str, bool]:
    """The subspace facts that make X a submodule: the internal alpha and
    beta maps surject, and the boundary arrows annihilate the X part."""
    def rank_of(arrow: str, vertex: str) -> int:
        return (core.mats[arrow] @ x_into_core.mats[vertex]).rank()

    checks = {
        "alpha c2->c1 surjective onto X_c1":
            x_rep.mats["al_c2_c1"].rank() == x_rep.dims["c1"],
        "alpha c1->a0 surjective onto X_a0":
            x_rep.mats["al_c1_a0"].rank() == x_rep.dims["a0"],
        "alpha a1->d0 surjective onto X_d0":
            x_rep.mats["al_a1_d0"].rank() == x_rep.dims["d0"],
        "beta c2->b1 surjective onto X_b1":
            x_rep.mats["be_c2_b1"].rank() == x_rep.dims["b1"],
        "alpha kills X_a0": rank_of("al_a0_c0", "a0") == 0,
        "beta kills X_b1": rank_of("be_b1_c0", "b1") == 0,
        "beta kills X_d0": rank_of("be_d0_d1", "d0") == 0,
        "beta kills X_a0": rank_of("be_a0_u", "a0") == 0,
        "beta kills X_c1": rank_of("be_c1_b0", "c1") == 0,
        "alpha kills X_b1": rank_of("al_b1_b0", "b1") == 0,
    }
    return checks
