"""Finite-dimensional representations of a presentation.

A representation assigns a dimension to each vertex and a matrix to each
arrow (rows indexed by the target space, columns by the source space).
Construction from user-supplied matrices verifies every relation; derived
constructions that satisfy them by arithmetic (block sums, kernels) skip
the check, and the property tests re-verify them.  Values are immutable
after construction; all operations are pure.

The ``Algebra`` context bundles a presentation with its path basis and a
coefficient field; projectives, simples and random modules are built from
it.
"""

from __future__ import annotations

import random
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .fields import QQ
from .matrices import Matrix, block_diag
from .pathbasis import PathBasis, build_path_basis
from .presentation import Presentation


class RepresentationError(ValueError):
    """Malformed representation: bad shapes or violated relations."""


class InvalidString(ValueError):
    """A walk that does not define a module, with the reason named."""


class Algebra:
    """Presentation + path basis + field: the computation context."""

    def __init__(self, pres: Presentation, field=QQ, length_bound: int = 64,
                 basis: Optional[PathBasis] = None):
        self.pres = pres
        self.field = field
        self.basis = basis if basis is not None else build_path_basis(pres, length_bound)

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self.pres.quiver.vertices

    def dim(self) -> int:
        return self.basis.dim

    def zero_module(self) -> "Representation":
        return Representation(self, {v: 0 for v in self.vertices}, {})

    def simple(self, vertex: str) -> "Representation":
        if vertex not in self.pres.quiver.vertices:
            raise RepresentationError(f"unknown vertex {vertex!r}")
        dims = {v: (1 if v == vertex else 0) for v in self.vertices}
        return Representation(self, dims, {})

    def projective(self, vertex: str) -> "Representation":
        """Indecomposable projective with top at ``vertex``, realized on the
        path-class basis at that source."""
        basis = self.basis
        if vertex not in self.pres.quiver.vertices:
            raise RepresentationError(f"unknown vertex {vertex!r}")
        ids = basis.classes_from(vertex)
        local: Dict[str, List[int]] = {}
        for i in ids:
            local.setdefault(basis.class_target(i), []).append(i)
        position = {i: k for tgt, grp in local.items() for k, i in enumerate(grp)}
        dims = {v: len(local.get(v, ())) for v in self.vertices}
        mats: Dict[str, Matrix] = {}
        field = self.field
        for a in self.pres.quiver.arrows.values():
            m = Matrix.zeros(field, dims[a.target], dims[a.source])
            for i in local.get(a.source, ()):
                for j, coeff in basis.act[(a.name, i)].items():
                    m.data[position[j]][position[i]] = field(coeff)
            mats[a.name] = m
        return Representation(self, dims, mats)

    def __repr__(self) -> str:
        return f"Algebra({self.pres.name}, {self.field!r})"


class Representation:
    """A module over an ``Algebra``: dims per vertex, a matrix per arrow."""

    def __init__(self, algebra: Algebra, dims: Dict[str, int],
                 mats: Dict[str, Matrix], check: bool = True):
        self.algebra = algebra
        quiver = algebra.pres.quiver
        self.dims = {v: int(dims.get(v, 0)) for v in quiver.vertices}
        if any(d < 0 for d in self.dims.values()):
            raise RepresentationError("negative dimension")
        full: Dict[str, Matrix] = {}
        for a in quiver.arrows.values():
            m = mats.get(a.name)
            if m is None:
                m = Matrix.zeros(algebra.field, self.dims[a.target], self.dims[a.source])
            if (m.rows, m.cols) != (self.dims[a.target], self.dims[a.source]):
                raise RepresentationError(
                    f"arrow {a.name}: matrix is {m.rows}x{m.cols}, expected "
                    f"{self.dims[a.target]}x{self.dims[a.source]}")
            full[a.name] = m
        self.mats = full
        if check:
            bad = self.violated_relations()
            if bad:
                raise RepresentationError(
                    f"relations violated: {', '.join(bad[:3])}"
                    + ("..." if len(bad) > 3 else ""))

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def is_zero(self) -> bool:
        return self.total_dim() == 0

    def dim_vector(self) -> Tuple[Tuple[str, int], ...]:
        return tuple((v, d) for v, d in sorted(self.dims.items()) if d)

    def path_matrix(self, path: Sequence[str]) -> Matrix:
        """Matrix of a composite path (first arrow applied first)."""
        pres = self.algebra.pres
        src, tgt = pres.path_endpoints(path)
        m = Matrix.identity(self.algebra.field, self.dims[src])
        for name in path:
            m = self.mats[name] @ m
        return m

    def violated_relations(self) -> List[str]:
        out = []
        for rel in self.algebra.pres.relations:
            left = self.path_matrix(rel.left)
            if rel.kind == "zero":
                if not left.is_zero():
                    out.append("zero " + "*".join(reversed(rel.left)))
            else:
                if left != self.path_matrix(rel.right):
                    out.append("eq " + "*".join(reversed(rel.left))
                               + " = " + "*".join(reversed(rel.right)))
        return out

    def supported_on(self, vertex_set: Iterable[str]) -> bool:
        allowed = set(vertex_set)
        return all(d == 0 for v, d in self.dims.items() if v not in allowed)

    def support(self) -> List[str]:
        return sorted(v for v, d in self.dims.items() if d)

    def __repr__(self) -> str:
        parts = ", ".join(f"{v}:{d}" for v, d in self.dim_vector())
        return f"Representation({parts or '0'})"


class ModuleMap:
    """Vertexwise linear maps between two representations of one algebra."""

    def __init__(self, source: Representation, target: Representation,
                 mats: Dict[str, Matrix]):
        if source.algebra.pres is not target.algebra.pres:
            raise RepresentationError("module map across different presentations")
        self.source = source
        self.target = target
        field = source.algebra.field
        full: Dict[str, Matrix] = {}
        for v in source.algebra.vertices:
            m = mats.get(v)
            if m is None:
                m = Matrix.zeros(field, target.dims[v], source.dims[v])
            if (m.rows, m.cols) != (target.dims[v], source.dims[v]):
                raise RepresentationError(
                    f"vertex {v}: map is {m.rows}x{m.cols}, expected "
                    f"{target.dims[v]}x{source.dims[v]}")
            full[v] = m
        self.mats = full

    def violations(self) -> List[str]:
        """Arrows where the intertwining square fails to commute."""
        out = []
        for a in self.source.algebra.pres.quiver.arrows.values():
            lhs = self.mats[a.target] @ self.source.mats[a.name]
            rhs = self.target.mats[a.name] @ self.mats[a.source]
            if lhs != rhs:
                out.append(a.name)
        return out

    def is_morphism(self) -> bool:
        return not self.violations()

    def is_iso(self) -> bool:
        if not self.is_morphism():
            return False
        for v in self.source.algebra.vertices:
            m = self.mats[v]
            if m.rows != m.cols or m.rank() != m.rows:
                return False
        return True

    def inverse(self) -> "ModuleMap":
        invs = {}
        for v in self.source.algebra.vertices:
            inv = self.mats[v].inverse()
            if inv is None:
                raise RepresentationError(f"not invertible at vertex {v}")
            invs[v] = inv
        return ModuleMap(self.target, self.source, invs)

    def compose(self, earlier: "ModuleMap") -> "ModuleMap":
        """self after earlier."""
        if earlier.target is not self.source:
            if earlier.target.dims != self.source.dims:
                raise RepresentationError("composition shape mismatch")
        mats = {v: self.mats[v] @ earlier.mats[v]
                for v in self.source.algebra.vertices}
        return ModuleMap(earlier.source, self.target, mats)

    def __add__(self, other: "ModuleMap") -> "ModuleMap":
        mats = {v: self.mats[v] + other.mats[v] for v in self.mats}
        return ModuleMap(self.source, self.target, mats)

    def scale(self, c) -> "ModuleMap":
        return ModuleMap(self.source, self.target,
                         {v: m.scale(c) for v, m in self.mats.items()})

    @classmethod
    def identity(cls, rep: Representation) -> "ModuleMap":
        return cls(rep, rep, {v: Matrix.identity(rep.algebra.field, d)
                              for v, d in rep.dims.items()})

    @classmethod
    def zero(cls, source: Representation, target: Representation) -> "ModuleMap":
        return cls(source, target, {})

    def __repr__(self) -> str:
        return f"ModuleMap({self.source!r} -> {self.target!r})"


def check_morphism(f: ModuleMap) -> bool:
    return f.is_morphism()


# -- string modules ----------------------------------------------------------

DIRECT = 1
INVERSE = -1


class StringWord:
    """A walk: base vertex plus letters (arrow, DIRECT | INVERSE).

    A direct letter steps along its arrow; an inverse letter steps against
    it.  The walk must be connected, never immediately backtrack, and the
    module it draws must satisfy every relation of the algebra.
    """

    def __init__(self, base: str, letters: Sequence[Tuple[str, int]]):
        self.base = base
        self.letters = tuple((a, int(d)) for a, d in letters)

    def walk_vertices(self, pres: Presentation) -> List[str]:
        arrows = pres.quiver.arrows
        if self.base not in pres.quiver.vertices:
            raise InvalidString(f"unknown base vertex {self.base!r}")
        verts = [self.base]
        for k, (name, direction) in enumerate(self.letters):
            if name not in arrows:
                raise InvalidString(f"unknown arrow {name!r}")
            a = arrows[name]
            here = verts[-1]
            if direction == DIRECT:
                if a.source != here:
                    raise InvalidString(
                        f"letter {k}: non-composable, arrow {name} starts at "
                        f"{a.source} but the walk is at {here}")
                verts.append(a.target)
            elif direction == INVERSE:
                if a.target != here:
                    raise InvalidString(
                        f"letter {k}: non-composable, arrow {name} ends at "
                        f"{a.target} but the walk is at {here}")
                verts.append(a.source)
            else:
                raise InvalidString(f"letter {k}: bad direction {direction}")
            if k > 0:
                prev_name, prev_dir = self.letters[k - 1]
                if prev_name == name and prev_dir != direction:
                    raise InvalidString(
                        f"letter {k}: immediate backtrack along {name}")
        return verts

    def __len__(self) -> int:
        return len(self.letters)

    def __repr__(self) -> str:
        body = " ".join(f"{a}^{'+1' if d == DIRECT else '-1'}" for a, d in self.letters)
        return f"StringWord({self.base} [ {body} ])"


def string_module(algebra: Algebra, word: StringWord) -> Representation:
    """The module drawn by a walk: one basis vector per walk vertex."""
    pres = algebra.pres
    verts = word.walk_vertices(pres)
    positions: Dict[str, List[int]] = {}
    for idx, v in enumerate(verts):
        positions.setdefault(v, []).append(idx)
    dims = {v: len(positions.get(v, ())) for v in algebra.vertices}
    local_index = {}
    for v, idxs in positions.items():
        for k, idx in enumerate(idxs):
            local_index[idx] = k
    field = algebra.field
    mats: Dict[str, Matrix] = {a: Matrix.zeros(field, dims[arr.target], dims[arr.source])
                               for a, arr in pres.quiver.arrows.items()}
    one = field.one
    for k, (name, direction) in enumerate(word.letters):
        if direction == DIRECT:
            src_idx, tgt_idx = k, k + 1
        else:
            src_idx, tgt_idx = k + 1, k
        mats[name].data[local_index[tgt_idx]][local_index[src_idx]] = one
    try:
        return Representation(algebra, dims, mats)
    except RepresentationError as exc:
        raise InvalidString(f"walk violates a relation subword: {exc}") from exc


# -- constructions -----------------------------------------------------------


def direct_sum(algebra: Algebra, summands: Sequence[Representation]
               ) -> Tuple[Representation, List[ModuleMap], List[ModuleMap]]:
    """Block-diagonal sum with injection and projection maps."""
    for s in summands:
        if s.algebra.pres is not algebra.pres:
            raise RepresentationError("direct sum across different presentations")
    field = algebra.field
    dims = {v: sum(s.dims[v] for s in summands) for v in algebra.vertices}
    mats = {a.name: block_diag(field, [s.mats[a.name] for s in summands])
            for a in algebra.pres.quiver.arrows.values()}
    total = Representation(algebra, dims, mats, check=False)
    injections: List[ModuleMap] = []
    projections: List[ModuleMap] = []
    offsets = {v: 0 for v in algebra.vertices}
    for s in summands:
        inj = {}
        proj = {}
        for v in algebra.vertices:
            d, off = s.dims[v], offsets[v]
            im = Matrix.zeros(field, dims[v], d)
            pm = Matrix.zeros(field, d, dims[v])
            for i in range(d):
                im.data[off + i][i] = field.one
                pm.data[i][off + i] = field.one
            inj[v] = im
            proj[v] = pm
            offsets[v] = off + d
        injections.append(ModuleMap(s, total, inj))
        projections.append(ModuleMap(total, s, proj))
    return total, injections, projections


def inflate(module: Representation, big: Algebra) -> Representation:
    """View a module over a full-subquiver factor as a module over ``big``."""
    small_pres = module.algebra.pres
    if not small_pres.is_full_subpresentation_of(big.pres):
        raise RepresentationError(
            f"{small_pres.name} is not a declared factor (full subquiver) "
            f"of {big.pres.name}")
    if module.algebra.field != big.field:
        raise RepresentationError("inflation across different fields")
    dims = {v: module.dims.get(v, 0) for v in big.vertices}
    return Representation(big, dims, dict(module.mats))


def restrict(module: Representation, small: Algebra) -> Representation:
    """Restrict a module supported on a factor back to the factor."""
    if not small.pres.is_full_subpresentation_of(module.algebra.pres):
        raise RepresentationError(
            f"{small.pres.name} is not a declared factor of "
            f"{module.algebra.pres.name}")
    if not module.supported_on(small.pres.quiver.vertices):
        raise RepresentationError(
            f"module not supported on {small.pres.name}: support "
            f"{module.support()}")
    dims = {v: module.dims[v] for v in small.vertices}
    mats = {name: module.mats[name] for name in small.pres.quiver.arrows}
    return Representation(small, dims, mats)


def supported_on(module: Representation, vertex_set: Iterable[str]) -> bool:
    return module.supported_on(vertex_set)


def random_module(algebra: Algebra, seed: int, budget: int) -> Representation:
    """Cokernel of a seeded random map between sums of projectives.

    Always a valid module by construction, deterministic per seed; the
    cover sum of projectives has total dimension at most ``budget``, so
    the result does too.
    """
    from .homology import cokernel_of, hom_basis

    rng = random.Random(f"random-module:{seed}:{budget}")
    verts = list(algebra.vertices)
    gens: List[Representation] = []
    total = 0
    while True:
        candidates = [v for v in verts
                      if total + algebra.basis.dim_projective(v) <= budget]
        if not candidates or (gens and rng.random() < 0.25):
            break
        v = rng.choice(candidates)
        gens.append(algebra.projective(v))
        total += algebra.basis.dim_projective(v)
    if not gens:
        return algebra.zero_module()
    target, _, _ = direct_sum(algebra, gens)
    rels = [algebra.projective(rng.choice(verts))
            for _ in range(rng.randrange(0, len(gens) + 2))]
    if not rels:
        return target
    source, _, _ = direct_sum(algebra, rels)
    field = algebra.field
    mats = {v: Matrix.zeros(field, target.dims[v], source.dims[v])
            for v in algebra.vertices}
    col = {v: 0 for v in algebra.vertices}
    for rel in rels:
        f = ModuleMap.zero(rel, target)
        for h in hom_basis(rel, target):
            c = rng.choice((-2, -1, -1, 0, 0, 0, 1, 1, 2))
            if c:
                f = f + h.scale(field(c))
        for v in algebra.vertices:
            off = col[v]
            for i in range(target.dims[v]):
                for j in range(rel.dims[v]):
                    mats[v].data[i][off + j] = f.mats[v].data[i][j]
            col[v] = off + rel.dims[v]
    coker, _ = cokernel_of(ModuleMap(source, target, mats))
    return coker
