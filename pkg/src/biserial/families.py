"""Generators for the two-parameter family of special biserial algebras.

The family ``lambda(r, m)`` lives on a quiver with a chain part
``d0 -> d1 -> ... -> dr`` (letters alternating beta, alpha, beta, ...),
a bottom part on ``a0, b0, c0, u, v, w, bm1, cm1`` carrying five loops,
and a tower of levels ``1, 2, ..., m``.  Levels 1 and 2 contribute
``a_i, b_i, c_i``; levels three and up contribute ``a_i, b_i`` only.

Letter classes of every arrow (solid = alpha, dashed = beta in the DOT
export) are pinned by the following table; the projective shapes of the
``m = 5`` algebra in the test-suite tables depend on each line.

    alpha:  loops at u, v, w;   a1->d0;   d(odd)->d(odd+1)
            a0->c0, c0->cm1, b0->bm1
            c1->a0, b1->b0
            c2->c1, b2->b1, a2->c2
            a3->a2, b3->b2
            level n >= 4:  straight (an->a(n-1), bn->b(n-1)) for n odd,
                           crossed  (an->b(n-1), bn->a(n-1)) for n even
    beta:   loops at cm1, bm1;  d(even)->d(even+1)
            a0->u, c0->w, b0->v
            a1->a0, c1->b0, b1->c0
            a2->a1, c2->b1, b2->c1
            a3->b2, b3->c2
            level n >= 4:  straight for n even, crossed for n odd

Relations: every mixed two-letter composite vanishes, every loop squares
to zero, and at each vertex whose maximal alpha- and beta-paths meet, the
shortest parallel pair of letter powers is identified.

Vertex names are ASCII: ``a0``, ``bm1`` for the index -1, ``d3``, ``u``.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from .presentation import ALPHA, BETA, Arrow, Presentation, PresentationError, Quiver


def vname(letter: str, index: int) -> str:
    return f"{letter}m{-index}" if index < 0 else f"{letter}{index}"


def arrow_name(letter_class: str, src: str, tgt: str) -> str:
    prefix = "al" if letter_class == ALPHA else "be"
    return f"{prefix}_{src}_{tgt}"


def lambda_vertices(r: int, m: int) -> List[str]:
    vs = ["u", "v", "w", vname("b", -1), vname("c", -1)]
    vs += [vname("d", i) for i in range(r + 1)]
    vs += [vname("a", i) for i in range(m + 1)]
    vs += [vname("b", i) for i in range(m + 1)]
    vs += [vname("c", i) for i in range(min(m, 2) + 1)]
    return sorted(vs)


def _lambda_arrows(r: int, m: int) -> List[Arrow]:
    def al(src: str, tgt: str) -> Arrow:
        return Arrow(arrow_name(ALPHA, src, tgt), src, tgt, ALPHA)

    def be(src: str, tgt: str) -> Arrow:
        return Arrow(arrow_name(BETA, src, tgt), src, tgt, BETA)

    arrows = [al("u", "u"), al("v", "v"), al("w", "w"),
              be("cm1", "cm1"), be("bm1", "bm1")]
    for i in range(r):
        # Chain letters alternate starting with beta at d0.
        src, tgt = vname("d", i), vname("d", i + 1)
        arrows.append(be(src, tgt) if i % 2 == 0 else al(src, tgt))
    arrows += [al("a0", "c0"), al("c0", "cm1"), al("b0", "bm1"),
               be("a0", "u"), be("c0", "w"), be("b0", "v")]
    if m >= 1:
        arrows += [al("a1", "d0"), al("c1", "a0"), al("b1", "b0"),
                   be("a1", "a0"), be("c1", "b0"), be("b1", "c0")]
    if m >= 2:
        arrows += [al("c2", "c1"), al("b2", "b1"), al("a2", "c2"),
                   be("a2", "a1"), be("c2", "b1"), be("b2", "c1")]
    if m >= 3:
        arrows += [al("a3", "a2"), al("b3", "b2"),
                   be("a3", "b2"), be("b3", "c2")]
    for n in range(4, m + 1):
        an, bn = vname("a", n), vname("b", n)
        am, bm = vname("a", n - 1), vname("b", n - 1)
        if n % 2 == 1:
            arrows += [al(an, am), al(bn, bm), be(an, bm), be(bn, am)]
        else:
            arrows += [al(an, bm), al(bn, am), be(an, am), be(bn, bm)]
    return arrows


def _letter_chain(quiver: Quiver, start: str, letter: str) -> List[str]:
    """Vertices reached by following the unique letter-class arrow chain."""
    chain = []
    seen = {start}
    v = start
    while True:
        nexts = [a for a in quiver.arrows_from(v) if a.letter == letter]
        if not nexts:
            return chain
        v = nexts[0].target
        chain.append(v)
        if v in seen:  # a loop; stop after recording one step
            return chain
        seen.add(v)


def _letter_path(quiver: Quiver, start: str, letter: str, length: int) -> Tuple[str, ...]:
    path = []
    v = start
    for _ in range(length):
        a = next(a for a in quiver.arrows_from(v) if a.letter == letter)
        path.append(a.name)
        v = a.target
    return tuple(path)


def _relations(quiver: Quiver) -> List:
    from .presentation import Relation

    rels: List[Relation] = []
    # Mixed composites vanish.
    for f in quiver.arrows.values():
        for g in quiver.arrows_from(f.target):
            if g.letter != f.letter:
                rels.append(Relation("zero", (f.name, g.name)))
    # Loop squares vanish.
    for a in quiver.arrows.values():
        if a.source == a.target:
            rels.append(Relation("zero", (a.name, a.name)))
    # Shortest parallel pair of letter powers at each vertex.
    for v in quiver.vertices:
        alphas = _letter_chain(quiver, v, ALPHA)
        betas = _letter_chain(quiver, v, BETA)
        best: Optional[Tuple[int, int]] = None
        for i, x in enumerate(alphas, start=1):
            for j, y in enumerate(betas, start=1):
                if x == y and x != v:
                    if best is None or (i, j) < best:
                        best = (i, j)
        if best is not None:
            n, k = best
            rels.append(Relation("eq",
                                 _letter_path(quiver, v, ALPHA, n),
                                 _letter_path(quiver, v, BETA, k)))
    return rels


def build_lambda(r: int, m: int) -> Presentation:
    """The level-``m`` member of the family, with chain length ``r``."""
    if r < 1:
        raise PresentationError(f"chain length r must be positive, got {r}")
    if m < 0:
        raise PresentationError(f"level m must be nonnegative, got {m}")
    quiver = Quiver(lambda_vertices(r, m), _lambda_arrows(r, m))
    pres = Presentation(f"lambda_r{r}_m{m}", quiver, _relations(quiver),
                        meta={"family": "lambda", "r": r, "m": m})
    assert quiver.is_special_biserial()
    return pres


def build_lambda1prime(r: int) -> Presentation:
    """The level-2 algebra with the vertices ``a2`` and ``b2`` deleted."""
    base = build_lambda(r, 2)
    return base.delete_vertices(
        ["a2", "b2"], f"lambda1prime_r{r}",
        meta={"family": "lambda1prime", "r": r})


def build_subquiver_U() -> List[str]:
    """Vertices of the type-A path subquiver used by the splitting lemma,
    listed in path order."""
    return ["d0", "a1", "a0", "c1", "c2", "b1"]


def family_from_spec(spec: str) -> Presentation:
    """Build a family member from a compact spec like ``lambda:r=1,m=3``."""
    name, _, args = spec.partition(":")
    params: Dict[str, int] = {}
    if args:
        for piece in args.split(","):
            key, _, val = piece.partition("=")
            try:
                params[key.strip()] = int(val)
            except ValueError as exc:
                raise PresentationError(f"bad family parameter {piece!r}") from exc
    if name == "lambda":
        if set(params) != {"r", "m"}:
            raise PresentationError("family 'lambda' needs parameters r and m")
        return build_lambda(params["r"], params["m"])
    if name == "lambda1prime":
        if set(params) != {"r"}:
            raise PresentationError("family 'lambda1prime' needs parameter r")
        return build_lambda1prime(params["r"])
    raise PresentationError(f"unknown family {name!r}")
