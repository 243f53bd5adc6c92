"""Quivers with relations and their line-oriented text format.

A presentation is a quiver (named vertices, named arrows tagged ``alpha``
or ``beta``) together with zero relations (a composite of arrows that
vanishes) and equality relations (two parallel composites that agree).
Paths are stored first-applied-first: the tuple ``(f, g)`` is the
composite "f then g".  The text format lists relation paths with the
leftmost arrow applied last, matching the usual composition order.

File format (UTF-8, ``#`` comments)::

    algebra <name>
    vertex <v>
    arrow <name> : <alpha|beta> <src> -> <tgt>
    rel zero <arrow> [<arrow> ...]
    rel eq <path> = <path>

Emission is deterministic: vertices and arrows lexicographic, relations
sorted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

ALPHA = "alpha"
BETA = "beta"


class PresentationError(ValueError):
    """Structural problem in a quiver presentation."""


class ParseError(PresentationError):
    """Syntax or reference error in presentation text, with location."""

    def __init__(self, line: int, message: str, column: Optional[int] = None):
        self.line = line
        self.column = column
        where = f"line {line}" + (f", column {column}" if column is not None else "")
        super().__init__(f"{where}: {message}")


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str
    letter: str  # ALPHA or BETA


@dataclass(frozen=True)
class Relation:
    """Zero relation (right empty) or equality of two parallel paths."""

    kind: str  # "zero" | "eq"
    left: Tuple[str, ...]
    right: Tuple[str, ...] = ()

    def arrows(self) -> Tuple[str, ...]:
        return self.left + self.right


class Quiver:
    """Finite quiver with two letter classes of arrows."""

    def __init__(self, vertices: Iterable[str], arrows: Iterable[Arrow]):
        self.vertices: Tuple[str, ...] = tuple(sorted(set(vertices)))
        vertex_set = set(self.vertices)
        arrow_list = list(arrows)
        names = [a.name for a in arrow_list]
        if len(names) != len(set(names)):
            dup = sorted({n for n in names if names.count(n) > 1})
            raise PresentationError(f"duplicate arrow names: {', '.join(dup)}")
        for a in arrow_list:
            if a.source not in vertex_set:
                raise PresentationError(f"arrow {a.name}: unknown source vertex {a.source!r}")
            if a.target not in vertex_set:
                raise PresentationError(f"arrow {a.name}: unknown target vertex {a.target!r}")
            if a.letter not in (ALPHA, BETA):
                raise PresentationError(f"arrow {a.name}: bad letter class {a.letter!r}")
        self.arrows: Dict[str, Arrow] = {a.name: a for a in sorted(arrow_list, key=lambda a: a.name)}
        self._out: Dict[str, List[Arrow]] = {v: [] for v in self.vertices}
        self._in: Dict[str, List[Arrow]] = {v: [] for v in self.vertices}
        for a in self.arrows.values():
            self._out[a.source].append(a)
            self._in[a.target].append(a)

    def arrows_from(self, v: str) -> List[Arrow]:
        return self._out[v]

    def arrows_into(self, v: str) -> List[Arrow]:
        return self._in[v]

    def is_special_biserial(self) -> bool:
        """At most one alpha and one beta arrow start, and end, at each vertex."""
        for v in self.vertices:
            for bundle in (self._out[v], self._in[v]):
                letters = [a.letter for a in bundle]
                if letters.count(ALPHA) > 1 or letters.count(BETA) > 1:
                    return False
        return True

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Quiver)
            and self.vertices == other.vertices
            and self.arrows == other.arrows
        )


class Presentation:
    """A quiver together with its relations; defines the quotient algebra."""

    def __init__(self, name: str, quiver: Quiver, relations: Iterable[Relation],
                 meta: Optional[dict] = None):
        self.name = name
        self.quiver = quiver
        rels = []
        for rel in relations:
            self._validate_relation(rel)
            rels.append(rel)
        self.relations: Tuple[Relation, ...] = tuple(sorted(rels, key=_relation_key))
        # Family bookkeeping (generator parameters); not part of the file format.
        self.meta = dict(meta or {})

    def _validate_relation(self, rel: Relation) -> None:
        if rel.kind not in ("zero", "eq"):
            raise PresentationError(f"bad relation kind {rel.kind!r}")
        if not rel.left:
            raise PresentationError("empty relation path")
        self.path_endpoints(rel.left)
        if rel.kind == "eq":
            if not rel.right:
                raise PresentationError("equality relation with empty right path")
            ls, lt = self.path_endpoints(rel.left)
            rs, rt = self.path_endpoints(rel.right)
            if (ls, lt) != (rs, rt):
                raise PresentationError(
                    f"equality relation paths are not parallel: "
                    f"{ls}->{lt} vs {rs}->{rt}")

    def path_endpoints(self, path: Sequence[str]) -> Tuple[str, str]:
        """(source, target) of a composable arrow sequence, validating it."""
        arrows = self.quiver.arrows
        prev: Optional[Arrow] = None
        for name in path:
            if name not in arrows:
                raise PresentationError(f"unknown arrow {name!r} in relation path")
            a = arrows[name]
            if prev is not None and prev.target != a.source:
                raise PresentationError(
                    f"non-composable path: {prev.name} ends at {prev.target} "
                    f"but {a.name} starts at {a.source}")
            prev = a
        first = arrows[path[0]]
        return first.source, arrows[path[-1]].target

    def structurally_equal(self, other: "Presentation") -> bool:
        return (
            self.name == other.name
            and self.quiver == other.quiver
            and self.relations == other.relations
        )

    def delete_vertices(self, removed: Iterable[str], name: str,
                        meta: Optional[dict] = None) -> "Presentation":
        """Full-subquiver presentation on the complement of ``removed``.

        Relations whose paths use a deleted arrow are dropped.
        """
        gone = set(removed)
        missing = gone - set(self.quiver.vertices)
        if missing:
            raise PresentationError(f"cannot delete unknown vertices: {sorted(missing)}")
        vertices = [v for v in self.quiver.vertices if v not in gone]
        arrows = [a for a in self.quiver.arrows.values()
                  if a.source not in gone and a.target not in gone]
        kept_names = {a.name for a in arrows}
        relations = [r for r in self.relations if all(n in kept_names for n in r.arrows())]
        return Presentation(name, Quiver(vertices, arrows), relations, meta=meta)

    def is_full_subpresentation_of(self, big: "Presentation") -> bool:
        """True when self is big restricted to a vertex subset (same arrows)."""
        small_vs = set(self.quiver.vertices)
        if not small_vs <= set(big.quiver.vertices):
            return False
        induced = [a for a in big.quiver.arrows.values()
                   if a.source in small_vs and a.target in small_vs]
        return {a.name: a for a in induced} == self.quiver.arrows

    def __repr__(self) -> str:
        return (f"Presentation({self.name!r}, {len(self.quiver.vertices)} vertices, "
                f"{len(self.quiver.arrows)} arrows, {len(self.relations)} relations)")


def _relation_key(rel: Relation):
    return (rel.kind, rel.left, rel.right)


# -- text format -----------------------------------------------------------


def parse_presentation(text: str) -> Presentation:
    """Parse the presentation file format; raises ParseError with location."""
    name: Optional[str] = None
    vertices: List[str] = []
    arrows: List[Arrow] = []
    pending_rels: List[Tuple[int, str, Tuple[str, ...], Tuple[str, ...]]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        head = tokens[0]
        if head == "algebra":
            if len(tokens) != 2:
                raise ParseError(lineno, "expected: algebra <name>")
            if name is not None:
                raise ParseError(lineno, "duplicate algebra line")
            name = tokens[1]
        elif head == "vertex":
            if len(tokens) != 2:
                raise ParseError(lineno, "expected: vertex <name>")
            vertices.append(tokens[1])
        elif head == "arrow":
            # arrow <name> : <alpha|beta> <src> -> <tgt>
            if (len(tokens) != 7 or tokens[2] != ":" or tokens[5] != "->"
                    or tokens[3] not in (ALPHA, BETA)):
                raise ParseError(lineno, "expected: arrow <name> : <alpha|beta> <src> -> <tgt>")
            arrows.append(Arrow(tokens[1], tokens[4], tokens[6], tokens[3]))
        elif head == "rel":
            if len(tokens) < 3:
                raise ParseError(lineno, "expected: rel zero <path> | rel eq <path> = <path>")
            kind = tokens[1]
            if kind == "zero":
                # Leftmost arrow applied last: storage order is reversed.
                pending_rels.append((lineno, "zero", tuple(reversed(tokens[2:])), ()))
            elif kind == "eq":
                if "=" not in tokens[2:]:
                    raise ParseError(lineno, "equality relation needs '=' between paths")
                eq_at = tokens.index("=", 2)
                left = tokens[2:eq_at]
                right = tokens[eq_at + 1:]
                if not left or not right:
                    raise ParseError(lineno, "equality relation with an empty side")
                pending_rels.append((lineno, "eq",
                                     tuple(reversed(left)), tuple(reversed(right))))
            else:
                raise ParseError(lineno, f"unknown relation kind {kind!r}")
        else:
            raise ParseError(lineno, f"unknown directive {head!r}",
                             column=raw.index(head) + 1)

    if name is None:
        raise ParseError(1, "missing 'algebra <name>' line")
    try:
        quiver = Quiver(vertices, arrows)
    except PresentationError as exc:
        raise ParseError(1, str(exc)) from exc
    relations = []
    for lineno, kind, left, right in pending_rels:
        try:
            rel = Relation(kind, left, right)
            # Endpoint/composability validation needs the quiver.
            Presentation(name, quiver, [rel])
        except PresentationError as exc:
            raise ParseError(lineno, str(exc)) from exc
        relations.append(rel)
    return Presentation(name, quiver, relations)


def emit_presentation(pres: Presentation) -> str:
    """Deterministic text serialization; parse(emit(p)) equals p structurally."""
    lines = [f"algebra {pres.name}"]
    for v in pres.quiver.vertices:
        lines.append(f"vertex {v}")
    for a in sorted(pres.quiver.arrows.values(), key=lambda a: a.name):
        lines.append(f"arrow {a.name} : {a.letter} {a.source} -> {a.target}")
    for rel in pres.relations:
        if rel.kind == "zero":
            lines.append("rel zero " + " ".join(reversed(rel.left)))
        else:
            lines.append("rel eq " + " ".join(reversed(rel.left))
                         + " = " + " ".join(reversed(rel.right)))
    return "\n".join(lines) + "\n"
