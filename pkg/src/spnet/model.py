"""Signed Petri net data model and structural checks.

A structure is a bipartite directed graph between places and transitions in
which every arc carries a positive weight and a sign.  Markings hold two token
populations per place, positive and negative.  All objects are immutable.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    DimensionError,
    StructureError,
    VertexKindError,
    VertexRangeError,
)


class Kind(enum.IntEnum):
    PLACE = 0
    TRANSITION = 1


@dataclass(frozen=True, order=True)
class VertexId:
    """A place or transition, identified by kind and 0-based index.

    Ordering puts every place before every transition, then ascends by index.
    """

    kind: Kind
    index: int

    def __post_init__(self):
        if self.index < 0:
            raise VertexRangeError(f"negative vertex index {self.index}")

    @property
    def is_place(self) -> bool:
        return self.kind is Kind.PLACE

    @property
    def is_transition(self) -> bool:
        return self.kind is Kind.TRANSITION

    def __repr__(self):
        return f"{'P' if self.is_place else 'T'}{self.index}"


def place(index: int) -> VertexId:
    return VertexId(Kind.PLACE, index)


def transition(index: int) -> VertexId:
    return VertexId(Kind.TRANSITION, index)


class Sign(enum.Enum):
    POS = 1
    NEG = -1

    def __mul__(self, other: "Sign") -> "Sign":
        if not isinstance(other, Sign):
            return NotImplemented
        return Sign(self.value * other.value)

    def __neg__(self) -> "Sign":
        return Sign(-self.value)

    def __str__(self):
        return "+" if self is Sign.POS else "-"

    @classmethod
    def parse(cls, text: str) -> "Sign":
        if text == "+":
            return cls.POS
        if text in ("-", "−"):
            return cls.NEG
        raise ValueError(f"sign must be '+' or '-', got {text!r}")

    @classmethod
    def product(cls, signs: Iterable["Sign"]) -> "Sign":
        """Product of ``signs``; the empty product is positive."""
        negatives = sum(1 for s in signs if s is cls.NEG)
        return cls.NEG if negatives % 2 else cls.POS


@dataclass(frozen=True)
class Arc:
    source: VertexId
    target: VertexId
    weight: int = 1
    sign: Sign = Sign.POS

    def __post_init__(self):
        if self.source.kind == self.target.kind:
            raise StructureError(
                f"arc {self.source!r}->{self.target!r} joins two vertices of the same kind"
            )
        if not isinstance(self.weight, int) or isinstance(self.weight, bool) or self.weight < 1:
            raise StructureError(f"arc weight must be a positive integer, got {self.weight!r}")
        if not isinstance(self.sign, Sign):
            raise StructureError(f"arc sign must be a Sign, got {self.sign!r}")

    @property
    def key(self) -> tuple[VertexId, VertexId]:
        return (self.source, self.target)

    @property
    def place(self) -> VertexId:
        return self.source if self.source.is_place else self.target

    @property
    def transition(self) -> VertexId:
        return self.target if self.source.is_place else self.source


@dataclass(frozen=True)
class SpnStructure:
    """Places, transitions and signed weighted arcs.

    Arcs are stored in canonical order, so two structures built from the same
    arcs in a different order compare equal.  ``labels`` maps each vertex to a
    display name; missing names default to ``p1, p2, ...`` and ``t1, t2, ...``.
    """

    place_count: int
    transition_count: int
    arcs: tuple[Arc, ...] = ()
    labels: tuple[tuple[str, ...], tuple[str, ...]] = ((), ())

    _arc_map: dict = field(init=False, repr=False, compare=False, hash=False)
    _pre: dict = field(init=False, repr=False, compare=False, hash=False)
    _post: dict = field(init=False, repr=False, compare=False, hash=False)
    _by_label: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.place_count < 0 or self.transition_count < 0:
            raise StructureError("vertex counts must be non-negative")
        arcs = tuple(sorted(self.arcs, key=lambda a: a.key))
        arc_map: dict[tuple[VertexId, VertexId], Arc] = {}
        for arc in arcs:
            for v in arc.key:
                self._check_range(v)
            if arc.key in arc_map:
                raise StructureError(
                    f"more than one arc from {arc.source!r} to {arc.target!r}"
                )
            arc_map[arc.key] = arc
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "labels", self._normalise_labels(self.labels))

        pre: dict[VertexId, list[VertexId]] = {v: [] for v in self.vertices}
        post: dict[VertexId, list[VertexId]] = {v: [] for v in self.vertices}
        for arc in arcs:
            post[arc.source].append(arc.target)
            pre[arc.target].append(arc.source)
        object.__setattr__(self, "_arc_map", arc_map)
        object.__setattr__(self, "_pre", {v: tuple(sorted(vs)) for v, vs in pre.items()})
        object.__setattr__(self, "_post", {v: tuple(sorted(vs)) for v, vs in post.items()})

        by_label: dict[str, VertexId] = {}
        for v in self.vertices:
            name = self.label(v)
            if name in by_label:
                raise StructureError(f"duplicate vertex label {name!r}")
            by_label[name] = v
        object.__setattr__(self, "_by_label", by_label)

    def _normalise_labels(self, labels):
        places, transitions = (tuple(labels[0]), tuple(labels[1])) if labels else ((), ())
        if len(places) > self.place_count or len(transitions) > self.transition_count:
            raise StructureError("more labels than vertices")
        places += tuple(f"p{i + 1}" for i in range(len(places), self.place_count))
        transitions += tuple(
            f"t{i + 1}" for i in range(len(transitions), self.transition_count)
        )
        return (places, transitions)

    def _check_range(self, v: VertexId) -> None:
        limit = self.place_count if v.is_place else self.transition_count
        if v.index >= limit:
            raise VertexRangeError(f"vertex {v!r} out of range")

    @classmethod
    def build(
        cls,
        places: Sequence[str],
        transitions: Sequence[str],
        arcs: Iterable[tuple],
    ) -> "SpnStructure":
        """Build a structure from vertex names and ``(src, dst, sign[, weight])`` tuples.

        >>> s = SpnStructure.build(["p"], ["t"], [("p", "t", "+")])
        >>> s.arcs[0].sign
        <Sign.POS: 1>
        """
        names: dict[str, VertexId] = {}
        for i, name in enumerate(places):
            names[name] = place(i)
        for i, name in enumerate(transitions):
            if name in names:
                raise StructureError(f"duplicate vertex label {name!r}")
            names[name] = transition(i)
        built = []
        for spec in arcs:
            src, dst, sign, *rest = spec
            try:
                source, target = names[src], names[dst]
            except KeyError as exc:
                raise VertexRangeError(f"unknown vertex {exc.args[0]!r}") from None
            if isinstance(sign, str):
                sign = Sign.parse(sign)
            built.append(Arc(source, target, rest[0] if rest else 1, sign))
        return cls(len(places), len(transitions), tuple(built), (tuple(places), tuple(transitions)))

    @property
    def places(self) -> tuple[VertexId, ...]:
        return tuple(place(i) for i in range(self.place_count))

    @property
    def transitions(self) -> tuple[VertexId, ...]:
        return tuple(transition(i) for i in range(self.transition_count))

    @property
    def vertices(self) -> tuple[VertexId, ...]:
        return self.places + self.transitions

    def label(self, v: VertexId) -> str:
        self._check_range(v)
        return self.labels[v.kind][v.index]

    def vertex(self, name: str) -> VertexId:
        try:
            return self._by_label[name]
        except KeyError:
            raise VertexRangeError(f"unknown vertex {name!r}") from None

    def arc(self, source: VertexId, target: VertexId) -> Arc | None:
        return self._arc_map.get((source, target))

    def sign_of(self, source: VertexId, target: VertexId) -> Sign:
        arc = self._arc_map.get((source, target))
        if arc is None:
            raise VertexRangeError(f"no arc from {source!r} to {target!r}")
        return arc.sign

    def preset(self, v: VertexId) -> tuple[VertexId, ...]:
        self._check_range(v)
        return self._pre[v]

    def postset(self, v: VertexId) -> tuple[VertexId, ...]:
        self._check_range(v)
        return self._post[v]

    def input_arcs(self, v: VertexId) -> tuple[Arc, ...]:
        return tuple(self._arc_map[(u, v)] for u in self.preset(v))

    def output_arcs(self, v: VertexId) -> tuple[Arc, ...]:
        return tuple(self._arc_map[(v, u)] for u in self.postset(v))

    def incident_arcs(self, v: VertexId) -> tuple[Arc, ...]:
        return self.input_arcs(v) + self.output_arcs(v)

    @property
    def is_ordinary(self) -> bool:
        return all(a.weight == 1 for a in self.arcs)


def require_kind(structure: SpnStructure, v: VertexId, kind: Kind) -> None:
    """Raise unless ``v`` is an in-range vertex of the given kind."""
    if not isinstance(v, VertexId):
        raise VertexKindError(f"expected a vertex id, got {v!r}")
    if v.kind is not kind:
        raise VertexKindError(f"{structure.label(v)} is not a {kind.name.lower()}")
    structure._check_range(v)


@dataclass(frozen=True, order=True)
class Marking:
    """Positive and negative token counts, one entry per place."""

    positive: tuple[int, ...]
    negative: tuple[int, ...]

    def __post_init__(self):
        pos, neg = tuple(self.positive), tuple(self.negative)
        if len(pos) != len(neg):
            raise DimensionError(
                f"positive and negative vectors differ in length ({len(pos)} vs {len(neg)})"
            )
        for value in pos + neg:
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise ValueError(f"token counts must be non-negative integers, got {value!r}")
        object.__setattr__(self, "positive", pos)
        object.__setattr__(self, "negative", neg)

    @classmethod
    def zeros(cls, n: int) -> "Marking":
        return cls((0,) * n, (0,) * n)

    @classmethod
    def from_pairs(cls, pairs: Sequence[tuple[int, int]]) -> "Marking":
        return cls(tuple(p for p, _ in pairs), tuple(n for _, n in pairs))

    @classmethod
    def parse(cls, text: str) -> "Marking":
        """Parse the ``((a,b,...),(c,d,...))`` notation produced by ``str``."""
        compact = "".join(text.split())
        if not (compact.startswith("((") and compact.endswith("))") and ")," in compact):
            raise ValueError(f"marking must look like ((a,b,...),(c,d,...)), got {text!r}")
        left, right = compact[2:-2].split("),(", 1)
        try:
            pos = tuple(int(x) for x in left.split(",")) if left else ()
            neg = tuple(int(x) for x in right.split(",")) if right else ()
        except ValueError:
            raise ValueError(f"non-integer token count in {text!r}") from None
        return cls(pos, neg)

    def __len__(self):
        return len(self.positive)

    def __getitem__(self, p: VertexId | int) -> tuple[int, int]:
        i = p.index if isinstance(p, VertexId) else p
        return (self.positive[i], self.negative[i])

    def __str__(self):
        return f"(({','.join(map(str, self.positive))}),({','.join(map(str, self.negative))}))"


def check_marking(structure: SpnStructure, marking: Marking) -> None:
    if len(marking) != structure.place_count:
        raise DimensionError(
            f"marking has {len(marking)} entries but the structure has "
            f"{structure.place_count} places"
        )


@dataclass(frozen=True)
class SignedPetriNet:
    structure: SpnStructure
    initial_marking: Marking

    def __post_init__(self):
        check_marking(self.structure, self.initial_marking)


@dataclass(frozen=True)
class Violation:
    code: str
    subject: VertexId | None
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]
    is_ordinary: bool
    is_negative_spn: bool
    has_sources: bool
    has_sinks: bool

    @property
    def ok(self) -> bool:
        return not self.violations


def validate(structure: SpnStructure) -> ValidationReport:
    """Check the Petri net conditions that construction does not already enforce.

    Bipartiteness, arc uniqueness, endpoint range and positive weights are
    guaranteed by :class:`SpnStructure`; what remains is non-emptiness of both
    vertex sets and the absence of isolated vertices.
    """
    violations = []
    if structure.place_count == 0:
        violations.append(Violation("no-places", None, "the set of places is empty"))
    if structure.transition_count == 0:
        violations.append(Violation("no-transitions", None, "the set of transitions is empty"))
    for v in structure.vertices:
        if not structure.preset(v) and not structure.postset(v):
            violations.append(
                Violation("isolated-vertex", v, f"{structure.label(v)} has no incident arcs")
            )
    return ValidationReport(
        violations=tuple(violations),
        is_ordinary=structure.is_ordinary,
        is_negative_spn=bool(structure.arcs) and all(a.sign is Sign.NEG for a in structure.arcs),
        has_sources=bool(source_vertices(structure)),
        has_sinks=bool(sink_vertices(structure)),
    )


def adjacency(
    structure: SpnStructure, v: VertexId
) -> tuple[tuple[VertexId, ...], tuple[VertexId, ...]]:
    """Return ``(preset, postset)`` of ``v`` in canonical order."""
    return structure.preset(v), structure.postset(v)


def source_vertices(structure: SpnStructure) -> tuple[VertexId, ...]:
    return tuple(v for v in structure.vertices if not structure.preset(v))


def sink_vertices(structure: SpnStructure) -> tuple[VertexId, ...]:
    return tuple(v for v in structure.vertices if not structure.postset(v))


def parse_vertex_set(structure: SpnStructure, names: str | Iterable[str]) -> frozenset[VertexId]:
    """Resolve comma-separated (or iterable) labels to vertex ids."""
    if isinstance(names, str):
        names = [n for n in (x.strip() for x in names.split(",")) if n]
    return frozenset(structure.vertex(n) for n in names)


def format_vertex_set(structure: SpnStructure, vertices: Iterable[VertexId]) -> str:
    return "{" + ",".join(structure.label(v) for v in sorted(vertices)) + "}"

