"""Build markings at which known vertex sets are guaranteed to dominate.

Two constructions are provided.  The first applies when every transition is
positive and every place has arcs of a single sign: removing all source
vertices leaves a dominating set once the places next to the sources carry a
negative-token parity matching their arc sign.  The second applies when there
are no sources or sinks, places are sign-homogeneous and all transitions share
one sign: both the place set and the transition set dominate once every place
has the right negative-token parity.

Free choices are fixed to the smallest representatives (no positive tokens,
zero or one negative token) and every result is checked with
:func:`spnet.domination.is_dominating` before it is returned.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .domination import DominationReport, is_dominating
from .errors import NotOrdinaryError
from .model import (
    Marking,
    Sign,
    SpnStructure,
    VertexId,
    sink_vertices,
    source_vertices,
    validate,
)
from .signing import transition_sign


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"
    FREE = "free"


@dataclass(frozen=True)
class SynthesisReport:
    violated_hypotheses: tuple[str, ...]
    marking: Marking | None = None
    dominating_sets: tuple[frozenset[VertexId], ...] = ()
    source_set: frozenset[VertexId] = frozenset()
    parity_constraints: tuple[Parity, ...] = ()
    verification: tuple[DominationReport, ...] = field(default=(), repr=False)

    @property
    def hypothesis_ok(self) -> bool:
        return not self.violated_hypotheses

    @property
    def verified(self) -> bool:
        return self.hypothesis_ok and all(r.verdict for r in self.verification)


def _arc_sign_kinds(structure: SpnStructure, p: VertexId) -> set[Sign]:
    return {a.sign for a in structure.incident_arcs(p)}


def _homogeneity_violations(structure: SpnStructure) -> list[str]:
    return [
        f"place {structure.label(p)} has both positive and negative incident arcs"
        for p in structure.places
        if len(_arc_sign_kinds(structure, p)) > 1
    ]


def _structural_violations(structure: SpnStructure) -> list[str]:
    return [f"invalid structure: {v.message}" for v in validate(structure).violations]


def _parity_for(structure: SpnStructure, p: VertexId, transitions: Sign) -> Parity:
    # S(p) must equal (arc sign) * (transition sign); S(p) = + iff the
    # negative-token count is even.
    (arc_sign,) = _arc_sign_kinds(structure, p) or {Sign.POS}
    return Parity.EVEN if arc_sign * transitions is Sign.POS else Parity.ODD


def _marking_for(parities: list[Parity]) -> Marking:
    n = len(parities)
    return Marking((0,) * n, tuple(1 if c is Parity.ODD else 0 for c in parities))


def _require_ordinary(structure: SpnStructure) -> None:
    if not structure.is_ordinary:
        raise NotOrdinaryError("marking synthesis needs an ordinary net (all weights 1)")


def synthesize_theorem1(structure: SpnStructure) -> SynthesisReport:
    """Marking at which all vertices except the sources dominate.

    Hypotheses: every transition is positive and every place has incident arcs
    of one sign only.  Source places, and output places of source transitions,
    get an even negative count if their arcs are positive and an odd one if
    negative.  Other places are left empty.
    """
    _require_ordinary(structure)
    violations = _structural_violations(structure)
    violations += [
        f"transition {structure.label(t)} is negatively signed"
        for t in structure.transitions
        if transition_sign(structure, t) is Sign.NEG
    ]
    violations += _homogeneity_violations(structure)
    sources = frozenset(source_vertices(structure))
    if violations:
        return SynthesisReport(tuple(violations), source_set=sources)

    constrained = set()
    for x in sources:
        if x.is_place:
            constrained.add(x)
        else:
            constrained.update(structure.postset(x))
    parities = [
        _parity_for(structure, p, Sign.POS) if p in constrained else Parity.FREE
        for p in structure.places
    ]
    marking = _marking_for(parities)
    target = frozenset(structure.vertices) - sources
    return SynthesisReport(
        (),
        marking,
        (target,),
        sources,
        tuple(parities),
        (is_dominating(structure, target, marking),),
    )


def synthesize_theorem2(structure: SpnStructure) -> SynthesisReport:
    """Marking at which both the place set and the transition set dominate.

    Hypotheses: no source or sink vertices, sign-homogeneous places, and one
    common sign for all transitions.  Every place gets a parity: with positive
    transitions even for positive-arc places and odd for negative-arc places,
    flipped when the transitions are negative.
    """
    _require_ordinary(structure)
    violations = _structural_violations(structure)
    violations += [f"{structure.label(v)} is a source vertex" for v in source_vertices(structure)]
    violations += [f"{structure.label(v)} is a sink vertex" for v in sink_vertices(structure)]
    violations += _homogeneity_violations(structure)
    t_signs = {transition_sign(structure, t) for t in structure.transitions}
    if len(t_signs) > 1:
        violations.append("transitions do not all have the same sign")
    if violations:
        return SynthesisReport(tuple(violations))

    (common,) = t_signs
    parities = [_parity_for(structure, p, common) for p in structure.places]
    marking = _marking_for(parities)
    places, transitions = frozenset(structure.places), frozenset(structure.transitions)
    return SynthesisReport(
        (),
        marking,
        (places, transitions),
        frozenset(),
        tuple(parities),
        (
            is_dominating(structure, places, marking),
            is_dominating(structure, transitions, marking),
        ),
    )
