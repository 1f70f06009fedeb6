"""Vertex signs.

Transitions get the product of the signs of their incident arcs.  Places can
be signed the same way, or from a marking: the product of the signs of the
tokens they hold, which is positive exactly when the negative-token count is
even.  Domination uses the marking-based sign for places.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import VertexKindError, VertexRangeError
from .model import Kind, Marking, Sign, SpnStructure, VertexId, check_marking, require_kind


class Basis(enum.Enum):
    ARCS = "arcs"
    MARKING = "marking"


@dataclass(frozen=True)
class VertexSignAssignment:
    vertex: VertexId
    sign: Sign
    basis: Basis


def _arc_product(structure: SpnStructure, v: VertexId) -> Sign:
    return Sign.product(a.sign for a in structure.incident_arcs(v))


def transition_sign(structure: SpnStructure, t: VertexId) -> Sign:
    require_kind(structure, t, Kind.TRANSITION)
    return _arc_product(structure, t)


def place_sign_wrt_arcs(structure: SpnStructure, p: VertexId) -> Sign:
    require_kind(structure, p, Kind.PLACE)
    return _arc_product(structure, p)


def place_sign_wrt_marking(marking: Marking, p: VertexId | int) -> Sign:
    index = p.index if isinstance(p, VertexId) else p
    if isinstance(p, VertexId) and not p.is_place:
        raise VertexKindError(f"{p!r} is not a place")
    if not 0 <= index < len(marking):
        raise VertexRangeError(f"place {index} out of range for a marking of length {len(marking)}")
    return Sign.NEG if marking.negative[index] % 2 else Sign.POS


def vertex_sign(structure: SpnStructure, marking: Marking, v: VertexId) -> Sign:
    """S(v) as domination uses it: structural for transitions, marking-based for places."""
    if v.is_transition:
        return transition_sign(structure, v)
    structure._check_range(v)
    return place_sign_wrt_marking(marking, v)


def sign_assignments(
    structure: SpnStructure, marking: Marking | None = None
) -> list[VertexSignAssignment]:
    """Every vertex sign in canonical order.

    Places get an arc-based row, plus a marking-based row when ``marking`` is
    given.  Transitions only ever have an arc-based sign.
    """
    if marking is not None:
        check_marking(structure, marking)
    rows = []
    for v in structure.vertices:
        rows.append(VertexSignAssignment(v, _arc_product(structure, v), Basis.ARCS))
        if marking is not None and v.is_place:
            rows.append(VertexSignAssignment(v, place_sign_wrt_marking(marking, v), Basis.MARKING))
    return rows
