"""Token game: enabling, firing, firing sequences and bounded reachability.

Positive tokens travel only along positive arcs and negative tokens only along
negative arcs.  A transition whose input requirements are met may fire only if
it has an output arc of a suitable sign: a positive one when every input arc is
positive, a negative one when every input arc is negative, and any output arc
when the inputs are mixed.  Firing produces tokens on every output arc.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotEnabledError, PreconditionError, StepDisabledError
from .model import (
    Kind,
    Marking,
    Sign,
    SignedPetriNet,
    SpnStructure,
    VertexId,
    check_marking,
    require_kind,
)


@dataclass(frozen=True)
class ExplorationCaps:
    max_nodes: int = 10_000
    max_depth: int = 64
    max_tokens_per_place: int = 255

    def __post_init__(self):
        for name in ("max_nodes", "max_depth", "max_tokens_per_place"):
            if getattr(self, name) < 1:
                raise PreconditionError(f"{name} must be at least 1")


def _tokens_available(structure: SpnStructure, marking: Marking, t: VertexId) -> bool:
    for arc in structure.input_arcs(t):
        have = marking.positive if arc.sign is Sign.POS else marking.negative
        if have[arc.source.index] < arc.weight:
            return False
    return True


def has_firable_output(structure: SpnStructure, t: VertexId) -> bool:
    """Structural half of enabling: does ``t`` have an output arc its input signs allow?

    A transition with no input arcs satisfies both the all-positive and the
    all-negative case vacuously, so any output arc qualifies.
    """
    outputs = structure.output_arcs(t)
    if not outputs:
        return False
    input_signs = {a.sign for a in structure.input_arcs(t)}
    if len(input_signs) == 1:
        (required,) = input_signs
        return any(a.sign is required for a in outputs)
    return True


def is_enabled(structure: SpnStructure, marking: Marking, t: VertexId) -> bool:
    require_kind(structure, t, Kind.TRANSITION)
    check_marking(structure, marking)
    return _tokens_available(structure, marking, t) and has_firable_output(structure, t)


def enabled_transitions(structure: SpnStructure, marking: Marking) -> tuple[VertexId, ...]:
    check_marking(structure, marking)
    return tuple(
        t
        for t in structure.transitions
        if _tokens_available(structure, marking, t) and has_firable_output(structure, t)
    )


def _apply(structure: SpnStructure, marking: Marking, t: VertexId) -> Marking:
    pos, neg = list(marking.positive), list(marking.negative)
    for arc in structure.input_arcs(t):
        vec = pos if arc.sign is Sign.POS else neg
        vec[arc.source.index] -= arc.weight
    for arc in structure.output_arcs(t):
        vec = pos if arc.sign is Sign.POS else neg
        vec[arc.target.index] += arc.weight
    return Marking(tuple(pos), tuple(neg))


def fire(structure: SpnStructure, marking: Marking, t: VertexId) -> Marking:
    if not is_enabled(structure, marking, t):
        raise NotEnabledError(f"transition {structure.label(t)} is not enabled at {marking}")
    return _apply(structure, marking, t)


def fire_sequence(
    structure: SpnStructure, marking: Marking, sequence: Iterable[VertexId]
) -> list[Marking]:
    """Fire ``sequence`` in order and return every marking visited, start included.

    Raises :class:`StepDisabledError` carrying the partial trace when a step is
    not enabled.
    """
    trace = [marking]
    for i, t in enumerate(sequence):
        if not is_enabled(structure, trace[-1], t):
            raise StepDisabledError(i, t, trace, structure.label(t))
        trace.append(_apply(structure, trace[-1], t))
    return trace


@dataclass(frozen=True)
class TreeNode:
    id: int
    marking: Marking
    parent: int | None
    via: VertexId | None
    depth: int


@dataclass(frozen=True)
class ReachabilityTree:
    nodes: tuple[TreeNode, ...]
    truncated: bool
    caps: ExplorationCaps
    root: int = 0

    def node(self, node_id: int) -> TreeNode:
        return self.nodes[node_id]

    def children(self, node_id: int) -> tuple[TreeNode, ...]:
        return tuple(n for n in self.nodes if n.parent == node_id)

    def path(self, node_id: int) -> list[VertexId]:
        """Transitions fired from the root to reach ``node_id``."""
        labels = []
        node = self.nodes[node_id]
        while node.parent is not None:
            labels.append(node.via)
            node = self.nodes[node.parent]
        labels.reverse()
        return labels

    def markings(self) -> frozenset[Marking]:
        return frozenset(n.marking for n in self.nodes)


def _exceeds(marking: Marking, cap: int) -> bool:
    return any(x > cap for x in marking.positive) or any(x > cap for x in marking.negative)


def reachability_tree(
    net: SignedPetriNet, caps: ExplorationCaps = ExplorationCaps()
) -> ReachabilityTree:
    """Breadth-first reachability tree, children in transition-index order.

    Every firing creates a node, but a node whose marking was already seen is
    not expanded again.  Hitting any cap sets ``truncated``.
    """
    structure = net.structure
    nodes = [TreeNode(0, net.initial_marking, None, None, 0)]
    seen = {net.initial_marking}
    queue = deque([0])
    truncated = False
    while queue:
        current = nodes[queue.popleft()]
        successors = enabled_transitions(structure, current.marking)
        if successors and current.depth >= caps.max_depth:
            truncated = True
            continue
        for t in successors:
            child = _apply(structure, current.marking, t)
            if _exceeds(child, caps.max_tokens_per_place):
                truncated = True
                continue
            if len(nodes) >= caps.max_nodes:
                truncated = True
                queue.clear()
                break
            node = TreeNode(len(nodes), child, current.id, t, current.depth + 1)
            nodes.append(node)
            if child not in seen:
                seen.add(child)
                queue.append(node.id)
    return ReachabilityTree(tuple(nodes), truncated, caps)


@dataclass(frozen=True)
class ReachabilitySet:
    markings: frozenset[Marking]
    complete: bool

    def sorted(self) -> list[Marking]:
        return sorted(self.markings)

    def __contains__(self, marking):
        return marking in self.markings

    def __len__(self):
        return len(self.markings)


def reachability_set(
    net: SignedPetriNet, caps: ExplorationCaps = ExplorationCaps()
) -> ReachabilitySet:
    tree = reachability_tree(net, caps)
    return ReachabilitySet(tree.markings(), not tree.truncated)


def format_trace(markings: Sequence[Marking]) -> str:
    return "".join(f"{m}\n" for m in markings)
