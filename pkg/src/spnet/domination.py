"""Domination in signed Petri nets.

A vertex set ``D`` dominates at a marking when ``D`` is the whole vertex set,
or every vertex ``v`` outside ``D`` has an out-neighbour in ``D`` and every such
out-neighbour ``u`` satisfies ``sign(v, u) == S(v) * S(u)``.  Here ``S`` is the
structural sign for transitions and the marking-based sign for places.

The sign clause makes domination non-monotone: adding a vertex to a
dominating set can break it, because the new member imposes a sign constraint
on each of its in-neighbours.  Exact searches therefore enumerate the whole
subset lattice instead of pruning supersets.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Collection, Iterable, Iterator, Sequence

from .errors import (
    CapacityError,
    DisconnectedSubtreeError,
    NotOrdinaryError,
    PreconditionError,
    TopologyError,
    VertexRangeError,
)
from .execution import ReachabilityTree
from .model import Marking, Sign, SpnStructure, VertexId, check_marking
from .signing import vertex_sign

DEFAULT_EXHAUSTIVE_LIMIT = 20


class Reason(enum.Enum):
    EMPTY_POSTSET_INTERSECTION = "empty-postset-intersection"
    SIGN_MISMATCH = "sign-mismatch"


@dataclass(frozen=True)
class Failure:
    """Why ``vertex`` (outside the candidate set) is not dominated.

    ``witness`` is the offending out-neighbour for sign mismatches.  ``marking``
    and ``node`` say which marking or tree node the failure belongs to when a
    set is checked against several.
    """

    vertex: VertexId
    reason: Reason
    witness: VertexId | None = None
    marking: Marking | None = None
    node: int | None = None


@dataclass(frozen=True)
class DominationReport:
    set: frozenset[VertexId]
    failures: tuple[Failure, ...]
    markings: tuple[Marking, ...] = ()

    @property
    def verdict(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.verdict


def _require_ordinary(structure: SpnStructure) -> None:
    if not structure.is_ordinary:
        raise NotOrdinaryError("domination is only defined for ordinary nets (all weights 1)")


def _check_subset(structure: SpnStructure, vertices: Iterable[VertexId]) -> frozenset[VertexId]:
    members = frozenset(vertices)
    for v in members:
        if not isinstance(v, VertexId):
            raise VertexRangeError(f"{v!r} is not a vertex id")
        structure._check_range(v)
    return members


def _failures(
    structure: SpnStructure, members: frozenset[VertexId], marking: Marking
) -> list[Failure]:
    failures = []
    for v in structure.vertices:
        if v in members:
            continue
        inside = [u for u in structure.postset(v) if u in members]
        if not inside:
            failures.append(Failure(v, Reason.EMPTY_POSTSET_INTERSECTION))
            continue
        sv = vertex_sign(structure, marking, v)
        for u in inside:
            if structure.sign_of(v, u) is not sv * vertex_sign(structure, marking, u):
                failures.append(Failure(v, Reason.SIGN_MISMATCH, u))
    return failures


def is_dominating(
    structure: SpnStructure, vertices: Iterable[VertexId], marking: Marking
) -> DominationReport:
    """Check ``vertices`` against the dominating-set definition at ``marking``.

    Every undominated vertex is reported, with the first offending neighbour for
    each sign mismatch, so the report doubles as an explanation.
    """
    _require_ordinary(structure)
    check_marking(structure, marking)
    members = _check_subset(structure, vertices)
    return DominationReport(members, tuple(_failures(structure, members, marking)), (marking,))


def is_dominating_over(
    structure: SpnStructure, vertices: Iterable[VertexId], markings: Iterable[Marking]
) -> DominationReport:
    """Domination with respect to every marking of a set of at least two markings."""
    _require_ordinary(structure)
    distinct = sorted(set(markings))
    if len(distinct) < 2:
        raise PreconditionError("a marking set needs at least two distinct markings")
    members = _check_subset(structure, vertices)
    failures = []
    for m in distinct:
        check_marking(structure, m)
        failures.extend(
            Failure(f.vertex, f.reason, f.witness, marking=m)
            for f in _failures(structure, members, m)
        )
    return DominationReport(members, tuple(failures), tuple(distinct))


def is_connected_subtree(tree: ReachabilityTree, nodes: Collection[int]) -> bool:
    """A node set of a tree is connected iff exactly one member has its parent outside."""
    chosen = set(nodes)
    if not chosen:
        return False
    tops = [n for n in chosen if tree.node(n).parent not in chosen]
    return len(tops) == 1


def is_dependent_dominating(
    structure: SpnStructure,
    vertices: Iterable[VertexId],
    tree: ReachabilityTree,
    nodes: Collection[int],
) -> DominationReport:
    """Domination at every node of a connected subtree of ``tree``.

    Nodes are checked individually, so two nodes carrying the same marking
    produce separate failures.  The subtree need not contain the root.
    """
    _require_ordinary(structure)
    chosen = sorted(set(nodes))
    if not chosen:
        raise DisconnectedSubtreeError("the node set is empty")
    for n in chosen:
        if not 0 <= n < len(tree.nodes):
            raise VertexRangeError(f"tree has no node {n}")
    if not is_connected_subtree(tree, chosen):
        raise DisconnectedSubtreeError(f"nodes {chosen} do not form a connected subtree")
    members = _check_subset(structure, vertices)
    failures = []
    for n in chosen:
        m = tree.node(n).marking
        failures.extend(
            Failure(f.vertex, f.reason, f.witness, marking=m, node=n)
            for f in _failures(structure, members, m)
        )
    return DominationReport(
        members, tuple(failures), tuple(tree.node(n).marking for n in chosen)
    )


def _dominated_nodes(structure, members, tree) -> set[int]:
    checker = _Checker(structure)
    mask = checker.mask(members)
    cache: dict[Marking, bool] = {}
    out = set()
    for node in tree.nodes:
        if node.marking not in cache:
            cache[node.marking] = checker.for_marking(node.marking).dominates(mask)
        if cache[node.marking]:
            out.add(node.id)
    return out


def maximal_dependent_marking_set(
    structure: SpnStructure, vertices: Iterable[VertexId], tree: ReachabilityTree
) -> frozenset[int]:
    """Largest root-anchored subtree on which ``vertices`` dominates at every node.

    A node is kept iff the set dominates at its marking and its parent is kept;
    the root is kept iff dominated.  The result is empty when the root fails.
    """
    _require_ordinary(structure)
    members = _check_subset(structure, vertices)
    good = _dominated_nodes(structure, members, tree)
    kept: set[int] = set()
    for node in tree.nodes:
        # BFS numbering: every parent id is smaller than its children's.
        if node.id in good and (node.parent is None or node.parent in kept):
            kept.add(node.id)
    return frozenset(kept)


def dominated_components(
    structure: SpnStructure, vertices: Iterable[VertexId], tree: ReachabilityTree
) -> list[frozenset[int]]:
    """Every maximal connected subtree on which the set dominates at every node.

    Components are ordered by the id of their top node; the one containing the
    root, if any, comes first and equals :func:`maximal_dependent_marking_set`.
    """
    _require_ordinary(structure)
    members = _check_subset(structure, vertices)
    good = _dominated_nodes(structure, members, tree)
    top_of: dict[int, int] = {}
    for node in tree.nodes:
        if node.id not in good:
            continue
        if node.parent is not None and node.parent in top_of:
            top_of[node.id] = top_of[node.parent]
        else:
            top_of[node.id] = node.id
    groups: dict[int, set[int]] = {}
    for n, top in top_of.items():
        groups.setdefault(top, set()).add(n)
    return [frozenset(groups[top]) for top in sorted(groups)]


class _Checker:
    """Bitmask domination test for repeated queries on one structure.

    Vertices are numbered in canonical order.  For a marking, ``post[i]`` is
    the out-neighbour mask of vertex ``i`` and ``bad[i]`` the out-neighbours
    that violate the sign clause.  A set dominates iff every outside vertex has
    ``post & set`` non-empty and ``bad & set`` empty.
    """

    def __init__(self, structure: SpnStructure):
        self.structure = structure
        self.order = structure.vertices
        self.position = {v: i for i, v in enumerate(self.order)}
        self.full = (1 << len(self.order)) - 1
        self.post = [
            sum(1 << self.position[u] for u in structure.postset(v)) for v in self.order
        ]
        self.bad = [0] * len(self.order)

    def mask(self, vertices: Iterable[VertexId]) -> int:
        return sum(1 << self.position[v] for v in set(vertices))

    def vertices(self, mask: int) -> frozenset[VertexId]:
        return frozenset(v for i, v in enumerate(self.order) if mask >> i & 1)

    def for_marking(self, marking: Marking) -> "_Checker":
        check_marking(self.structure, marking)
        s = self.structure
        signs = [vertex_sign(s, marking, v) for v in self.order]
        self.bad = [
            sum(
                1 << self.position[u]
                for u in s.postset(v)
                if s.sign_of(v, u) is not signs[i] * signs[self.position[u]]
            )
            for i, v in enumerate(self.order)
        ]
        return self

    def dominates(self, mask: int) -> bool:
        if mask == self.full:
            return True
        post, bad = self.post, self.bad
        outside = self.full & ~mask
        while outside:
            low = outside & -outside
            i = low.bit_length() - 1
            if not post[i] & mask or bad[i] & mask:
                return False
            outside ^= low
        return True


def _subsets_by_size(universe: Sequence[int]) -> Iterator[int]:
    """Masks over ``universe`` by increasing size, lexicographic within a size."""
    for k in range(len(universe) + 1):
        for combo in combinations(universe, k):
            yield sum(1 << i for i in combo)


def _search_universe(checker: _Checker, restrict, limit: int) -> list[int]:
    if restrict is None:
        universe = list(range(len(checker.order)))
    else:
        members = _check_subset(checker.structure, restrict)
        universe = sorted(checker.position[v] for v in members)
    if len(universe) > limit:
        raise CapacityError(
            f"exhaustive search over {len(universe)} vertices exceeds the limit of {limit}"
        )
    return universe


def _sort_key(vertices: frozenset[VertexId]):
    return (len(vertices), sorted(vertices))


def minimal_dominating_sets(
    structure: SpnStructure,
    marking: Marking,
    restrict: Iterable[VertexId] | None = None,
    limit: int = DEFAULT_EXHAUSTIVE_LIMIT,
) -> list[frozenset[VertexId]]:
    """All inclusion-minimal dominating sets at ``marking``.

    With ``restrict``, only subsets of it are considered.  Sets are returned
    by size, then lexicographically by canonical vertex order.
    """
    _require_ordinary(structure)
    checker = _Checker(structure).for_marking(marking)
    universe = _search_universe(checker, restrict, limit)
    minimal: list[int] = []
    for mask in _subsets_by_size(universe):
        if not checker.dominates(mask):
            continue
        # Smaller dominating sets were all seen already; any dominating proper
        # subset contains a minimal one.
        if any(m & mask == m for m in minimal):
            continue
        minimal.append(mask)
    return sorted((checker.vertices(m) for m in minimal), key=_sort_key)


def minimum_dominating_set(
    structure: SpnStructure,
    marking: Marking,
    restrict: Iterable[VertexId] | None = None,
    limit: int = DEFAULT_EXHAUSTIVE_LIMIT,
) -> frozenset[VertexId] | None:
    """A smallest dominating set, first in canonical order among ties.

    Without ``restrict`` a result always exists since the full vertex set
    dominates; with it, ``None`` means no subset of ``restrict`` dominates.
    """
    _require_ordinary(structure)
    checker = _Checker(structure).for_marking(marking)
    universe = _search_universe(checker, restrict, limit)
    for mask in _subsets_by_size(universe):
        if checker.dominates(mask):
            return checker.vertices(mask)
    return None


@dataclass(frozen=True)
class SimilarityReport:
    similar: frozenset[VertexId]
    d1: frozenset[VertexId]
    d2: frozenset[VertexId]
    d1_dominates: bool
    pairs: tuple[tuple[VertexId, VertexId], ...]


def similarity_pairs(structure: SpnStructure) -> tuple[VertexId, tuple[tuple[VertexId, VertexId], ...]]:
    """Check the hub-and-spoke shape and return ``(hub, ((t_i, p_i), ...))``.

    The shape is one hub place with a negative arc to every transition, each
    transition having a single negative arc to its own document place, and no
    other arcs.
    """
    if structure.transition_count == 0:
        raise TopologyError("the net has no transitions")
    if structure.place_count != structure.transition_count + 1:
        raise TopologyError("expected one hub place plus one place per transition")
    if any(a.sign is not Sign.NEG for a in structure.arcs):
        raise TopologyError("every arc must be negative")
    if not structure.is_ordinary:
        raise TopologyError("every arc weight must be 1")
    hubs = {structure.preset(t)[0] for t in structure.transitions if len(structure.preset(t)) == 1}
    if len(hubs) != 1:
        raise TopologyError("transitions must share exactly one input place")
    (hub,) = hubs
    pairs = []
    targets = set()
    for t in structure.transitions:
        pre, post = structure.preset(t), structure.postset(t)
        if pre != (hub,) or len(post) != 1 or post[0] == hub:
            raise TopologyError(f"{structure.label(t)} must read the hub and feed one other place")
        pairs.append((t, post[0]))
        targets.add(post[0])
    if len(targets) != structure.transition_count:
        raise TopologyError("each transition must feed a distinct place")
    if structure.preset(hub) or len(structure.arcs) != 2 * structure.transition_count:
        raise TopologyError("unexpected extra arcs")
    return hub, tuple(pairs)


def similarity_report(
    structure: SpnStructure, marking: Marking, limit: int = DEFAULT_EXHAUSTIVE_LIMIT
) -> SimilarityReport:
    """Find the documents similar to the hub document after matching.

    Start from all places.  If they dominate, every document is similar.
    Otherwise find a smallest set of transitions whose addition makes the set
    dominate; documents whose transitions were not needed are the similar ones.
    """
    _, pairs = similarity_pairs(structure)
    checker = _Checker(structure).for_marking(marking)
    d1 = frozenset(structure.places)
    d1_mask = checker.mask(d1)
    d1_dominates = checker.dominates(d1_mask)
    d2: frozenset[VertexId] = frozenset()
    if not d1_dominates:
        universe = _search_universe(checker, structure.transitions, limit)
        for mask in _subsets_by_size(universe):
            if checker.dominates(d1_mask | mask):
                d2 = checker.vertices(mask)
                break
    similar = frozenset(p for t, p in pairs if t not in d2)
    return SimilarityReport(similar, d1, d2, d1_dominates, pairs)
