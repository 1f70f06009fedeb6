"""Signed Petri nets: token game, vertex signs, domination and marking synthesis."""

from .domination import (
    DominationReport,
    Failure,
    Reason,
    SimilarityReport,
    dominated_components,
    is_dependent_dominating,
    is_dominating,
    is_dominating_over,
    maximal_dependent_marking_set,
    minimal_dominating_sets,
    minimum_dominating_set,
    similarity_report,
)
from .errors import *  # noqa: F401,F403
from .execution import (
    ExplorationCaps,
    ReachabilitySet,
    ReachabilityTree,
    TreeNode,
    enabled_transitions,
    fire,
    fire_sequence,
    is_enabled,
    reachability_set,
    reachability_tree,
)
from .model import (
    Arc,
    Kind,
    Marking,
    Sign,
    SignedPetriNet,
    SpnStructure,
    ValidationReport,
    VertexId,
    Violation,
    adjacency,
    format_vertex_set,
    parse_vertex_set,
    place,
    sink_vertices,
    source_vertices,
    transition,
    validate,
)
from .modelio import canonicalize, load_model, read_model, save_model, write_model
from .signing import (
    place_sign_wrt_arcs,
    place_sign_wrt_marking,
    sign_assignments,
    transition_sign,
    vertex_sign,
)
from .synthesis import Parity, SynthesisReport, synthesize_theorem1, synthesize_theorem2

__version__ = "0.1.0"
