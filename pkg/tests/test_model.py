import pytest

from spnet import (
    Arc,
    Marking,
    Sign,
    SignedPetriNet,
    SpnStructure,
    adjacency,
    place,
    source_vertices,
    transition,
    validate,
)
from spnet.errors import DimensionError, StructureError, VertexRangeError


def test_vertex_order_places_first():
    assert sorted([transition(0), place(3), place(1), transition(2)]) == [
        place(1),
        place(3),
        transition(0),
        transition(2),
    ]


def test_sign_product():
    assert Sign.NEG * Sign.NEG is Sign.POS
    assert Sign.POS * Sign.NEG is Sign.NEG
    assert Sign.product([]) is Sign.POS
    assert Sign.product([Sign.NEG] * 3) is Sign.NEG
    assert -Sign.POS is Sign.NEG


@pytest.mark.parametrize("a", list(Sign))
@pytest.mark.parametrize("b", list(Sign))
@pytest.mark.parametrize("c", list(Sign))
def test_sign_product_commutative_associative(a, b, c):
    assert a * b is b * a
    assert (a * b) * c is a * (b * c)


def test_arc_must_be_bipartite():
    with pytest.raises(StructureError):
        Arc(place(0), place(1))
    with pytest.raises(StructureError):
        Arc(transition(0), transition(1))


def test_arc_weight_positive():
    with pytest.raises(StructureError):
        Arc(place(0), transition(0), 0)


def test_parallel_arcs_of_opposite_sign_rejected():
    with pytest.raises(StructureError):
        SpnStructure(1, 1, (Arc(place(0), transition(0), 1, Sign.POS), Arc(place(0), transition(0), 1, Sign.NEG)))


def test_opposite_directions_allowed():
    s = SpnStructure(1, 1, (Arc(place(0), transition(0)), Arc(transition(0), place(0), 1, Sign.NEG)))
    assert len(s.arcs) == 2


def test_arc_endpoint_range():
    with pytest.raises(VertexRangeError):
        SpnStructure(1, 1, (Arc(place(1), transition(0)),))


def test_insertion_order_irrelevant():
    arcs = [Arc(place(0), transition(0)), Arc(transition(0), place(1), 1, Sign.NEG)]
    assert SpnStructure(2, 1, tuple(arcs)) == SpnStructure(2, 1, tuple(reversed(arcs)))


def test_sign_participates_in_equality():
    a = SpnStructure(1, 1, (Arc(place(0), transition(0), 1, Sign.POS),))
    b = SpnStructure(1, 1, (Arc(place(0), transition(0), 1, Sign.NEG),))
    assert a != b


def test_default_labels_and_lookup():
    s = SpnStructure(2, 1, (Arc(place(0), transition(0)), Arc(transition(0), place(1))))
    assert s.labels == (("p1", "p2"), ("t1",))
    assert s.vertex("t1") == transition(0)
    with pytest.raises(VertexRangeError):
        s.vertex("nope")


def test_duplicate_labels_rejected():
    with pytest.raises(StructureError):
        SpnStructure.build(["a", "a"], ["t"], [("a", "t", "+")])
    with pytest.raises(StructureError):
        SpnStructure.build(["x"], ["x"], [])


def test_marking_invariants():
    with pytest.raises(ValueError):
        Marking((1, -1), (0, 0))
    with pytest.raises(DimensionError):
        Marking((1, 0), (0,))


def test_marking_parse_roundtrip():
    m = Marking((1, 0, 1, 0), (1, 0, 0, 0))
    assert str(m) == "((1,0,1,0),(1,0,0,0))"
    assert Marking.parse(" ((1, 0,1,0),(1,0,0,0)) ") == m
    with pytest.raises(ValueError):
        Marking.parse("(1,0)")


def test_net_marking_length_checked():
    s = SpnStructure.build(["p"], ["t"], [("p", "t", "+")])
    with pytest.raises(DimensionError):
        SignedPetriNet(s, Marking((0, 0), (0, 0)))


def test_validate_fig1a(fig1a):
    report = validate(fig1a.structure)
    assert report.ok and report.is_ordinary
    assert not report.is_negative_spn


def test_validate_isolated_place():
    s = SpnStructure.build(["p", "lonely"], ["t"], [("p", "t", "+")])
    report = validate(s)
    assert not report.ok
    assert [(v.code, v.subject) for v in report.violations] == [("isolated-vertex", place(1))]


def test_validate_empty_sets():
    report = validate(SpnStructure(0, 0))
    assert {v.code for v in report.violations} == {"no-places", "no-transitions"}


def test_validate_negative_spn(plagiarism):
    assert validate(plagiarism.structure).is_negative_spn


def test_validate_weights_make_non_ordinary():
    s = SpnStructure.build(["p"], ["t"], [("p", "t", "+", 2)])
    assert not validate(s).is_ordinary


def test_validate_sources_and_sinks():
    s = SpnStructure.build(["p", "q"], ["t"], [("p", "t", "+"), ("t", "q", "+")])
    r = validate(s)
    assert r.has_sources and r.has_sinks


def test_adjacency_plagiarism(plagiarism):
    s = plagiarism.structure
    assert adjacency(s, s.vertex("t1")) == ((s.vertex("p0"),), (s.vertex("p1"),))


def test_adjacency_fig1a_postset(fig1a):
    s = fig1a.structure
    pre, post = adjacency(s, s.vertex("p1"))
    assert pre == ()
    assert post == (s.vertex("t1"), s.vertex("t2"))


def test_adjacency_out_of_range():
    s = SpnStructure.build(["p"], ["t"], [("p", "t", "+")])
    with pytest.raises(VertexRangeError):
        adjacency(s, place(5))


def test_source_vertices():
    chain = SpnStructure.build(["p", "q"], ["t"], [("p", "t", "+"), ("t", "q", "+")])
    assert source_vertices(chain) == (place(0),)
    loop = SpnStructure.build(["p"], ["t"], [("p", "t", "+"), ("t", "p", "+")])
    assert source_vertices(loop) == ()


def test_source_vertices_plagiarism(plagiarism):
    s = plagiarism.structure
    # Computed by scanning presets: only the hub has no incoming arc.
    expected = tuple(v for v in s.vertices if not any(a.target == v for a in s.arcs))
    assert source_vertices(s) == expected == (s.vertex("p0"),)


def test_bundled_models_validate(example):
    assert validate(example.load().structure).ok
