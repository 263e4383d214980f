import itertools
import json

import pytest

from iassl.errors import DomainError, IncompleteLabelingError
from iassl.families import path_graph
from iassl.graph import LabeledGraph
from iassl.setalg import LabelSet


def S(*v):
    return LabelSet.of(v)


@pytest.mark.parametrize(
    "a, b, want",
    [((0,), (1,), (1,)), ((1,), (0, 1), (1, 2)), ((0, 1), (0, 2), (0, 1, 2, 3))],
)
def test_induced_edge_label(a, b, want):
    g = LabeledGraph(2, [(0, 1)], [S(*a), S(*b)])
    assert g.induced_edge_label(0, 1) == S(*want)


def test_induced_edge_label_needs_labels():
    g = LabeledGraph(2, [(0, 1)], {0: S(1)})
    with pytest.raises(IncompleteLabelingError):
        g.induced_edge_label(0, 1)
    with pytest.raises(IncompleteLabelingError):
        g.f_star_image()


def test_f_star_image_p3(p3):
    img = p3.f_star_image()
    assert sorted(s.key() for s in img.combined) == sorted([(0,), (1,), (0, 1), (1,), (0, 1)])
    assert len(img.combined) == p3.n + p3.m


def test_f_star_image_small_cases():
    g = LabeledGraph(1, [], [S(0)])
    assert g.f_star_image().combined == [S(0)]
    g = LabeledGraph(2, [(0, 1)], [S(1), S(0, 1)])
    assert sorted(s.key() for s in g.f_star_image().combined) == [(0, 1), (1,), (1, 2)]


def test_simple_graph_enforced():
    g = LabeledGraph(3, [(0, 1)])
    with pytest.raises(DomainError):
        g.add_edge(1, 0)
    with pytest.raises(DomainError):
        g.add_edge(2, 2)
    with pytest.raises(DomainError):
        g.add_edge(0, 3)


def test_labels_injective():
    g = LabeledGraph(2)
    g.set_label(0, S(1))
    with pytest.raises(DomainError):
        g.set_label(1, S(1))
    g.set_label(0, S(2))
    g.set_label(1, S(1))
    assert g.vertex_with_label(S(1)) == 1


def test_degree_queries():
    g = path_graph(3)
    assert g.degree(1) == 2
    assert g.is_pendant(0) and g.is_pendant(2) and not g.is_pendant(1)
    h = LabeledGraph(6, [(0, 1)])
    assert len(h.components()) == 5
    assert h.isolated_vertices() == [2, 3, 4, 5]
    assert not h.is_connected() and g.is_connected() and g.is_tree()


def test_relabeling_preserves_f_star_multiset(full_star):
    base = sorted(s.key() for s in full_star.f_star_image().combined)
    for perm in itertools.islice(itertools.permutations(range(full_star.n)), 0, 720, 37):
        h = full_star.relabel_vertices(list(perm))
        assert sorted(s.key() for s in h.f_star_image().combined) == base


def test_json_round_trip(full_star):
    text = full_star.to_json()
    back = LabeledGraph.from_json(text)
    assert back == full_star
    assert back.edges == full_star.edges
    assert json.loads(text)["vertices"][3] == {"id": 3, "label": [0, 2]}


@pytest.mark.parametrize(
    "bad",
    [
        '{"edges": []}',
        '{"vertices": [{"id": 1}], "edges": []}',
        '{"vertices": [{"id": 0, "label": []}], "edges": []}',
        '{"vertices": [{"id": 0}, {"id": 1}], "edges": [[0, 0]]}',
        'not json',
    ],
)
def test_json_rejects(bad):
    with pytest.raises(DomainError):
        LabeledGraph.from_json(bad)


def test_dot_export(p3):
    dot = p3.to_dot()
    assert dot == p3.to_dot()
    assert dot.count("label=") == 5
    assert '0 -- 2 [label="{0,1}"]' in dot
    single = LabeledGraph(1, [], [S(0)]).to_dot()
    assert "--" not in single and '0 [label="{0}"]' in single
