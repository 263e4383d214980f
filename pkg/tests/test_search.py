import pytest

import oracles
from iassl.errors import CapacityError, DomainError
from iassl.families import (
    all_graphs,
    complete_graph,
    cycle_graph,
    empty_graph,
    ground_sets,
    path_graph,
    star_graph,
)
from iassl.graph import LabeledGraph
from iassl.search import SearchOptions, automorphisms, find_labelings, min_ground_set, sweep_graphs
from iassl.setalg import GroundSet
from iassl.verifier import check_iasgl, verify

X01 = GroundSet((0, 1))
X012 = GroundSet((0, 1, 2))


def keyed(res):
    return [tuple(s.key() for s in sol) for sol in res.solutions]


def one_edge_plus_isolated():
    return LabeledGraph(6, [(0, 1)])


def test_p3_two_labelings():
    res = find_labelings(path_graph(3), X01, enumerate_all=True)
    assert res.exhausted
    assert keyed(res) == oracles.all_labelings(3, [(0, 1), (1, 2)], (0, 1), "iassl")
    assert keyed(res) == [((0, 1), (0,), (1,)), ((1,), (0,), (0, 1))]


def test_c3_has_none():
    res = find_labelings(cycle_graph(3), X012, enumerate_all=True)
    assert not res.found and res.exhausted and res.nodes_expanded > 0


def test_iassi_edge_plus_isolated():
    g = one_edge_plus_isolated()
    res = find_labelings(g, X012, predicate="iassi", enumerate_all=True)
    assert len(res.solutions) == 48
    assert keyed(res) == oracles.all_labelings(6, [(0, 1)], (0, 1, 2), "iassi")
    first = find_labelings(g, X012, predicate="iassi")
    assert len(first.solutions) == 1 and not first.exhausted


def test_too_many_vertices_is_empty():
    res = find_labelings(empty_graph(4), X01)
    assert not res.found and res.exhausted and res.nodes_expanded == 0


def test_input_errors(monkeypatch):
    with pytest.raises(DomainError):
        find_labelings(path_graph(2), GroundSet((1, 2)))
    with pytest.raises(DomainError):
        SearchOptions(predicate="nope")
    with pytest.raises(DomainError):
        SearchOptions(cap=0)
    with pytest.raises(CapacityError):
        find_labelings(path_graph(2), GroundSet((0, 1, 2, 3, 4, 5)))
    with pytest.raises(CapacityError):
        find_labelings(path_graph(13), X012)
    monkeypatch.setenv("IASSL_MAX_SEARCH_SIZE", "2")
    with pytest.raises(CapacityError):
        find_labelings(path_graph(2), X012)


def small_cases():
    xs = [X01, X012, GroundSet((0, 1, 3)), GroundSet((0, 2, 3))]
    for n in range(1, 5):
        for name, g in all_graphs(n):
            for x in xs:
                yield name, g, x


SMALL = list(small_cases())


@pytest.mark.parametrize("predicate", ["iassl", "iassi", "iasgl"])
def test_matches_oracle_and_pruning_is_safe(predicate):
    for name, g, x in SMALL:
        full = find_labelings(g, x, predicate=predicate, enumerate_all=True)
        bare = find_labelings(g, x, predicate=predicate, enumerate_all=True, pruning=False)
        want = oracles.all_labelings(g.n, g.edges, x.values, predicate)
        assert keyed(full) == want, (name, x)
        assert keyed(bare) == want, (name, x)
        assert full.exhausted and bare.exhausted
        assert full.nodes_expanded <= bare.nodes_expanded


@pytest.mark.parametrize("predicate", ["iassl", "iassi"])
def test_symmetry_pruning_same_solutions(predicate):
    for name, g, x in SMALL:
        a = find_labelings(g, x, predicate=predicate, enumerate_all=True)
        b = find_labelings(g, x, predicate=predicate, enumerate_all=True, symmetry=True)
        assert keyed(a) == keyed(b), (name, x)


def test_soundness():
    for name, g, x in SMALL:
        for predicate in ("iassl", "iassi", "iasgl"):
            res = find_labelings(g, x, predicate=predicate, enumerate_all=True)
            for i in range(len(res.solutions)):
                h = res.labeled(i)
                if predicate == "iasgl":
                    assert check_iasgl(h, x).holds
                else:
                    assert verify(h, x).holds(predicate)


@pytest.mark.parametrize("cap", [None, 1, 5, 30])
def test_parallel_matches_serial(cap):
    g = one_edge_plus_isolated()
    kw = dict(predicate="iassi", enumerate_all=cap is None, cap=cap)
    serial = find_labelings(g, X012, **kw)
    parallel = find_labelings(g, X012, workers=3, **kw)
    assert serial.to_json() == parallel.to_json()


def test_cap():
    res = find_labelings(one_edge_plus_isolated(), X012, predicate="iassi", cap=5)
    assert len(res.solutions) == 5 and not res.exhausted


def test_automorphisms():
    assert len(automorphisms(3, [(0, 1), (1, 2)])) == 2
    assert len(automorphisms(4, [(0, 1), (1, 2), (2, 3), (0, 3)])) == 8
    assert len(automorphisms(4, [(0, 1), (0, 2), (0, 3)])) == 6


def test_min_ground_set():
    assert min_ground_set(path_graph(3)) == X01
    assert min_ground_set(path_graph(2)) is None
    assert min_ground_set(cycle_graph(4)) is None


def test_sweep_examples():
    xs = ground_sets(3, 4)
    assert len(xs) == 11
    rows = sweep_graphs(("cycles", range(3, 6)), xs)
    assert all(r["exhausted"] and not r["admits"] for r in rows) and len(rows) == 33
    rows = sweep_graphs([("K3", complete_graph(3)), ("K4", complete_graph(4))], xs)
    assert all(r["exhausted"] and not r["admits"] for r in rows)
    rows = sweep_graphs([("K1,2", star_graph(2))], [X01])
    assert rows[0]["admits"] and rows[0]["solutions"] == 2


def test_result_serializes():
    d = find_labelings(path_graph(3), X01, enumerate_all=True).to_dict()
    assert d["exhausted"] is True and len(d["solutions"]) == 2
