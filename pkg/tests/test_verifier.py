import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from iassl.errors import DomainError, IncompleteLabelingError, PreconditionError
from iassl.graph import LabeledGraph
from iassl.setalg import GroundSet, LabelSet
from iassl.verifier import (
    check_iasgl,
    check_iasi,
    check_iasl,
    check_iassi,
    check_iassl,
    compute_kappa,
    structural_audit,
    verify,
)


def S(*v):
    return LabelSet.of(v)


def by_name(findings):
    return {f.name: f for f in findings}


# -- IASL / IASI -------------------------------------------------------------


def test_iasl_examples(p3, x01):
    assert check_iasl(p3, x01).holds
    # duplicate vertex labels cannot even be stored
    with pytest.raises(DomainError):
        LabeledGraph(2, [], [S(1), S(1)])


def test_iasi_examples(x012):
    g = LabeledGraph(3, [(0, 1), (0, 2)], [S(0), S(1), S(0, 1)])
    assert check_iasi(g, x012).holds
    g = LabeledGraph(3, [(0, 1), (0, 2), (1, 2)], [S(0), S(2), S(0, 2)])
    assert check_iasi(g, GroundSet((0, 2))).holds
    g = LabeledGraph(3, [(0, 1), (1, 2)], [S(0), S(1), S(0, 1)])
    assert check_iasi(g, x012).holds
    g.add_edge(0, 2)
    assert check_iasi(g, x012).holds


def test_iasi_detects_repeated_edge_label():
    # {0}+{1,2} = {1,2} = {1}+{0,1}
    g = LabeledGraph(4, [(0, 1), (2, 3)], [S(0), S(1, 2), S(1), S(0, 1)])
    assert check_iasl(g).holds
    assert not check_iasi(g).holds


def test_incomplete_labeling_raises(x012):
    g = LabeledGraph(2, [(0, 1)], {0: S(0)})
    with pytest.raises(IncompleteLabelingError):
        verify(g, x012)


# -- IASSL / IASSI -----------------------------------------------------------


def test_p3_is_iassl(p3, x01):
    r = check_iassl(p3, x01)
    assert r.is_iassl and r.kappa == 2
    assert p3.n + p3.m - r.kappa == 2 ** x01.size - 1
    assert not r.missing_sets and not r.escaped_sets


def test_triangle_escapes(x012):
    g = LabeledGraph(3, [(0, 1), (0, 2), (1, 2)], [S(0), S(1), S(2)])
    r = check_iassl(g, x012)
    assert not r.is_iassl
    assert S(3) in r.escaped_sets
    assert sorted(s.key() for s in r.missing_sets) == [(0, 1), (0, 1, 2), (0, 2), (1, 2)]


def test_two_star_example(two_stars, x012):
    r = check_iassl(two_stars, x012)
    assert r.is_iassl and r.kappa == 3
    img = two_stars.f_star_image()
    assert sorted(s.key() for s in img.edge_labels) == [(0, 1, 2), (0, 2), (1, 2), (2,)]


def test_full_star_kappa(full_star, x012):
    assert check_iassl(full_star, x012).is_iassl
    assert compute_kappa(full_star, x012) == 5


def test_iassi_examples(iassi_example, p3, x01, x012):
    r = check_iassi(iassi_example, x012)
    assert r.is_iassi and r.kappa == 0 and not r.duplicate_fstar
    assert iassi_example.n + iassi_example.m == 7
    r = check_iassi(p3, x01)
    assert not r.is_iassi and r.is_iassl
    assert S(1) in r.duplicate_fstar
    iso = LabeledGraph(3, [], [S(0), S(1), S(0, 1)])
    assert check_iassi(iso, x01).is_iassi


def test_sequential_needs_zero():
    x = GroundSet((1, 2))
    g = LabeledGraph(1, [], [S(1)])
    with pytest.raises(DomainError):
        check_iassl(g, x)
    with pytest.raises(DomainError):
        check_iassi(g, x)


def test_single_vertex_zero_ground():
    x = GroundSet((0,))
    r = check_iassl(LabeledGraph(1, [], [S(0)]), x)
    assert r.is_iassl and r.is_iassi and r.kappa == 0


# -- IASGL -------------------------------------------------------------------


def test_iasgl_examples(p3, x01, x012):
    assert check_iasgl(p3, x01).holds
    g = LabeledGraph(2, [(0, 1)], [S(1), S(0, 1)])
    assert not check_iasgl(g, x01).holds
    # the hub star's six edges carry each non-{0} subset exactly once
    full = LabeledGraph(6, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2)],
                        [[0], [1], [0, 1], [0, 2], [2], [0, 1, 2]])
    assert check_iasgl(full, x012).holds
    full.add_edge(3, 4)
    assert not check_iasgl(full, x012).holds


# -- structural audit ----------------------------------------------------------


def test_structural_p3(p3, x01):
    f = by_name(structural_audit(p3, x01))
    assert f["zero-vertex-when-connected"].status == "pass"
    assert f["no-small-singleton-edge-off-zero"].status == "pass"
    assert f["max-element-vertex-hangs-off-zero"].status == "pass"
    assert f["pendants-at-least-rho-prime-minus-one"].status == "pass"
    lit = f["pendants-at-least-rho-prime"]
    assert lit.literal and lit.status == "fail"


def test_structural_full_star(full_star, x012):
    f = by_name(structural_audit(full_star, x012))
    for name in ("zero-vertex-when-connected", "no-small-singleton-edge-off-zero",
                 "max-element-vertex-hangs-off-zero", "pendants-at-least-rho-prime-minus-one"):
        assert f[name].status == "pass", name
    lit = f["no-edge-labeled-small-singleton"]
    assert lit.literal and lit.status == "fail" and [0, 1] in lit.witnesses


def test_structural_disconnected(two_stars, iassi_example, x012):
    f = by_name(structural_audit(two_stars, x012))
    assert f["zero-vertex-when-connected"].status == "n/a"
    f = by_name(structural_audit(iassi_example, x012))
    assert f["zero-vertex-isolated-when-injective"].status == "pass"


def test_structural_precondition(x012):
    g = LabeledGraph(3, [(0, 1), (0, 2), (1, 2)], [S(0), S(1), S(2)])
    with pytest.raises(PreconditionError):
        structural_audit(g, x012)


def test_report_serializes(p3, x01):
    d = check_iassl(p3, x01).to_dict()
    assert d["is_iassl"] is True and d["kappa"] == 2
    assert d["missing_sets"] == [] and d["escaped_sets"] == []


# -- properties ----------------------------------------------------------------


def _random_graph(rng, xs):
    x = GroundSet(xs)
    subs = x.subsets()
    n = rng.randint(1, min(6, len(subs)))
    labels = rng.sample(subs, n)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4]
    return LabeledGraph(n, edges, labels, ground=x), labels, edges


GROUNDS = [(0,), (0, 1), (0, 2), (0, 1, 2), (0, 1, 3), (0, 2, 3)]


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 2 ** 32), st.sampled_from(GROUNDS))
def test_hierarchy_and_oracle(seed, xs):
    g, labels, edges = _random_graph(random.Random(seed), xs)
    r = verify(g)
    assert (not r.is_iassi) or r.is_iassl
    assert (not r.is_iassl) or r.is_iasi
    assert (not r.is_iasi) or r.is_iasl
    assert (not r.is_iasgl) or r.is_iassl
    raw = [frozenset(s) for s in labels]
    assert r.is_iassl == oracles.is_iassl(raw, edges, xs)
    assert r.is_iassi == oracles.is_iassi(raw, edges, xs)
    if r.is_iassl:
        assert g.n + g.m - r.kappa == 2 ** len(xs) - 1
        assert (r.kappa % 2 == 1) == ((g.n + g.m) % 2 == 0)
