"""Brute-force reference implementations.

Deliberately naive: frozensets, itertools, and the definitions written out
literally.  Nothing here touches the bit-vector code under test.
"""

import itertools


def nonempty_subsets(xs):
    xs = sorted(xs)
    return [frozenset(c) for r in range(1, len(xs) + 1) for c in itertools.combinations(xs, r)]


def add(a, b):
    return frozenset(x + y for x in a for y in b)


def key(s):
    return tuple(sorted(s))


def decompositions(s, xs):
    """Unordered non-trivial pairs {B, C} with B + C = s, by scanning all
    ordered pairs of non-empty subsets."""
    zero = frozenset({0})
    subs = nonempty_subsets(xs)
    out = set()
    for b in subs:
        for c in subs:
            if b != zero and c != zero and add(b, c) == s:
                out.add(tuple(sorted((key(b), key(c)))))
    return sorted(out)


def classify(xs):
    zero = frozenset({0})
    subs = nonempty_subsets(xs)
    ground = frozenset(xs)
    sums = {add(b, c) for b in subs for c in subs if b != zero and c != zero}
    non_sumsets = sorted((key(s) for s in subs if s not in sums))
    sumsets = sorted(key(s) for s in subs if s in sums)
    summand = {
        key(b) for b in subs if b != zero
        and any(c != zero and add(b, c) <= ground for c in subs)
    }
    b_family = [s for s in non_sumsets if s not in summand]
    return non_sumsets, sumsets, b_family


def fstar(labels, edges):
    vertex = [frozenset(s) for s in labels]
    edge = [add(vertex[u], vertex[v]) for u, v in edges]
    return vertex, edge


def is_iassl(labels, edges, xs):
    vertex, edge = fstar(labels, edges)
    if len(set(vertex)) != len(vertex) or len(set(edge)) != len(edge):
        return False
    return set(vertex) | set(edge) == set(nonempty_subsets(xs))


def is_iassi(labels, edges, xs):
    vertex, edge = fstar(labels, edges)
    return is_iassl(labels, edges, xs) and len(vertex) + len(edge) == len(set(vertex) | set(edge))


def is_iasgl(labels, edges, xs):
    vertex, edge = fstar(labels, edges)
    if len(set(vertex)) != len(vertex) or len(set(edge)) != len(edge):
        return False
    ground = frozenset(xs)
    if not all(v <= ground for v in vertex):
        return False
    return set(edge) == set(nonempty_subsets(xs)) - {frozenset({0})}


def all_labelings(n, edges, xs, predicate):
    """Every injective assignment of non-empty subsets, filtered."""
    test = {"iassl": is_iassl, "iassi": is_iassi, "iasgl": is_iasgl}[predicate]
    out = []
    for labels in itertools.permutations(nonempty_subsets(xs), n):
        if test(labels, edges, xs):
            out.append(tuple(key(s) for s in labels))
    return sorted(out)
