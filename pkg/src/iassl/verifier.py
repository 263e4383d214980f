"""Decide the labeling predicates for a fully labeled graph.

The hierarchy, weakest first:

``iasl``   vertex labels are non-empty and pairwise distinct
``iasi``   additionally the induced edge labels are pairwise distinct
``iasgl``  an ``iasi`` whose edge labels are exactly the subsets of X other than ``{0}``
``iassl``  an ``iasi`` whose vertex and edge labels together cover every subset of X
``iassi``  an ``iassl`` in which no set is used twice across vertices and edges
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import DomainError, PreconditionError
from .graph import LabeledGraph
from .setalg import GroundSet, LabelSet, classify_powerset, members_of, sum_bits

__all__ = [
    "Finding",
    "PredicateResult",
    "VerificationReport",
    "check_iasl",
    "check_iasi",
    "check_iasgl",
    "check_iassl",
    "check_iassi",
    "compute_kappa",
    "structural_audit",
    "verify",
    "cached_classification",
]

PASS, FAIL, NA = "pass", "fail", "n/a"


@dataclass
class Finding:
    name: str
    status: str
    detail: str = ""
    literal: bool = False
    witnesses: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "detail": self.detail,
            "literal": self.literal,
            "witnesses": self.witnesses,
        }


@dataclass
class PredicateResult:
    holds: bool
    findings: list[str] = field(default_factory=list)

    def __bool__(self):
        return self.holds


@dataclass
class VerificationReport:
    ground: GroundSet
    n_vertices: int
    n_edges: int
    is_iasl: bool
    is_iasi: bool
    is_iasgl: bool
    is_iassl: bool
    is_iassi: bool
    kappa: int
    missing_sets: list[LabelSet]
    duplicate_fstar: list[LabelSet]
    escaped_sets: list[LabelSet]
    findings: list[str] = field(default_factory=list)
    structural_findings: list[Finding] = field(default_factory=list)

    def holds(self, predicate: str) -> bool:
        return getattr(self, f"is_{predicate}")

    def to_dict(self) -> dict:
        return {
            "ground": self.ground.to_json(),
            "n_vertices": self.n_vertices,
            "n_edges": self.n_edges,
            "is_iasl": self.is_iasl,
            "is_iasi": self.is_iasi,
            "is_iasgl": self.is_iasgl,
            "is_iassl": self.is_iassl,
            "is_iassi": self.is_iassi,
            "kappa": self.kappa,
            "missing_sets": [s.to_json() for s in self.missing_sets],
            "duplicate_fstar": [s.to_json() for s in self.duplicate_fstar],
            "escaped_sets": [s.to_json() for s in self.escaped_sets],
            "findings": list(self.findings),
            "structural_findings": [f.to_dict() for f in self.structural_findings],
        }


@lru_cache(maxsize=256)
def cached_classification(x: GroundSet):
    return classify_powerset(x)


def _ground(g: LabeledGraph, x: GroundSet | None) -> GroundSet:
    x = x if x is not None else g.ground
    if x is None:
        raise DomainError("no ground set given and the graph carries none")
    return x


def _label_bits(g: LabeledGraph) -> tuple[list[int], list[tuple[tuple[int, int], int]]]:
    g.require_labels()
    vbits = [g.label(v).bits for v in g.vertices]
    ebits = [((u, v), sum_bits(vbits[u], vbits[v])) for u, v in g.edges]
    return vbits, ebits


def _fmt(bits: int) -> str:
    return "{" + ",".join(map(str, members_of(bits))) + "}"


def _sorted_sets(bits_iter, bound: int) -> list[LabelSet]:
    return sorted(LabelSet(b, bound if b.bit_length() - 1 <= bound else None) for b in bits_iter)


def check_iasl(g: LabeledGraph, x: GroundSet | None = None) -> PredicateResult:
    vbits, _ = _label_bits(g)
    findings = []
    for b, count in Counter(vbits).items():
        if count > 1:
            findings.append(f"vertex label {_fmt(b)} used {count} times")
    return PredicateResult(not findings, findings)


def check_iasi(g: LabeledGraph, x: GroundSet | None = None) -> PredicateResult:
    result = check_iasl(g, x)
    _, ebits = _label_bits(g)
    for b, count in Counter(b for _, b in ebits).items():
        if count > 1:
            result.findings.append(f"edge label {_fmt(b)} induced {count} times")
    result.holds = not result.findings
    return result


def check_iasgl(g: LabeledGraph, x: GroundSet | None = None) -> PredicateResult:
    x = _ground(g, x)
    result = check_iasi(g, x)
    vbits, ebits = _label_bits(g)
    outside = [b for b in vbits if b & ~x.bits]
    for b in outside:
        result.findings.append(f"vertex label {_fmt(b)} is not a subset of X")
    wanted = set(x.subset_bits()) - {1} if x.contains_zero else set(x.subset_bits())
    got = {b for _, b in ebits}
    for b in sorted(wanted - got, key=lambda b: tuple(members_of(b))):
        result.findings.append(f"no edge carries {_fmt(b)}")
    for b in sorted(got - wanted, key=lambda b: tuple(members_of(b))):
        result.findings.append(f"edge label {_fmt(b)} is not a non-trivial subset of X")
    result.holds = not result.findings
    return result


def verify(g: LabeledGraph, x: GroundSet | None = None, structural: bool = True) -> VerificationReport:
    """Evaluate every predicate and the cover statistics in one pass.

    Structural findings are attached only when the labeling is an IASSL.
    """
    x = _ground(g, x)
    vbits, ebits = _label_bits(g)
    edge_values = [b for _, b in ebits]

    iasl = check_iasl(g, x)
    iasi = check_iasi(g, x)
    iasgl = check_iasgl(g, x)

    # presence table over the non-empty subsets of X, filled in one pass
    index = {b: i for i, b in enumerate(x.subset_bits())}
    seen = bytearray(len(index))
    counts: Counter[int] = Counter()
    escaped: set[int] = set()
    for b in vbits + edge_values:
        counts[b] += 1
        i = index.get(b)
        if i is None:
            escaped.add(b)
        else:
            seen[i] = 1
    missing = [b for b, i in index.items() if not seen[i]]
    kappa = len(set(vbits) & set(edge_values))

    is_iassl = iasi.holds and not missing and not escaped
    duplicates = [b for b, c in counts.items() if c > 1]
    is_iassi = is_iassl and not duplicates

    report = VerificationReport(
        ground=x,
        n_vertices=g.n,
        n_edges=len(ebits),
        is_iasl=iasl.holds,
        is_iasi=iasi.holds,
        is_iasgl=iasgl.holds,
        is_iassl=is_iassl,
        is_iassi=is_iassi,
        kappa=kappa,
        missing_sets=_sorted_sets(missing, x.bound),
        duplicate_fstar=_sorted_sets(duplicates, x.bound),
        escaped_sets=_sorted_sets(escaped, x.bound),
        findings=list(iasi.findings),
    )
    report.findings += [f"{_fmt(b)} escapes X" for b in sorted(escaped, key=lambda b: tuple(members_of(b)))]
    report.findings += [f"{_fmt(b)} not covered" for b in sorted(missing, key=lambda b: tuple(members_of(b)))]
    if structural and is_iassl and x.contains_zero:
        report.structural_findings = structural_audit(g, x)
    return report


def _require_zero(x: GroundSet) -> None:
    if not x.contains_zero:
        raise DomainError(f"sequential labelings need 0 in the ground set, got {x!r}")


def check_iassl(g: LabeledGraph, x: GroundSet | None = None) -> VerificationReport:
    x = _ground(g, x)
    _require_zero(x)
    return verify(g, x)


def check_iassi(g: LabeledGraph, x: GroundSet | None = None) -> VerificationReport:
    # the report carries both flags; callers read ``is_iassi``
    return check_iassl(g, x)


def compute_kappa(g: LabeledGraph, x: GroundSet | None = None) -> int:
    """Number of distinct sets used both as a vertex label and as an edge label."""
    vbits, ebits = _label_bits(g)
    return len(set(vbits) & {b for _, b in ebits})


def structural_audit(g: LabeledGraph, x: GroundSet | None = None) -> list[Finding]:
    """Named structural checks on an IASSL.

    Findings flagged ``literal`` evaluate statements in their original,
    stronger form; they are reported, never raised.
    """
    x = _ground(g, x)
    _require_zero(x)
    vbits, ebits = _label_bits(g)
    if not verify(g, x, structural=False).is_iassl:
        raise PreconditionError("structural audit needs an IASSL")

    cls = cached_classification(x)
    connected = g.is_connected() and g.n >= 2
    zero_vertices = [v for v in g.vertices if vbits[v] == 1]
    nonzero = [v for v in x.values if v > 0]
    small = [1 << v for v in nonzero[:2]]
    pendants = g.pendant_vertices()
    findings = []

    if g.is_connected():
        findings.append(Finding(
            "zero-vertex-when-connected", PASS if zero_vertices else FAIL,
            f"vertices labeled {{0}}: {zero_vertices}",
        ))
    else:
        findings.append(Finding("zero-vertex-when-connected", NA, "graph is disconnected"))

    off_zero = [
        [u, v] for (u, v), b in ebits
        if b in small and vbits[u] != 1 and vbits[v] != 1
    ]
    findings.append(Finding(
        "no-small-singleton-edge-off-zero", FAIL if off_zero else PASS,
        "edges between two non-{0} vertices labeled by a smallest non-zero singleton",
        witnesses=off_zero,
    ))

    top = 1 << x.max_value
    bad_top = []
    for v in g.vertices:
        if vbits[v] & top:
            nbrs = g.neighbors(v)
            if len(nbrs) > 1 or any(vbits[w] != 1 for w in nbrs):
                bad_top.append(v)
    findings.append(Finding(
        "max-element-vertex-hangs-off-zero", FAIL if bad_top else PASS,
        "vertices containing max(X) have degree <= 1 and neighbour {0}",
        witnesses=bad_top,
    ))

    rho_prime = cls.rho_prime
    if connected:
        findings.append(Finding(
            "pendants-at-least-rho-prime-minus-one",
            PASS if len(pendants) >= rho_prime - 1 else FAIL,
            f"pendants={len(pendants)} rho'={rho_prime}",
            witnesses=pendants,
        ))
        findings.append(Finding(
            "pendants-at-least-rho-prime",
            PASS if len(pendants) >= rho_prime else FAIL,
            f"pendants={len(pendants)} rho'={rho_prime}",
            literal=True,
            witnesses=pendants,
        ))
        small_edges = [[u, v] for (u, v), b in ebits if b in small]
        findings.append(Finding(
            "no-edge-labeled-small-singleton",
            FAIL if small_edges else PASS,
            "edges labeled {x1} or {x2}",
            literal=True,
            witnesses=small_edges,
        ))
    else:
        for name, literal in (("pendants-at-least-rho-prime-minus-one", False),
                              ("pendants-at-least-rho-prime", True),
                              ("no-edge-labeled-small-singleton", True)):
            findings.append(Finding(name, NA, "graph is not connected", literal=literal))

    if len(set(vbits)) + len({b for _, b in ebits}) == len(vbits) + len(ebits) and \
            not set(vbits) & {b for _, b in ebits}:
        busy = [v for v in zero_vertices if g.degree(v) > 0]
        findings.append(Finding(
            "zero-vertex-isolated-when-injective", FAIL if busy else PASS,
            "f* injective: vertices labeled {0} are isolated",
            witnesses=busy,
        ))
    else:
        findings.append(Finding("zero-vertex-isolated-when-injective", NA, "f* not injective"))
    return findings
