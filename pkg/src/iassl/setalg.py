"""Sum-set arithmetic and power-set classification over a finite ground set.

Sets of non-negative integers are stored as Python ints used as bit-vectors:
bit ``k`` is set iff ``k`` is a member.  Shifting a set by ``c`` is then a
left shift, and the sum set ``A + B`` is the OR of ``B << a`` over ``a in A``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from . import config
from .errors import CapacityError, DomainError, RepresentationError

__all__ = [
    "GroundSet",
    "LabelSet",
    "PowersetClassification",
    "bits_of",
    "members_of",
    "sum_bits",
    "sumset",
    "nontrivial_decompositions",
    "is_nontrivial_sumset",
    "is_nontrivial_summand",
    "classify_powerset",
]


def bits_of(values: Iterable[int]) -> int:
    bits = 0
    for v in values:
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise DomainError(f"set members must be non-negative integers, got {v!r}")
        bits |= 1 << v
    return bits


def members_of(bits: int) -> Iterator[int]:
    """Yield the members of a bit-vector set in increasing order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def sum_bits(a: int, b: int) -> int:
    """Sum set of two bit-vector sets (either may be empty)."""
    if a.bit_count() > b.bit_count():
        a, b = b, a
    out = 0
    for x in members_of(a):
        out |= b << x
    return out


@dataclass(frozen=True, eq=False)
class LabelSet:
    """A non-empty finite set of non-negative integers.

    ``bound`` is the largest value the representation may hold; ``None``
    means unbounded.  Equality and hashing ignore the bound.
    """

    bits: int
    bound: int | None = field(default=None)

    def __post_init__(self):
        if self.bits <= 0:
            raise DomainError("the empty set is never a legal label")
        if self.bound is not None and self.bits.bit_length() - 1 > self.bound:
            raise RepresentationError(
                f"member {self.bits.bit_length() - 1} exceeds bound {self.bound}"
            )

    @classmethod
    def of(cls, values: Iterable[int], bound: int | None = None) -> "LabelSet":
        return cls(bits_of(values), bound)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(members_of(self.bits))

    @property
    def cardinality(self) -> int:
        return self.bits.bit_count()

    @property
    def min(self) -> int:
        return (self.bits & -self.bits).bit_length() - 1

    @property
    def max(self) -> int:
        return self.bits.bit_length() - 1

    def key(self) -> tuple[int, ...]:
        """Canonical sort key: value-lexicographic on the sorted members."""
        return self.members

    def issubset(self, other: "LabelSet | GroundSet") -> bool:
        return self.bits & ~other.bits == 0

    def to_json(self) -> list[int]:
        return list(self.members)

    def __iter__(self):
        return members_of(self.bits)

    def __len__(self):
        return self.bits.bit_count()

    def __contains__(self, value):
        return isinstance(value, int) and value >= 0 and bool(self.bits >> value & 1)

    def __eq__(self, other):
        if not isinstance(other, LabelSet):
            return NotImplemented
        return self.bits == other.bits

    def __hash__(self):
        return hash(self.bits)

    def __lt__(self, other):
        if not isinstance(other, LabelSet):
            return NotImplemented
        return self.key() < other.key()

    def __add__(self, other):
        if not isinstance(other, LabelSet):
            return NotImplemented
        return sumset(self, other)

    def __repr__(self):
        return "{" + ",".join(map(str, self.members)) + "}"


def sumset(a: LabelSet, b: LabelSet) -> LabelSet:
    """Return ``{x + y : x in a, y in b}``.

    The result carries the tighter of the two bounds; exceeding it raises
    :class:`RepresentationError`.
    """
    bounds = [bd for bd in (a.bound, b.bound) if bd is not None]
    bound = min(bounds) if bounds else None
    if bound is not None and a.max + b.max > bound:
        raise RepresentationError(
            f"{a!r} + {b!r} reaches {a.max + b.max}, above bound {bound}"
        )
    return LabelSet(sum_bits(a.bits, b.bits), bound)


@dataclass(frozen=True)
class GroundSet:
    """The labeling universe X, a finite set of non-negative integers."""

    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if not values:
            raise DomainError("a ground set needs at least one element")
        for v in values:
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise DomainError(f"ground set members must be non-negative integers, got {v!r}")
        if any(a >= b for a, b in zip(values, values[1:])):
            raise DomainError(f"ground set values must be strictly increasing, got {list(values)}")

    @classmethod
    def of(cls, values: Iterable[int]) -> "GroundSet":
        """Build from any iterable; duplicates are rejected, order is not."""
        values = list(values)
        if len(set(values)) != len(values):
            raise DomainError(f"duplicate values in ground set {values}")
        try:
            ordered = sorted(values)
        except TypeError:
            raise DomainError(f"ground set members must be integers, got {values}") from None
        return cls(tuple(ordered))

    @classmethod
    def parse(cls, text: str) -> "GroundSet":
        """Parse a comma-separated list such as ``"0,1,2"``."""
        parts = [p.strip() for p in text.split(",")]
        if not parts or any(p == "" for p in parts):
            raise DomainError(f"malformed ground set {text!r}")
        try:
            values = [int(p) for p in parts]
        except ValueError:
            raise DomainError(f"malformed ground set {text!r}") from None
        return cls.of(values)

    @property
    def size(self) -> int:
        return len(self.values)

    @property
    def contains_zero(self) -> bool:
        return self.values[0] == 0

    @property
    def max_value(self) -> int:
        return self.values[-1]

    @property
    def min_nonzero(self) -> int | None:
        return next((v for v in self.values if v > 0), None)

    @property
    def bound(self) -> int:
        return 2 * self.max_value

    @cached_property
    def bits(self) -> int:
        return bits_of(self.values)

    def label(self, values: Iterable[int]) -> LabelSet:
        """A label carrying this ground set's representation bound."""
        return LabelSet(bits_of(values), self.bound)

    def subset(self, values: Iterable[int]) -> LabelSet:
        """Like :meth:`label` but the result must be a subset of X."""
        s = self.label(values)
        self.require_subset(s)
        return s

    def require_subset(self, s: LabelSet) -> None:
        if s.bits & ~self.bits:
            raise DomainError(f"{s!r} is not a subset of {self!r}")

    def subset_bits(self) -> list[int]:
        """Bit-vectors of all non-empty subsets of X in canonical order."""
        out = []
        for r in range(1, self.size + 1):
            for combo in itertools.combinations(self.values, r):
                out.append(bits_of(combo))
        out.sort(key=lambda b: tuple(members_of(b)))
        return out

    def subsets(self) -> list[LabelSet]:
        return [LabelSet(b, self.bound) for b in self.subset_bits()]

    def to_json(self) -> list[int]:
        return list(self.values)

    def __contains__(self, value):
        return value in self.values

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __repr__(self):
        return "X{" + ",".join(map(str, self.values)) + "}"


def _submasks(bits: int) -> Iterator[int]:
    """Non-empty submasks of ``bits``."""
    sub = bits
    while sub:
        yield sub
        sub = (sub - 1) & bits


def _shift_fits(b: int, target: int, candidates: int) -> int:
    """Members ``c`` of ``candidates`` with ``b + c`` contained in ``target``."""
    fits = 0
    for c in members_of(candidates):
        if (b << c) & ~target == 0:
            fits |= 1 << c
    return fits


def _decomposition_bits(s: int, x: GroundSet) -> Iterator[tuple[int, int]]:
    # a decomposition B + C = S forces every C to sit inside the set of
    # shifts that keep B inside S, so enumerate C there only
    zero = 1
    for b in x.subset_bits():
        if b == zero or b.bit_length() > s.bit_length():
            continue
        fits = _shift_fits(b, s, x.bits)
        if not fits or sum_bits(b, fits) != s:
            continue
        for c in _submasks(fits):
            if c != zero and sum_bits(b, c) == s:
                yield b, c


def _pair_key(b: int, c: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    kb, kc = tuple(members_of(b)), tuple(members_of(c))
    return (kb, kc) if kb <= kc else (kc, kb)


def nontrivial_decompositions(s: LabelSet, x: GroundSet) -> list[tuple[LabelSet, LabelSet]]:
    """All unordered pairs ``{B, C}`` of subsets of X, neither equal to ``{0}``,
    with ``B + C = s``.

    Pairs are returned as ``(smaller, larger)`` in canonical order.
    """
    x.require_subset(s)
    keys = {_pair_key(b, c) for b, c in _decomposition_bits(s.bits, x)}
    return [(x.label(kb), x.label(kc)) for kb, kc in sorted(keys)]


def is_nontrivial_sumset(s: LabelSet, x: GroundSet) -> bool:
    x.require_subset(s)
    return next(_decomposition_bits(s.bits, x), None) is not None


def is_nontrivial_summand(s: LabelSet, x: GroundSet) -> bool:
    """True iff some ``C`` other than ``{0}`` has ``s + C`` inside X.

    ``{0}`` itself only ever appears in trivial decompositions, so it is
    never counted as a summand.
    """
    x.require_subset(s)
    if s.bits == 1:
        return False
    return _shift_fits(s.bits, x.bits, x.bits) & ~1 != 0


@dataclass(frozen=True, eq=False)
class PowersetClassification:
    """Partition of the non-empty subsets of X under non-trivial sum sets.

    ``non_sumsets`` are the sets that no two subsets of X add up to
    non-trivially; ``b_family`` are the non-sum-sets that are not summands
    either.  All lists are in canonical order.
    """

    ground: GroundSet
    non_sumsets: tuple[LabelSet, ...]
    sumsets: tuple[LabelSet, ...]
    b_family: tuple[LabelSet, ...]

    @property
    def rho(self) -> int:
        return len(self.non_sumsets)

    @property
    def rho_prime(self) -> int:
        return len(self.b_family)

    def decompositions_of(self, s: LabelSet) -> list[tuple[LabelSet, LabelSet]]:
        return nontrivial_decompositions(s, self.ground)

    @cached_property
    def decompositions(self) -> dict[LabelSet, list[tuple[LabelSet, LabelSet]]]:
        return {s: self.decompositions_of(s) for s in self.sumsets}

    def to_dict(self) -> dict:
        return {
            "ground": self.ground.to_json(),
            "non_sumsets": [s.to_json() for s in self.non_sumsets],
            "sumsets": [s.to_json() for s in self.sumsets],
            "b_family": [s.to_json() for s in self.b_family],
            "rho": self.rho,
            "rho_prime": self.rho_prime,
        }


def classify_powerset(x: GroundSet) -> PowersetClassification:
    if not x.contains_zero:
        raise DomainError(f"classification needs 0 in the ground set, got {x!r}")
    limit = config.max_classify_size()
    if x.size > limit:
        raise CapacityError(f"|X| = {x.size} exceeds the classification limit {limit}")

    subsets = x.subset_bits()
    sums: set[int] = set()
    summands: set[int] = set()
    for b in subsets:
        if b == 1:
            continue
        partners = _shift_fits(b, x.bits, x.bits)
        if not partners & ~1:
            continue
        summands.add(b)
        for c in _submasks(partners):
            if c != 1:
                sums.add(sum_bits(b, c))

    non_sumsets = [b for b in subsets if b not in sums]
    return PowersetClassification(
        ground=x,
        non_sumsets=tuple(LabelSet(b, x.bound) for b in non_sumsets),
        sumsets=tuple(LabelSet(b, x.bound) for b in subsets if b in sums),
        b_family=tuple(LabelSet(b, x.bound) for b in non_sumsets if b not in summands),
    )
