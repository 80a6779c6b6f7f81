"""
The type of a fusion category: how many simple classes exist of each FP dimension.

Text form is the usual ``(d1,n1;d2,n2;...)`` notation, e.g. ``(1,3;3,16;7,6)``.
"""
import re
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from utils.errors import InvalidInputError, TypeParseError

_PAIR = re.compile(r"^(\d+),(\d+)$")


@dataclass(frozen=True)
class TypeVector:
    """
    Ordered (dimension, count) pairs with strictly increasing dimensions,
    starting at dimension 1. Parity and evenness are left to the filters.
    """

    entries: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        if not self.entries:
            raise InvalidInputError("A type needs at least the (1, n1) entry")
        previous = 0
        for d, n in self.entries:
            if isinstance(d, bool) or isinstance(n, bool) or not isinstance(d, int) or not isinstance(n, int):
                raise InvalidInputError(f"Entries must be integer pairs, got ({d!r}, {n!r})")
            if d < 1 or n < 1:
                raise InvalidInputError(f"Entry ({d},{n}) must have positive dimension and count")
            if d <= previous:
                raise InvalidInputError(f"Dimensions must be strictly increasing, got {d} after {previous}")
            previous = d
        if self.entries[0][0] != 1:
            raise InvalidInputError("The first entry must have dimension 1")

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[int]]) -> "TypeVector":
        return cls(tuple((int(d), int(n)) for d, n in pairs))

    @property
    def n1(self) -> int:
        """Number of invertible simple objects."""
        return self.entries[0][1]

    @property
    def dims(self) -> Tuple[int, ...]:
        return tuple(d for d, _ in self.entries)

    @property
    def rest(self) -> Tuple[Tuple[int, int], ...]:
        """Entries of dimension greater than 1."""
        return self.entries[1:]

    def multiplicity(self, d: int) -> int:
        for dim, count in self.entries:
            if dim == d:
                return count
        return 0

    def fpdim(self) -> int:
        return sum(n * d * d for d, n in self.entries)

    def rank(self) -> int:
        return sum(n for _, n in self.entries)

    def is_pointed(self) -> bool:
        return len(self.entries) == 1

    def sort_key(self) -> Tuple[int, Tuple[Tuple[int, int], ...]]:
        return self.rank(), self.entries

    def __str__(self) -> str:
        return format_type(self)


def parse(text: str) -> TypeVector:
    """
    Parse a type string such as ``(1,3;3,16;7,6)``.

    Whitespace is ignored and the outer parentheses are optional.

    Raises:
        TypeParseError naming the offending token
    """
    if not isinstance(text, str):
        raise TypeParseError(f"Type must be given as text, got {text!r}", repr(text))
    compact = re.sub(r"\s+", "", text)
    if compact.startswith("(") or compact.endswith(")"):
        if not (compact.startswith("(") and compact.endswith(")")):
            raise TypeParseError(f"Unbalanced parentheses in '{text}'", compact)
        compact = compact[1:-1]
    if not compact:
        raise TypeParseError("Empty type string", text)

    entries: List[Tuple[int, int]] = []
    for token in compact.split(";"):
        match = _PAIR.match(token)
        if not match:
            raise TypeParseError(f"Malformed pair '{token}', expected 'dimension,count'", token)
        d, n = int(match.group(1)), int(match.group(2))
        if d == 0:
            raise TypeParseError(f"Zero dimension in pair '{token}'", token)
        if n == 0:
            raise TypeParseError(f"Zero count in pair '{token}'", token)
        if entries:
            last = entries[-1][0]
            if d == last:
                raise TypeParseError(f"Repeated dimension {d} in pair '{token}'", token)
            if d < last:
                raise TypeParseError(f"Dimension {d} in pair '{token}' is not ascending", token)
        elif d != 1:
            raise TypeParseError(f"First pair '{token}' must have dimension 1", token)
        entries.append((d, n))
    return TypeVector(tuple(entries))


def format_type(t: TypeVector) -> str:
    """Canonical text form; ``parse(format_type(t)) == t``."""
    return "(" + ";".join(f"{d},{n}" for d, n in t.entries) + ")"


def fpdim(t: TypeVector) -> int:
    return t.fpdim()


def rank(t: TypeVector) -> int:
    return t.rank()


def is_pointed(t: TypeVector) -> bool:
    return t.is_pointed()


def divide_pointwise(t: TypeVector, r: int) -> Optional[TypeVector]:
    """
    Type of the Müger complement of a pointed modular factor of dimension ``r``:
    every count divided by ``r``. Absent when some count is not divisible.
    """
    if isinstance(r, bool) or not isinstance(r, int) or r < 1:
        raise InvalidInputError(f"Divisor must be a positive integer, got {r!r}")
    if any(n % r for _, n in t.entries):
        return None
    return TypeVector(tuple((d, n // r) for d, n in t.entries))


def deligne_product(t: TypeVector, u: TypeVector) -> TypeVector:
    """Type of the product category: dimensions multiply, counts multiply."""
    counts = defaultdict(int)
    for d, n in t.entries:
        for e, m in u.entries:
            counts[d * e] += n * m
    return TypeVector(tuple(sorted(counts.items())))


def canonical_sort(types: Iterable[TypeVector]) -> List[TypeVector]:
    """Ascending rank, then lexicographic on the entries."""
    return sorted(types, key=TypeVector.sort_key)
