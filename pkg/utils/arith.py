"""
Exact integer number theory shared by the enumerator and the filter catalog.

All helpers are thin, validated wrappers around ``sympy.ntheory`` so that the
rest of the engine works with plain Python ints and a frozen ``FactoredInt``.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from sympy import divisors as _sympy_divisors
from sympy import factorint, isprime
from sympy.ntheory import multiplicity

from utils.errors import InvalidInputError


def _require_positive(n, name: str = "n") -> int:
    # bool is an int subclass; reject it explicitly
    if isinstance(n, bool) or not isinstance(n, int):
        raise InvalidInputError(f"{name} must be an integer, got {n!r}")
    if n < 1:
        raise InvalidInputError(f"{name} must be a positive integer, got {n}")
    return n


@dataclass(frozen=True)
class FactoredInt:
    """A positive integer together with its prime factorization."""

    value: int
    factors: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        _require_positive(self.value, "value")
        product = 1
        previous = 0
        for prime, exponent in self.factors:
            if prime <= previous or exponent < 1 or not isprime(prime):
                raise InvalidInputError(f"Malformed factorization {self.factors!r}")
            previous = prime
            product *= prime ** exponent
        if product != self.value:
            raise InvalidInputError(
                f"Factorization {self.factors!r} does not multiply to {self.value}"
            )

    @property
    def primes(self) -> List[int]:
        return [prime for prime, _ in self.factors]

    def exponent(self, p: int) -> int:
        """Exponent of ``p`` in the factorization (0 when ``p`` does not divide)."""
        for prime, exponent in self.factors:
            if prime == p:
                return exponent
        return 0

    def is_square_free_away_from(self, *excluded: int) -> bool:
        """True if every prime outside ``excluded`` appears to the first power."""
        return all(exponent == 1 for prime, exponent in self.factors if prime not in excluded)

    def to_dict(self) -> Dict[str, int]:
        return {str(prime): exponent for prime, exponent in self.factors}

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " x ".join(
            str(prime) if exponent == 1 else f"{prime}^{exponent}"
            for prime, exponent in self.factors
        )


@lru_cache(maxsize=None)
def factorize(n: int) -> FactoredInt:
    """
    Factor a positive integer.

    Args:
        n: Integer >= 1

    Returns:
        FactoredInt with primes in ascending order
    """
    _require_positive(n)
    return FactoredInt(value=n, factors=tuple(sorted(factorint(n).items())))


@lru_cache(maxsize=None)
def _divisors(n: int) -> Tuple[int, ...]:
    return tuple(_sympy_divisors(n))


def divisors(n: int) -> List[int]:
    """All positive divisors of ``n`` in ascending order."""
    _require_positive(n)
    return list(_divisors(n))


def p_part(n: int, p: int) -> Tuple[int, int]:
    """
    Exact power of a prime dividing ``n``.

    Args:
        n: Integer >= 1
        p: Prime

    Returns:
        Tuple (t, p**t) with p**t || n
    """
    _require_positive(n)
    _require_positive(p, "p")
    if not isprime(p):
        raise InvalidInputError(f"{p} is not prime")
    t = multiplicity(p, n)
    return t, p ** t


def is_square_free(n: int) -> bool:
    _require_positive(n)
    return all(exponent == 1 for _, exponent in factorize(n).factors)


def is_prime_power(n: int) -> Optional[Tuple[int, int]]:
    """Return (p, k) when n = p^k with k >= 1; 1 is not a prime power."""
    _require_positive(n)
    factors = factorize(n).factors
    if len(factors) != 1:
        return None
    return factors[0]
