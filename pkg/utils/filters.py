"""
Catalog of exclusion filters for candidate types.

Every filter has the signature ``f(t, N, ctx) -> FilterVerdict`` and is gated
by a hypothesis: outside it the verdict is ``inapplicable``, never ``reject``.
The catalog order below is the canonical evaluation and reporting order.
"""
import logging
import threading
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from math import gcd
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from sympy import isprime

from utils.arith import FactoredInt, divisors, factorize, is_prime_power
from utils.errors import ConfigurationError, InvalidInputError
from utils.typevec import TypeVector, canonical_sort, divide_pointwise

logger = logging.getLogger(__name__)


class VerdictStatus(str, Enum):
    PASS = "pass"
    REJECT = "reject"
    INAPPLICABLE = "inapplicable"
    INCONCLUSIVE = "inconclusive"


class F2Mode(str, Enum):
    """How the dimension-3 divisibility filter treats types with dimension-9 simples."""

    LEGACY = "legacy"
    STRICT = "strict"


@dataclass(frozen=True)
class FilterVerdict:
    filter_id: str
    status: VerdictStatus
    reason: str
    citation: str

    def to_dict(self) -> Dict[str, str]:
        return {
            'filter': self.filter_id,
            'status': self.status.value,
            'reason': self.reason,
            'citation': self.citation,
        }


class ReportMemo:
    """
    Thread-safe report cache keyed by (dimension, filter-set fingerprint, f2 mode).

    Writes are idempotent: the first stored value for a key wins.
    """

    def __init__(self, enabled: bool = True):
        self.enabled = enabled
        self._lock = threading.Lock()
        self._reports: Dict[tuple, object] = {}
        self.hits = 0

    def get(self, key: tuple):
        if not self.enabled:
            return None
        with self._lock:
            report = self._reports.get(key)
            if report is not None:
                self.hits += 1
            return report

    def put(self, key: tuple, report):
        if not self.enabled:
            return report
        with self._lock:
            return self._reports.setdefault(key, report)

    def clear(self):
        with self._lock:
            self._reports.clear()
            self.hits = 0

    def __len__(self) -> int:
        with self._lock:
            return len(self._reports)


@dataclass
class FilterContext:
    """Mode flags, recursion handle and memo shared by one classification run."""

    f2_mode: F2Mode = F2Mode.LEGACY
    classify_handle: Optional[Callable[[int], object]] = None
    memo: ReportMemo = field(default_factory=ReportMemo)

    def __post_init__(self):
        try:
            self.f2_mode = F2Mode(self.f2_mode)
        except ValueError:
            raise ConfigurationError(f"Unknown f2 mode '{self.f2_mode}', expected legacy or strict")


@dataclass(frozen=True)
class FilterSpec:
    filter_id: str
    alias: str
    stage: str
    summary: str
    check: Callable[[TypeVector, int, FilterContext], FilterVerdict]


CATALOG: Dict[str, FilterSpec] = {}


def _register(filter_id: str, alias: str, stage: str, summary: str):
    def decorator(check):
        def run(t: TypeVector, N: int, ctx: Optional[FilterContext] = None) -> FilterVerdict:
            _check_shared(t, N)
            return check(t, N, ctx if ctx is not None else FilterContext())

        run.__name__ = check.__name__
        run.__doc__ = check.__doc__
        CATALOG[filter_id] = FilterSpec(filter_id, alias, stage, summary, run)
        return run

    return decorator


def _check_shared(t: TypeVector, N: int):
    if not isinstance(t, TypeVector):
        raise InvalidInputError(f"Expected a TypeVector, got {t!r}")
    if isinstance(N, bool) or not isinstance(N, int) or N < 1 or N % 2 == 0:
        raise InvalidInputError(f"Dimension must be an odd positive integer, got {N!r}")
    if t.fpdim() != N:
        raise InvalidInputError(f"Type {t} has FP dimension {t.fpdim()}, not {N}")


def _pass(filter_id: str, reason: str) -> FilterVerdict:
    return FilterVerdict(filter_id, VerdictStatus.PASS, reason, filter_id)


def _reject(filter_id: str, reason: str) -> FilterVerdict:
    return FilterVerdict(filter_id, VerdictStatus.REJECT, reason, filter_id)


def _inapplicable(filter_id: str, reason: str) -> FilterVerdict:
    return FilterVerdict(filter_id, VerdictStatus.INAPPLICABLE, reason, filter_id)


def _inconclusive(filter_id: str, reason: str) -> FilterVerdict:
    return FilterVerdict(filter_id, VerdictStatus.INCONCLUSIVE, reason, filter_id)


# Dimension shapes

def known_pointed_shape(N: int) -> Optional[str]:
    """
    Return "K1" when N = q^n d (q odd prime, n <= 4, d square-free and prime
    to q), "K2" when N = 3^5 d (d square-free, prime to 3), else None.
    """
    fact = factorize(N)
    for q, exponent in fact.factors:
        if q != 2 and exponent <= 4 and fact.is_square_free_away_from(q):
            return "K1"
    if fact.exponent(3) == 5 and fact.is_square_free_away_from(3):
        return "K2"
    return None


def _companion_primes(fact: FactoredInt, p: int, max_exponent: int = 4) -> List[int]:
    """Primes q != p such that N = p^m q^n d with n <= max_exponent and d square-free prime to pq."""
    return [
        q for q, exponent in fact.factors
        if q != p and exponent <= max_exponent and fact.is_square_free_away_from(p, q)
    ]


# Basic stage

@_register("f1_parity", "f1", "basic", "dimensions odd, non-unit counts even")
def f1_parity(t: TypeVector, N: int, ctx: FilterContext) -> FilterVerdict:
    fid = "f1_parity"
    for d, n in t.entries:
        if d % 2 == 0:
            return _reject(fid, f"dimension {d} is even")
    for d, n in t.rest:
        if n % 2:
            return _reject(fid, f"count {n} of dimension {d} is odd")
    return _pass(fid, "all dimensions odd and all non-unit counts even")


@_register("structural", "structural", "basic", "n1 divides N")
def structural(t: TypeVector, N: int, ctx: FilterContext) -> FilterVerdict:
    fid = "structural"
    if N % t.n1:
        return _reject(fid, f"n1 = {t.n1} does not divide {N}")
    return _pass(fid, f"n1 = {t.n1} divides {N}")


@_register("solvable", "solvable", "basic", "n1 > 1 for non-trivial N")
def solvable(t: TypeVector, N: int, ctx: FilterContext) -> FilterVerdict:
    fid = "solvable"
    if N == 1:
        return _inapplicable(fid, "trivial dimension")
    if t.n1 == 1:
        return _reject(fid, f"n1 = 1 but a solvable category of dimension {N} has non-trivial invertibles")
    return _pass(fid, f"n1 = {t.n1} > 1")


@_register("f2_dim3_divisibility", "f2", "basic", "n1 + 9 n2 divides N when d2 = 3")
def f2_dim3_divisibility(t: TypeVector, N: int, ctx: FilterContext) -> FilterVerdict:
    fid = "f2_dim3_divisibility"
    if len(t.entries) < 2 or t.entries[1][0] != 3:
        return _inapplicable(fid, "no dimension-3 simples")
    if ctx.f2_mode is F2Mode.STRICT and t.multiplicity(9):
        return _inapplicable(fid, "dimension-9 simples present (strict mode)")
    n2 = t.entries[1][1]
    generated = t.n1 + 9 * n2
    if N % generated:
        return _reject(fid, f"n1 + 9*n2 = {t.n1} + 9*{n2} = {generated} does not divide {N}")
    return _pass(fid, f"{generated} divides {N}")


@_register("f3_stabilizer_power", "f3", "basic", "p^2t | N for p^t || n1 with a count prime to p")
def f3_stabilizer_power(t: TypeVector, N: int, ctx: FilterContext) -> FilterVerdict:
    fid = "f3_stabilizer_power"
    if t.n1 == 1:
        return _inapplicable(fid, "no non-trivial invertibles")
    for p, exponent in factorize(t.n1).factors:
        witness = next(((d, n) for d, n in t.rest if n % p), None)
        if witness is None:
            continue
        power = p ** (2 * exponent)
        if N % power:
            d, n = witness
            return _reject(
                fid,
                f"{p}^{exponent} || n1, count {n} of dimension {d} is prime to {p}, "
                f"but {p}^{2 * exponent} = {power} does not divide {N}",
            )
    return _pass(fid, "every required prime-power square divides N")


@_register("f4_grading_bound", "f4", "basic", "n1 * (max d)^2 <= N")
def f4_grading_bound(t: TypeVector, N: int, ctx: FilterContext) -> FilterVerdict:
    fid = "f4_grading_bound"
    top = t.dims[-1]
    bound = t.n1 * top * top
    if bound > N:
        return _reject(fid, f"n1 * d^2 = {t.n1} * {top}^2 = {bound} > {N}")
    return _pass(fid, f"{bound} <= {N}")


@_register("f5_two_level", "f5", "basic", "two-level types (1,n;d,m)")
def f5_two_level(t: TypeVector, N: int, ctx: FilterContext) -> FilterVerdict:
    fid = "f5_two_level"
    if len(t.entries) != 2:
        return _inapplicable(fid, "not a two-level type")
    (_, n), (d, m) = t.entries
    block = d * d * n
    if block >= N:
        return _reject(fid, f"d^2 n = {block} is not smaller than {N}")
    if m % n and N % block:
        return _reject(fid, f"{n} does not divide {m} and d^2 n = {block} does not divide {N}")
    return _pass(fid, f"d^2 n = {block} < {N} and the divisibility alternative holds")


@_register("f8_square_divides", "f8", "basic", "d_i^2 divides N")
def f8_square_divides(t: TypeVector, N: int, ctx: FilterContext) -> FilterVerdict:
    fid = "f8_square_divides"
    for d in t.dims[1:]:
        if N % (d * d):
            return _reject(fid, f"{d}^2 = {d * d} does not divide {N}")
    return _pass(fid, "every squared dimension divides N")


@_register("f9_pointed_divides_isotypic", "f9", "basic", "n1 divides n_i d_i^2")
def f9_pointed_divides_isotypic(t: TypeVector, N: int, ctx: FilterContext) -> FilterVerdict:
    fid = "f9_pointed_divides_isotypic"
    for d, n in t.rest:
        if (n * d * d) % t.n1:
            return _reject(fid, f"n1 = {t.n1} does not divide {n}*{d}^2 = {n * d * d}")
    return _pass(fid, "n1 divides every isotypic dimension")


# Advanced stage

@_register("f10_pq_order", "f10", "advanced", "n1 = p with N = p^m q^n d: p | q-1 or q | p-1")
def f10_pq_order(t: TypeVector, N: int, ctx: FilterContext) -> FilterVerdict:
    fid = "f10_pq_order"
    p = t.n1
    if not isprime(p):
        return _inapplicable(fid, f"n1 = {p} is not prime")
    fact = factorize(N)
    if fact.exponent(p) not in (2, 3):
        return _inapplicable(fid, f"{p} does not appear squared or cubed in {fact}")
    companions = _companion_primes(fact, p)
    if not companions:
        return _inapplicable(fid, f"{fact} is not of the form p^m q^n d")
    for q in companions:
        if (q - 1) % p and (p - 1) % q:
            return _reject(fid, f"neither {p} | {q - 1} nor {q} | {p - 1}")
    return _pass(fid, "order condition holds for " + ", ".join(f"q = {q}" for q in companions))


@_register("f11_p2_order", "f11", "advanced", "n1 = p^2 with N = p^3 q^n d: p | q-1")
def f11_p2_order(t: TypeVector, N: int, ctx: FilterContext) -> FilterVerdict:
    fid = "f11_p2_order"
    shape = is_prime_power(t.n1)
    if shape is None or shape[1] != 2:
        return _inapplicable(fid, f"n1 = {t.n1} is not a prime square")
    p = shape[0]
    fact = factorize(N)
    if fact.exponent(p) != 3:
        return _inapplicable(fid, f"{p} does not appear cubed in {fact}")
    companions = [q for q in _companion_primes(fact, p) if q > p]
    if not companions:
        return _inapplicable(fid, f"{fact} is not of the form p^3 q^n d with q > p")
    for q in companions:
        if (q - 1) % p:
            return _reject(fid, f"{p} does not divide {q} - 1 = {q - 1}")
    return _pass(fid, "p | q - 1 for " + ", ".join(f"q = {q}" for q in companions))


@_register("f12_perfect_adjoint", "f12", "advanced", "gcd(n1, N/n1) > 1")
def f12_perfect_adjoint(t: TypeVector, N: int, ctx: FilterContext) -> FilterVerdict:
    fid = "f12_perfect_adjoint"
    if t.is_pointed():
        return _inapplicable(fid, "pointed type")
    if N % t.n1:
        return _inapplicable(fid, f"n1 = {t.n1} does not divide {N}")
    adjoint = N // t.n1
    if adjoint > 1 and gcd(t.n1, adjoint) == 1:
        return _reject(fid, f"gcd(n1, N/n1) = gcd({t.n1}, {adjoint}) = 1, so the adjoint subcategory has no invertibles")
    return _pass(fid, f"gcd({t.n1}, {adjoint}) = {gcd(t.n1, adjoint)}")


@_register("f13_rank_window", "f13", "advanced", "27 <= rank <= 49, rank != 1 mod 8: pointed or perfect")
def f13_rank_window(t: TypeVector, N: int, ctx: FilterContext) -> FilterVerdict:
    fid = "f13_rank_window"
    r = t.rank()
    if not 27 <= r <= 49 or r % 8 == 1:
        return _inapplicable(fid, f"rank {r} outside the window")
    if not t.is_pointed() and t.n1 > 1:
        return _reject(fid, f"rank {r} forces pointed or perfect, but type is neither")
    return _pass(fid, f"rank {r}: type is pointed or perfect")


@_register("f14_known_pointed", "f14", "advanced", "dimensions q^n d and 3^5 d are pointed")
def f14_known_pointed(t: TypeVector, N: int, ctx: FilterContext) -> FilterVerdict:
    fid = "f14_known_pointed"
    shape = known_pointed_shape(N)
    if shape is None:
        return _inapplicable(fid, f"{factorize(N)} is not a known pointed dimension")
    if not t.is_pointed():
        return _reject(fid, f"every modular category of dimension {factorize(N)} ({shape}) is pointed")
    return _pass(fid, f"pointed type in a {shape} dimension")


def forced_invertible_divisor(t: TypeVector, N: int) -> int:
    """
    Product of the p^t || n1 for which some non-unit count is prime to p.
    Such p^t must divide the invertible count of the adjoint subcategory.
    """
    _check_shared(t, N)
    forced = 1
    for p, exponent in factorize(t.n1).factors:
        if any(n % p for _, n in t.rest):
            forced *= p ** exponent
    return forced


@lru_cache(maxsize=4096)
def _adjoint_candidates(t: TypeVector, N: int) -> Tuple[TypeVector, ...]:
    if N % t.n1:
        return ()
    target = N // t.n1
    forced = forced_invertible_divisor(t, N)
    rest = t.rest
    found: List[TypeVector] = []
    chosen: List[Tuple[int, int]] = []

    def fill(index: int, remainder: int, a: int):
        if index == len(rest):
            if remainder == 0:
                found.append(TypeVector(((1, a),) + tuple(chosen)))
            return
        fill(index + 1, remainder, a)
        d, limit = rest[index]
        square = d * d
        for x in range(2, limit + 1, 2):
            if x * square > remainder:
                break
            chosen.append((d, x))
            fill(index + 1, remainder - x * square, a)
            chosen.pop()

    for a in divisors(t.n1):
        if a % forced or a > target:
            continue
        fill(0, target - a, a)
    return tuple(canonical_sort(found))


def adjoint_candidates(t: TypeVector, N: int) -> List[TypeVector]:
    """
    Types the adjoint subcategory can have: dimension N/n1, invertible count a
    with forced | a | n1, and even counts bounded by the matching entry of t.
    """
    _check_shared(t, N)
    return list(_adjoint_candidates(t, N))


@_register("f15_adjoint_feasible", "f15", "advanced", "an adjoint type of dimension N/n1 exists")
def f15_adjoint_feasible(t: TypeVector, N: int, ctx: FilterContext) -> FilterVerdict:
    fid = "f15_adjoint_feasible"
    if t.is_pointed():
        return _inapplicable(fid, "pointed type")
    if N % t.n1:
        return _inapplicable(fid, f"n1 = {t.n1} does not divide {N}")
    candidates = adjoint_candidates(t, N)
    if not candidates:
        forced = forced_invertible_divisor(t, N)
        terms = " + ".join(f"{d * d}*x_{d}" for d in t.dims[1:])
        return _reject(
            fid,
            f"adjoint Diophantine infeasible: a + {terms} = {N // t.n1} has no solution "
            f"with {forced} | a | {t.n1} and even x_d bounded by the type",
        )
    return _pass(fid, f"{len(candidates)} adjoint candidate(s), first {candidates[0]}")


def _adjoint_shape_applies(t: TypeVector, N: int) -> Optional[str]:
    p = t.n1
    if not isprime(p):
        return f"n1 = {p} is not prime"
    fact = factorize(N)
    v = fact.exponent(p)
    cubic = v == 3 and bool(_companion_primes(fact, p))
    bounded = v <= 6 and fact.is_square_free_away_from(p)
    if not (cubic or bounded):
        return f"{fact} is neither p^3 q^s m nor p^t m"
    n_p = t.multiplicity(p)
    if n_p == 0 or n_p % p == 0:
        return f"no dimension-{p} entry with count prime to {p}"
    if not [d for d in t.dims[1:] if d != p and isprime(d)]:
        return "no entry of a second prime dimension"
    return None


@_register("f16_adjoint_prop39", "f16", "advanced", "adjoint cannot be (1,p;p,*;q,*;...)")
def f16_adjoint_shape(t: TypeVector, N: int, ctx: FilterContext) -> FilterVerdict:
    fid = "f16_adjoint_prop39"
    reason = _adjoint_shape_applies(t, N)
    if reason:
        return _inapplicable(fid, reason)
    p = t.n1
    q_dims = [d for d in t.dims[1:] if d != p and isprime(d)]
    candidates = adjoint_candidates(t, N)
    allowed = [
        c for c in candidates
        if not (c.n1 == p and c.multiplicity(p) and any(c.multiplicity(q) for q in q_dims))
    ]
    if not allowed:
        shown = ", ".join(str(c) for c in candidates) or "none"
        return _reject(fid, f"every adjoint candidate has the forbidden shape (1,{p};{p},*;q,*): {shown}")
    return _pass(fid, f"adjoint candidate {allowed[0]} avoids the forbidden shape")


@_register("f17_modular_factor", "f17", "advanced", "pointed modular factor of prime order r splits off")
def f17_modular_factor(t: TypeVector, N: int, ctx: FilterContext) -> FilterVerdict:
    fid = "f17_modular_factor"
    primes = [r for r in factorize(t.n1).primes if N % (r * r)]
    if not primes:
        return _inapplicable(fid, "every prime of n1 divides N squared")
    if ctx.classify_handle is None:
        raise ConfigurationError("f17_modular_factor needs a classify handle in the filter context")
    for r in primes:
        quotient = divide_pointwise(t, r)
        if quotient is None:
            return _reject(fid, f"r = {r}: counts of {t} are not all divisible by {r}")
        logger.debug("f17: %s at %d recurses into %d", t, N, N // r)
        report = ctx.classify_handle(N // r)
        admitted = set(report.survivors) | {u for u, _ in report.unresolved}
        if quotient not in admitted:
            return _reject(fid, f"r = {r}: the complement type {quotient} is excluded at dimension {N // r}")
    return _pass(fid, "complement types survive for r = " + ", ".join(str(r) for r in primes))


@dataclass(frozen=True)
class SixthPowerChain:
    """Replayed exclusion argument for (1,p^2;p,x;p^2,y) in dimension p^6."""

    prime: int
    steps: Tuple[str, ...]
    closed: bool
    open_step: str = ""


def _sixth_power_shape(t: TypeVector, N: int) -> Optional[Tuple[int, int, int]]:
    shape = is_prime_power(N)
    if shape is None or shape[1] != 6 or shape[0] == 2:
        return None
    p = shape[0]
    if len(t.entries) != 3:
        return None
    (d1, n1), (d2, x), (d3, y) = t.entries
    if n1 != p * p or d2 != p or d3 != p * p or x % p == 0:
        return None
    return p, x, y


def replay_sixth_power(p: int, x: int, y: int, adjoints: Sequence[TypeVector]) -> SixthPowerChain:
    """
    Replay the exclusion chain for (1,p^2;p,x;p^2,y) given its adjoint candidates.

    The chain is open (not closed) as soon as some step has a case it does
    not rule out.
    """
    steps: List[str] = []
    expected = TypeVector(((1, p * p), (p, p * p - 1)))
    if not adjoints:
        steps.append("no admissible adjoint subcategory")
        return SixthPowerChain(p, tuple(steps), True)
    for candidate in adjoints:
        if candidate != expected:
            return SixthPowerChain(p, tuple(steps), False, f"adjoint candidate {candidate} is not covered")
    steps.append(f"adjoint subcategory has type {expected}")

    # p^2 grading components of dimension p^4; non-trivial ones hold no invertibles
    spread = x - (p * p - 1)
    if spread % (p * p):
        steps.append(f"{spread} remaining dimension-{p} simples cannot fill whole components")
        return SixthPowerChain(p, tuple(steps), True)
    multi, single = spread // (p * p), y
    if multi + single != p * p - 1:
        steps.append(f"{multi} + {single} components do not match the {p * p - 1} non-trivial degrees")
        return SixthPowerChain(p, tuple(steps), True)
    steps.append(f"{single} components hold one {p * p}-dimensional simple, {multi} hold {p * p} of dimension {p}")
    # single components pair with their duals in an odd-order grading group
    if single % 2:
        steps.append(f"{single} single components cannot be split into dual pairs")
        return SixthPowerChain(p, tuple(steps), True)

    centralizers = []
    for pairs in range(1, (p - 1) // 2 + 1):
        others = p - 1 - 2 * pairs
        if 2 * pairs <= single and others <= multi:
            centralizers.append(TypeVector((
                (1, p * p),
                (p, p * p - 1 + p * p * others),
                (p * p, 2 * pairs),
            )))
    if not centralizers:
        return SixthPowerChain(p, tuple(steps), False, "no centralizer contains a dual pair of single components")
    steps.append("centralizer of an order-p subgroup: " + ", ".join(str(c) for c in centralizers))

    if known_pointed_shape(p ** 4) != "K1":
        return SixthPowerChain(p, tuple(steps), False, f"de-equivariantization of dimension {p ** 4} is not known pointed")
    steps.append(f"its de-equivariantization of dimension {p ** 4} is pointed, so simple dimensions are at most {p}")
    if any(max(c.dims) <= p for c in centralizers):
        return SixthPowerChain(p, tuple(steps), False, "a centralizer candidate respects the dimension bound")
    steps.append(f"every centralizer candidate has a simple of dimension {p * p} > {p}")
    return SixthPowerChain(p, tuple(steps), True)


def sixth_power_chain(t: TypeVector, N: int) -> Optional[SixthPowerChain]:
    """The replayed chain for a type of the sixth-power shape, or None outside it."""
    _check_shared(t, N)
    shape = _sixth_power_shape(t, N)
    if shape is None:
        return None
    p, x, y = shape
    return replay_sixth_power(p, x, y, adjoint_candidates(t, N))


@_register("f18_sixth_power", "f18", "advanced", "(1,p^2;p,x;p^2,y) in dimension p^6")
def f18_sixth_power(t: TypeVector, N: int, ctx: FilterContext) -> FilterVerdict:
    fid = "f18_sixth_power"
    chain = sixth_power_chain(t, N)
    if chain is None:
        return _inapplicable(fid, "not (1,p^2;p,x;p^2,y) with x prime to p in dimension p^6")
    if chain.closed:
        return _reject(fid, "; ".join(chain.steps))
    return _inconclusive(fid, f"chain does not close: {chain.open_step}")


BASIC_FILTERS: Tuple[str, ...] = tuple(fid for fid, spec in CATALOG.items() if spec.stage == "basic")
FULL_FILTERS: Tuple[str, ...] = tuple(CATALOG)
_ALIASES: Dict[str, str] = {spec.alias: fid for fid, spec in CATALOG.items()}


def resolve_filter_ids(filter_ids: Iterable[str]) -> List[str]:
    """Map short aliases ("f13") to catalog ids; unknown ids are a configuration error."""
    resolved = []
    for filter_id in filter_ids:
        if filter_id in CATALOG:
            resolved.append(filter_id)
        elif filter_id in _ALIASES:
            resolved.append(_ALIASES[filter_id])
        else:
            raise ConfigurationError(f"Unknown filter id '{filter_id}'")
    return resolved


def filter_set(mode: str) -> Tuple[str, ...]:
    """Filter ids of a named set: "basic" or "full"."""
    value = getattr(mode, "value", mode)
    if value == "basic":
        return BASIC_FILTERS
    if value == "full":
        return FULL_FILTERS
    raise ConfigurationError(f"Unknown filter set '{mode}'")


def run_filter(filter_id: str, t: TypeVector, N: int, ctx: Optional[FilterContext] = None) -> FilterVerdict:
    spec = CATALOG.get(filter_id) or CATALOG.get(_ALIASES.get(filter_id, ""))
    if spec is None:
        raise ConfigurationError(f"Unknown filter id '{filter_id}'")
    verdict = spec.check(t, N, ctx)
    if verdict.status is VerdictStatus.REJECT:
        logger.debug("%s rejects %s at %d: %s", spec.filter_id, t, N, verdict.reason)
    return verdict


def run_all(t: TypeVector, N: int, ctx: FilterContext, filter_ids: Sequence[str] = FULL_FILTERS) -> List[FilterVerdict]:
    return [run_filter(fid, t, N, ctx) for fid in resolve_filter_ids(filter_ids)]
