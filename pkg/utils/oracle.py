"""
Brute-force reference implementations for differential testing.

Nothing here touches the enumerator or the filter catalog; only the
arith primitives and the TypeVector data model are shared.
"""
from math import isqrt
from typing import List

from utils.arith import factorize, p_part
from utils.errors import InvalidInputError, NotSupportedError
from utils.typevec import TypeVector

SUPPORTED_FILTERS = ("f1", "f2", "f3", "f4", "f5", "f8", "f9")


def oracle_enumerate(N: int) -> List[TypeVector]:
    """
    Every admissible type of dimension ``N`` by plain iteration: count vectors
    are extended one odd dimension at a time over all even counts.
    """
    if isinstance(N, bool) or not isinstance(N, int) or N < 1 or N % 2 == 0:
        raise InvalidInputError(f"Dimension must be an odd positive integer, got {N!r}")
    odd_dims = [d for d in range(3, isqrt(N) + 1) if d % 2 == 1]

    partials = [(0, ())]
    for d in odd_dims:
        extended = []
        for total, entries in partials:
            extended.append((total, entries))
            n = 2
            while total + n * d * d < N:
                extended.append((total + n * d * d, entries + ((d, n),)))
                n += 2
        partials = extended

    found = []
    for total, entries in partials:
        n1 = N - total
        if n1 >= 1 and N % n1 == 0:
            found.append(TypeVector(((1, n1),) + entries))
    found.sort(key=lambda t: (sum(n for _, n in t.entries), t.entries))
    return found


def oracle_check(t: TypeVector, N: int, filter_id: str) -> str:
    """
    Status ("pass", "reject" or "inapplicable") recomputed from the statement
    of a supported filter. f2 is checked in its strict reading.
    """
    short = filter_id.split("_", 1)[0]
    if short not in SUPPORTED_FILTERS:
        raise NotSupportedError(f"No oracle for filter '{filter_id}'")
    if sum(n * d * d for d, n in t.entries) != N:
        raise InvalidInputError(f"Type {t} does not have dimension {N}")

    pairs = list(t.entries)
    n1 = pairs[0][1]
    others = pairs[1:]

    if short == "f1":
        ok = all(d % 2 == 1 for d, _ in pairs) and all(n % 2 == 0 for _, n in others)
        return "pass" if ok else "reject"

    if short == "f2":
        dims = [d for d, _ in others]
        if not dims or dims[0] != 3 or 9 in dims:
            return "inapplicable"
        return "pass" if N % (n1 + 9 * others[0][1]) == 0 else "reject"

    if short == "f3":
        if n1 == 1:
            return "inapplicable"
        for p, _ in factorize(n1).factors:
            _, pt = p_part(n1, p)
            coprime = [n for _, n in others if n % p != 0]
            if coprime and N % (pt * pt) != 0:
                return "reject"
        return "pass"

    if short == "f4":
        largest = max(d for d, _ in pairs)
        return "reject" if n1 * largest ** 2 > N else "pass"

    if short == "f5":
        if len(pairs) != 2:
            return "inapplicable"
        n = n1
        d, m = others[0]
        divides_either = m % n == 0 or N % (d * d * n) == 0
        strictly_smaller = d * d * n < N
        return "pass" if divides_either and strictly_smaller else "reject"

    if short == "f8":
        return "pass" if all(N % (d * d) == 0 for d, _ in others) else "reject"

    # f9
    return "pass" if all((n * d * d) % n1 == 0 for d, n in others) else "reject"
