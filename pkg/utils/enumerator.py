"""
Raw enumeration of MNSD-admissible types of a given odd FP dimension, and the
screening of those candidates through an ordered filter set.
"""
import logging
from math import isqrt
from typing import List, NamedTuple, Sequence, Tuple

from utils.arith import divisors
from utils.errors import InvalidInputError
from utils.filters import VerdictStatus, resolve_filter_ids, run_filter
from utils.typevec import TypeVector, canonical_sort

logger = logging.getLogger(__name__)

ODD_DIMENSION_MESSAGE = (
    "a modular category is MNSD if and only if it is odd-dimensional"
)


def check_dimension(N) -> int:
    """Validate an FP dimension argument (positive, odd integer)."""
    if isinstance(N, bool) or not isinstance(N, int):
        raise InvalidInputError(f"Dimension must be an integer, got {N!r}")
    if N < 1:
        raise InvalidInputError(f"Dimension must be positive, got {N}")
    if N % 2 == 0:
        raise InvalidInputError(f"Dimension {N} is even: {ODD_DIMENSION_MESSAGE}")
    return N


def enumerate_raw(N: int) -> List[TypeVector]:
    """
    All types (1,n1;d2,n2;...) with odd ascending dimensions, even counts
    n_i >= 2 for i >= 2, n1 | N and sum n_i d_i^2 = N.

    Dimensions are placed largest first; the dimension-3 count is solved
    directly against the divisors of N instead of being iterated.

    Args:
        N: Odd positive integer

    Returns:
        Canonically sorted list of TypeVector
    """
    check_dimension(N)
    pointed_counts = divisors(N)
    top = isqrt(N - 1) if N > 1 else 0
    if top % 2 == 0:
        top -= 1
    # odd dimensions >= 5, descending; 3 is handled in the last step
    dims = list(range(top, 4, -2))
    found: List[TypeVector] = []
    chosen: List[Tuple[int, int]] = []

    def close(remainder: int):
        # remainder = n1 + 9*n3 with n3 = 0 or even >= 2
        tail = list(reversed(chosen))
        for n1 in pointed_counts:
            if n1 > remainder:
                break
            gap = remainder - n1
            if gap == 0:
                found.append(TypeVector(((1, n1),) + tuple(tail)))
            elif gap % 18 == 0:
                found.append(TypeVector(((1, n1), (3, gap // 9)) + tuple(tail)))

    def extend(index: int, remainder: int):
        if index == len(dims):
            close(remainder)
            return
        extend(index + 1, remainder)
        d = dims[index]
        step = 2 * d * d
        used = step
        while remainder - used >= 1:
            chosen.append((d, used // (d * d)))
            extend(index + 1, remainder - used)
            chosen.pop()
            used += step

    extend(0, N)
    result = canonical_sort(found)
    logger.debug("enumerate_raw(%d): %d candidates", N, len(result))
    return result


class Screening(NamedTuple):
    """Partition of the raw candidates of one dimension."""

    survivors: List[TypeVector]
    rejections: List[Tuple[TypeVector, list]]
    unresolved: List[Tuple[TypeVector, list]]
    raw_count: int


def enumerate_with(N: int, filter_ids: Sequence[str], ctx, early_exit: bool = False) -> Screening:
    """
    Run every raw candidate of ``N`` through the ordered filters.

    A candidate with a reject verdict is a rejection (all rejecting verdicts
    kept, or only the first with ``early_exit``); a candidate with an
    inconclusive verdict and no reject is unresolved; the rest survive.

    Raises:
        InvalidInputError for even or non-positive N
        ConfigurationError for unknown filter ids
    """
    ids = resolve_filter_ids(filter_ids)
    candidates = enumerate_raw(N)
    survivors, rejections, unresolved = [], [], []
    for candidate in candidates:
        rejecting, pending = [], []
        for filter_id in ids:
            verdict = run_filter(filter_id, candidate, N, ctx)
            if verdict.status is VerdictStatus.REJECT:
                rejecting.append(verdict)
                if early_exit:
                    break
            elif verdict.status is VerdictStatus.INCONCLUSIVE:
                pending.append(verdict)
        if rejecting:
            rejections.append((candidate, rejecting))
        elif pending:
            unresolved.append((candidate, pending))
        else:
            survivors.append(candidate)
    logger.debug(
        "enumerate_with(%d): %d survivors, %d rejected, %d unresolved",
        N, len(survivors), len(rejections), len(unresolved),
    )
    return Screening(survivors, rejections, unresolved, len(candidates))
