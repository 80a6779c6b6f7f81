"""
Classification pipeline: enumeration, filtering with recursion and memoization,
comparison against the reference lists, and report assembly.
"""
import hashlib
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from utils.arith import FactoredInt, factorize
from utils.enumerator import check_dimension, enumerate_with
from utils.errors import InvalidInputError
from utils.filters import (
    F2Mode, FilterContext, FilterVerdict, ReportMemo,
    filter_set, known_pointed_shape, run_all,
)
from utils.reference import REFERENCE_DIMENSIONS, Stage, reference_types
from utils.typevec import TypeVector, canonical_sort, deligne_product, parse

logger = logging.getLogger(__name__)

ENGINE_VERSION = "1.0.0"
DEFAULT_SCAN_BOUND = 2025


class Mode(str, Enum):
    BASIC = "basic"
    FULL = "full"


@dataclass
class ClassificationReport:
    """Outcome of classifying one dimension. ``raw_count`` is None on the K1 fast path."""

    dimension: int
    factorization: FactoredInt
    mode: Mode
    f2_mode: F2Mode
    raw_count: Optional[int]
    survivors: List[TypeVector]
    rejections: List[Tuple[TypeVector, List[FilterVerdict]]]
    unresolved: List[Tuple[TypeVector, List[FilterVerdict]]]
    elapsed: float = 0.0
    engine_version: str = ENGINE_VERSION
    fast_path: bool = False

    @property
    def stage(self) -> Stage:
        return Stage.PREFILTER if self.mode is Mode.BASIC else Stage.FINAL

    @property
    def rejected_types(self) -> List[TypeVector]:
        return [t for t, _ in self.rejections]

    @property
    def non_pointed_survivors(self) -> List[TypeVector]:
        return [t for t in self.survivors if not t.is_pointed()]

    def verdicts_for(self, t: TypeVector) -> List[FilterVerdict]:
        for candidate, verdicts in self.rejections + self.unresolved:
            if candidate == t:
                return verdicts
        return []

    def to_dict(self, include_timing: bool = False) -> Dict:
        payload = {
            'dimension': self.dimension,
            'factorization': self.factorization.to_dict(),
            'mode': self.mode.value,
            'f2_mode': self.f2_mode.value,
            'raw_count': self.raw_count,
            'survivors': [str(t) for t in self.survivors],
            'rejections': [
                {'type': str(t), 'verdicts': [v.to_dict() for v in verdicts]}
                for t, verdicts in self.rejections
            ],
            'unresolved': [
                {'type': str(t), 'verdicts': [v.to_dict() for v in verdicts]}
                for t, verdicts in self.unresolved
            ],
            'engine_version': self.engine_version,
            'fast_path': self.fast_path,
        }
        if include_timing:
            payload['elapsed'] = round(self.elapsed, 6)
        return payload


@dataclass
class DiscrepancyReport:
    dimension: int
    stage: Stage
    missing_from_engine: List[TypeVector] = field(default_factory=list)
    extra_in_engine: List[TypeVector] = field(default_factory=list)

    @property
    def is_clean(self) -> bool:
        return not self.missing_from_engine and not self.extra_in_engine

    def to_dict(self) -> Dict:
        return {
            'dimension': self.dimension,
            'stage': self.stage.value,
            'missing_from_engine': [str(t) for t in self.missing_from_engine],
            'extra_in_engine': [str(t) for t in self.extra_in_engine],
        }


def make_context(f2_mode=F2Mode.LEGACY, memoize: bool = True) -> FilterContext:
    """A filter context whose recursion handle classifies in full mode through this context."""
    ctx = FilterContext(f2_mode=f2_mode, memo=ReportMemo(enabled=memoize))
    _bind(ctx)
    return ctx


def _bind(ctx: FilterContext) -> FilterContext:
    if ctx.classify_handle is None:
        ctx.classify_handle = lambda dimension: classify(dimension, Mode.FULL, ctx)
    return ctx


def _fingerprint(filter_ids: Sequence[str]) -> str:
    return hashlib.sha1(",".join(filter_ids).encode("utf-8")).hexdigest()[:12]


def classify(N: int, mode=Mode.FULL, ctx: Optional[FilterContext] = None) -> ClassificationReport:
    """
    Classify the admissible types of dimension ``N``.

    Args:
        N: Odd positive dimension
        mode: "basic" or "full" filter set
        ctx: Filter context (a fresh memoizing context when omitted)

    Returns:
        ClassificationReport with canonically sorted lists
    """
    check_dimension(N)
    mode = Mode(mode)
    ctx = _bind(ctx if ctx is not None else make_context())
    filter_ids = filter_set(mode)
    key = (N, _fingerprint(filter_ids), ctx.f2_mode)
    cached = ctx.memo.get(key)
    if cached is not None:
        logger.debug("memo hit for %d (%s)", N, mode.value)
        return cached

    start = time.perf_counter()
    screening = enumerate_with(N, filter_ids, ctx, early_exit=True)
    report = ClassificationReport(
        dimension=N,
        factorization=factorize(N),
        mode=mode,
        f2_mode=ctx.f2_mode,
        raw_count=screening.raw_count,
        survivors=screening.survivors,
        rejections=screening.rejections,
        unresolved=screening.unresolved,
        elapsed=time.perf_counter() - start,
    )
    logger.debug(
        "classified %d (%s): %d raw, %d survivors",
        N, mode.value, report.raw_count, len(report.survivors),
    )
    return ctx.memo.put(key, report)


def _classify_pointed_only(N: int, mode: Mode, ctx: FilterContext) -> ClassificationReport:
    """
    Fast path for K1 dimensions: only the pointed type can survive, so the
    candidates are not enumerated and ``raw_count`` is left unset.
    """
    key = (N, _fingerprint(filter_set(mode)) + ":pointed", ctx.f2_mode)
    cached = ctx.memo.get(key)
    if cached is not None:
        return cached
    start = time.perf_counter()
    report = ClassificationReport(
        dimension=N,
        factorization=factorize(N),
        mode=mode,
        f2_mode=ctx.f2_mode,
        raw_count=None,
        survivors=[TypeVector(((1, N),))],
        rejections=[],
        unresolved=[],
        elapsed=time.perf_counter() - start,
        fast_path=True,
    )
    return ctx.memo.put(key, report)


def dependency_graph(dimensions: Sequence[int]) -> nx.DiGraph:
    """
    Recursion dependencies between dimensions: an edge N/r -> N for every
    prime r with r || N, so predecessors are classified first.
    """
    graph = nx.DiGraph()
    graph.add_nodes_from(dimensions)
    members = set(dimensions)
    for N in dimensions:
        fact = factorize(N)
        for r, exponent in fact.factors:
            if exponent == 1 and N // r in members:
                graph.add_edge(N // r, N, prime=r)
    return graph


def scan(max_dimension: int = DEFAULT_SCAN_BOUND, mode=Mode.FULL, ctx: Optional[FilterContext] = None,
         fast_path: bool = True, workers: int = 1) -> List[ClassificationReport]:
    """
    Classify every odd dimension below ``max_dimension`` (exclusive bound).

    In full mode K1 dimensions take the pointed-only fast path unless
    ``fast_path`` is off.
    With ``workers > 1`` dimensions are classified concurrently, one
    topological generation of the dependency graph at a time.
    """
    if isinstance(max_dimension, bool) or not isinstance(max_dimension, int) or max_dimension < 1:
        raise InvalidInputError(f"Scan bound must be a positive integer, got {max_dimension!r}")
    mode = Mode(mode)
    ctx = _bind(ctx if ctx is not None else make_context())
    dimensions = list(range(1, max_dimension, 2))

    def run(N: int) -> ClassificationReport:
        if fast_path and mode is Mode.FULL and known_pointed_shape(N) == "K1":
            return _classify_pointed_only(N, mode, ctx)
        return classify(N, mode, ctx)

    reports: Dict[int, ClassificationReport] = {}
    if workers <= 1:
        for N in dimensions:
            reports[N] = run(N)
    else:
        graph = dependency_graph(dimensions)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for generation in nx.topological_generations(graph):
                batch = sorted(generation)
                for N, report in zip(batch, pool.map(run, batch)):
                    reports[N] = report

    ordered = [reports[N] for N in dimensions]
    logger.info(
        "scanned %d dimensions below %d: %d with non-pointed survivors",
        len(ordered), max_dimension, sum(1 for r in ordered if r.non_pointed_survivors),
    )
    return ordered


def compare_reference(report: ClassificationReport) -> DiscrepancyReport:
    """
    Set difference between a report's survivors and the shipped reference list
    of the matching stage (basic -> prefilter, full -> final).

    Raises:
        ReferenceNotFoundError for dimensions without a reference list
    """
    expected = set(reference_types(report.dimension, report.stage))
    actual = set(report.survivors)
    return DiscrepancyReport(
        dimension=report.dimension,
        stage=report.stage,
        missing_from_engine=canonical_sort(expected - actual),
        extra_in_engine=canonical_sort(actual - expected),
    )


def explain(N: int, t: TypeVector, ctx: Optional[FilterContext] = None) -> List[FilterVerdict]:
    """Verdicts of every filter of the full set, in catalog order, without early exit."""
    check_dimension(N)
    if t.fpdim() != N:
        raise InvalidInputError(f"Type {t} has FP dimension {t.fpdim()}, not {N}")
    ctx = _bind(ctx if ctx is not None else make_context())
    return run_all(t, N, ctx)


# Survivors known to exist: Drinfeld centers of Rep(Z_q x| Z_3)
SEED_REALIZATIONS: Dict[TypeVector, str] = {
    parse("(1,3;3,16;7,6)"): "Drinfeld center of Rep(Z7 x| Z3)",
    parse("(1,3;3,56;13,6)"): "Drinfeld center of Rep(Z13 x| Z3)",
}


def realized_survivors(report: ClassificationReport) -> List[Tuple[TypeVector, str]]:
    """Survivors with a known realization: pointed, a seed, or a seed times a pointed factor."""
    realized = []
    for t in report.survivors:
        if t.is_pointed():
            realized.append((t, "pointed"))
            continue
        for seed, witness in SEED_REALIZATIONS.items():
            if report.dimension % seed.fpdim():
                continue
            k = report.dimension // seed.fpdim()
            if deligne_product(seed, TypeVector(((1, k),))) == t:
                realized.append((t, witness if k == 1 else f"{witness} x pointed({k})"))
                break
    return realized


@dataclass
class ModeDiff:
    dimension: int
    legacy_only: List[TypeVector]
    strict_only: List[TypeVector]


def mode_diff(max_dimension: int = DEFAULT_SCAN_BOUND, mode=Mode.FULL, workers: int = 1) -> List[ModeDiff]:
    """Dimensions whose survivors or unresolved types differ between the f2 modes."""
    legacy = scan(max_dimension, mode, make_context(F2Mode.LEGACY), workers=workers)
    strict = scan(max_dimension, mode, make_context(F2Mode.STRICT), workers=workers)
    diffs = []
    for left, right in zip(legacy, strict):
        kept_left = set(left.survivors) | {t for t, _ in left.unresolved}
        kept_right = set(right.survivors) | {t for t, _ in right.unresolved}
        if kept_left != kept_right:
            diffs.append(ModeDiff(
                left.dimension,
                canonical_sort(kept_left - kept_right),
                canonical_sort(kept_right - kept_left),
            ))
    return diffs


def reference_scan(mode=Mode.FULL, ctx: Optional[FilterContext] = None) -> List[ClassificationReport]:
    """Classify just the dimensions that have reference lists."""
    ctx = _bind(ctx if ctx is not None else make_context())
    return [classify(N, mode, ctx) for N in REFERENCE_DIMENSIONS]
