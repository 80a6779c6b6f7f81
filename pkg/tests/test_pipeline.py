import pytest

from utils.citations import get_citation
from utils.errors import InvalidInputError, ReferenceNotFoundError
from utils.filters import (
    CATALOG, FULL_FILTERS, FilterSpec, FilterVerdict, VerdictStatus,
    known_pointed_shape, sixth_power_chain,
)
from utils.pipeline import (
    Mode, classify, compare_reference, dependency_graph, explain, make_context,
    mode_diff, realized_survivors, reference_scan, scan,
)
from utils.reference import ATTRIBUTIONS, REFERENCE_DIMENSIONS, Stage, reference_types
from utils.typevec import parse

HEADLINE_DIMENSIONS = [441, 729, 1125, 1323, 1521]


def types(*texts):
    return [parse(text) for text in texts]


@pytest.mark.parametrize("N", REFERENCE_DIMENSIONS)
def test_basic_reproduces_prefilter_lists(N, legacy_ctx):
    report = classify(N, "basic", legacy_ctx)
    assert report.survivors == reference_types(N, Stage.PREFILTER)
    assert compare_reference(report).is_clean


@pytest.mark.parametrize("N", REFERENCE_DIMENSIONS)
def test_full_reproduces_final_lists(N, legacy_ctx):
    report = classify(N, "full", legacy_ctx)
    assert report.survivors == reference_types(N, Stage.FINAL)
    assert report.unresolved == []
    assert compare_reference(report).is_clean


def test_final_list_examples(legacy_ctx):
    assert classify(441, Mode.FULL, legacy_ctx).survivors == types("(1,3;3,16;7,6)", "(1,441)")
    assert classify(729, Mode.FULL, legacy_ctx).survivors == types("(1,9;3,80)", "(1,27;3,78)", "(1,729)")
    assert classify(1125, Mode.FULL, legacy_ctx).survivors == types("(1,15;3,40;5,30)", "(1,1125)")
    assert classify(1323, Mode.FULL, legacy_ctx).survivors == types("(1,9;3,48;7,18)", "(1,1323)")
    assert classify(1521, Mode.FULL, legacy_ctx).survivors == types("(1,3;3,56;13,6)", "(1,1521)")
    assert len(classify(1575, Mode.BASIC, legacy_ctx).survivors) == 10


def test_trivial_dimension():
    report = classify(1)
    assert report.survivors == types("(1,1)")
    assert report.rejections == []


def test_classify_rejects_even_dimension():
    with pytest.raises(InvalidInputError, match="odd-dimensional"):
        classify(442)


def test_report_invariants(legacy_ctx):
    report = classify(1575, "full", legacy_ctx)
    assert not set(report.survivors) & set(report.rejected_types)
    assert len(report.survivors) + len(report.rejections) + len(report.unresolved) == report.raw_count
    assert all(v.status is VerdictStatus.REJECT for _, verdicts in report.rejections for v in verdicts)
    assert report.stage is Stage.FINAL
    assert str(report.factorization) == "3^2 x 5^2 x 7"


def test_report_dict_has_no_timing_by_default(legacy_ctx):
    report = classify(441, "full", legacy_ctx)
    payload = report.to_dict()
    assert 'elapsed' not in payload
    assert payload['survivors'] == ["(1,3;3,16;7,6)", "(1,441)"]
    assert payload['factorization'] == {"3": 2, "7": 2}
    assert 'elapsed' in report.to_dict(include_timing=True)


@pytest.mark.parametrize("N", REFERENCE_DIMENSIONS)
def test_full_survivors_within_basic(N, legacy_ctx):
    assert set(classify(N, "full", legacy_ctx).survivors) <= set(classify(N, "basic", legacy_ctx).survivors)


def test_memo_reuses_reports():
    ctx = make_context()
    first = classify(1575, "full", ctx)
    hits = ctx.memo.hits
    assert classify(1575, "full", ctx) is first
    assert ctx.memo.hits == hits + 1
    # f17 classified 225 on the way
    classify(225, "full", ctx)
    assert ctx.memo.hits == hits + 2


def test_memoized_and_plain_scans_agree():
    memoized = scan(400, "full", make_context())
    plain = scan(400, "full", make_context(memoize=False))
    assert [r.to_dict() for r in memoized] == [r.to_dict() for r in plain]


def test_parallel_scan_matches_sequential():
    sequential = scan(800, "full", make_context())
    parallel = scan(800, "full", make_context(), workers=4)
    assert [r.to_dict() for r in parallel] == [r.to_dict() for r in sequential]


def test_fast_path_matches_full_pipeline():
    with_fast = scan(200, "full", make_context())
    without = scan(200, "full", make_context(), fast_path=False)
    assert [r.survivors for r in with_fast] == [r.survivors for r in without]
    assert any(r.fast_path for r in with_fast)
    assert not any(r.fast_path for r in without)
    for fast, full in zip(with_fast, without):
        if fast.fast_path:
            assert fast.rejections == [] and fast.raw_count is None
            assert all(not t.is_pointed() for t in full.rejected_types)
        else:
            assert fast.to_dict() == full.to_dict()


def test_fast_path_reports_stay_small():
    report = scan(1575, "full", make_context())[-1]
    assert report.dimension == 1573
    assert report.fast_path
    assert report.to_dict()['survivors'] == ["(1,1573)"]
    assert report.to_dict()['rejections'] == []


def test_small_scan():
    reports = scan(10)
    assert [r.dimension for r in reports] == [1, 3, 5, 7, 9]
    assert all(not r.non_pointed_survivors for r in reports)
    assert all(len(r.survivors) == 1 for r in reports)


@pytest.mark.parametrize("bound", [0, -1, 2.5, True])
def test_scan_bound_must_be_positive(bound):
    with pytest.raises(InvalidInputError):
        scan(bound)


def test_dependency_graph_edges():
    graph = dependency_graph(list(range(1, 2025, 2)))
    assert graph.has_edge(225, 1575)
    assert graph[225][1575]['prime'] == 7
    assert not graph.has_edge(525, 1575)  # 3^2 divides 1575
    assert graph.in_degree(1) == 0


@pytest.mark.slow
def test_scan_headline(full_scan):
    flagged = [r.dimension for r in full_scan if r.non_pointed_survivors]
    assert flagged == HEADLINE_DIMENSIONS
    assert min(flagged) == 441
    assert len(full_scan) == 1012


@pytest.mark.slow
def test_other_dimensions_are_pointed_only(full_scan):
    for report in full_scan:
        if report.dimension in REFERENCE_DIMENSIONS:
            assert report.survivors == reference_types(report.dimension, Stage.FINAL)
            continue
        assert known_pointed_shape(report.dimension) == "K1"
        assert report.survivors == [parse(f"(1,{report.dimension})")]
        assert report.fast_path and report.rejections == []


def test_compare_reference_examples(legacy_ctx, strict_ctx):
    assert compare_reference(classify(1323, "full", legacy_ctx)).is_clean
    assert compare_reference(classify(729, "basic", legacy_ctx)).is_clean

    strict = compare_reference(classify(729, "basic", strict_ctx))
    assert strict.missing_from_engine == []
    assert strict.extra_in_engine == types("(1,9;3,44;9,4)", "(1,9;3,62;9,2)")
    assert strict.to_dict()['stage'] == "prefilter"


def test_compare_reference_outside_fixture(legacy_ctx):
    with pytest.raises(ReferenceNotFoundError):
        compare_reference(classify(1573, "full", legacy_ctx))
    with pytest.raises(ReferenceNotFoundError):
        compare_reference(classify(9, "full", legacy_ctx))


def test_strict_mode_keeps_final_lists(strict_ctx):
    report = classify(729, "full", strict_ctx)
    assert report.survivors == reference_types(729, Stage.FINAL)
    assert report.unresolved == []
    for N in REFERENCE_DIMENSIONS:
        assert set(classify(N, "full", strict_ctx).survivors) <= set(reference_types(N, Stage.FINAL))


def test_inconclusive_types_are_unresolved(monkeypatch):
    def undecided(t, N, ctx=None):
        if sixth_power_chain(t, N) is None:
            return FilterVerdict("f18_sixth_power", VerdictStatus.INAPPLICABLE, "outside shape", "f18_sixth_power")
        return FilterVerdict("f18_sixth_power", VerdictStatus.INCONCLUSIVE, "chain open", "f18_sixth_power")

    spec = CATALOG["f18_sixth_power"]
    monkeypatch.setitem(CATALOG, "f18_sixth_power", FilterSpec(spec.filter_id, spec.alias, spec.stage, spec.summary, undecided))

    report = classify(729, "full", make_context())
    assert [t for t, _ in report.unresolved] == types("(1,9;3,8;9,8)", "(1,9;3,26;9,6)")
    assert report.survivors == reference_types(729, Stage.FINAL)
    for _, verdicts in report.unresolved:
        assert [v.status for v in verdicts] == [VerdictStatus.INCONCLUSIVE]


@pytest.mark.parametrize("key", sorted(ATTRIBUTIONS, key=lambda k: (k[0], k[1].sort_key())),
                         ids=lambda k: f"{k[1]}@{k[0]}")
def test_attribution_audit(key, legacy_ctx):
    N, t = key
    verdicts = explain(N, t, legacy_ctx)
    rejecting = {v.filter_id for v in verdicts if v.status is VerdictStatus.REJECT}
    assert ATTRIBUTIONS[key] in rejecting
    assert t in classify(N, "full", legacy_ctx).rejected_types


def test_attributions_cover_every_excluded_type():
    excluded = {
        (N, t)
        for N in REFERENCE_DIMENSIONS
        for t in set(reference_types(N, Stage.PREFILTER)) - set(reference_types(N, Stage.FINAL))
    }
    assert set(ATTRIBUTIONS) == excluded
    assert len(ATTRIBUTIONS) >= 12


def test_explain_examples(legacy_ctx):
    verdicts = explain(243, parse("(1,9;3,26)"), legacy_ctx)
    assert [v.filter_id for v in verdicts] == list(FULL_FILTERS)
    f13 = next(v for v in verdicts if v.filter_id == "f13_rank_window")
    assert f13.status is VerdictStatus.REJECT
    assert "either pointed or perfect" in get_citation(f13.citation).quote

    f15 = next(v for v in explain(1323, parse("(1,21;3,14;7,24)"), legacy_ctx) if v.filter_id == "f15_adjoint_feasible")
    assert f15.status is VerdictStatus.REJECT
    assert "adjoint Diophantine infeasible" in f15.reason

    assert all(v.status is not VerdictStatus.REJECT for v in explain(441, parse("(1,3;3,16;7,6)"), legacy_ctx))


def test_explain_dimension_mismatch():
    with pytest.raises(InvalidInputError):
        explain(441, parse("(1,3;3,16;7,7)"))


def test_realized_survivors(legacy_ctx):
    assert realized_survivors(classify(441, "full", legacy_ctx)) == [
        (parse("(1,3;3,16;7,6)"), "Drinfeld center of Rep(Z7 x| Z3)"),
        (parse("(1,441)"), "pointed"),
    ]
    witnesses = dict(realized_survivors(classify(1323, "full", legacy_ctx)))
    assert witnesses[parse("(1,9;3,48;7,18)")] == "Drinfeld center of Rep(Z7 x| Z3) x pointed(3)"
    assert parse("(1,9;3,80)") not in dict(realized_survivors(classify(729, "full", legacy_ctx)))


def test_mode_diff_in_basic_mode():
    diffs = mode_diff(731, "basic")
    assert [d.dimension for d in diffs] == [729]
    assert diffs[0].legacy_only == []
    assert diffs[0].strict_only == types("(1,9;3,44;9,4)", "(1,9;3,62;9,2)")


def test_mode_diff_in_full_mode():
    assert mode_diff(731, "full") == []


def test_reference_scan(legacy_ctx):
    reports = reference_scan(Mode.FULL, legacy_ctx)
    assert [r.dimension for r in reports] == list(REFERENCE_DIMENSIONS)
    assert [r.dimension for r in reports if r.non_pointed_survivors] == HEADLINE_DIMENSIONS
