import pytest
from hypothesis import given, settings
from hypothesis.strategies import integers

from utils.enumerator import ODD_DIMENSION_MESSAGE, enumerate_raw, enumerate_with
from utils.errors import ConfigurationError, InvalidInputError
from utils.filters import BASIC_FILTERS, FULL_FILTERS, VerdictStatus
from utils.typevec import canonical_sort, parse


def types(*texts):
    return [parse(text) for text in texts]


def test_enumerate_small_dimensions():
    assert enumerate_raw(9) == types("(1,9)")
    assert enumerate_raw(27) == types("(1,9;3,2)", "(1,27)")
    assert enumerate_raw(1) == types("(1,1)")


def test_enumerate_441_contains_survivors():
    raw = enumerate_raw(441)
    assert parse("(1,3;3,16;7,6)") in raw
    assert parse("(1,441)") in raw
    assert raw == canonical_sort(raw)


@pytest.mark.parametrize("N", [0, -3, 442, 2])
def test_enumerate_rejects_bad_dimension(N):
    with pytest.raises(InvalidInputError):
        enumerate_raw(N)


def test_even_dimension_message():
    with pytest.raises(InvalidInputError, match=ODD_DIMENSION_MESSAGE):
        enumerate_raw(442)


@settings(max_examples=60, deadline=None)
@given(integers(min_value=0, max_value=600).map(lambda k: 2 * k + 1))
def test_raw_candidates_are_admissible(N):
    for t in enumerate_raw(N):
        assert t.fpdim() == N
        assert N % t.n1 == 0
        assert all(d % 2 == 1 for d in t.dims)
        assert all(n % 2 == 0 for _, n in t.rest)


def test_basic_screening(legacy_ctx):
    assert enumerate_with(225, BASIC_FILTERS, legacy_ctx).survivors == types("(1,3;3,8;5,6)", "(1,225)")
    assert enumerate_with(1225, BASIC_FILTERS, legacy_ctx).survivors == types("(1,1225)")


def test_full_screening(legacy_ctx):
    assert enumerate_with(225, FULL_FILTERS, legacy_ctx).survivors == types("(1,225)")


@pytest.mark.parametrize("N", [225, 729, 1323])
def test_screening_partitions_candidates(N, legacy_ctx):
    screening = enumerate_with(N, FULL_FILTERS, legacy_ctx)
    rejected = [t for t, _ in screening.rejections]
    unresolved = [t for t, _ in screening.unresolved]
    assert sorted(screening.survivors + rejected + unresolved, key=lambda t: t.sort_key()) == enumerate_raw(N)
    assert not set(screening.survivors) & set(rejected)
    assert screening.raw_count == len(enumerate_raw(N))
    for _, verdicts in screening.rejections:
        assert any(v.status is VerdictStatus.REJECT for v in verdicts)


def test_early_exit_keeps_first_reject(legacy_ctx):
    full = enumerate_with(1575, FULL_FILTERS, legacy_ctx)
    early = enumerate_with(1575, FULL_FILTERS, legacy_ctx, early_exit=True)
    assert [t for t, _ in early.rejections] == [t for t, _ in full.rejections]
    for (_, all_verdicts), (_, first) in zip(full.rejections, early.rejections):
        assert len(first) == 1
        assert first[0] == all_verdicts[0]


def test_aliases_accepted(legacy_ctx):
    by_alias = enumerate_with(225, ["f1", "structural", "solvable", "f2", "f3", "f4", "f5", "f8", "f9"], legacy_ctx)
    assert by_alias.survivors == enumerate_with(225, BASIC_FILTERS, legacy_ctx).survivors


def test_unknown_filter_is_configuration_error(legacy_ctx):
    with pytest.raises(ConfigurationError):
        enumerate_with(225, ["f1", "f99"], legacy_ctx)
