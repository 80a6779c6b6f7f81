import pytest

from utils.enumerator import enumerate_raw
from utils.errors import InvalidInputError, NotSupportedError
from utils.filters import run_filter
from utils.oracle import SUPPORTED_FILTERS, oracle_check, oracle_enumerate
from utils.reference import REFERENCE_DIMENSIONS
from utils.typevec import parse


def test_oracle_enumerate_examples():
    assert oracle_enumerate(27) == [parse("(1,9;3,2)"), parse("(1,27)")]
    assert oracle_enumerate(9) == [parse("(1,9)")]
    assert oracle_enumerate(225) == enumerate_raw(225)


def test_oracle_enumerate_rejects_even():
    with pytest.raises(InvalidInputError):
        oracle_enumerate(10)


@pytest.mark.parametrize("N", range(1, 400, 2))
def test_enumerators_agree_below_400(N):
    assert oracle_enumerate(N) == enumerate_raw(N)


@pytest.mark.slow
def test_enumerators_agree_below_2025():
    for N in range(401, 2026, 2):
        assert oracle_enumerate(N) == enumerate_raw(N), N


@pytest.mark.parametrize("text, N, filter_id, expected", [
    ("(1,9;3,24)", 225, "f5", "reject"),
    ("(1,3;3,16;7,6)", 441, "f8", "pass"),
    ("(1,1;2,2)", 9, "f1", "reject"),
    ("(1,9;3,44;9,4)", 729, "f2", "inapplicable"),
    ("(1,9;3,44;9,4)", 729, "f2_dim3_divisibility", "inapplicable"),
])
def test_oracle_check_examples(text, N, filter_id, expected):
    assert oracle_check(parse(text), N, filter_id) == expected


@pytest.mark.parametrize("filter_id", ["f10", "f17_modular_factor", "structural"])
def test_oracle_check_unsupported(filter_id):
    with pytest.raises(NotSupportedError):
        oracle_check(parse("(1,9)"), 9, filter_id)


@pytest.mark.parametrize("filter_id", SUPPORTED_FILTERS)
@pytest.mark.parametrize("N", REFERENCE_DIMENSIONS)
def test_filters_agree_with_oracle(N, filter_id, legacy_ctx, strict_ctx):
    # the oracle restates f2 in its strict reading
    ctx = strict_ctx if filter_id == "f2" else legacy_ctx
    for t in enumerate_raw(N):
        assert run_filter(filter_id, t, N, ctx).status.value == oracle_check(t, N, filter_id), str(t)
