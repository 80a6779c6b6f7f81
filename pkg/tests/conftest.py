import pytest

from utils.filters import F2Mode
from utils.pipeline import make_context, scan


@pytest.fixture(scope="session")
def legacy_ctx():
    return make_context(F2Mode.LEGACY)


@pytest.fixture(scope="session")
def strict_ctx():
    return make_context(F2Mode.STRICT)


@pytest.fixture(scope="session")
def full_scan(legacy_ctx):
    return scan(2025, "full", legacy_ctx)

