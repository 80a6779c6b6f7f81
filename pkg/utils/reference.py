"""
Reference type lists shipped in data/reference_types.txt, guarded by a sha256
checksum, plus the expected attribution of every excluded reference type.
"""
import hashlib
import logging
import os
from enum import Enum
from functools import lru_cache
from typing import Dict, List, Tuple

from utils.errors import FixtureIntegrityError, ReferenceNotFoundError
from utils.typevec import TypeVector, canonical_sort, parse

logger = logging.getLogger(__name__)

DATA_DIR = os.path.join(os.path.dirname(os.path.dirname(__file__)), "data")
REFERENCE_PATH = os.path.join(DATA_DIR, "reference_types.txt")
CHECKSUM_PATH = os.path.join(DATA_DIR, "reference_types.sha256")

REFERENCE_DIMENSIONS: Tuple[int, ...] = (
    225, 243, 441, 675, 729, 1089, 1125, 1215, 1225, 1323, 1521, 1575, 1701,
)


class Stage(str, Enum):
    PREFILTER = "prefilter"
    FINAL = "final"


def file_checksum(path: str = REFERENCE_PATH) -> str:
    with open(path, "rb") as handle:
        return hashlib.sha256(handle.read()).hexdigest()


@lru_cache(maxsize=None)
def load_reference(path: str = REFERENCE_PATH, checksum_path: str = CHECKSUM_PATH) -> Dict[Tuple[int, Stage], Tuple[TypeVector, ...]]:
    """
    Load and verify the reference lists.

    Returns:
        Mapping (dimension, stage) -> canonically sorted types

    Raises:
        FixtureIntegrityError when the file was edited without updating its checksum
    """
    with open(checksum_path, "r") as handle:
        expected = handle.read().split()[0]
    actual = file_checksum(path)
    if actual != expected:
        raise FixtureIntegrityError(f"{path} has sha256 {actual}, expected {expected}")

    records: Dict[Tuple[int, Stage], Tuple[TypeVector, ...]] = {}
    with open(path, "r") as handle:
        for line_no, line in enumerate(handle, start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            try:
                key = (int(fields[0]), Stage(fields[1]))
            except (IndexError, ValueError) as e:
                raise FixtureIntegrityError(f"{path}:{line_no}: malformed record: {str(e)}")
            records[key] = tuple(canonical_sort(parse(token) for token in fields[2:]))
    logger.debug("Loaded %d reference records", len(records))
    return records


def reference_types(dimension: int, stage: Stage) -> List[TypeVector]:
    records = load_reference()
    key = (dimension, Stage(stage))
    if key not in records:
        raise ReferenceNotFoundError(f"No {Stage(stage).value} reference list for dimension {dimension}")
    return list(records[key])


# (dimension, excluded type) -> filter expected to reject it in full mode
_ATTRIBUTIONS = {
    225: {"(1,3;3,8;5,6)": "f10_pq_order"},
    243: {"(1,9;3,26)": "f13_rank_window"},
    675: {
        "(1,3;3,8;5,6;15,2)": "f10_pq_order",
        "(1,3;3,8;5,24)": "f10_pq_order",
        "(1,9;3,24;5,18)": "f11_p2_order",
    },
    729: {
        "(1,9;3,8;9,8)": "f18_sixth_power",
        "(1,9;3,26;9,6)": "f18_sixth_power",
    },
    1089: {"(1,3;3,40;11,6)": "f10_pq_order"},
    1125: {
        "(1,3;3,8;5,6;15,4)": "f10_pq_order",
        "(1,3;3,8;5,24;15,2)": "f10_pq_order",
        "(1,3;3,8;5,42)": "f10_pq_order",
        "(1,9;3,24;5,36)": "f12_perfect_adjoint",
    },
    1215: {
        "(1,9;3,8;9,14)": "f14_known_pointed",
        "(1,9;3,26;9,12)": "f14_known_pointed",
        "(1,9;3,44;9,10)": "f14_known_pointed",
        "(1,9;3,134)": "f14_known_pointed",
        "(1,27;3,132)": "f14_known_pointed",
        "(1,45;3,130)": "f14_known_pointed",
    },
    1323: {
        "(1,3;3,16;7,6;21,2)": "f16_adjoint_prop39",
        "(1,3;3,16;7,24)": "f16_adjoint_prop39",
        "(1,21;3,14;7,24)": "f15_adjoint_feasible",
    },
    1575: {
        "(1,3;3,8;5,6;15,6)": "f10_pq_order",
        "(1,3;3,8;5,24;15,4)": "f10_pq_order",
        "(1,3;3,8;5,42;15,2)": "f10_pq_order",
        "(1,3;3,8;5,60)": "f10_pq_order",
        "(1,3;3,58;5,6;15,4)": "f10_pq_order",
        "(1,3;3,58;5,24;15,2)": "f10_pq_order",
        "(1,3;3,58;5,42)": "f10_pq_order",
        "(1,9;3,24;5,54)": "f12_perfect_adjoint",
        "(1,21;3,56;5,42)": "f17_modular_factor",
    },
    1701: {
        "(1,9;3,8;9,20)": "f14_known_pointed",
        "(1,9;3,26;9,18)": "f14_known_pointed",
        "(1,9;3,62;9,14)": "f14_known_pointed",
        "(1,9;3,188)": "f14_known_pointed",
        "(1,27;3,186)": "f14_known_pointed",
        "(1,63;3,182)": "f14_known_pointed",
    },
}

ATTRIBUTIONS: Dict[Tuple[int, TypeVector], str] = {
    (dimension, parse(text)): filter_id
    for dimension, entries in _ATTRIBUTIONS.items()
    for text, filter_id in entries.items()
}
