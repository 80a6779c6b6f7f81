"""
Citation table: filter id -> (label, quoted statement) backing each filter.
"""
import os
from functools import lru_cache
from typing import Dict, NamedTuple

import pandas as pd

from utils.errors import ConfigurationError

CITATIONS_PATH = os.path.join(os.path.dirname(os.path.dirname(__file__)), "data", "citations.csv")


class Citation(NamedTuple):
    filter_id: str
    label: str
    quote: str


@lru_cache(maxsize=None)
def load_citations(path: str = CITATIONS_PATH) -> Dict[str, Citation]:
    try:
        df = pd.read_csv(path, dtype=str, keep_default_na=False)
    except (OSError, pd.errors.ParserError) as e:
        raise ConfigurationError(f"Failed to read citation table {path}: {str(e)}")

    missing = {'filter_id', 'label', 'quote'} - set(df.columns)
    if missing:
        raise ConfigurationError(f"Citation table is missing columns: {', '.join(sorted(missing))}")

    return {
        row.filter_id: Citation(row.filter_id, row.label, row.quote)
        for row in df.itertuples(index=False)
    }


def get_citation(key: str) -> Citation:
    citations = load_citations()
    if key not in citations:
        raise ConfigurationError(f"No citation recorded for '{key}'")
    return citations[key]
