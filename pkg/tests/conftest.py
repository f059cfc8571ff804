import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from scx.generators import catalog, display_name


@pytest.fixture(scope="session")
def corpus():
    """The default corpus as a name -> complex mapping."""
    return {display_name(spec): c for spec, c in catalog()}


@pytest.fixture(scope="session")
def corpus_specs():
    return catalog()
