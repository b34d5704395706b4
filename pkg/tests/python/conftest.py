"""
PyTest configuration for verbal-images Python unit tests.
Contains group fixtures and shared test utilities.
"""

import json
import sys
from pathlib import Path

import numpy as np
import pytest

# Add the source directory to Python path for imports
PROJECT_ROOT = Path(__file__).parent.parent.parent
sys.path.insert(0, str(PROJECT_ROOT / "src"))

from verbal_images.config import DEFAULT_CONFIG  # noqa: E402
from verbal_images.core.automorphisms import automorphism_group  # noqa: E402
from verbal_images.core.groups import (  # noqa: E402
    alternating_group, cyclic_group, special_linear_group, symmetric_group,
)
from verbal_images.core.pair_table import PairMode, pair_table  # noqa: E402
from verbal_images.services.cache_service import get_cache  # noqa: E402


# --- groups; enumerated once per session ---
@pytest.fixture(scope="session")
def s3():
    """Sym(3)"""
    return symmetric_group(3)


@pytest.fixture(scope="session")
def s4():
    """Sym(4)"""
    return symmetric_group(4)


@pytest.fixture(scope="session")
def s5():
    """Sym(5)"""
    return symmetric_group(5)


@pytest.fixture(scope="session")
def s6():
    """Sym(6)"""
    return symmetric_group(6)


@pytest.fixture(scope="session")
def a5():
    """Alt(5)"""
    return alternating_group(5)


@pytest.fixture(scope="session")
def a6():
    """Alt(6)"""
    return alternating_group(6)


@pytest.fixture(scope="session")
def sl25():
    """SL(2,5), acting on the 24 nonzero vectors of GF(5)^2"""
    return special_linear_group(2, 5)


@pytest.fixture(scope="session")
def c4():
    """Cyclic group of order 4 from its Cayley table"""
    return cyclic_group(4)


# --- automorphism groups ---
@pytest.fixture(scope="session")
def s4_aut(s4):
    return automorphism_group(s4)


@pytest.fixture(scope="session")
def s5_aut(s5):
    return automorphism_group(s5)


@pytest.fixture(scope="session")
def a5_aut(a5):
    return automorphism_group(a5)


@pytest.fixture(scope="session")
def s6_aut(s6):
    return automorphism_group(s6)


@pytest.fixture(scope="session")
def sl25_aut(sl25):
    return automorphism_group(sl25)


# --- pair tables ---
@pytest.fixture(scope="session")
def a5_pairs(a5, a5_aut):
    """Plain pair table of Alt(5)"""
    return pair_table(a5, a5_aut, PairMode.PLAIN)


@pytest.fixture(scope="session")
def s5_pairs(s5, s5_aut):
    """Pairs of Sym(5) generating over Alt(5)"""
    return pair_table(s5, s5_aut, PairMode.ALMOST_SIMPLE)


@pytest.fixture(scope="session")
def sl25_pairs(sl25, sl25_aut):
    """Pairs of SL(2,5) modulo Aut and the center"""
    return pair_table(sl25, sl25_aut, PairMode.QUASISIMPLE)


# --- documents ---
@pytest.fixture
def perm_document(tmp_path):
    """Group document for Sym(4) on its natural points"""
    path = tmp_path / "s4.grp"
    path.write_text("# Sym(4)\nkind: perm\ndegree: 4\nname: s4-doc\n(1 2 3 4)\n(1 2)\n")
    return path


@pytest.fixture
def cayley_document(tmp_path):
    """Group document for the cyclic group of order 3"""
    path = tmp_path / "c3.grp"
    path.write_text("kind: cayley\norder: 3\n0 1 2\n1 2 0\n2 0 1\n")
    return path


@pytest.fixture
def temp_config_file(tmp_path):
    """Create a temporary config file for testing"""
    config_data = {
        "max_group_order": 5000,
        "threads": 2,
        "evaluation_budget": 10 ** 6,
    }
    path = tmp_path / "config.json"
    path.write_text(json.dumps(config_data))
    return path


@pytest.fixture
def rng():
    """Seeded generator for reproducible sampling"""
    return np.random.default_rng(20240115)


@pytest.fixture
def fresh_cache():
    """Empty the global result cache around a test"""
    cache = get_cache()
    cache.clear()
    yield cache
    cache.clear()
    get_cache(DEFAULT_CONFIG)


@pytest.fixture
def capture_logs(caplog):
    """Capture logs during testing"""
    import logging
    caplog.set_level(logging.DEBUG, logger="verbal_images")
    return caplog
