import os
import tempfile

import pytest

from weakestlink.config import create_settings, get_frozen_copy, get_unfrozen_copy
from weakestlink.keyspace import AttackModel, LifetimeBudget

from . import VERBOSE


@pytest.fixture(scope="function")
def tmpdir():
    """Yield a tmpdir string, and clean it up afterwards."""
    with tempfile.TemporaryDirectory() as tmp:
        yield tmp


@pytest.fixture(scope="function")
def settings(tmpdir):
    """Running settings with logs going to a tmpdir."""
    values = get_unfrozen_copy(create_settings(environ={}))
    values["log_dir"] = os.path.join(tmpdir, "log")
    values["verbose"] = bool(VERBOSE)
    yield get_frozen_copy(values)


@pytest.fixture(scope="function")
def attack():
    """The 10**12 keys/second ASIC attack."""
    return AttackModel()


@pytest.fixture(scope="function")
def budget():
    """The 89.78-year lifetime budget."""
    return LifetimeBudget()
