"""Switches the package into test mode and exposes a session-available
temporary directory for the reports, CSV and JSON files generated during unit
testing.
"""
import pytest
from mbuniq.base import set_testmode
set_testmode(True)

#Because of the way coverage testing works, mbuniq gets imported *before* this
#session-level initialization. That means the local user copy of the config
#would be referenced instead of the repo's version for the unit tests. We
#re-read the configuration here to undo that.
from mbuniq.config import settings
settings("mbuniq", True)

def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="run the Monte Carlo reproductions")

def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)

@pytest.fixture(scope='session', autouse=True)
def workdir(tmpdir_factory):
    fn = tmpdir_factory.mktemp('mbuniq')
    return fn
