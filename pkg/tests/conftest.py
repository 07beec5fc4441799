"""Shared pytest configuration."""

import logging

import pytest
from click.testing import CliRunner

from kirbycert.cli.main import cli


def pytest_addoption(parser):
    parser.addoption(
        "--runslow", action="store_true", default=False, help="run exhaustive sweeps"
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive sweep, needs --runslow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def run(tmp_path):
    """Invoke the CLI with a throwaway config directory."""
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(cli, ["--config-dir", str(tmp_path / "config"), *args])

    yield invoke
    # handlers hold the runner's streams, which do not outlive the test
    logger = logging.getLogger("kirbycert")
    logger.handlers.clear()
    logger.propagate = True
