"""Shared fixtures and the acceptance-summary terminal hook."""

import pytest

from oddlen.checks import CheckContext

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def fast_ctx() -> CheckContext:
    """Fast-tier context with a session-wide table cache."""
    return CheckContext.for_tier("fast")


@pytest.fixture(scope="session")
def acceptance_log() -> list[str]:
    return ACCEPTANCE_LINES


@pytest.fixture(scope="session")
def shared_tables() -> dict:
    """Brute-table cache shared across the acceptance criteria."""
    return {}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
