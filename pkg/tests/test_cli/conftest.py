"""Fixtures for the command-line tests."""

from pathlib import Path

import pytest
from click.testing import CliRunner

from src.verification.corpus import FIXTURES_DIR


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def example10_g6() -> str:
    """Provide the path of the graph6 fixture as a string argument."""
    return str(FIXTURES_DIR / "example10.g6")


@pytest.fixture
def example10_json() -> Path:
    return FIXTURES_DIR / "example10.json"
