"""Test configuration and fixtures."""

from pathlib import Path
from tempfile import TemporaryDirectory

import pytest
from typer.testing import CliRunner

from supersat.core.config import OracleConfig, SupersatConfig
from supersat.core.graph import Graph


@pytest.fixture
def temp_dir():
    """Create a temporary directory for tests."""
    with TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture(autouse=True)
def isolated_config(temp_dir, monkeypatch):
    """Keep every test away from the user's config file and CLI environment."""
    config_path = temp_dir / "config.yaml"
    monkeypatch.setattr("supersat.core.config.get_config_path", lambda: config_path)
    monkeypatch.setattr("supersat.commands.config.get_config_path", lambda: config_path)
    monkeypatch.delenv("SUPERSAT_VERBOSITY", raising=False)
    monkeypatch.delenv("SUPERSAT_THREADS", raising=False)
    return config_path


@pytest.fixture
def mock_config():
    """Create a mock configuration for testing."""
    oracle_config = OracleConfig(max_n=7, budget=1_000_000, witness_cap=3)

    return SupersatConfig(
        oracle=oracle_config,
        verbosity=1,
    )


@pytest.fixture
def k5():
    """Complete graph on five vertices."""
    return Graph.from_edges(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])


@pytest.fixture
def bowtie_graph():
    """Two triangles sharing vertex 0."""
    return Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)])


@pytest.fixture
def path3():
    """Path on three vertices."""
    return Graph.from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def runner():
    """CLI runner for invoking the typer app."""
    return CliRunner()


@pytest.fixture
def k5_file(temp_dir, k5):
    """K5 written as an edge list."""
    path = temp_dir / "k5.txt"
    path.write_text("5 10\n" + "".join(f"{u} {v}\n" for u, v in k5.edges()))
    return path
