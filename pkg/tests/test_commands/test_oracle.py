"""Tests for the oracle commands."""

import json

from supersat.main import app


def test_oracle_ex(runner):
    """Test ex(5) and ex(6) in one call."""
    result = runner.invoke(app, ["oracle", "ex", "--n", "5..6", "--witness-cap", "1"])
    assert result.exit_code == 0
    rows = json.loads(result.stdout)
    assert [row["optimum"] for row in rows] == [7, 10]
    assert all(len(row["witness_graphs"]) == 1 for row in rows)


def test_oracle_h(runner):
    """Test h(5, 1) = 2."""
    result = runner.invoke(app, ["oracle", "h", "--n", "5", "--q", "1"])
    assert result.exit_code == 0
    assert json.loads(result.stdout)["optimum"] == 2


def test_oracle_h_no_pruning(runner):
    """Test audit flags reach the search."""
    result = runner.invoke(
        app, ["oracle", "h", "--n", "5", "--q", "1", "--no-prune", "--no-symmetry"]
    )
    assert result.exit_code == 0
    row = json.loads(result.stdout)
    assert row["graphs_examined"] == 45
    assert row["prune"] is False


def test_oracle_too_large(runner):
    """Test n above the cap exits with code 3."""
    result = runner.invoke(app, ["oracle", "h", "--n", "9", "--q", "0"])
    assert result.exit_code == 3


def test_oracle_budget(runner):
    """Test the budget option."""
    result = runner.invoke(app, ["oracle", "h", "--n", "6", "--q", "1", "--budget", "10"])
    assert result.exit_code == 3
    assert "budget" in result.output


def test_oracle_unique_five(runner):
    """Test n=5 lists three classes without failing."""
    result = runner.invoke(app, ["oracle", "unique", "--n", "5", "-f", "tsv"])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert len(lines) == 4
    assert sum(line.split("\t")[4] == "true" for line in lines[1:]) == 2


def test_oracle_unique_six(runner):
    """Test n=6 has a single class."""
    result = runner.invoke(app, ["oracle", "unique", "--n", "6"])
    assert result.exit_code == 0
    row = json.loads(result.stdout)
    assert row["turan_plus_edge"] is True
    assert row["ex"] == 10
