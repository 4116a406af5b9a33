"""Tests for graph file formats."""

from pathlib import Path

import numpy as np
import pytest

from supersat.core.config import GraphFormat
from supersat.core.errors import ParseError, UnsupportedHeader
from supersat.core.graph import Graph, random_graph
from supersat.core.graph_io import (
    guess_format,
    read_edge_list,
    read_graph,
    read_graph6,
    write_edge_list,
    write_graph,
    write_graph6,
)


def test_read_edge_list_path(path3):
    """Test the path graph text decodes."""
    assert read_edge_list(b"3 2\n0 1\n1 2\n") == path3


def test_write_edge_list_triangle():
    """Test K3 encodes to its canonical text."""
    k3 = Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
    assert write_edge_list(k3) == b"3 3\n0 1\n0 2\n1 2\n"


def test_read_edge_list_accepts_any_order():
    """Test unsorted and reversed pairs are canonicalised."""
    g = read_edge_list(b"3 2\n2 1\n1 0\n")
    assert write_edge_list(g) == b"3 2\n0 1\n1 2\n"


@pytest.mark.parametrize(
    ("data", "line"),
    [
        (b"", 1),
        (b"3 x\n", 1),
        (b"3 2\n0 1\n", 3),
        (b"3 1\n0 1\n1 2\n", 3),
        (b"3 2\n0 1\n0 3\n", 3),
        (b"3 1\n1 1\n", 2),
        (b"3 2\n0 1\n1 0\n", 3),
    ],
)
def test_read_edge_list_errors_carry_line(data, line):
    """Test malformed edge lists report the offending line."""
    with pytest.raises(ParseError) as excinfo:
        read_edge_list(data)
    assert excinfo.value.line == line
    assert excinfo.value.message.startswith(f"line {line}: ")


def test_k5_graph6(k5):
    """Test K5 encodes as D~{ and back."""
    assert write_graph6(k5) == b"D~{\n"
    assert read_graph6(b"D~{") == k5


def test_graph6_path(path3):
    """Test the path on three vertices encodes column by column."""
    assert write_graph6(path3) == b"Bg\n"
    assert read_graph6(b"Bg") == path3


def test_graph6_header_tolerated(k5):
    """Test the optional >>graph6<< header."""
    assert read_graph6(b">>graph6<<D~{\n") == k5


@pytest.mark.parametrize("data", [b">>sparse6<<:Fa@x^", b":Fa@x^", b"&D~{"])
def test_graph6_unsupported_headers(data):
    """Test sparse6, digraph6 and foreign headers are refused."""
    with pytest.raises(UnsupportedHeader):
        read_graph6(data)


def test_graph6_bad_byte_offset():
    """Test a byte outside 63..126 reports its offset."""
    with pytest.raises(ParseError) as excinfo:
        read_graph6(b"D~ {")
    assert excinfo.value.offset == 2


def test_read_write_identity():
    """Test both formats reproduce random graphs exactly."""
    rng = np.random.default_rng(0)
    for seed in range(200):
        n = int(rng.integers(0, 30))
        g = random_graph(n, float(rng.random()), seed)
        for fmt in GraphFormat:
            assert read_graph(write_graph(g, fmt), fmt) == g


def test_guess_format():
    """Test graph6 is chosen by file suffix."""
    assert guess_format(Path("k5.g6")) is GraphFormat.GRAPH6
    assert guess_format(Path("k5.graph6")) is GraphFormat.GRAPH6
    assert guess_format(Path("k5.txt")) is GraphFormat.EDGE_LIST
