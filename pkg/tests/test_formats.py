import numpy as np
import pytest

from multichains import (EdgeLabeling, boolean_lattice, format_labels,
                         format_poset, parse_labels, parse_poset, to_dot,
                         write_poset, read_poset)
from multichains.errors import CycleDetected, FormatError

from _corpus import diamond3, diamond3_el_labeling


def test_poset_round_trip_identity():
    for p in [diamond3(), boolean_lattice(3)]:
        text = format_poset(p)
        q = parse_poset(text)
        assert q.n == p.n
        assert q.covers == p.covers
        assert np.array_equal(q.leq, p.leq)
        assert q.labels == p.labels
        assert format_poset(q) == text


def test_poset_file_round_trip(tmp_path):
    path = tmp_path / "d.poset"
    write_poset(diamond3(), path)
    q = read_poset(path)
    assert q.covers == diamond3().covers


def test_parse_comments_blanks_and_labels():
    text = """
# a comment
5

0 1
0 2
0 3
1 4
2 4
3 4
label 0 bottom
label 4 top with spaces
"""
    p = parse_poset(text)
    assert p.n == 5
    assert p.labels[0] == "bottom"
    assert p.labels[4] == "top with spaces"
    assert p.labels[1] == "1"


def test_parse_errors():
    with pytest.raises(FormatError):
        parse_poset("")
    with pytest.raises(FormatError):
        parse_poset("x")
    with pytest.raises(FormatError):
        parse_poset("3\n0 9")
    with pytest.raises(FormatError):
        parse_poset("3\n0 1 2 3")
    with pytest.raises(FormatError):
        parse_poset("2\nlabel 5 z")
    with pytest.raises(CycleDetected):
        parse_poset("2\n0 1\n1 0")


def test_labels_round_trip():
    lab = diamond3_el_labeling()
    text = format_labels(lab)
    assert parse_labels(text) == lab
    wide = EdgeLabeling({(0, 1): (0, 2), (1, 2): (3, 0)})
    assert parse_labels(format_labels(wide)) == wide


def test_labels_parse_errors():
    with pytest.raises(FormatError):
        parse_labels("")
    with pytest.raises(FormatError):
        parse_labels("0 1 2\n0 1 3")
    with pytest.raises(FormatError):
        parse_labels("0 1 1,2\n1 2 3")
    with pytest.raises(FormatError):
        parse_labels("0 1\n")


def test_dot_export():
    p = diamond3()
    dot = to_dot(p, diamond3_el_labeling())
    assert dot.startswith("digraph poset {")
    assert "rankdir=BT;" in dot
    assert dot.count("->") == len(p.covers)
    assert '0 -> 1 [label="1"];' in dot
    assert '1 [label="a"];' in dot
    bare = to_dot(p)
    assert "[label=" in bare and "->" in bare
