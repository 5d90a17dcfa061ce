import pytest
from hypothesis import given, settings

from conftest import from_dense, small_graphs
from hgraph import ParseError, format_edgelist, parse_edgelist, parse_trace


def test_parse_with_comments_and_header():
    g = parse_edgelist("# a path\np 4 2\n0 1  # first\n\n1 2\n")
    assert g.n == 4 and g.edges() == [(0, 1), (1, 2)]
    assert g.degree(3) == 0


def test_parse_without_header():
    g = parse_edgelist("5 7\n7 9\n")
    assert sorted(g) == [5, 7, 9]


@pytest.mark.parametrize(
    "text, line",
    [
        ("0 1\n1 1\n", 2),
        ("0 1\n1 0\n", 2),
        ("0 x\n", 1),
        ("0 1 2\n", 1),
        ("p 3 1\n0 5\n", 2),
        ("p 3 2\n0 1\n", 1),
        ("0 1\np 3 1\n", 2),
        ("-1 2\n", 1),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as exc:
        parse_edgelist(text)
    assert exc.value.line == line


@settings(max_examples=50, deadline=None)
@given(small_graphs(max_n=9))
def test_round_trip(dg):
    g = from_dense(dg)
    h = parse_edgelist(format_edgelist(g))
    assert h.edges() == g.edges() and h.n == g.n


def test_trace_parse():
    ops = parse_trace("av 0\nav 1 0\n# c\nae 0 1\nq adj 0 1\nq census\nq cliques 3\nq verdict copwin\nre 0 1\nrv 1\n")
    assert [o.op for o in ops] == ["av", "av", "ae", "q adj", "q census", "q cliques", "q verdict", "re", "rv"]
    assert ops[1].args == (1, 0) and ops[2].line == 4


@pytest.mark.parametrize("text", ["zz 1\n", "rv\n", "ae 1\n", "q\n", "q verdict chordal\n", "q census 3\n", "av\n"])
def test_trace_errors(text):
    with pytest.raises(ParseError):
        parse_trace(text)
