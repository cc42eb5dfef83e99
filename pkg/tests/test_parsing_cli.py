import random
from fractions import Fraction

import pytest

from conftest import EXAMPLE_GRAPH_FILE
from pathalg.cli import main
from pathalg.errors import ParseError
from pathalg.iso import build_context, phi
from pathalg.algebra import Poly
from pathalg.matrix import format_matrix
from pathalg.parsing import (
    parse_coxeter_file,
    parse_expression,
    parse_fp_element,
    parse_graph_file,
    parse_matrix,
)
from pathalg.coxeter import INF
from pathalg.sampling import mixed_free_product, random_fp_element, random_instance, random_path_element

EDGE_T1 = "vertices 2\nedge a 1 2\npoly a -1 1\n"

EXAMPLE_COX = """\
# worked example
rank 5
m 1 2 3
m 1 4 4
m 2 3 5
m 3 4 6
m 3 5 5
m 4 5 inf
"""


def test_graph_file_examples():
    gf = parse_graph_file(EDGE_T1)
    assert gf.graph.vertex_count == 2 and gf.fam["a"] == Poly([-1, 1])
    gf = parse_graph_file("vertices 1\nedge l 1 1")
    assert gf.graph.edge_names == ["l"] and not gf.fam.y1 and not gf.has_polys
    gf = parse_graph_file(EXAMPLE_GRAPH_FILE)
    assert gf.graph.vertex_count == 5 and len(gf.fam.y1) == 5 and gf.root == 1
    assert gf.fam["eps"] == Poly([1, -3, 1])


@pytest.mark.parametrize(
    "text, line",
    [
        ("vertices 2\nedge a 1 2\nfoo 1\n", 3),
        ("vertices 2\nedge a 1\n", 2),
        ("vertices 2\nedge a 1 2\npoly a 0 1\n", None),
        ("vertices 2\nedge a 1 2\npoly b -1 1\n", 3),
        ("vertices x\n", 1),
        ("edge a 1 2\n", None),
        ("vertices 2\nedge a 1 2\npoly a 1/0 1\n", 3),
        ("vertices 2\nroot 3\nedge a 1 2\n", None),
        ("vertices 2\nedge a 1 2\npoly a -1 1\npoly a -2 1\n", 4),
    ],
)
def test_graph_file_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_graph_file(text)
    assert info.value.line == line
    if line:
        assert str(info.value).startswith(f"line {line}")


def test_coxeter_file():
    cm, root = parse_coxeter_file(EXAMPLE_COX)
    assert cm.rank == 5 and root == 1
    assert cm.m(4, 5) == INF and cm.m(1, 3) == 2 and cm.m(5, 3) == 5
    _, root = parse_coxeter_file("rank 2\nroot 2\nm 1 2 3")
    assert root == 2
    for bad in ["rank 2\nm 2 1 3", "rank 2\nm 1 2 1", "m 1 2 3", "rank 2\nm 1 2"]:
        with pytest.raises(ParseError):
            parse_coxeter_file(bad)


def test_expression_examples():
    g = parse_graph_file(EDGE_T1).graph
    x = parse_expression("2*a*~a - 1/2*v1 + (v2)", g)
    assert str(x) == "-1/2*v1 + v2 + 2*a*~a"
    assert parse_expression("-a", g) == parse_expression("0 - a", g)
    assert parse_expression("3", g) == parse_expression("3*v1 + 3*v2", g)
    assert parse_expression("~a*a*~a", g).terms


@pytest.mark.parametrize("text, pos", [("a +", 3), ("a * b", 4), ("v9", 0), ("(a", 2), ("a $", 2), ("~3", 1)])
def test_expression_errors(text, pos):
    g = parse_graph_file(EDGE_T1).graph
    with pytest.raises(ParseError) as info:
        parse_expression(text, g)
    assert info.value.pos == pos


def test_expression_round_trip():
    rng = random.Random(3)
    for _ in range(50):
        g, _ = random_instance(rng)
        x = random_path_element(g, rng, terms=4)
        assert parse_expression(str(x), g) == x


def test_fp_and_matrix_round_trip():
    ring = mixed_free_product()
    rng = random.Random(4)
    for _ in range(100):
        x = random_fp_element(ring, rng)
        assert parse_fp_element(str(x), ring) == x
    gf = parse_graph_file(EXAMPLE_GRAPH_FILE)
    ctx = build_context(gf.graph, gf.fam)
    for _ in range(30):
        m = phi(ctx, random_path_element(gf.graph, rng, terms=3, max_length=5))
        assert parse_matrix(format_matrix(m), ctx.ring) == m
    assert parse_fp_element("-2 + 1/3*z[b]^2", ring) == ring.scalar(-2) + ring.letter("z[b]", 2) * Fraction(1, 3)


# -- CLI ---------------------------------------------------------------------

@pytest.fixture
def files(tmp_path):
    out = {}
    for name, text in [("t1.txt", EDGE_T1), ("example.txt", EXAMPLE_GRAPH_FILE), ("example.cox", EXAMPLE_COX),
                       ("tri.txt", "vertices 3\nedge a 1 2\nedge b 2 3\nedge c 3 1\n"),
                       ("bad.txt", "vertices 2\nedge a 1 2\nbogus\n")]:
        p = tmp_path / name
        p.write_text(text)
        out[name] = str(p)
    return out


def test_cli_minpoly(capsys):
    assert main(["minpoly", "5"]) == 0
    assert capsys.readouterr().out.strip() == "t^2 - 3*t + 1"
    assert main(["minpoly", "2"]) == 3


def test_cli_equal(files, capsys):
    assert main(["equal", files["t1.txt"], "-a", "a*~a", "-b", "v1"]) == 0
    assert capsys.readouterr().out.strip() == "EQUAL"
    assert main(["equal", files["t1.txt"], "-a", "v1", "-b", "v2"]) == 2
    assert capsys.readouterr().out.strip() == "NOT-EQUAL"


def test_cli_phi_verify_describe(files, capsys):
    assert main(["phi", files["t1.txt"], "-e", "~a"]) == 0
    assert capsys.readouterr().out.strip() == "N=2\ne[2,1]: 1"
    assert main(["verify", files["example.txt"]]) == 0
    out = capsys.readouterr().out
    assert out.strip().endswith("RESULT ok") and out.count("PASS") == 7
    assert main(["describe-q", files["example.txt"]]) == 0
    out = capsys.readouterr().out
    assert "t[zeta]" in out and "u[eps]" in out and "w[delta]" in out


def test_cli_coxeter(files, capsys):
    assert main(["coxeter", files["example.cox"], "--describe-q"]) == 0
    out = capsys.readouterr().out
    assert out.count("K_5 ") == 2 and "RESULT" not in out
    assert main(["coxeter", files["example.cox"], "--verify"]) == 0
    assert capsys.readouterr().out.strip().endswith("RESULT ok")
    assert main(["coxeter", files["example.cox"], "--root", "3"]) == 0


def test_cli_cohn(files, capsys):
    assert main(["cohn", files["tri.txt"]]) == 0
    cap = capsys.readouterr()
    assert "Laurent factors = 1" in cap.out and cap.err == ""
    assert main(["cohn", files["t1.txt"]]) == 0
    assert "ignores 'poly'" in capsys.readouterr().err


def test_cli_input_errors(files, capsys):
    assert main(["verify", files["bad.txt"]]) == 3
    assert "line 3" in capsys.readouterr().err
    assert main(["verify", "/nonexistent/file"]) == 3
    assert main(["phi", files["t1.txt"], "-e", "a +"]) == 3
    assert main(["nosuch"]) == 3
    assert main([]) == 3
