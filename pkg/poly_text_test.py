import pytest
from hypothesis import given, settings, strategies as st

from errors import ParseError
from poly_ring import PolyRing
from polynomial import Polynomial
from poly_text import (parse_polynomial, parse_polynomial_list, format_polynomial, format_monomial,
                       parse_header, parse_ideal_text, format_ideal_file, read_ideal_file)

RING = PolyRing(5, ["x", "y", "z"])
MATRIX_RING = PolyRing(3, ["x[1,1]", "x[1,2]", "u[1,1]", "aux[1]"], "lex")


def test_parse_simple_expressions():
    x, y, z = RING.gens()
    assert parse_polynomial(RING, "x^2 + 3*x*y - z") == x ** 2 + 3 * x * y - z
    assert parse_polynomial(RING, "2x y") == 2 * x * y
    assert parse_polynomial(RING, "-(x + y)^2") == -(x + y) ** 2
    assert parse_polynomial(RING, "7") == 2
    assert parse_polynomial(RING, "x - -y") == x + y


def test_parse_indexed_variables():
    f = parse_polynomial(MATRIX_RING, "x[1,1]*u[1,1] + x[1, 2]^2 + aux[1]")
    assert format_polynomial(f) == "x[1,1]*u[1,1] + x[1,2]^2 + aux[1]"


def test_printing_uses_symmetric_coefficients():
    x, y, _ = RING.gens()
    assert format_polynomial(4 * x + 3 * y + 1) == "-x - 2*y + 1"
    assert format_polynomial(RING.zero()) == "0"
    assert format_monomial(RING, (0, 0, 0)) == "1"
    assert format_monomial(RING, (2, 1, 0)) == "x^2*y"


def test_unknown_variable_reports_position():
    with pytest.raises(ParseError) as info:
        parse_polynomial(RING, "x + q")
    assert (info.value.line, info.value.column) == (1, 5)
    assert info.value.to_dict()["code"] == "E-PARSE"


@pytest.mark.parametrize("text", ["", "x +", "x^y", "(x + y", "x ** 2", "x $ y", "x^-1"])
def test_malformed_polynomials(text):
    with pytest.raises(ParseError):
        parse_polynomial(RING, text)


def test_polynomial_lists():
    assert parse_polynomial_list(RING, "") == []
    assert len(parse_polynomial_list(RING, "x, y,\n z")) == 3
    with pytest.raises(ParseError):
        parse_polynomial_list(RING, "x, , y")


def test_header():
    ring = parse_header("p=2; vars=x,y; order=lex")
    assert ring.p == 2
    assert [str(v) for v in ring.variables] == ["x", "y"]
    assert ring.default_order.kind == "lex"
    assert parse_header("p=3; vars=x[1,1],x[1,2]").default_order.kind == "grevlex"


@pytest.mark.parametrize("line, column", [
    ("p=4; vars=x", 1),
    ("p=two; vars=x", 1),
    ("p=2; vars=x; order=deglex", 14),
    ("p=2; vars=x,,y", 6),
    ("p=2 vars=x", 1),
])
def test_bad_headers(line, column):
    with pytest.raises(ParseError) as info:
        parse_header(line)
    assert info.value.column == column


def test_ideal_file_example():
    ring, gens = parse_ideal_text("p=2; vars=x,y; order=lex\nx^2, x*y+y^2\n")
    assert ring.p == 2
    assert [format_polynomial(g) for g in gens] == ["x^2", "x*y + y^2"]


def test_empty_body_is_the_zero_ideal():
    ring, gens = parse_ideal_text("p=3; vars=x\n")
    assert gens == []


def test_comments_and_body_positions():
    text = "# a comment\np=2; vars=x,y; order=lex\nx^2,\n  x*z\n"
    with pytest.raises(ParseError) as info:
        parse_ideal_text(text)
    assert (info.value.line, info.value.column) == (4, 5)


def test_missing_header():
    with pytest.raises(ParseError):
        parse_ideal_text("\n# nothing\n")


def test_read_ideal_file(tmp_path):
    path = tmp_path / "ideal.txt"
    path.write_text("p=2; vars=x,y; order=lex\nx^2,\nx*y+y^2\n", encoding="utf-8")
    ring, gens = read_ideal_file(str(path))
    assert len(gens) == 2


def ideals():
    rings = st.sampled_from([RING, MATRIX_RING, PolyRing(2, ["x[1]", "x[2]"], "lex")])

    def build(data):
        ring = data.draw(rings)
        monomial = st.tuples(*[st.integers(min_value=0, max_value=3)] * ring.nvars)
        poly = st.dictionaries(monomial, st.integers(min_value=1, max_value=ring.p - 1), min_size=1,
                               max_size=4).map(lambda t: Polynomial(ring, t))
        return ring, data.draw(st.lists(poly, max_size=4))
    return build


@settings(max_examples=50)
@given(st.data())
def test_print_parse_round_trip(data):
    ring, gens = ideals()(data)
    parsed_ring, parsed = parse_ideal_text(format_ideal_file(ring, gens))
    assert parsed_ring == ring
    assert parsed_ring.default_order.kind == ring.default_order.kind
    assert parsed == gens
    for g in gens:
        assert parse_polynomial(ring, format_polynomial(g)) == g
