import random

import pytest

from cmreg.errors import ParseError
from cmreg.fields import GF
from cmreg.orders import GREVLEX, LEX
from cmreg.polynomials import PolyRing
from cmreg.sessions import SESSION_EXTENSION, parse_polynomial, parse_session

DEMO = """\
# a ring, two ideals, a forms list and a projection
ring p=7 vars=x,y,z order=grevlex

ideal conic = x*z - y^2
ideal square = x^2, y^2   # trailing comment
forms axes = x, z
projection down = conic : axes
"""


def test_parse_demo_session():
    sess = parse_session(DEMO)
    assert sess.ring.names == ("x", "y", "z")
    assert sess.ring.field.p == 7 and sess.ring.field.k == 1
    assert sess.ring.order.kind == GREVLEX
    assert set(sess.ideals) == {"conic", "square"}
    assert len(sess.ideals["square"]) == 2
    assert set(sess.forms) == {"axes"}
    assert sess.projections == {"down": ("conic", "axes")}
    x, y, z = sess.ring.variables()
    assert sess.ideals["conic"][0] == x * z - y * y


def test_ring_line_variants():
    sess = parse_session("ring p=5 ext=2 vars=a,b order=lex")
    assert sess.ring.field.k == 2 and sess.ring.field.p == 5
    assert sess.ring.order.kind == LEX
    # order defaults to grevlex
    assert parse_session("ring p=5 vars=a").ring.order.kind == GREVLEX


@pytest.mark.parametrize(
    "line,fragment",
    [
        ("ring vars=x,y", "missing 'p'"),
        ("ring p=7", "missing 'vars'"),
        ("ring p=7 p=11 vars=x", "duplicate ring setting"),
        ("ring p=6 vars=x", "not prime"),
        ("ring p=7 ext=9 vars=x", "extension degree"),
        ("ring p=7 vars=x,x", "duplicate variable names"),
        ("ring p=7 vars=x order=weird", "unknown order"),
        ("ring p=7 size=3 vars=x", "unknown ring setting"),
    ],
)
def test_ring_line_errors(line, fragment):
    with pytest.raises(ParseError) as exc:
        parse_session(line)
    assert fragment in str(exc.value)


def test_statement_structure_errors():
    with pytest.raises(ParseError, match="declares no ring"):
        parse_session("# only a comment\n")
    with pytest.raises(ParseError, match="must be declared before"):
        parse_session("ideal I = 1")
    with pytest.raises(ParseError, match="already declared"):
        parse_session("ring p=7 vars=x\nring p=11 vars=y")
    with pytest.raises(ParseError, match="already in use"):
        parse_session("ring p=7 vars=x\nideal I = x\nforms I = x")
    with pytest.raises(ParseError, match="unknown ideal"):
        parse_session("ring p=7 vars=x\nforms F = x\nprojection P = I : F")
    with pytest.raises(ParseError, match="unknown forms"):
        parse_session("ring p=7 vars=x\nideal I = x\nprojection P = I : F")
    with pytest.raises(ParseError, match="unknown statement"):
        parse_session("ring p=7 vars=x\nmodule M = x")


def test_polynomial_grammar():
    R = PolyRing(("x", "y"), field=GF(7))
    x, y = R.variables()
    assert parse_polynomial("x + 2*y", R) == x + y.scale(2)
    assert parse_polynomial("x^2*y", R) == x * x * y
    assert parse_polynomial("(x + y) * (x - y)", R) == x * x - y * y
    assert parse_polynomial("3", R) == R.constant(3)
    assert parse_polynomial("10", R) == R.constant(3)  # reduced mod 7
    assert parse_polynomial("x - x", R).is_zero()
    # subtraction is left-associative
    assert parse_polynomial("x - x - x", R) == -x


def test_implicit_multiplication_is_rejected():
    R = PolyRing(("x", "y"), field=GF(7))
    with pytest.raises(ParseError, match="implicit multiplication"):
        parse_polynomial("2x", R)
    with pytest.raises(ParseError):
        parse_polynomial("2 x", R)  # juxtaposition is not multiplication


def test_unary_minus_is_rejected():
    R = PolyRing(("x", "y"), field=GF(7))
    with pytest.raises(ParseError) as exc:
        parse_polynomial("-x", R)
    assert "'('" in str(exc.value)  # the expected-set mentions the factor forms
    # the subtrahend of a difference still needs a factor
    with pytest.raises(ParseError):
        parse_polynomial("x - -y", R)


def test_parse_errors_carry_position_and_expectations():
    R = PolyRing(("x", "y"), field=GF(7))
    with pytest.raises(ParseError) as exc:
        parse_polynomial("x^", R)
    err = exc.value
    assert err.line == 1
    assert err.column == 3
    assert "an integer" in err.expected
    assert "at line 1, column 3" in str(err)
    with pytest.raises(ParseError) as exc2:
        parse_polynomial("x + z", R)
    assert "unknown variable 'z'" in str(exc2.value)
    assert exc2.value.column == 5
    with pytest.raises(ParseError) as exc3:
        parse_session("ring p=7 vars=x\nideal I = x $ y")
    assert exc3.value.line == 2


def test_trailing_garbage_is_rejected():
    R = PolyRing(("x", "y"), field=GF(7))
    with pytest.raises(ParseError) as exc:
        parse_polynomial("x + y y", R)
    assert "end of line" in err_expected_text(exc.value)


def err_expected_text(err):
    return " ".join(err.expected) + " " + str(err)


def test_polynomial_round_trip_through_the_printer():
    rng = random.Random(2024)
    R = PolyRing(("x", "y", "z"), field=GF(101))
    from oracle import degree_monomials

    for _ in range(100):
        terms = {}
        for _ in range(rng.randrange(1, 7)):
            d = rng.randrange(0, 5)
            exps = random.Random(rng.random()).choice(degree_monomials(3, d))
            terms[exps] = rng.randrange(101)
        f = R.poly(terms)
        assert parse_polynomial(str(f), R) == f
    assert parse_polynomial(str(R.zero()), R).is_zero()


def test_session_extension_constant():
    assert SESSION_EXTENSION == ".reg"
