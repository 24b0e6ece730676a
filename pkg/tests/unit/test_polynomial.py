import pytest

from herg.poly import ABVARS, RVARS, Poly, QuotientPoly, duality_subst, expand_x, normalize


def r(**exps: int) -> Poly:
    return Poly.monomial(RVARS, **exps)


def ab(**exps: int) -> Poly:
    return Poly.monomial(ABVARS, **exps)


def test_quotient_square():
    a, b = QuotientPoly.var(ABVARS, "a"), QuotientPoly.var(ABVARS, "b")
    square = (a + b) * (a + b)
    assert isinstance(square, QuotientPoly)
    assert square.to_string() == "a^2 + 3*a*b"


@pytest.mark.parametrize(
    "exps, expected",
    [((0, 3), (2, 1)), ((-1, 2), (0, 1)), ((3, 1), (3, 1)), ((0, 0), (0, 0))],
)
def test_quotient_reduction(exps, expected):
    assert QuotientPoly(ABVARS, {exps: 1}).terms == {expected: 1}


def test_quotient_rejects_other_variables():
    with pytest.raises(ValueError):
        QuotientPoly(RVARS, {})


def test_duality_substitution_of_monomial():
    assert duality_subst(r(xm1=1, z=2, s=2, t=2)) == ab(a=-1, b=2)
    assert duality_subst(r(xm1=1, z=2, s=2, t=2)).to_string() == "a^-1*b^2"


def test_w_cap():
    assert normalize(r(w=3, t=1)) == r(w=1, t=1)
    assert r(w=1) * r(w=1) == r(w=1)


@pytest.mark.parametrize(
    "poly, text",
    [
        (Poly(RVARS, {(1, 0, 2, 2, 0, 2): 1, (0, 0, 0, 0, 0, 0): 1}), "xm1*z^2*s^2*t^2 + 1"),
        (Poly(RVARS, {(0, 1, 0, 0, 0, 0): 1, (0, 0, 1, 1, 0, 2): 1}), "y + z*s*t^2"),
        (Poly(ABVARS, {(1, 0): 1, (0, 1): -2}), "a - 2*b"),
        (Poly(ABVARS, {(1, 0): -1, (0, 1): 1}), "-a + b"),
        (Poly(ABVARS, {(0, 0): -3}), "-3"),
        (Poly(ABVARS), "0"),
    ],
)
def test_to_string(poly, text):
    assert poly.to_string() == text


def test_arithmetic():
    a, b = ab(a=1), ab(b=1)
    assert a - a == 0
    assert 2 * a == a + a
    assert 1 - b == -(b - 1)
    assert a**-1 * a == 1
    assert (a + b) ** 0 == 1


def test_inverse_needs_monomial():
    with pytest.raises(ValueError):
        (ab(a=1) + 1) ** -1


def test_variable_mismatch():
    with pytest.raises(ValueError):
        ab(a=1) + r(y=1)


def test_expand_x():
    assert expand_x(r(xm1=1)).to_string() == "x - 1"
    assert expand_x(r(xm1=2, y=1)).to_string() == "x^2*y - 2*x*y + y"


def test_recast():
    p = Poly(("xm1", "a", "b"), {(0, 1, 1): 2})
    assert p.recast(ABVARS) == ab(coeff=2, a=1, b=1)
    with pytest.raises(ValueError):
        Poly(("xm1", "a", "b"), {(1, 0, 0): 1}).recast(ABVARS)
