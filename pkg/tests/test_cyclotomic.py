import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hermatlas.cyclotomic import (CycMatrix, CycNum, cyc_conj, cyc_reduce, cyclotomic_polynomial, euler_phi,
                                  format_cyc, imag_unit, inverse, kernel_over_real_subfield, parse_cyc, rank,
                                  real_rows)
from hermatlas.errors import ConductorMismatchError, InvalidConductorError, NotRealCoefficientError

CONDUCTORS = [1, 2, 3, 4, 5, 6, 8, 10, 12, 20]
small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def cycnums(draw, conductor=None):
    n = conductor or draw(st.sampled_from(CONDUCTORS))
    return CycNum(n, draw(st.lists(small, min_size=euler_phi(n), max_size=euler_phi(n))))


@st.composite
def pairs(draw):
    n = draw(st.sampled_from(CONDUCTORS))
    return draw(cycnums(n)), draw(cycnums(n))


def test_reduce_examples():
    assert cyc_reduce(4, [0, 0, 1]) == -1
    assert cyc_reduce(4, [0, 0, 1]).coeffs == (Fraction(-1), Fraction(0))
    assert cyc_reduce(3, [0, 1, 1]) == -1
    assert cyc_reduce(5, [0, 0, 0, 0, 0, 1]) == 1


def test_reduce_rejects_zero_conductor():
    with pytest.raises(InvalidConductorError):
        cyc_reduce(0, [1])


@pytest.mark.parametrize("n", range(1, 31))
def test_cyclotomic_polynomial_degree_and_roots(n):
    phi = cyclotomic_polynomial(n)
    assert len(phi) - 1 == euler_phi(n)
    z = cmath.exp(2j * cmath.pi / n)
    assert abs(sum(c * z**k for k, c in enumerate(phi))) < 1e-9


def test_conj_examples():
    assert cyc_conj(CycNum.zeta(5)) == CycNum.zeta(5, 4)
    assert cyc_conj(CycNum.from_rational(7, -1)) == -1
    z = CycNum.zeta(3)
    assert cyc_conj(z) + z == -1


@given(pairs())
def test_conj_is_ring_automorphism(p):
    x, y = p
    assert cyc_conj(x * y) == cyc_conj(x) * cyc_conj(y)
    assert cyc_conj(x + y) == cyc_conj(x) + cyc_conj(y)
    assert cyc_conj(cyc_conj(x)) == x


@given(pairs())
def test_exact_agrees_with_float_embedding(p):
    x, y = p
    for val, ref in ((x * y, x.embed() * y.embed()), (x + y, x.embed() + y.embed())):
        assert abs(abs(val.embed()) - abs(ref)) < 1e-9


@given(cycnums())
def test_inverse(x):
    if x.is_zero():
        with pytest.raises(ZeroDivisionError):
            x.inverse()
    else:
        assert x * x.inverse() == 1


@given(cycnums())
def test_real_part_is_fixed_and_sign_matches(x):
    r = x + cyc_conj(x)
    assert r.is_real()
    if not r.is_zero():
        assert r.sign() == (1 if r.embed().real > 0 else -1)


@given(cycnums(), st.sampled_from([2, 3]))
def test_lift_preserves_value(x, mult):
    m = x.conductor * mult
    assert abs(x.lift(m).embed() - x.embed()) < 1e-9


@given(cycnums())
def test_format_parse_round_trip(x):
    assert parse_cyc(format_cyc(x), x.conductor) == x


def test_format_roots_of_unity():
    assert format_cyc(CycNum.zeta(4, 3)) == "z4^3"
    assert format_cyc(CycNum.zeta(12, 6)) == "-1"
    assert format_cyc(CycNum.zeta(12, 4)) == "z3"
    assert parse_cyc("i") == CycNum.zeta(4)
    assert parse_cyc("z3 + z3^2") == -1


def test_imag_unit_squares_to_minus_one():
    i = imag_unit(12)
    assert i * i == -1


def test_kernel_examples():
    n = 4
    zero = CycNum.from_rational(n, 0)
    one = CycNum.from_rational(n, 1)
    ker = kernel_over_real_subfield([(zero, zero, zero)], 3, n)
    assert ker.dimension == 3
    assert [[int(c) for c in v] for v in ker.rational_coordinates()] == [
        [1, 0, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0], [0, 0, 0, 0, 1, 0]]
    ker = kernel_over_real_subfield([(one, -one)], 2, n)
    assert ker.dimension == 1 and ker.vectors[0] == (one, one)


def test_kernel_rejects_complex_coefficients():
    with pytest.raises(NotRealCoefficientError):
        kernel_over_real_subfield([(CycNum.zeta(4),)], 1, 4)


@st.composite
def real_systems(draw):
    n = draw(st.sampled_from([4, 12]))
    rows, cols = draw(st.integers(1, 3)), draw(st.integers(1, 5))
    raw = [[draw(cycnums(n)) for _ in range(cols)] for _ in range(rows)]
    return n, cols, real_rows(raw, n)


@settings(max_examples=30)
@given(real_systems())
def test_kernel_annihilates_and_rank_nullity(sys):
    n, cols, rows = sys
    ker = kernel_over_real_subfield(rows, cols, n)
    for v in ker.vectors:
        for r in rows:
            acc = CycNum.from_rational(n, 0)
            for a, b in zip(r, v):
                acc = acc + a * b
            assert acc.is_zero()
    assert rank(rows, cols) + ker.dimension == cols
    assert rank(ker.vectors, cols) == ker.dimension


def test_matrix_basics():
    z = CycNum.zeta(4)
    A = CycMatrix.diag([z, z * z, CycNum.from_rational(4, 1)], 4)
    assert A.is_unitary() and A.is_diagonal()
    assert A.to_text() == "diag(z4,-1,1)"
    assert A @ A.H == CycMatrix.identity(3, 4)
    inv = inverse(A.rows, 4)
    assert CycMatrix(inv, 4) == A.H


def test_matrix_conductor_mismatch():
    with pytest.raises(ConductorMismatchError):
        CycMatrix([[CycNum.zeta(3), CycNum.zeta(4)]])
