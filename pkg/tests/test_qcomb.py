"""Quantum integer combinatorics against frozen oracles."""

import pytest
from hypothesis import given, settings, strategies as st

from iqsl2.coeff import LaurentPoly, Scalar
from iqsl2.errors import NegativeInput, ZeroBase
from iqsl2.qcomb import qbinom, qfact, qint, qint_base

q = LaurentPoly.q


def test_qint_small_values():
    assert qint(0) == LaurentPoly.zero()
    assert qint(1) == LaurentPoly.one()
    assert qint(2) == q(1) + q(-1)
    assert qint(3) == q(2) + 1 + q(-2)
    assert str(qint(2)) == "q^-1 + q"


def test_qint_antisymmetry():
    for n in range(0, 9):
        assert qint(-n) == -qint(n)


def test_qint_defining_fraction():
    # [n] (q - q^-1) = q^n - q^-n
    for n in range(0, 12):
        assert qint(n) * (q(1) - q(-1)) == q(n) - q(-n)


def test_qint_base():
    assert qint_base(2, 2) == q(2) + q(-2)
    assert qint_base(3, 2) == q(4) + 1 + q(-4)
    assert qint_base(5, 1) == qint(5)
    assert qint_base(-3, 2) == -qint_base(3, 2)
    # base q^m comes from substituting q -> q^m
    for n in range(0, 7):
        for m in (1, 2, 3, -1, -2):
            expect = LaurentPoly({(m * i, 0): c for i, j, c in qint(n).terms()})
            assert qint_base(n, m) == expect
    with pytest.raises(ZeroBase):
        qint_base(3, 0)


def test_qfact():
    assert qfact(0) == LaurentPoly.one()
    assert qfact(1) == LaurentPoly.one()
    assert qfact(2) == q(1) + q(-1)
    assert qfact(3) == qint(2) * qint(3)
    assert qfact(6) == qint(2) * qint(3) * qint(4) * qint(5) * qint(6)
    with pytest.raises(NegativeInput):
        qfact(-1)


def test_qbinom_small_values():
    assert qbinom(0, 0) == LaurentPoly.one()
    assert qbinom(2, 1) == qint(2)
    assert qbinom(4, 2) == q(4) + q(2) + 2 + q(-2) + q(-4)
    assert str(qbinom(4, 2)) == "q^-4 + q^-2 + 2 + q^2 + q^4"


def test_qbinom_out_of_range_is_zero():
    assert qbinom(3, -1) == LaurentPoly.zero()
    assert qbinom(3, 4) == LaurentPoly.zero()
    assert qbinom(0, 1) == LaurentPoly.zero()
    with pytest.raises(NegativeInput):
        qbinom(-1, 0)


def test_qbinom_factorial_quotient():
    for m in range(0, 10):
        for n in range(0, m + 1):
            assert qbinom(m, n) * qfact(n) * qfact(m - n) == qfact(m)


def test_qbinom_symmetry_and_bar_invariance():
    for m in range(0, 10):
        for n in range(0, m + 1):
            b = qbinom(m, n)
            assert b == qbinom(m, m - n)
            # balanced form is invariant under q -> q^-1
            assert b.subst_q_inv() == b
            assert b.is_nonneg()


@given(st.integers(0, 14), st.integers(0, 14))
@settings(deadline=None)
def test_qbinom_pascal(m, n):
    # balanced Pascal rule: [m+1, n] = q^n [m, n] + q^{n-m-1} [m, n-1]
    lhs = qbinom(m + 1, n)
    if n > m + 1:
        assert lhs == LaurentPoly.zero()
        return
    rhs = qbinom(m, n).shift(n) + qbinom(m, n - 1).shift(n - m - 1)
    assert lhs == rhs


def test_integrality_of_quotients():
    # [m]! / ([n]! [m-n]!) flattens exactly as a Scalar too
    s = Scalar(qfact(7), qfact(3) * qfact(4))
    assert s.to_laurent() == qbinom(7, 3)
