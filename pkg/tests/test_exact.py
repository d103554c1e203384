from fractions import Fraction

import pytest

from grhpsi.exact import (
    RationalPoly, SingularMatrixError, SturmChain, certify_nonnegative_on_halfline,
    certify_positive_on_halfline, count_real_roots, poly_gcd, solve_linear_system,
    squarefree_decompose,
)


def test_arith_and_divmod():
    p = RationalPoly.from_roots([1, 2, Fraction(1, 3)])
    q = RationalPoly([-1, 1])
    quo, rem = divmod(p, q)
    assert rem.is_zero()
    assert quo * q == p
    assert p(Fraction(1, 3)) == 0
    assert p.derivative().degree == 2


def test_gcd():
    a = RationalPoly.from_roots([1, 2, 3])
    b = RationalPoly.from_roots([2, 3, 5])
    assert poly_gcd(a, b).monic() == RationalPoly.from_roots([2, 3])


def test_sturm_counts():
    p = RationalPoly.from_roots([-2, Fraction(1, 2), 3, 7])
    ch = SturmChain.build(p)
    assert count_real_roots(ch) == 4
    assert count_real_roots(ch, 0, 5) == 2
    # x^2 + 1 has no real roots
    assert count_real_roots(SturmChain.build(RationalPoly([1, 0, 1]))) == 0


def test_squarefree():
    p = RationalPoly.from_roots([1, 1, 1, 2])
    parts = squarefree_decompose(p)
    assert sorted(m for _, m in parts) == [1, 3]


def test_nonnegative_certificates():
    # (x - 1)^2 (x + 2): touches zero at 1, nonnegative on [0, inf)
    p = RationalPoly.from_roots([1, 1, -2])
    assert certify_nonnegative_on_halfline(p)
    assert not certify_positive_on_halfline(p)
    c = certify_nonnegative_on_halfline(RationalPoly.from_roots([1, 2]))
    assert not c
    assert c.witness is not None and RationalPoly.from_roots([1, 2])(c.witness) < 0


def test_negative_at_zero():
    assert not certify_nonnegative_on_halfline(RationalPoly([-1, 0, 1]))


def test_solve():
    x = solve_linear_system([[2, 1], [1, 3]], [3, 5])
    assert x == [Fraction(4, 5), Fraction(7, 5)]
    with pytest.raises(SingularMatrixError):
        solve_linear_system([[1, 2], [2, 4]], [1, 2])
