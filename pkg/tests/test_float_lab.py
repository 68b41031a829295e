import math
from fractions import Fraction

import numpy as np
import pytest

from ipjfact import float_lab as fl
from ipjfact import hankel_inverse as hi
from ipjfact.exact_matrix import IntegerMatrix, RationalMatrix, identity


def test_to_float_exact_cases():
    np.testing.assert_array_equal(fl.to_float(identity(2)), np.eye(2))
    assert fl.to_float(RationalMatrix([[Fraction(1, 2)]]))[0, 0] == 0.5


def test_to_float_rounds_to_nearest():
    x = fl.to_float(RationalMatrix([[Fraction(1, 3)]]))[0, 0]
    err = abs(Fraction(x) - Fraction(1, 3))
    half_ulp = Fraction(math.ulp(x)) / 2
    assert 0 < err <= half_ulp


def test_to_float_overflow():
    with pytest.raises(OverflowError):
        fl.to_float(IntegerMatrix([[10 ** 400]]))


def test_lu_inverse_identity_and_diag():
    np.testing.assert_array_equal(fl.lu_inverse(np.eye(3)), np.eye(3))
    np.testing.assert_array_equal(fl.lu_inverse(np.diag([2.0, 4.0])),
                                  np.diag([0.5, 0.25]))


def test_lu_inverse_h2():
    got = fl.lu_inverse(fl.to_float(hi.hankel(2)))
    np.testing.assert_allclose(got, [[-2, 6], [6, -12]], rtol=1e-12, atol=0)


def test_lu_inverse_singular():
    with pytest.raises(fl.NumericallySingularError):
        fl.lu_inverse(np.zeros((2, 2)))


def test_max_rel_error_zero_cases():
    i2 = identity(2)
    assert fl.max_rel_error(np.eye(2), i2) == 0.0
    dyadic = RationalMatrix([[Fraction(3, 8), -5], [Fraction(1, 1024), 7]])
    assert fl.max_rel_error(fl.to_float(dyadic), dyadic) == 0.0
    m = hi.inverse_closed_form(6)
    assert fl.max_rel_error(fl.to_float(m), m) == 0.0


def test_max_rel_error_metric():
    exact = RationalMatrix([[0, 100], [1, 2]])
    approx = np.array([[0.5, 101.0], [1.0, 2.0]])
    assert fl.max_rel_error(approx, exact) == 0.5
    approx = np.array([[0.0, 103.0], [1.0, 2.0]])
    assert fl.max_rel_error(approx, exact) == float(Fraction(3, 100))


def test_max_rel_error_non_finite_and_shape():
    assert fl.max_rel_error(np.array([[np.inf]]), identity(1)) == math.inf
    with pytest.raises(ValueError):
        fl.max_rel_error(np.eye(3), identity(2))


def test_lu_error_h3():
    err = fl.max_rel_error(fl.lu_inverse(fl.to_float(hi.hankel(3))),
                           hi.inverse_closed_form(3))
    assert 0 < err < 1e-10


@pytest.mark.parametrize("n, kappa", [(1, 1), (2, 27), (3, 1900)])
def test_cond_inf_exact(n, kappa):
    assert fl.cond_inf_exact(n) == kappa


def test_cond_inf_4_frozen():
    # ||H(4)|| = 1 + 1/2 + 1/6 + 1/24 = 41/24
    m4 = hi.inverse_closed_form(4)
    row_max = max(sum(abs(x) for x in row) for row in m4.rows)
    assert Fraction(41, 24) * row_max == fl.cond_inf_exact(4) == 276955


def test_cond_at_least_one():
    for n in range(1, 15):
        assert fl.cond_inf_exact(n) >= 1


def test_study_small():
    (r,) = fl.study(1)
    assert r == fl.ErrorReport(1, Fraction(1), 0.0, 0.0)
    assert [r.cond_inf for r in fl.study(3)] == [1, 27, 1900]


def test_study_monotone_and_deterministic():
    a = fl.study(8)
    assert [r.n for r in a] == list(range(1, 9))
    assert all(x.cond_inf < y.cond_inf for x, y in zip(a, a[1:]))
    assert a == fl.study(8)
    for r in a:
        assert r.lu_max_rel_err >= 0 and r.formula_max_rel_err >= 0


def test_lu_error_small_orders():
    for n in range(1, 5):
        err = fl.max_rel_error(fl.lu_inverse(fl.to_float(hi.hankel(n))),
                               hi.inverse_closed_form(n))
        assert err < 1e-8


def test_float_formula_matches_exact_small():
    for n in range(1, 6):
        got = fl.inverse_closed_form_float(n)
        np.testing.assert_array_equal(got, fl.to_float(hi.inverse_closed_form(n)))


def test_float_formula_overflow_flagged():
    # entries of the inverse leave the binary64 range from about n=77
    n = 80
    err = fl.max_rel_error(fl.inverse_closed_form_float(n), hi.inverse_closed_form(n))
    assert err == math.inf
