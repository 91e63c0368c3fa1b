from fractions import Fraction

import pytest

from dualhahn import verify
from dualhahn.m1hahn import M1HahnParams
from sweep import sweep


@pytest.mark.parametrize("params", sweep(seed=5, count=4, max_N=10))
def test_all_suites_exact_zero(params):
    for r in verify.verify_m1(params):
        assert r.ok and r.residual == 0, r


def test_float_mode_tolerance():
    params = M1HahnParams(1 / 3, 2 / 5, 6)
    results = verify.verify_m1(params, tol=1e-9)
    assert all(r.ok for r in results)
    assert {r.name for r in results if r.residual is None} >= {"dunkl-eigen", "leonard-pair"}


def test_closed_form_pole_is_a_named_failure():
    results = {r.name: r for r in verify.verify_m1(M1HahnParams(2, 3, 2))}
    assert not results["closed-form"].ok
    assert "DenominatorPole" in results["closed-form"].note
    assert results["orthogonality"].ok


def test_classical_suites():
    assert all(r.ok for r in verify.verify_classical(Fraction(1), Fraction(2), 3))
