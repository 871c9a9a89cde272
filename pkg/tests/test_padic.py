"""Tests for residue arithmetic and the truncated fermionic sums."""

from fractions import Fraction

import pytest

from qeuler.padic import (
    CALIBRATED_SLACK,
    NonUnitError,
    PAdic,
    calibrate_truncation_slack,
    fermionic_partial_sum,
    is_odd_prime,
    padic_from_rational,
    shift_identity_check_numeric,
    witt_convergence_check,
)


def test_is_odd_prime():
    assert [p for p in range(30) if is_odd_prime(p)] == [3, 5, 7, 11, 13, 17,
                                                         19, 23, 29]


def test_rational_embedding():
    assert padic_from_rational(Fraction(1, 2), 3, 2).residue == 5
    assert padic_from_rational(Fraction(2, 5), 3, 3).residue == 22
    assert padic_from_rational(Fraction(-8, 25), 3, 3).residue == 4
    with pytest.raises(NonUnitError):
        padic_from_rational(Fraction(1, 3), 3, 4)
    with pytest.raises(NonUnitError):
        padic_from_rational(Fraction(1, 10), 5, 2)


def test_padic_arithmetic():
    a = PAdic(3, 2, 5)
    b = PAdic(3, 2, 4)
    assert (a + b).residue == 0
    assert (a + b).valuation() == 2  # capped at M
    assert (a - b).residue == 1
    assert (a * b).residue == 20 % 9
    assert PAdic(3, 2, 3).valuation() == 1
    assert PAdic(3, 2, -1).residue == 8
    with pytest.raises(ValueError):
        a + PAdic(5, 2, 1)
    with pytest.raises(ValueError):
        a + PAdic(3, 3, 1)


def test_padic_json():
    assert PAdic(3, 3, 22).to_json() == {"p": 3, "M": 3, "residue": "22"}


def test_partial_sum_trivial_cases():
    # q0 = 1, n = 0: the alternating sum over an odd block is 1
    for N in range(1, 5):
        assert fermionic_partial_sum(0, 0, 1, 3, N, 4).residue == 1
    # 0 - 1 + 2 = 1
    assert fermionic_partial_sum(1, 0, 1, 3, 1, 4).residue == 1


def test_partial_sum_domain_errors():
    with pytest.raises(ValueError):
        fermionic_partial_sum(-1, 0, 4, 3, 1, 3)
    with pytest.raises(ValueError):
        fermionic_partial_sum(1, -1, 4, 3, 1, 3)
    with pytest.raises(ValueError):
        fermionic_partial_sum(1, 0, 4, 3, 0, 3)
    with pytest.raises(ValueError):
        fermionic_partial_sum(1, 0, 4, 4, 1, 3)  # composite p
    with pytest.raises(ValueError):
        fermionic_partial_sum(1, 0, 2, 3, 1, 3)  # q0 != 1 mod p
    with pytest.raises(ValueError):
        fermionic_partial_sum(1, 0, 4, 3, 1, 0)  # M < 1


def test_witt_report_frozen_values():
    report = witt_convergence_check(n=1, x0=0, p=3, q0=4, M=3, N_max=5)
    assert report.target == 4
    assert [e.N for e in report.entries] == [1, 2, 3, 4, 5]
    assert [e.valuation for e in report.entries] == [1, 2, 3, 3, 3]
    assert report.entries[2].partial_sum == 4
    assert report.monotone
    assert report.reached_at() == 3


def test_witt_report_degree_zero():
    report = witt_convergence_check(n=0, x0=0, p=3, q0=4, M=3, N_max=5)
    assert report.target == 22  # 2/5 embedded mod 27
    assert [e.valuation for e in report.entries] == [2, 3, 3, 3, 3]
    assert report.reached_at() == 2


def test_witt_report_other_prime():
    report = witt_convergence_check(n=1, x0=2, p=5, q0=6, M=2, N_max=3)
    assert report.monotone
    assert report.reached_at() is not None
    assert report.reached_at() <= 2 + CALIBRATED_SLACK


def test_witt_json_shape():
    report = witt_convergence_check(n=1, x0=0, p=3, q0=4, M=2, N_max=2)
    out = report.to_json()
    assert set(out) == {"p", "M", "q0", "n", "x0", "target", "rows"}
    assert out["p"] == 3 and out["M"] == 2 and out["q0"] == 4
    assert isinstance(out["target"], str)
    assert out["rows"] == [
        {"N": e.N, "S": str(e.partial_sum), "val": e.valuation}
        for e in report.entries
    ]


def test_witt_domain_errors():
    with pytest.raises(ValueError):
        witt_convergence_check(n=1, x0=0, p=4, q0=5, M=3, N_max=2)
    with pytest.raises(ValueError):
        witt_convergence_check(n=1, x0=0, p=3, q0=2, M=3, N_max=2)
    with pytest.raises(ValueError):
        witt_convergence_check(n=1, x0=0, p=3, q0=4, M=0, N_max=2)
    with pytest.raises(ValueError):
        witt_convergence_check(n=1, x0=0, p=3, q0=4, M=3, N_max=0)
    with pytest.raises(ValueError):
        witt_convergence_check(n=-1, x0=0, p=3, q0=4, M=3, N_max=2)


def test_shift_identity_numeric():
    for m in range(4):
        for nshift in (1, 2):
            result = shift_identity_check_numeric(m, nshift, q0=4, p=3,
                                                  N=4, M=6)
            assert result.identity == "eq2_shift_numeric"
            assert result.params == (m, nshift, 4, 3, 4, 6)
            assert result.valuation is not None
            # truncation error carries at least p^N
            assert result.valuation >= min(6, 4 - CALIBRATED_SLACK)
            assert result.equal == (result.valuation >= 6)
    out = result.to_json()
    assert set(out) == {"id", "params", "lhs", "rhs", "diff", "valuation"}


def test_shift_identity_numeric_exact_at_full_depth():
    result = shift_identity_check_numeric(2, 1, q0=4, p=3, N=4, M=3)
    assert result.equal
    assert result.valuation == 3


def test_shift_identity_domain_errors():
    with pytest.raises(ValueError):
        shift_identity_check_numeric(1, 0, q0=4, p=3, N=2, M=3)
    with pytest.raises(ValueError):
        shift_identity_check_numeric(-1, 1, q0=4, p=3, N=2, M=3)
    with pytest.raises(ValueError):
        shift_identity_check_numeric(1, 1, q0=5, p=3, N=2, M=3)


def test_calibration_reproduces_frozen_slack():
    assert calibrate_truncation_slack() == CALIBRATED_SLACK
