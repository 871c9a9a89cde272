"""Tests for the identity registry, the moment oracle, and run_suite."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qeuler.euler import EulerCache, euler_number_q, euler_number_q_inverse
from qeuler.exactalg import RatFunc, XPoly, q, x
from qeuler.identities import (
    REGISTRY,
    IntegrandExpr,
    SideConditionError,
    default_ranges,
    moment_reduce,
    reflection_chain,
    run_suite,
    verify_identity,
)

ONE_MINUS_X = XPoly((1, -1))


# -- moment oracle -----------------------------------------------------


def test_moment_of_power_is_euler_number():
    for n in range(11):
        assert moment_reduce(IntegrandExpr(1, 0, x**n)) == euler_number_q(n)
        assert moment_reduce(IntegrandExpr(-1, 0, x**n)) == euler_number_q_inverse(n)


def test_moment_frozen_example():
    got = moment_reduce(IntegrandExpr(-1, 0, ONE_MINUS_X))
    assert got == (2 * q**2 + 4 * q) / (q + 1) ** 2


def test_moment_qshift_prefactor():
    base = moment_reduce(IntegrandExpr(-1, 0, ONE_MINUS_X))
    shifted = moment_reduce(IntegrandExpr(-1, 1, ONE_MINUS_X))
    assert shifted == q * base
    assert shifted == 2 * q + euler_number_q(1)


def test_moment_rejects_bad_integrands():
    with pytest.raises(ValueError):
        IntegrandExpr(0, 0, ONE_MINUS_X)
    with pytest.raises(ValueError):
        IntegrandExpr(2, 0, ONE_MINUS_X)
    with pytest.raises(TypeError):
        IntegrandExpr(1, 0, (1, -1))


small_fracs = st.fractions(min_value=-3, max_value=3, max_denominator=4)
xpolys = st.lists(small_fracs, min_size=0, max_size=4).map(
    lambda cs: XPoly(tuple(cs))
)


@settings(max_examples=40, deadline=None)
@given(a=xpolys, b=xpolys, c=small_fracs,
       qsign=st.sampled_from([1, -1]), qshift=st.integers(0, 3))
def test_moment_is_linear(a, b, c, qsign, qshift):
    def mom(poly):
        return moment_reduce(IntegrandExpr(qsign, qshift, poly))

    assert mom(a + b) == mom(a) + mom(b)
    assert mom(a * RatFunc(c)) == RatFunc(c) * mom(a)


# -- verify_identity ---------------------------------------------------


def test_verify_thm2_at_one():
    result = verify_identity("thm2_value_at_two", (1,))
    assert result.equal
    expected = (2 * q**2 + 4 * q) / (q + 1) ** 2
    assert result.lhs == expected
    assert result.rhs == expected
    assert result.difference == RatFunc(0)


def test_verify_thm1_at_zero():
    result = verify_identity("thm1_reflection", (0,))
    assert result.equal
    const = 2 * q / (q + 1)
    assert result.lhs.coeffs == (const,)
    assert result.rhs.coeffs == (const,)


def test_verify_thm4_base_case():
    result = verify_identity("thm4", (1, 0))
    assert result.equal
    assert result.lhs == 2 * q + euler_number_q(1)


def test_every_identity_verifies_at_a_small_point():
    points = {
        "eq2_symbolic": (0, 1),
        "eq9_frobenius": (0,),
        "thm1_reflection": (1,),
        "thm2_value_at_two": (1,),
        "thm3_integral": (1,),
        "eq14_bernstein_moment": (1, 0),
        "eq15_symmetry": (2, 1),
        "thm4": (2, 1),
        "cor5": (2, 1),
        "thm6": (2, 1, 1),
        "cor7": (2, 1, 1),
        "thm8": (2, 1, 2, 1),
        "cor9": (2, 1, 2, 1),
    }
    assert set(points) == set(REGISTRY)
    for tag, params in points.items():
        assert verify_identity(tag, params).equal, tag


def test_unknown_tag_lists_registry():
    with pytest.raises(ValueError, match="eq2_symbolic"):
        verify_identity("nope", (1,))


def test_parameter_validation():
    with pytest.raises(ValueError):
        verify_identity("thm2_value_at_two", (1, 2))
    with pytest.raises(ValueError):
        verify_identity("thm4", (3,))
    with pytest.raises(ValueError):
        verify_identity("thm4", (3, -1))
    with pytest.raises(ValueError):
        verify_identity("thm4", (3, True))
    with pytest.raises(ValueError):
        verify_identity("thm8", (3,))  # needs at least n_1 and k


def test_side_conditions_raise_their_own_error():
    violations = {
        "eq2_symbolic": (3, 0),
        "thm2_value_at_two": (0,),
        "thm3_integral": (0,),
        "eq14_bernstein_moment": (3, 3),
        "thm4": (3, 3),
        "cor5": (0, 0),
        "thm6": (1, 1, 1),
        "cor7": (2, 0, 1),
        "thm8": (2, 2, 2),
        "cor9": (1, 1, 1, 1),
    }
    for tag, params in violations.items():
        with pytest.raises(SideConditionError):
            verify_identity(tag, params)


def test_verification_result_json_shape():
    out = verify_identity("thm2_value_at_two", (2,)).to_json()
    assert set(out) == {"id", "params", "lhs", "rhs", "diff"}
    assert out["id"] == "thm2_value_at_two"
    assert out["params"] == [2]
    assert set(out["lhs"]) == {"num", "den"}
    assert all(set(c) == {"num", "den"} for c in out["lhs"]["num"])


def test_results_agree_under_rational_substitution():
    # secondary sanity check: structural equality implies equal values
    q0 = Fraction(3, 7)
    for tag, params in [("thm6", (3, 2, 1)), ("cor9", (2, 2, 1, 1)),
                        ("eq2_symbolic", (2, 2))]:
        result = verify_identity(tag, params)
        assert result.lhs(q0) == result.rhs(q0)


# -- the reflection chain ----------------------------------------------


def test_reflection_chain_agrees():
    for n in range(1, 7):
        a, b, c, d = reflection_chain(n)
        assert a == b == c == d


# -- default_ranges -----------------------------------------------------


def test_default_ranges_cover_registry():
    ranges = default_ranges()
    assert set(ranges) == set(REGISTRY)
    assert ranges["thm8"] == {"s": 3, "n": 4, "k": 4}
    assert ranges["eq2_symbolic"] == {"m": 6, "nshift": 4}


def test_default_ranges_overrides():
    ranges = default_ranges(ids=["thm6"], n_max=2, k_max=1)
    assert ranges == {"thm6": {"n": 2, "m": 6, "k": 1}}
    with pytest.raises(ValueError):
        default_ranges(ids=["bad_tag"])


# -- run_suite ----------------------------------------------------------


def test_suite_single_identity_counts():
    report = run_suite({"thm2_value_at_two": {"n": 1}})
    assert (report.cases, report.passed, report.failed) == (1, 1, 0)
    assert report.skipped == 1  # n = 0 violates the side condition
    assert report.case_log == [("thm2_value_at_two", (1,), "pass")]
    assert report.failures == []


def test_suite_empty_ranges():
    report = run_suite({})
    assert report.cases == 0
    assert report.skipped == 0
    assert report.to_json()["failures"] == []


def test_suite_rejects_unknown_tags():
    with pytest.raises(ValueError):
        run_suite({"not_a_tag": {"n": 2}})


def test_suite_is_deterministic():
    ranges = default_ranges(ids=["eq9_frobenius", "thm4"], n_max=4)
    first = run_suite(ranges).to_json()
    second = run_suite(ranges).to_json()
    assert first == second


def test_suite_exploratory_bucket():
    report = run_suite({"eq14_bernstein_moment": {"n": 3, "k": 3}})
    assert report.skipped == 4  # the k = n diagonal
    assert len(report.exploratory) == 4
    for record in report.exploratory:
        assert record.params[0] == record.params[1]
        assert record.computed
        # the formula happens to extend to the diagonal here
        assert record.equal is True
    assert report.cases == report.passed == 6


def test_suite_branch_notes():
    report = run_suite({"thm4": {"n": 4, "k": 4}})
    notes = report.branch_notes
    assert [note.params for note in notes] == [(n, 0) for n in range(1, 5)]
    assert all(note.coincide is False for note in notes)
    out = notes[0].to_json()
    assert set(out) == {"id", "params", "k0_matches_general_branch"}


def test_suite_cross_checks_gated_on_selection():
    chain = {"thm1_reflection": {"n": 3}, "thm2_value_at_two": {"n": 3},
             "thm3_integral": {"n": 3}}
    report = run_suite(chain)
    xtags = [tag for tag, _, _ in report.case_log if tag.startswith("xcheck")]
    assert xtags == ["xcheck_reflection_chain"] * 3

    partial = {"thm1_reflection": {"n": 3}, "thm2_value_at_two": {"n": 3}}
    report = run_suite(partial)
    assert not any(tag.startswith("xcheck") for tag, _, _ in report.case_log)

    report = run_suite(chain, cross_checks=False)
    assert not any(tag.startswith("xcheck") for tag, _, _ in report.case_log)


def test_suite_degeneration_cross_checks():
    ranges = default_ranges(ids=["thm8", "thm4", "thm6"], n_max=3, k_max=2,
                            s_max=2)
    report = run_suite(ranges)
    xtags = {tag for tag, _, _ in report.case_log if tag.startswith("xcheck")}
    assert xtags == {"xcheck_thm8_thm4", "xcheck_thm8_thm6"}
    assert report.failed == 0


def test_suite_exploratory_flag():
    report = run_suite({"thm2_value_at_two": {"n": 2}}, exploratory=False)
    assert report.skipped == 1
    assert report.exploratory == []


def test_suite_json_keys():
    report = run_suite({"eq9_frobenius": {"n": 2}})
    out = report.to_json()
    assert set(out) == {"cases", "passed", "failed", "skipped", "failures",
                        "exploratory", "branch_notes"}
