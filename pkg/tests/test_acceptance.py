"""Acceptance checks, one per shipping criterion.

Each test prints a single CRITERION line so a log scan shows the
verdicts at a glance (run pytest with -s to see them on passing runs).
"""

import json
import time
from fractions import Fraction

from qeuler.bernstein import bernstein_basis, bernstein_operator
from qeuler.cli import main
from qeuler.euler import (
    MINUS_Q_INVERSE,
    classical_euler_number,
    euler_number_q,
    frobenius_euler,
)
from qeuler.exactalg import RatFunc, XPoly, binomial, q, x
from qeuler.identities import (
    IntegrandExpr,
    moment_reduce,
    reflection_chain,
    verify_identity,
)
from qeuler.padic import CALIBRATED_SLACK, witt_convergence_check


def _report(num: int, problems: list) -> None:
    status = "PASS" if not problems else "FAIL"
    print(f"CRITERION {num}: {status}")
    assert not problems, f"criterion {num}: " + "; ".join(problems)


def test_criterion_01_defining_recurrence():
    t0 = time.perf_counter()
    problems = []
    if euler_number_q(0) != 2 / (q + 1):
        problems.append("E_0 is not 2/(q+1)")
    for n in range(1, 11):
        closure = q * sum(
            (binomial(n, l) * euler_number_q(l) for l in range(n + 1)),
            RatFunc(0),
        ) + euler_number_q(n)
        if not closure.is_zero:
            problems.append(f"recurrence closure fails at n={n}")
    if q * euler_number_q(0) + euler_number_q(0) != RatFunc(2):
        problems.append("n=0 closure should equal 2")
    elapsed = time.perf_counter() - t0
    if elapsed >= 1.0:
        problems.append(f"took {elapsed:.2f}s, budget 1s")
    _report(1, problems)


def test_criterion_02_classical_specialization():
    problems = []
    frozen = [Fraction(v) for v in
              (1, "-1/2", 0, "1/4", 0, "-1/2", 0, "17/8", 0, "-31/2", 0)]
    for n in range(11):
        value = euler_number_q(n)(Fraction(1))
        if value != classical_euler_number(n):
            problems.append(f"q=1 value disagrees with recurrence at n={n}")
        if value != frozen[n]:
            problems.append(f"q=1 value disagrees with table at n={n}")
    _report(2, problems)


def test_criterion_03_frobenius_relation():
    problems = []
    for n in range(11):
        lhs = euler_number_q(n)
        rhs = (2 / (q + 1)) * frobenius_euler(n, MINUS_Q_INVERSE)
        if lhs != rhs:
            problems.append(f"mismatch at n={n}")
        if not verify_identity("eq9_frobenius", (n,)).equal:
            problems.append(f"registry check fails at n={n}")
    _report(3, problems)


def test_criterion_04_reflection():
    problems = []
    for n in range(9):
        if not verify_identity("thm1_reflection", (n,)).equal:
            problems.append(f"coefficientwise mismatch at n={n}")
    _report(4, problems)


def test_criterion_05_value_at_two():
    problems = []
    for n in range(1, 9):
        if not verify_identity("thm2_value_at_two", (n,)).equal:
            problems.append(f"closed form fails at n={n}")
        if not verify_identity("thm3_integral", (n,)).equal:
            problems.append(f"integral form fails at n={n}")
        a, b, c, d = reflection_chain(n)
        if not (a == b == c == d):
            problems.append(f"chain of four expressions splits at n={n}")
    _report(5, problems)


def test_criterion_06_single_basis_moments():
    problems = []
    for n in range(9):
        for k in range(n):
            for tag in ("eq14_bernstein_moment", "thm4", "cor5"):
                result = verify_identity(tag, (n, k))
                if not result.equal:
                    problems.append(f"{tag} fails at (n,k)=({n},{k})")
    # the oracle side really is the reduced integral
    probe = moment_reduce(IntegrandExpr(1, 0, bernstein_basis(2, 5)))
    if verify_identity("eq14_bernstein_moment", (5, 2)).lhs != probe:
        problems.append("left side is not the reduced Bernstein moment")
    _report(6, problems)


def test_criterion_07_two_factor_products():
    problems = []
    for n in range(7):
        for m in range(7):
            for k in range(min(n, m) + 1):
                if n + m <= 2 * k:
                    continue
                for tag in ("thm6", "cor7"):
                    if not verify_identity(tag, (n, m, k)).equal:
                        problems.append(f"{tag} fails at {(n, m, k)}")
    _report(7, problems)


def test_criterion_08_multi_factor_products():
    from itertools import product as iproduct

    problems = []
    for s in (1, 2, 3):
        for ns in iproduct(range(5), repeat=s):
            for k in range(min(ns) + 1):
                if sum(ns) <= s * k:
                    continue
                params = ns + (k,)
                for tag in ("thm8", "cor9"):
                    if not verify_identity(tag, params).equal:
                        problems.append(f"{tag} fails at {params}")
    # structural degenerations onto the one- and two-factor forms
    for n in range(1, 5):
        for k in range(n):
            r8 = verify_identity("thm8", (n, k))
            r4 = verify_identity("thm4", (n, k))
            if r8.lhs != r4.lhs or r8.rhs != r4.rhs:
                problems.append(f"s=1 does not degenerate at {(n, k)}")
    for n in range(5):
        for m in range(5):
            for k in range(min(n, m) + 1):
                if n + m <= 2 * k:
                    continue
                r8 = verify_identity("thm8", (n, m, k))
                r6 = verify_identity("thm6", (n, m, k))
                if r8.lhs != r6.lhs or r8.rhs != r6.rhs:
                    problems.append(f"s=2 does not degenerate at {(n, m, k)}")
    _report(8, problems)


def test_criterion_09_shift_identity_symbolic():
    problems = []
    for m in range(7):
        for nshift in range(1, 5):
            if not verify_identity("eq2_symbolic", (m, nshift)).equal:
                problems.append(f"fails at (m, nshift)=({m},{nshift})")
    _report(9, problems)


def test_criterion_10_bernstein_structure():
    problems = []
    one = XPoly((1,))
    for n in range(11):
        total = XPoly()
        for k in range(n + 1):
            basis = bernstein_basis(k, n)
            total = total + basis
            mirrored = bernstein_basis(n - k, n).compose_affine(-1, 1)
            if basis != mirrored:
                problems.append(f"symmetry fails at (k,n)=({k},{n})")
            if not verify_identity("eq15_symmetry", (n, k)).equal:
                problems.append(f"registry symmetry fails at (n,k)=({n},{k})")
        if total != one:
            problems.append(f"partition of unity fails at n={n}")
    for n in range(1, 7):
        constant = bernstein_operator([Fraction(7, 3)] * (n + 1), n)
        if constant != XPoly((Fraction(7, 3),)):
            problems.append(f"operator breaks constants at n={n}")
        linear = bernstein_operator([Fraction(k, n) for k in range(n + 1)], n)
        if linear != x:
            problems.append(f"operator breaks the identity map at n={n}")
    _report(10, problems)


def test_criterion_11_padic_convergence():
    t0 = time.perf_counter()
    problems = []
    M = 3
    for p in (3, 5, 7):
        q0 = 1 + p
        for n in range(5):
            for x0 in (0, 1, 2):
                report = witt_convergence_check(n=n, x0=x0, p=p, q0=q0,
                                                M=M, N_max=6)
                where = f"(p={p}, n={n}, x0={x0})"
                if not report.monotone:
                    problems.append(f"valuations not monotone at {where}")
                reached = report.reached_at()
                if reached is None or reached > M + CALIBRATED_SLACK:
                    problems.append(f"precision not reached in time at {where}")
    elapsed = time.perf_counter() - t0
    if elapsed >= 60.0:
        problems.append(f"took {elapsed:.1f}s, budget 60s")
    _report(11, problems)


def test_criterion_12_full_suite_via_cli(tmp_path, capsys):
    t0 = time.perf_counter()
    problems = []
    out_path = tmp_path / "suite.json"
    code = main(["verify", "--all", "--out", str(out_path)])
    capsys.readouterr()
    if code != 0:
        problems.append(f"exit code {code}")
    report = json.loads(out_path.read_text())
    if report["failed"] != 0 or report["failures"]:
        problems.append(f"{report['failed']} failing cases")
    if report["cases"] < 1000:
        problems.append(f"suspiciously few cases ran: {report['cases']}")
    elapsed = time.perf_counter() - t0
    if elapsed >= 120.0:
        problems.append(f"took {elapsed:.1f}s, budget 120s")
    _report(12, problems)
