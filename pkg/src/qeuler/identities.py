"""Symbolic identity verifier over Q(q).

Every integral handled here is of an integrand q^(qshift) * q^(qsign*x)
* P(x) against the alternating (fermionic) measure, with P a polynomial
in x over Q(q).  ``moment_reduce`` reduces such an integral termwise by
the moment rule

    integral of q^x  * x^j   ->  E_j(q)
    integral of q^-x * x^j   ->  E_j(1/q)

with ambient Q(q) coefficients passing through untouched and the
prefactor contributing q^qshift.  That reduction is the single oracle:
each registry identity states a closed form for some such integral (or
a relation between two reduced expressions), and verification computes
the oracle side and the closed form independently, comparing canonical
forms structurally.  No registry entry's closed-form formula is used to
compute any left-hand side.

Registry tags are opaque keys fixed by the external interface:
eq2_symbolic, eq9_frobenius, thm1_reflection, thm2_value_at_two,
thm3_integral, eq14_bernstein_moment, eq15_symmetry, thm4, cor5, thm6,
cor7, thm8, cor9.  Each entry's docstring below states exactly what it
asserts.

``run_suite`` enumerates each selected identity over its parameter
bounds.  Tuples violating an identity's side condition are counted as
skipped (never failed) and are additionally re-evaluated into an
"exploratory" bucket that is reported but never asserted.  For the
piecewise identities, the k = 0 cases also record informationally
whether the general k > 0 formula would have produced the same value
(it does not, in general).  Cross-checks between identities (tags
xcheck_*) run when every identity they relate is selected.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Iterator, Mapping, Sequence

from .bernstein import bernstein_basis
from .euler import (
    MINUS_Q_INVERSE,
    EulerCache,
    euler_number_q,
    euler_number_q_inverse,
    euler_poly_q,
    frobenius_euler,
)
from .exactalg import RatFunc, XPoly, binomial, q, rational_to_json, x

__all__ = [
    "SideConditionError",
    "IntegrandExpr",
    "moment_reduce",
    "VerificationResult",
    "Identity",
    "REGISTRY",
    "verify_identity",
    "default_ranges",
    "run_suite",
    "SuiteReport",
    "ExploratoryRecord",
    "BranchNote",
]


class SideConditionError(ValueError):
    """Parameters violate an identity's side condition (not a failure)."""


@dataclass(frozen=True)
class IntegrandExpr:
    """Integrand q^qshift * q^(qsign*x) * poly(x) with qsign in {+1, -1}."""

    qsign: int
    qshift: int
    poly: XPoly

    def __post_init__(self):
        if self.qsign not in (1, -1):
            raise ValueError(f"qsign must be +1 or -1, got {self.qsign}")
        if not isinstance(self.poly, XPoly):
            raise TypeError("poly must be an XPoly")


def moment_reduce(expr: IntegrandExpr, cache: EulerCache | None = None) -> RatFunc:
    """Alternating-measure integral of the integrand, reduced termwise.

    Linear in the polynomial part; the result is exact in Q(q).
    """
    if expr.qsign == 1:
        moment: Callable[[int], RatFunc] = lambda j: euler_number_q(j, cache)
    else:
        moment = lambda j: euler_number_q_inverse(j, cache)
    acc = RatFunc(0)
    for j, c in enumerate(expr.poly.coeffs):
        if not c.is_zero:
            acc = acc + c * moment(j)
    return q**expr.qshift * acc


def _value_to_json(value: object) -> object:
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, Fraction):
        return rational_to_json(value)
    if isinstance(value, int):
        return str(value)
    raise TypeError(f"cannot serialize {value!r}")


@dataclass(frozen=True)
class VerificationResult:
    """Outcome of one identity check: both sides, their difference, equality.

    ``equal`` is True exactly when ``difference`` is zero.  For numeric
    (residue-based) checks, ``valuation`` carries the p-adic valuation
    of the difference, capped at the working precision.
    """

    identity: str
    params: tuple[int, ...]
    lhs: object
    rhs: object
    equal: bool
    difference: object
    valuation: int | None = None

    def to_json(self) -> dict:
        out = {
            "id": self.identity,
            "params": list(self.params),
            "lhs": _value_to_json(self.lhs),
            "rhs": _value_to_json(self.rhs),
            "diff": _value_to_json(self.difference),
        }
        if self.valuation is not None:
            out["valuation"] = self.valuation
        return out


# -- identity registry -------------------------------------------------------

Params = tuple[int, ...]
Bounds = Mapping[str, int]


@dataclass(frozen=True)
class Identity:
    """One verifiable identity: side condition, both sides, enumeration.

    ``bounds`` lists (bound name, CLI flag it answers to, default value);
    ``enumerate_params`` yields the raw grid for given bounds, including
    tuples that violate the side condition (the caller skips those).
    ``alt_branch``, when set, evaluates the k > 0 closed form at a k = 0
    tuple for the informational branch comparison.
    """

    tag: str
    kind: str  # "ratfunc" or "xpoly"
    description: str
    arity: int  # minimum tuple length; variadic when variadic=True
    variadic: bool
    bounds: tuple[tuple[str, str, int], ...]
    admissible: Callable[[Params], bool]
    lhs: Callable[[Params, EulerCache | None], object]
    rhs: Callable[[Params, EulerCache | None], object]
    enumerate_params: Callable[[Bounds], Iterator[Params]]
    alt_branch: Callable[[Params, EulerCache | None], object] | None = None


def _check_params(identity: Identity, params: Params) -> Params:
    params = tuple(params)
    if identity.variadic:
        if len(params) < identity.arity:
            raise ValueError(
                f"{identity.tag} needs at least {identity.arity} parameters"
            )
    elif len(params) != identity.arity:
        raise ValueError(f"{identity.tag} takes exactly {identity.arity} parameters")
    for p in params:
        if not isinstance(p, int) or isinstance(p, bool):
            raise ValueError(f"{identity.tag} parameters must be integers")
        if p < 0:
            raise ValueError(f"{identity.tag} parameters must be nonnegative")
    return params


# enumeration helpers; each yields the raw grid for the given bounds

def _enum_single_n(bounds: Bounds) -> Iterator[Params]:
    for n in range(bounds["n"] + 1):
        yield (n,)


def _enum_pairs_k_up_to_n(bounds: Bounds) -> Iterator[Params]:
    for n in range(bounds["n"] + 1):
        for k in range(min(n, bounds["k"]) + 1):
            yield (n, k)


def _enum_eq2(bounds: Bounds) -> Iterator[Params]:
    for m in range(bounds["m"] + 1):
        for nshift in range(bounds["nshift"] + 1):
            yield (m, nshift)


def _enum_two_degrees(bounds: Bounds) -> Iterator[Params]:
    for n in range(bounds["n"] + 1):
        for m in range(bounds["m"] + 1):
            for k in range(min(n, m, bounds["k"]) + 1):
                yield (n, m, k)


def _enum_multi_degrees(bounds: Bounds) -> Iterator[Params]:
    for s in range(1, bounds["s"] + 1):
        for ns in product(range(bounds["n"] + 1), repeat=s):
            for k in range(min(min(ns), bounds["k"]) + 1):
                yield ns + (k,)


# closed-form helpers

def _one_minus_x_power(n: int) -> XPoly:
    return XPoly((1, -1)) ** n


def _x_plus_constant_power(c: int, n: int) -> XPoly:
    return XPoly((c, 1)) ** n


def _basis_product(ns: Sequence[int], k: int) -> XPoly:
    poly = XPoly((1,))
    for n in ns:
        poly = poly * bernstein_basis(k, n)
    return poly


# eq2_symbolic: shifting the integration variable of q^x x^m by nshift

def _eq2_lhs(params: Params, cache: EulerCache | None) -> RatFunc:
    m, nshift = params
    return moment_reduce(
        IntegrandExpr(1, nshift, _x_plus_constant_power(nshift, m)), cache
    )


def _eq2_rhs(params: Params, cache: EulerCache | None) -> RatFunc:
    m, nshift = params
    acc = RatFunc((-1) ** nshift) * euler_number_q(m, cache)
    boundary = RatFunc(0)
    for l in range(nshift):
        boundary = boundary + RatFunc((-1) ** (nshift - 1 - l) * l**m) * q**l
    return acc + 2 * boundary


# eq9_frobenius: E_n(q) = (2/(1+q)) H_n(-1/q)

def _eq9_lhs(params: Params, cache: EulerCache | None) -> RatFunc:
    (n,) = params
    return euler_number_q(n, cache)


def _eq9_rhs(params: Params, cache: EulerCache | None) -> RatFunc:
    (n,) = params
    return (2 / (1 + q)) * frobenius_euler(n, MINUS_Q_INVERSE, cache)


# thm1_reflection: (-1)^n E_n(x, 1/q) = q E_n(1-x, q), coefficientwise

def _thm1_lhs(params: Params, cache: EulerCache | None) -> XPoly:
    (n,) = params
    return euler_poly_q(n, cache).invert_q() * RatFunc((-1) ** n)


def _thm1_rhs(params: Params, cache: EulerCache | None) -> XPoly:
    (n,) = params
    return euler_poly_q(n, cache).compose_affine(-1, 1) * q


# thm2_value_at_two: q E_n(2, q) = 2 + (1/q) E_n(q) for n >= 1

def _thm2_lhs(params: Params, cache: EulerCache | None) -> RatFunc:
    (n,) = params
    return moment_reduce(IntegrandExpr(1, 1, _x_plus_constant_power(2, n)), cache)


def _thm2_rhs(params: Params, cache: EulerCache | None) -> RatFunc:
    (n,) = params
    return 2 + (1 / q) * euler_number_q(n, cache)


# thm3_integral: integral of q^-x (1-x)^n equals 2 + (1/q) * integral of q^x x^n

def _thm3_lhs(params: Params, cache: EulerCache | None) -> RatFunc:
    (n,) = params
    return moment_reduce(IntegrandExpr(-1, 0, _one_minus_x_power(n)), cache)


def _thm3_rhs(params: Params, cache: EulerCache | None) -> RatFunc:
    (n,) = params
    return 2 + (1 / q) * euler_number_q(n, cache)


# eq14_bernstein_moment: integral of q^x B_{k,n} in terms of E_{k+j}(q)

def _eq14_lhs(params: Params, cache: EulerCache | None) -> RatFunc:
    n, k = params
    return moment_reduce(IntegrandExpr(1, 0, bernstein_basis(k, n)), cache)


def _eq14_rhs(params: Params, cache: EulerCache | None) -> RatFunc:
    n, k = params
    acc = RatFunc(0)
    for j in range(n - k + 1):
        acc = acc + binomial(n - k, j) * (-1) ** j * euler_number_q(k + j, cache)
    return binomial(n, k) * acc


# eq15_symmetry: B_{k,n}(x) = B_{n-k,n}(1-x)

def _eq15_lhs(params: Params, cache: EulerCache | None) -> XPoly:
    n, k = params
    return bernstein_basis(k, n)


def _eq15_rhs(params: Params, cache: EulerCache | None) -> XPoly:
    n, k = params
    return bernstein_basis(n - k, n).compose_affine(-1, 1)


# thm4: integral of q^(1-x) B_{k,n}, piecewise in k, for n > k

def _thm4_lhs(params: Params, cache: EulerCache | None) -> RatFunc:
    n, k = params
    return moment_reduce(IntegrandExpr(-1, 1, bernstein_basis(k, n)), cache)


def _thm4_rhs_general(n: int, k: int, cache: EulerCache | None) -> RatFunc:
    acc = RatFunc(0)
    for j in range(k + 1):
        acc = acc + binomial(k, j) * (-1) ** (k - j) * euler_number_q(n - j, cache)
    return binomial(n, k) * acc


def _thm4_rhs(params: Params, cache: EulerCache | None) -> RatFunc:
    n, k = params
    if k == 0:
        return 2 * q + euler_number_q(n, cache)
    return _thm4_rhs_general(n, k, cache)


def _thm4_alt(params: Params, cache: EulerCache | None) -> RatFunc:
    n, k = params
    return _thm4_rhs_general(n, k, cache)


# cor5: the q -> 1/q image of eq14 against thm4, piecewise in k, for n > k

def _cor5_lhs(params: Params, cache: EulerCache | None) -> RatFunc:
    n, k = params
    acc = RatFunc(0)
    for j in range(n - k + 1):
        acc = acc + binomial(n - k, j) * (-1) ** j * euler_number_q_inverse(
            k + j, cache
        )
    return acc


def _cor5_rhs_general(n: int, k: int, cache: EulerCache | None) -> RatFunc:
    acc = RatFunc(0)
    for j in range(k + 1):
        acc = acc + binomial(k, j) * (-1) ** (k - j) * euler_number_q(n - j, cache)
    return (1 / q) * acc


def _cor5_rhs(params: Params, cache: EulerCache | None) -> RatFunc:
    n, k = params
    if k == 0:
        return 2 + (1 / q) * euler_number_q(n, cache)
    return _cor5_rhs_general(n, k, cache)


def _cor5_alt(params: Params, cache: EulerCache | None) -> RatFunc:
    n, k = params
    return _cor5_rhs_general(n, k, cache)


# thm6: integral of q^(1-x) B_{k,n} B_{k,m}, piecewise in k, for n + m > 2k

def _thm6_lhs(params: Params, cache: EulerCache | None) -> RatFunc:
    n, m, k = params
    return moment_reduce(
        IntegrandExpr(-1, 1, bernstein_basis(k, n) * bernstein_basis(k, m)), cache
    )


def _thm6_rhs_general(n: int, m: int, k: int, cache: EulerCache | None) -> RatFunc:
    acc = RatFunc(0)
    for j in range(2 * k + 1):
        acc = acc + binomial(2 * k, j) * (-1) ** (j + 2 * k) * euler_number_q(
            n + m - j, cache
        )
    return binomial(n, k) * binomial(m, k) * acc


def _thm6_rhs(params: Params, cache: EulerCache | None) -> RatFunc:
    n, m, k = params
    if k == 0:
        return 2 * q + euler_number_q(n + m, cache)
    return _thm6_rhs_general(n, m, k, cache)


def _thm6_alt(params: Params, cache: EulerCache | None) -> RatFunc:
    n, m, k = params
    return _thm6_rhs_general(n, m, k, cache)


# cor7: alternating sum of E_{j+2k}(1/q) against thm6, for n + m > 2k

def _cor7_lhs(params: Params, cache: EulerCache | None) -> RatFunc:
    n, m, k = params
    acc = RatFunc(0)
    for j in range(n + m - 2 * k + 1):
        acc = acc + binomial(n + m - 2 * k, j) * (-1) ** j * euler_number_q_inverse(
            j + 2 * k, cache
        )
    return acc


def _cor7_rhs_general(n: int, m: int, k: int, cache: EulerCache | None) -> RatFunc:
    acc = RatFunc(0)
    for j in range(2 * k + 1):
        acc = acc + binomial(2 * k, j) * (-1) ** (j + 2 * k) * euler_number_q(
            n + m - j, cache
        )
    return (1 / q) * acc


def _cor7_rhs(params: Params, cache: EulerCache | None) -> RatFunc:
    n, m, k = params
    if k == 0:
        return 2 + (1 / q) * euler_number_q(n + m, cache)
    return _cor7_rhs_general(n, m, k, cache)


def _cor7_alt(params: Params, cache: EulerCache | None) -> RatFunc:
    n, m, k = params
    return _cor7_rhs_general(n, m, k, cache)


# thm8: integral of q^(1-x) * product of s Bernstein factors, sum n_i > s k

def _thm8_split(params: Params) -> tuple[tuple[int, ...], int]:
    return params[:-1], params[-1]


def _thm8_lhs(params: Params, cache: EulerCache | None) -> RatFunc:
    ns, k = _thm8_split(params)
    return moment_reduce(IntegrandExpr(-1, 1, _basis_product(ns, k)), cache)


def _thm8_rhs_general(
    ns: Sequence[int], k: int, cache: EulerCache | None
) -> RatFunc:
    s = len(ns)
    total = sum(ns)
    acc = RatFunc(0)
    for j in range(s * k + 1):
        acc = acc + binomial(s * k, j) * (-1) ** (s * k + j) * euler_number_q(
            total - j, cache
        )
    lead = 1
    for n in ns:
        lead *= binomial(n, k)
    return lead * acc


def _thm8_rhs(params: Params, cache: EulerCache | None) -> RatFunc:
    ns, k = _thm8_split(params)
    if k == 0:
        return 2 * q + euler_number_q(sum(ns), cache)
    return _thm8_rhs_general(ns, k, cache)


def _thm8_alt(params: Params, cache: EulerCache | None) -> RatFunc:
    ns, k = _thm8_split(params)
    return _thm8_rhs_general(ns, k, cache)


# cor9: alternating sum of E_{j+sk}(1/q) against thm8, sum n_i > s k

def _cor9_lhs(params: Params, cache: EulerCache | None) -> RatFunc:
    ns, k = _thm8_split(params)
    s = len(ns)
    total = sum(ns)
    acc = RatFunc(0)
    for j in range(total - s * k + 1):
        acc = acc + binomial(total - s * k, j) * (-1) ** j * euler_number_q_inverse(
            j + s * k, cache
        )
    return acc


def _cor9_rhs_general(
    ns: Sequence[int], k: int, cache: EulerCache | None
) -> RatFunc:
    s = len(ns)
    total = sum(ns)
    acc = RatFunc(0)
    for j in range(s * k + 1):
        acc = acc + binomial(s * k, j) * (-1) ** (s * k + j) * euler_number_q(
            total - j, cache
        )
    return (1 / q) * acc


def _cor9_rhs(params: Params, cache: EulerCache | None) -> RatFunc:
    ns, k = _thm8_split(params)
    if k == 0:
        return 2 + (1 / q) * euler_number_q(sum(ns), cache)
    return _cor9_rhs_general(ns, k, cache)


def _cor9_alt(params: Params, cache: EulerCache | None) -> RatFunc:
    ns, k = _thm8_split(params)
    return _cor9_rhs_general(ns, k, cache)


def _always(params: Params) -> bool:
    return True


REGISTRY: dict[str, Identity] = {}


def _register(identity: Identity) -> None:
    REGISTRY[identity.tag] = identity


_register(
    Identity(
        tag="eq2_symbolic",
        kind="ratfunc",
        description=(
            "shifting q^x x^m by nshift: the shifted integral equals "
            "(-1)^nshift times the plain one plus twice the alternating "
            "boundary sum of q^l l^m"
        ),
        arity=2,
        variadic=False,
        bounds=(("m", "m", 6), ("nshift", "n", 4)),
        admissible=lambda p: p[1] >= 1,
        lhs=_eq2_lhs,
        rhs=_eq2_rhs,
        enumerate_params=_enum_eq2,
    )
)

_register(
    Identity(
        tag="eq9_frobenius",
        kind="ratfunc",
        description="E_n(q) = (2/(1+q)) H_n(-1/q)",
        arity=1,
        variadic=False,
        bounds=(("n", "n", 10),),
        admissible=_always,
        lhs=_eq9_lhs,
        rhs=_eq9_rhs,
        enumerate_params=_enum_single_n,
    )
)

_register(
    Identity(
        tag="thm1_reflection",
        kind="xpoly",
        description="(-1)^n E_n(x, 1/q) = q E_n(1-x, q), coefficientwise in x",
        arity=1,
        variadic=False,
        bounds=(("n", "n", 8),),
        admissible=_always,
        lhs=_thm1_lhs,
        rhs=_thm1_rhs,
        enumerate_params=_enum_single_n,
    )
)

_register(
    Identity(
        tag="thm2_value_at_two",
        kind="ratfunc",
        description="q E_n(2, q) = 2 + (1/q) E_n(q) for n >= 1",
        arity=1,
        variadic=False,
        bounds=(("n", "n", 8),),
        admissible=lambda p: p[0] >= 1,
        lhs=_thm2_lhs,
        rhs=_thm2_rhs,
        enumerate_params=_enum_single_n,
    )
)

_register(
    Identity(
        tag="thm3_integral",
        kind="ratfunc",
        description=(
            "integral of q^-x (1-x)^n equals 2 + (1/q) integral of q^x x^n "
            "for n >= 1"
        ),
        arity=1,
        variadic=False,
        bounds=(("n", "n", 8),),
        admissible=lambda p: p[0] >= 1,
        lhs=_thm3_lhs,
        rhs=_thm3_rhs,
        enumerate_params=_enum_single_n,
    )
)

_register(
    Identity(
        tag="eq14_bernstein_moment",
        kind="ratfunc",
        description=(
            "integral of q^x B_{k,n} equals C(n,k) times the alternating "
            "sum of E_{k+j}(q), j up to n-k"
        ),
        arity=2,
        variadic=False,
        bounds=(("n", "n", 8), ("k", "k", 8)),
        admissible=lambda p: p[1] < p[0],
        lhs=_eq14_lhs,
        rhs=_eq14_rhs,
        enumerate_params=_enum_pairs_k_up_to_n,
    )
)

_register(
    Identity(
        tag="eq15_symmetry",
        kind="xpoly",
        description="B_{k,n}(x) = B_{n-k,n}(1-x)",
        arity=2,
        variadic=False,
        bounds=(("n", "n", 10), ("k", "k", 10)),
        admissible=_always,
        lhs=_eq15_lhs,
        rhs=_eq15_rhs,
        enumerate_params=_enum_pairs_k_up_to_n,
    )
)

_register(
    Identity(
        tag="thm4",
        kind="ratfunc",
        description=(
            "integral of q^(1-x) B_{k,n} for n > k: 2q + E_n(q) when k = 0, "
            "else C(n,k) sum_j C(k,j) (-1)^(k-j) E_{n-j}(q)"
        ),
        arity=2,
        variadic=False,
        bounds=(("n", "n", 8), ("k", "k", 8)),
        admissible=lambda p: p[1] < p[0],
        lhs=_thm4_lhs,
        rhs=_thm4_rhs,
        enumerate_params=_enum_pairs_k_up_to_n,
        alt_branch=_thm4_alt,
    )
)

_register(
    Identity(
        tag="cor5",
        kind="ratfunc",
        description=(
            "sum_j C(n-k,j) (-1)^j E_{k+j}(1/q) for n > k: 2 + (1/q) E_n(q) "
            "when k = 0, else (1/q) sum_j C(k,j) (-1)^(k-j) E_{n-j}(q)"
        ),
        arity=2,
        variadic=False,
        bounds=(("n", "n", 8), ("k", "k", 8)),
        admissible=lambda p: p[1] < p[0],
        lhs=_cor5_lhs,
        rhs=_cor5_rhs,
        enumerate_params=_enum_pairs_k_up_to_n,
        alt_branch=_cor5_alt,
    )
)

_register(
    Identity(
        tag="thm6",
        kind="ratfunc",
        description=(
            "integral of q^(1-x) B_{k,n} B_{k,m} for n + m > 2k: "
            "2q + E_{n+m}(q) when k = 0, else C(n,k) C(m,k) "
            "sum_j C(2k,j) (-1)^(j+2k) E_{n+m-j}(q)"
        ),
        arity=3,
        variadic=False,
        bounds=(("n", "n", 6), ("m", "m", 6), ("k", "k", 6)),
        admissible=lambda p: p[0] + p[1] > 2 * p[2],
        lhs=_thm6_lhs,
        rhs=_thm6_rhs,
        enumerate_params=_enum_two_degrees,
        alt_branch=_thm6_alt,
    )
)

_register(
    Identity(
        tag="cor7",
        kind="ratfunc",
        description=(
            "sum_j C(n+m-2k,j) (-1)^j E_{j+2k}(1/q) for n + m > 2k: "
            "2 + (1/q) E_{n+m}(q) when k = 0, else (1/q) "
            "sum_j C(2k,j) (-1)^(j+2k) E_{n+m-j}(q)"
        ),
        arity=3,
        variadic=False,
        bounds=(("n", "n", 6), ("m", "m", 6), ("k", "k", 6)),
        admissible=lambda p: p[0] + p[1] > 2 * p[2],
        lhs=_cor7_lhs,
        rhs=_cor7_rhs,
        enumerate_params=_enum_two_degrees,
        alt_branch=_cor7_alt,
    )
)

_register(
    Identity(
        tag="thm8",
        kind="ratfunc",
        description=(
            "integral of q^(1-x) times a product of s Bernstein factors "
            "B_{k,n_i} for sum n_i > s k: 2q + E_sum(q) when k = 0, else "
            "(prod C(n_i,k)) sum_j C(sk,j) (-1)^(sk+j) E_{sum-j}(q); "
            "params are (n_1, ..., n_s, k)"
        ),
        arity=2,
        variadic=True,
        bounds=(("s", "s", 3), ("n", "n", 4), ("k", "k", 4)),
        admissible=lambda p: sum(p[:-1]) > (len(p) - 1) * p[-1],
        lhs=_thm8_lhs,
        rhs=_thm8_rhs,
        enumerate_params=_enum_multi_degrees,
        alt_branch=_thm8_alt,
    )
)

_register(
    Identity(
        tag="cor9",
        kind="ratfunc",
        description=(
            "sum_j C(sum-sk,j) (-1)^j E_{j+sk}(1/q) for sum n_i > s k: "
            "2 + (1/q) E_sum(q) when k = 0, else (1/q) "
            "sum_j C(sk,j) (-1)^(sk+j) E_{sum-j}(q); params are "
            "(n_1, ..., n_s, k)"
        ),
        arity=2,
        variadic=True,
        bounds=(("s", "s", 3), ("n", "n", 4), ("k", "k", 4)),
        admissible=lambda p: sum(p[:-1]) > (len(p) - 1) * p[-1],
        lhs=_cor9_lhs,
        rhs=_cor9_rhs,
        enumerate_params=_enum_multi_degrees,
        alt_branch=_cor9_alt,
    )
)


def verify_identity(
    tag: str, params: Sequence[int], cache: EulerCache | None = None
) -> VerificationResult:
    """Check one registry identity at one parameter tuple, exactly.

    Raises SideConditionError when the tuple violates the identity's
    hypothesis and ValueError for malformed parameters or unknown tags.
    """
    identity = REGISTRY.get(tag)
    if identity is None:
        raise ValueError(f"unknown identity {tag!r}; known: {', '.join(REGISTRY)}")
    params = _check_params(identity, tuple(params))
    if not identity.admissible(params):
        raise SideConditionError(f"{tag} side condition fails at {params}")
    lhs = identity.lhs(params, cache)
    rhs = identity.rhs(params, cache)
    difference = lhs - rhs
    equal = difference == (XPoly() if identity.kind == "xpoly" else RatFunc(0))
    return VerificationResult(tag, params, lhs, rhs, equal, difference)


@dataclass(frozen=True)
class ExploratoryRecord:
    """Both sides of an identity at a side-condition-violating tuple.

    Reported for inspection only; never asserted.
    """

    identity: str
    params: tuple[int, ...]
    computed: bool
    equal: bool | None
    note: str = ""

    def to_json(self) -> dict:
        return {
            "id": self.identity,
            "params": list(self.params),
            "computed": self.computed,
            "equal": self.equal,
            "note": self.note,
        }


@dataclass(frozen=True)
class BranchNote:
    """Whether the k > 0 closed form reproduces the k = 0 value (informational)."""

    identity: str
    params: tuple[int, ...]
    coincide: bool

    def to_json(self) -> dict:
        return {
            "id": self.identity,
            "params": list(self.params),
            "k0_matches_general_branch": self.coincide,
        }


@dataclass
class SuiteReport:
    """Aggregate of one run_suite invocation.

    ``cases`` counts admissible tuples actually verified (including
    cross-checks); ``skipped`` counts side-condition violations inside
    the requested bounds.  ``case_log`` records (tag, params, status)
    in execution order, which is deterministic for fixed ranges.
    """

    cases: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    failures: list[VerificationResult] = field(default_factory=list)
    case_log: list[tuple[str, tuple[int, ...], str]] = field(default_factory=list)
    exploratory: list[ExploratoryRecord] = field(default_factory=list)
    branch_notes: list[BranchNote] = field(default_factory=list)

    def record(self, result: VerificationResult) -> None:
        self.cases += 1
        if result.equal:
            self.passed += 1
            self.case_log.append((result.identity, result.params, "pass"))
        else:
            self.failed += 1
            self.failures.append(result)
            self.case_log.append((result.identity, result.params, "fail"))

    def to_json(self) -> dict:
        return {
            "cases": self.cases,
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
            "failures": [f.to_json() for f in self.failures],
            "exploratory": [e.to_json() for e in self.exploratory],
            "branch_notes": [b.to_json() for b in self.branch_notes],
        }


def default_ranges(
    ids: Sequence[str] | None = None,
    n_max: int | None = None,
    m_max: int | None = None,
    k_max: int | None = None,
    s_max: int | None = None,
) -> dict[str, dict[str, int]]:
    """Per-identity bounds, defaulting to the acceptance grid.

    The four optional caps override every bound that answers to the
    matching CLI flag (n also drives eq2_symbolic's shift count).
    """
    overrides = {"n": n_max, "m": m_max, "k": k_max, "s": s_max}
    selected = list(REGISTRY) if ids is None else list(ids)
    ranges: dict[str, dict[str, int]] = {}
    for tag in selected:
        identity = REGISTRY.get(tag)
        if identity is None:
            raise ValueError(f"unknown identity {tag!r}; known: {', '.join(REGISTRY)}")
        resolved = {}
        for bound_name, flag, default in identity.bounds:
            value = overrides.get(flag)
            resolved[bound_name] = default if value is None else value
        ranges[tag] = resolved
    return ranges


def _exploratory_eval(
    identity: Identity, params: Params, cache: EulerCache | None
) -> ExploratoryRecord:
    try:
        lhs = identity.lhs(params, cache)
        rhs = identity.rhs(params, cache)
    except Exception as exc:  # genuinely unevaluable outside the hypothesis
        return ExploratoryRecord(identity.tag, params, False, None, str(exc))
    return ExploratoryRecord(identity.tag, params, True, lhs == rhs)


def run_suite(
    ranges: Mapping[str, Mapping[str, int]] | None = None,
    cache: EulerCache | None = None,
    cross_checks: bool = True,
    exploratory: bool = True,
) -> SuiteReport:
    """Verify every selected identity over its bounds; aggregate the outcome.

    ``ranges`` maps identity tags to bound values (see default_ranges);
    identities absent from it do not run.  Case ordering is by registry
    order then lexicographic parameter order, so reports are
    deterministic.  Cross-checks run only when all identities they
    relate are selected.
    """
    if ranges is None:
        ranges = default_ranges()
    unknown = set(ranges) - set(REGISTRY)
    if unknown:
        raise ValueError(f"unknown identities in ranges: {sorted(unknown)}")
    report = SuiteReport()
    for tag, identity in REGISTRY.items():
        if tag not in ranges:
            continue
        bounds = ranges[tag]
        for params in sorted(identity.enumerate_params(bounds)):
            if identity.admissible(params):
                result = verify_identity(tag, params, cache)
                report.record(result)
                if identity.alt_branch is not None and params[-1] == 0:
                    alt = identity.alt_branch(params, cache)
                    report.branch_notes.append(
                        BranchNote(tag, params, alt == result.rhs)
                    )
            else:
                report.skipped += 1
                if exploratory:
                    report.exploratory.append(
                        _exploratory_eval(identity, params, cache)
                    )
    if cross_checks:
        for result in _cross_check_results(ranges, cache):
            report.record(result)
    return report


# -- cross-checks between identities ----------------------------------------


def _first_nonzero(*diffs: RatFunc) -> tuple[bool, RatFunc]:
    for d in diffs:
        if not d.is_zero:
            return False, d
    return True, RatFunc(0)


def _xpoly_pair_diff(a: XPoly, b: XPoly) -> tuple[bool, XPoly]:
    d = a - b
    return d.is_zero, d


def reflection_chain(n: int, cache: EulerCache | None = None) -> tuple[RatFunc, ...]:
    """Four expressions that must coincide for n >= 1.

    (-1)^n E_n(-1, 1/q); q E_n(2, q); 2 + (1/q) E_n(q); and the reduced
    integral of q^-x (1-x)^n.  The first two tie the reflection identity
    at x = -1 to the value at 2; the last two are the closed form and
    the oracle form.
    """
    a = euler_poly_q(n, cache).invert_q()(-1) * RatFunc((-1) ** n)
    b = q * euler_poly_q(n, cache)(2)
    c = 2 + (1 / q) * euler_number_q(n, cache)
    d = moment_reduce(IntegrandExpr(-1, 0, _one_minus_x_power(n)), cache)
    return a, b, c, d


def _cross_check_results(
    ranges: Mapping[str, Mapping[str, int]], cache: EulerCache | None
) -> Iterator[VerificationResult]:
    chain_tags = ("thm1_reflection", "thm2_value_at_two", "thm3_integral")
    if all(tag in ranges for tag in chain_tags):
        n_hi = min(ranges[tag]["n"] for tag in chain_tags)
        for n in range(1, n_hi + 1):
            a, b, c, d = reflection_chain(n, cache)
            equal, diff = _first_nonzero(a - b, a - c, a - d)
            yield VerificationResult(
                "xcheck_reflection_chain", (n,), a, c, equal, diff
            )

    if "eq14_bernstein_moment" in ranges and "thm4" in ranges:
        # the q -> 1/q swap carries the eq14 formula onto the thm4 one
        bounds = ranges["thm4"]
        for n, k in sorted(_enum_pairs_k_up_to_n(bounds)):
            if not k < n:
                continue
            swapped = q * _eq14_rhs((n, k), cache).invert_q()
            target = _thm4_rhs((n, k), cache)
            diff = swapped - target
            yield VerificationResult(
                "xcheck_eq14_thm4_swap", (n, k), swapped, target, diff.is_zero, diff
            )

    for xtag, base_tag, s in (
        ("xcheck_thm8_thm4", "thm4", 1),
        ("xcheck_thm8_thm6", "thm6", 2),
        ("xcheck_cor9_cor5", "cor5", 1),
        ("xcheck_cor9_cor7", "cor7", 2),
    ):
        multi_tag = "thm8" if xtag.startswith("xcheck_thm8") else "cor9"
        if multi_tag not in ranges or base_tag not in ranges:
            continue
        bounds = ranges[multi_tag]
        if bounds["s"] < s:
            continue
        base = REGISTRY[base_tag]
        multi = REGISTRY[multi_tag]
        grid = sorted(
            params
            for params in _enum_multi_degrees({**bounds, "s": s})
            if len(params) == s + 1 and multi.admissible(params)
        )
        for params in grid:
            lhs_multi = multi.lhs(params, cache)
            rhs_multi = multi.rhs(params, cache)
            lhs_base = base.lhs(params, cache)
            rhs_base = base.rhs(params, cache)
            equal, diff = _first_nonzero(lhs_multi - lhs_base, rhs_multi - rhs_base)
            yield VerificationResult(xtag, params, rhs_multi, rhs_base, equal, diff)
