"""q-Euler numbers and polynomials, Frobenius-Euler numbers, and the
classical Euler numbers they specialize to at q = 1.

Definitions used here:

* The q-Euler numbers E_n(q) in Q(q) satisfy E_0(q) = 2/(q+1) and, for
  n >= 1, the umbral relation q*(E+1)^n + E_n = 0, whose solved form is

      E_n(q) = -(q/(1+q)) * sum_{l=0}^{n-1} C(n,l) E_l(q).

* The q-Euler polynomial of degree n is E_n(x, q) =
  sum_{l=0}^{n} C(n,l) E_l(q) x^(n-l).

* The Frobenius-Euler numbers H_n(u), for a parameter u != 1 in Q(q),
  have exponential generating function (1-u)/(e^t - u), equivalently
  H_0(u) = 1 and (H+1)^n = u*H_n for n >= 1, solved as

      H_n(u) = (1/(u-1)) * sum_{l=0}^{n-1} C(n,l) H_l(u).

* The classical Euler numbers E_n (rationals, generating function
  2/(e^t+1)) satisfy E_0 = 1 and (E+1)^n + E_n = 0 for n >= 1.

They are linked by E_n(q) = (2/(1+q)) * H_n(-1/q) and by
E_n(q)|_{q=1} = E_n; both links are verified by the identity suite.

Values are memoized in an EulerCache.  The module-level default cache is
shared; callers needing isolation or a higher index cap pass their own.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .exactalg import PolyQ, RatFunc, XPoly, binomial, rational_to_json

__all__ = [
    "EulerCache",
    "euler_number_q",
    "euler_number_q_inverse",
    "euler_poly_q",
    "frobenius_euler",
    "classical_euler_number",
    "table_rows",
]

#: -1/q, the Frobenius-Euler parameter that recovers the q-Euler numbers.
MINUS_Q_INVERSE = RatFunc(PolyQ((-1,)), PolyQ((0, 1)))


class EulerCache:
    """Memo table for q-Euler, Frobenius-Euler, and classical Euler values.

    Values are computed on demand and never evicted.  Indices above
    ``n_max`` raise ValueError; construct a larger cache to go further.
    A single lock guards insertion, so one cache may be shared between
    threads (stored values are immutable).
    """

    def __init__(self, n_max: int = 64):
        if n_max < 0:
            raise ValueError("n_max must be nonnegative")
        self.n_max = n_max
        self._lock = threading.Lock()
        self._numbers: list[RatFunc] = []
        self._numbers_inv: list[RatFunc] = []
        self._classical: list[Fraction] = []
        self._frobenius: dict[RatFunc, list[RatFunc]] = {}

    def _check_index(self, n: int) -> None:
        if n < 0:
            raise ValueError("index must be nonnegative")
        if n > self.n_max:
            raise ValueError(
                f"index {n} exceeds this cache's cap n_max={self.n_max}; "
                "construct EulerCache(n_max=...) with a larger cap"
            )

    def number(self, n: int) -> RatFunc:
        self._check_index(n)
        with self._lock:
            numbers = self._numbers
            if not numbers:
                numbers.append(RatFunc(2, PolyQ((1, 1))))
            scale = RatFunc(PolyQ((0, -1)), PolyQ((1, 1)))  # -q/(1+q)
            while len(numbers) <= n:
                m = len(numbers)
                acc = RatFunc(0)
                for l in range(m):
                    acc = acc + binomial(m, l) * numbers[l]
                numbers.append(scale * acc)
            return numbers[n]

    def number_inverse(self, n: int) -> RatFunc:
        """E_n(1/q), the image of the n-th q-Euler number under q -> 1/q."""
        value = self.number(n)
        with self._lock:
            inv = self._numbers_inv
            while len(inv) <= n:
                inv.append(self._numbers[len(inv)].invert_q())
            return inv[n]

    def classical(self, n: int) -> Fraction:
        self._check_index(n)
        with self._lock:
            values = self._classical
            if not values:
                values.append(Fraction(1))
            while len(values) <= n:
                m = len(values)
                acc = Fraction(0)
                for l in range(m):
                    acc += binomial(m, l) * values[l]
                values.append(-acc / 2)
            return values[n]

    def frobenius(self, n: int, u: RatFunc) -> RatFunc:
        self._check_index(n)
        u = RatFunc(u) if not isinstance(u, RatFunc) else u
        if u == RatFunc(1):
            raise ValueError("u = 1 is a pole of the Frobenius-Euler family")
        with self._lock:
            values = self._frobenius.setdefault(u, [RatFunc(1)])
            scale = 1 / (u - 1)
            while len(values) <= n:
                m = len(values)
                acc = RatFunc(0)
                for l in range(m):
                    acc = acc + binomial(m, l) * values[l]
                values.append(scale * acc)
            return values[n]


_DEFAULT_CACHE = EulerCache()


def _cache(cache: EulerCache | None) -> EulerCache:
    return _DEFAULT_CACHE if cache is None else cache


def euler_number_q(n: int, cache: EulerCache | None = None) -> RatFunc:
    """The n-th q-Euler number E_n(q) as a canonical element of Q(q)."""
    return _cache(cache).number(n)


def euler_number_q_inverse(n: int, cache: EulerCache | None = None) -> RatFunc:
    """E_n(1/q): the n-th q-Euler number with q replaced by its inverse."""
    return _cache(cache).number_inverse(n)


def euler_poly_q(n: int, cache: EulerCache | None = None) -> XPoly:
    """The n-th q-Euler polynomial sum_l C(n,l) E_l(q) x^(n-l).

    Its x^n coefficient is E_0(q) = 2/(q+1), so the degree is exactly n,
    and its value at x = 0 is E_n(q).
    """
    store = _cache(cache)
    coeffs = [binomial(n, j) * store.number(n - j) for j in range(n + 1)]
    return XPoly(coeffs)


def frobenius_euler(n: int, u: RatFunc, cache: EulerCache | None = None) -> RatFunc:
    """The n-th Frobenius-Euler number H_n(u) for a parameter u != 1 in Q(q)."""
    return _cache(cache).frobenius(n, u)


def classical_euler_number(n: int, cache: EulerCache | None = None) -> Fraction:
    """The n-th classical Euler number E_n (value of the Euler polynomial at 0)."""
    return _cache(cache).classical(n)


def table_rows(n_max: int, cache: EulerCache | None = None) -> list[dict]:
    """Rows {n, e_nq, e_at_q1, frobenius} for n = 0 .. n_max, JSON-ready.

    e_nq is E_n(q), e_at_q1 its value at q = 1, and frobenius is
    H_n(-1/q); all exact, serialized with decimal strings.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    store = _cache(cache)
    rows = []
    for n in range(n_max + 1):
        e = store.number(n)
        rows.append(
            {
                "n": n,
                "e_nq": e.to_json(),
                "e_at_q1": rational_to_json(e(1)),
                "frobenius": store.frobenius(n, MINUS_Q_INVERSE).to_json(),
            }
        )
    return rows
