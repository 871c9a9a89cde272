"""Bernstein basis polynomials and the Bernstein operator, exact over Q.

B_{k,n}(x) = C(n,k) x^k (1-x)^(n-k) for 0 <= k <= n, expanded into the
monomial basis.  Coefficients are constant elements of Q(q) so the
results compose directly with the rest of the package.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .exactalg import Rational, XPoly, binomial

__all__ = ["bernstein_basis", "bernstein_operator"]


def bernstein_basis(k: int, n: int) -> XPoly:
    """The Bernstein basis polynomial B_{k,n} as an XPoly of degree n.

    Expanded by the binomial theorem: the x^(k+j) coefficient is
    C(n,k) * C(n-k,j) * (-1)^j.  Raises ValueError unless 0 <= k <= n.
    """
    if n < 0 or k < 0:
        raise ValueError("bernstein_basis needs nonnegative k and n")
    if k > n:
        raise ValueError(f"bernstein_basis index k={k} exceeds degree n={n}")
    lead = binomial(n, k)
    coeffs = [0] * (n + 1)
    for j in range(n - k + 1):
        coeffs[k + j] = lead * binomial(n - k, j) * (-1) ** j
    return XPoly(coeffs)


def bernstein_operator(samples: Sequence[Rational | int], n: int) -> XPoly:
    """Degree-n Bernstein approximant sum_k samples[k] * B_{k,n}.

    samples[k] plays the role of f(k/n), so exactly n+1 samples are
    required and n must be at least 1.
    """
    if n < 1:
        raise ValueError("bernstein_operator needs n >= 1")
    if len(samples) != n + 1:
        raise ValueError(f"expected {n + 1} samples for degree {n}, got {len(samples)}")
    acc = XPoly()
    for k, sample in enumerate(samples):
        value = Fraction(sample)
        if value:
            acc = acc + bernstein_basis(k, n) * value
    return acc
