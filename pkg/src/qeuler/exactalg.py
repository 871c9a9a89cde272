"""Exact arithmetic foundation: rationals, dense polynomials over Q, the
rational-function field Q(q), and polynomials in x with Q(q) coefficients.

Representation conventions used throughout the package:

* Scalars are ``fractions.Fraction`` values (always reduced, denominator
  positive, arbitrary precision).  ``Rational`` is an alias for it.
* ``PolyQ`` is a dense univariate polynomial in the variable q over Q,
  stored as a tuple of Fractions where index i holds the coefficient of
  q**i.  Trailing zero coefficients are stripped, so the leading
  coefficient is nonzero and the zero polynomial is the empty tuple.
* ``RatFunc`` is an element of Q(q) kept in canonical form: numerator and
  denominator coprime, denominator monic (and hence nonzero).  Zero is
  0/1.  Because the form is canonical, structural equality of two
  RatFunc values is mathematical equality in the field.
* ``XPoly`` is a dense polynomial in a second variable x whose
  coefficients are RatFunc values, with the same trailing-zero
  convention as PolyQ.

All four kinds are immutable and hashable.  JSON serialization keeps
every integer as a decimal string so round-trips never lose precision.
"""

from __future__ import annotations

import math
from fractions import Fraction
from math import comb
from typing import Iterable, Iterator, Sequence, Union

__all__ = [
    "Rational",
    "PoleError",
    "make_rational",
    "binomial",
    "rational_to_json",
    "rational_from_json",
    "PolyQ",
    "poly_gcd",
    "RatFunc",
    "XPoly",
    "q",
    "x",
]

Rational = Fraction

ScalarLike = Union[int, Fraction]


class PoleError(ZeroDivisionError):
    """Evaluation of a rational function at a root of its denominator."""


def make_rational(num: int, den: int = 1) -> Fraction:
    """Reduced rational num/den.  A zero denominator raises ZeroDivisionError."""
    return Fraction(num, den)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k); zero when k > n, error on negative input."""
    return comb(n, k)


def rational_to_json(r: Fraction) -> dict:
    return {"num": str(r.numerator), "den": str(r.denominator)}


def rational_from_json(obj: dict) -> Fraction:
    return Fraction(int(obj["num"]), int(obj["den"]))


def _fraction_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _fraction_latex(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    sign = "-" if c < 0 else ""
    return rf"{sign}\frac{{{abs(c.numerator)}}}{{{c.denominator}}}"


class PolyQ:
    """Dense polynomial in q over Q.  See the module docstring for layout."""

    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[ScalarLike] = ()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("PolyQ is immutable")

    @classmethod
    def monomial(cls, degree: int, coeff: ScalarLike = 1) -> "PolyQ":
        if degree < 0:
            raise ValueError("monomial degree must be nonnegative")
        return cls((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PolyQ):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == PolyQ((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("PolyQ", self.coeffs))

    def __add__(self, other: object) -> "PolyQ":
        other = _as_poly_or_none(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolyQ(out)

    __radd__ = __add__

    def __neg__(self) -> "PolyQ":
        return PolyQ(tuple(-c for c in self.coeffs))

    def __sub__(self, other: object) -> "PolyQ":
        other = _as_poly_or_none(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "PolyQ":
        other = _as_poly_or_none(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: object) -> "PolyQ":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return PolyQ()
            return PolyQ(tuple(c * other for c in self.coeffs))
        if not isinstance(other, PolyQ):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return PolyQ()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return PolyQ(out)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "PolyQ":
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, n: int) -> "PolyQ":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = PolyQ((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "PolyQ") -> tuple["PolyQ", "PolyQ"]:
        if not isinstance(other, PolyQ):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quo = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        dlead = other.lead
        dn = other.degree
        while len(rem) - 1 >= dn and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < dn:
                break
            shift = len(rem) - 1 - dn
            factor = rem[-1] / dlead
            quo[shift] = factor
            for i, c in enumerate(other.coeffs):
                rem[shift + i] -= factor * c
            rem.pop()
        return PolyQ(quo), PolyQ(rem)

    def __floordiv__(self, other: "PolyQ") -> "PolyQ":
        return divmod(self, other)[0]

    def __mod__(self, other: "PolyQ") -> "PolyQ":
        return divmod(self, other)[1]

    def divides(self, other: "PolyQ") -> bool:
        """True when self divides other exactly (self nonzero)."""
        return (other % self).is_zero

    def __call__(self, point: ScalarLike) -> Fraction:
        """Evaluate by Horner's rule at a rational point."""
        point = Fraction(point)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def monic(self) -> "PolyQ":
        if self.is_zero:
            return self
        lead = self.lead
        return self if lead == 1 else self * (Fraction(1) / lead)

    def reverse(self) -> "PolyQ":
        """Coefficient reversal: q**degree * p(1/q), the zero polynomial fixed."""
        return PolyQ(tuple(reversed(self.coeffs)))

    def to_json(self) -> list:
        return [rational_to_json(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, obj: Sequence[dict]) -> "PolyQ":
        return cls(tuple(rational_from_json(c) for c in obj))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = _fraction_str(mag)
            else:
                var = "q" if i == 1 else f"q^{i}"
                body = var if mag == 1 else f"{_fraction_str(mag)}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def latex(self, var: str = "q") -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = _fraction_latex(mag)
            else:
                power = var if i == 1 else f"{var}^{{{i}}}"
                body = power if mag == 1 else f"{_fraction_latex(mag)} {power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"PolyQ({str(self)!r})"


def _as_poly_or_none(value: object) -> PolyQ | None:
    if isinstance(value, PolyQ):
        return value
    if isinstance(value, (int, Fraction)):
        return PolyQ((value,))
    return None


def _as_poly(value: object) -> PolyQ:
    poly = _as_poly_or_none(value)
    if poly is None:
        raise TypeError(f"cannot interpret {value!r} as a polynomial over Q")
    return poly


def _primitive_int_coeffs(p: PolyQ) -> list[int]:
    """Integer coefficient list of a rational multiple of p, content 1."""
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [c.numerator * (den // c.denominator) for c in p.coeffs]
    content = 0
    for c in ints:
        content = math.gcd(content, c)
    return [c // content for c in ints]


def _pseudo_rem(u: list[int], v: list[int]) -> list[int]:
    """Pseudo-remainder of u by v over Z (coefficients ascending)."""
    r = list(u)
    dv = len(v) - 1
    lead = v[-1]
    while True:
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < dv:
            return r
        coef = r[-1]
        shift = len(r) - 1 - dv
        r = [lead * c for c in r]
        for i, vc in enumerate(v):
            r[shift + i] -= coef * vc


def poly_gcd(a: PolyQ, b: PolyQ) -> PolyQ:
    """Monic gcd of two polynomials over Q; gcd(0, 0) is 0.

    Runs the primitive polynomial remainder sequence over Z, which
    avoids the coefficient blowup of the plain Euclidean algorithm
    on Fraction arithmetic.
    """
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    u = _primitive_int_coeffs(a)
    v = _primitive_int_coeffs(b)
    if len(u) < len(v):
        u, v = v, u
    while True:
        r = _pseudo_rem(u, v)
        if not r:
            break
        content = 0
        for c in r:
            content = math.gcd(content, c)
        u, v = v, [c // content for c in r]
        if len(v) == 1:
            break
    return PolyQ(tuple(Fraction(c) for c in v)).monic()


class RatFunc:
    """Element of Q(q) in canonical form (coprime parts, monic denominator)."""

    __slots__ = ("num", "den")

    num: PolyQ
    den: PolyQ

    def __init__(self, num: object = 0, den: object = 1):
        if isinstance(num, RatFunc) or isinstance(den, RatFunc):
            if not (isinstance(den, int) and den == 1):
                raise TypeError("RatFunc parts must be polynomials or scalars")
            source = num
            object.__setattr__(self, "num", source.num)
            object.__setattr__(self, "den", source.den)
            return
        n = _as_poly(num)
        d = _as_poly(den)
        if d.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if n.is_zero:
            object.__setattr__(self, "num", PolyQ())
            object.__setattr__(self, "den", PolyQ((1,)))
            return
        g = poly_gcd(n, d)
        if g.degree > 0:
            n = n // g
            d = d // g
        lead = d.lead
        if lead != 1:
            inv = Fraction(1) / lead
            n = n * inv
            d = d * inv
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "den", d)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("RatFunc is immutable")

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def as_fraction(self) -> Fraction:
        """The value as a rational number; only valid for constants."""
        if not self.is_constant:
            raise ValueError(f"{self} is not a constant")
        return self.num.coeffs[0] if self.num.coeffs else Fraction(0)

    def __bool__(self) -> bool:
        return not self.is_zero

    def __eq__(self, other: object) -> bool:
        other = _as_ratfunc_or_none(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash(("RatFunc", self.num, self.den))

    def __add__(self, other: object) -> "RatFunc":
        other = _as_ratfunc_or_none(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        out = RatFunc.__new__(RatFunc)
        object.__setattr__(out, "num", -self.num)
        object.__setattr__(out, "den", self.den)
        return out

    def __sub__(self, other: object) -> "RatFunc":
        other = _as_ratfunc_or_none(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "RatFunc":
        other = _as_ratfunc_or_none(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: object) -> "RatFunc":
        other = _as_ratfunc_or_none(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "RatFunc":
        other = _as_ratfunc_or_none(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other: object) -> "RatFunc":
        other = _as_ratfunc_or_none(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            if self.is_zero:
                raise ZeroDivisionError("negative power of zero")
            return RatFunc(self.den, self.num) ** (-n)
        return RatFunc(self.num**n, self.den**n)

    def invert_q(self) -> "RatFunc":
        """The image under q -> 1/q, canonicalized.

        Both parts are coefficient-reversed (p -> q**deg(p) * p(1/q)) and the
        leftover power q**(deg den - deg num) lands on whichever side keeps
        exponents nonnegative.
        """
        if self.is_zero:
            return self
        shift = self.den.degree - self.num.degree
        num = self.num.reverse()
        den = self.den.reverse()
        if shift >= 0:
            num = num * PolyQ.monomial(shift)
        else:
            den = den * PolyQ.monomial(-shift)
        return RatFunc(num, den)

    def __call__(self, point: ScalarLike) -> Fraction:
        """Evaluate at a rational point; raises PoleError on a denominator root."""
        point = Fraction(point)
        dval = self.den(point)
        if dval == 0:
            raise PoleError(f"{point} is a pole of {self}")
        return self.num(point) / dval

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "RatFunc":
        return cls(PolyQ.from_json(obj["num"]), PolyQ.from_json(obj["den"]))

    def __str__(self) -> str:
        if self.den == PolyQ((1,)):
            return str(self.num)
        num = str(self.num)
        if self.num.degree > 0:
            num = f"({num})"
        return f"{num} / ({self.den})"

    def latex(self) -> str:
        if self.den == PolyQ((1,)):
            return self.num.latex()
        return rf"\frac{{{self.num.latex()}}}{{{self.den.latex()}}}"

    def __repr__(self) -> str:
        return f"RatFunc({str(self)!r})"


def _as_ratfunc_or_none(value: object) -> RatFunc | None:
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, (int, Fraction, PolyQ)):
        return RatFunc(value)
    return None


def _as_ratfunc(value: object) -> RatFunc:
    rf = _as_ratfunc_or_none(value)
    if rf is None:
        raise TypeError(f"cannot interpret {value!r} as an element of Q(q)")
    return rf


class XPoly:
    """Dense polynomial in x with RatFunc coefficients."""

    __slots__ = ("coeffs",)

    coeffs: tuple[RatFunc, ...]

    def __init__(self, coeffs: Iterable[object] = ()):
        cs = [c if isinstance(c, RatFunc) else _as_ratfunc(c) for c in coeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("XPoly is immutable")

    @classmethod
    def monomial(cls, degree: int, coeff: object = 1) -> "XPoly":
        if degree < 0:
            raise ValueError("monomial degree must be nonnegative")
        return cls((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> RatFunc:
        """Coefficient of x**i (zero beyond the degree)."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return RatFunc(0)

    def __bool__(self) -> bool:
        return not self.is_zero

    def __eq__(self, other: object) -> bool:
        other = _as_xpoly_or_none(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("XPoly", self.coeffs))

    def __add__(self, other: object) -> "XPoly":
        other = _as_xpoly_or_none(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return XPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "XPoly":
        return XPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: object) -> "XPoly":
        other = _as_xpoly_or_none(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "XPoly":
        other = _as_xpoly_or_none(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: object) -> "XPoly":
        scalar = _as_ratfunc_or_none(other)
        if scalar is not None:
            if scalar.is_zero:
                return XPoly()
            return XPoly(tuple(c * scalar for c in self.coeffs))
        if not isinstance(other, XPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return XPoly()
        zero = RatFunc(0)
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a.is_zero:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return XPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "XPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = XPoly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, point: object) -> RatFunc:
        """Evaluate by Horner's rule; the point may be any Q(q) element."""
        point = _as_ratfunc(point)
        acc = RatFunc(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def compose_affine(self, a: object, b: object) -> "XPoly":
        """Substitution x -> a*x + b with a, b in Q(q)."""
        line = XPoly((b, a))
        acc = XPoly()
        for c in reversed(self.coeffs):
            acc = acc * line + XPoly((c,))
        return acc

    def invert_q(self) -> "XPoly":
        """Apply q -> 1/q to every coefficient."""
        return XPoly(tuple(c.invert_q() for c in self.coeffs))

    def to_json(self) -> list:
        return [c.to_json() for c in self.coeffs]

    @classmethod
    def from_json(cls, obj: Sequence[dict]) -> "XPoly":
        return cls(tuple(RatFunc.from_json(c) for c in obj))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c.is_zero:
                continue
            if i == 0:
                body = str(c)
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if c == RatFunc(1) else f"({c})*{var}"
            parts.append(body)
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"XPoly({str(self)!r})"


def _as_xpoly_or_none(value: object) -> XPoly | None:
    if isinstance(value, XPoly):
        return value
    scalar = _as_ratfunc_or_none(value)
    if scalar is not None:
        return XPoly((scalar,))
    return None


#: The generator q of Q(q).
q = RatFunc(PolyQ((0, 1)))

#: The variable x as an XPoly.
x = XPoly((0, 1))
