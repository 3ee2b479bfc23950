"""Exact arithmetic substrate: rationals, dense univariate polynomials, and
generalized binomial coefficients.

Every scalar handled by this package is an ``int``, a ``fractions.Fraction``,
or a :class:`Polynomial` with Fraction coefficients.  The three types mix
freely under ``+``, ``-``, ``*`` and ``**``; results are always exact and in
canonical form (reduced fractions, trimmed coefficient lists).  Floating
point never enters.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Union

__all__ = [
    "Rational",
    "Polynomial",
    "RingElement",
    "X",
    "ring_add",
    "ring_mul",
    "ring_neg",
    "generalized_binomial",
    "normalized",
    "format_element",
    "parse_element",
]

# Arbitrary-precision rational scalar.  fractions.Fraction already guarantees
# the canonical form this package relies on: denominator > 0, gcd-reduced,
# zero stored as 0/1.
Rational = Fraction

_Scalar = (int, Fraction)


def _as_fraction(value) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"exact coefficient expected, got {value!r}")
    return Fraction(value)


class Polynomial:
    """Dense univariate polynomial over the rationals.

    Coefficients are stored ascending: ``coefficients[i]`` multiplies
    ``x**i``.  The representation is canonical: the highest stored
    coefficient is nonzero, and the zero polynomial stores nothing.
    Instances are immutable; a constant polynomial compares (and hashes)
    equal to the scalar it represents.

    >>> p = Polynomial((1, 4))
    >>> str(p)
    '1+4x'
    >>> p * p
    Polynomial((Fraction(1, 1), Fraction(8, 1), Fraction(16, 1)))
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable = ()):
        coeffs = [_as_fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @property
    def coefficients(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, _Scalar) and not isinstance(other, bool):
            return Polynomial((other,))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(tuple(-c for c in self._coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Polynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # scalar divisor only; polynomial division is out of scope
        if isinstance(other, _Scalar) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError("division of polynomial by zero")
            inv = Fraction(1) / Fraction(other)
            return Polynomial(tuple(c * inv for c in self._coeffs))
        return NotImplemented

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or isinstance(exponent, bool) or exponent < 0:
            raise ValueError("polynomial exponent must be a non-negative integer")
        result = Polynomial((1,))
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, value):
        """Evaluate by Horner's rule; ``value`` may itself be a polynomial."""
        result = Fraction(0)
        for c in reversed(self._coeffs):
            result = result * value + c
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, _Scalar) and not isinstance(other, bool):
            return len(self._coeffs) <= 1 and self.coefficient(0) == other
        return NotImplemented

    def __hash__(self):
        if len(self._coeffs) <= 1:
            return hash(self.coefficient(0))
        return hash(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def __repr__(self):
        return f"Polynomial({self._coeffs!r})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mag = -c if c < 0 else c
            if i == 0:
                body = str(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if mag == 1 else f"{mag}{var}"
            sign = "-" if c < 0 else ("+" if parts else "")
            parts.append(sign + body)
        return "".join(parts)


#: The indeterminate: X == Polynomial((0, 1)).
X = Polynomial((0, 1))

RingElement = Union[int, Fraction, Polynomial]


def ring_add(a: RingElement, b: RingElement) -> RingElement:
    """Exact sum of two elements of the same ring."""
    return a + b


def ring_mul(a: RingElement, b: RingElement) -> RingElement:
    """Exact product of two elements of the same ring."""
    return a * b


def ring_neg(a: RingElement) -> RingElement:
    """Exact additive inverse."""
    return -a


def generalized_binomial(t: int, k: int) -> int:
    """Binomial coefficient t over k for arbitrary integer t and k >= 0.

    Defined by the falling factorial t(t-1)...(t-k+1) / k!, which is an
    integer for every integer t, negative upper arguments included:

    >>> generalized_binomial(-1, 2)
    1
    >>> generalized_binomial(-3, 3)
    -10

    The division by k! is performed incrementally (divide by i at step i)
    so every intermediate stays integral.
    """
    if k < 0:
        raise ValueError(f"lower index must be non-negative, got {k}")
    result = 1
    for i in range(1, k + 1):
        result = result * (t - i + 1) // i
    return result


def normalized(value: RingElement) -> RingElement:
    """Canonical scalar form: an integral Fraction collapses to int."""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return int(value)
        return value
    return value


def format_element(value: RingElement) -> str:
    """Canonical text form: ``p/q`` for rationals (``/q`` omitted when 1),
    ascending powers of ``x`` for polynomials, e.g. ``1+4x`` or ``3/2x^2``."""
    if isinstance(value, Polynomial):
        return str(value)
    if isinstance(value, _Scalar) and not isinstance(value, bool):
        return str(value)
    raise TypeError(f"not a ring element: {value!r}")


_TERM_RE = re.compile(r"([+-]?)(\d+(?:/\d+)?)?\*?(x(?:\^(\d+))?)?")


def parse_element(text: str) -> RingElement:
    """Parse the canonical text form produced by :func:`format_element`.

    Accepts integers, rationals ``p/q``, monomials ``kx`` / ``kx^e``, sums
    of these, and one level of surrounding parentheses, e.g. ``(1+2x)``.
    Returns a Fraction unless ``x`` occurs, in which case a Polynomial.
    """
    s = text.strip().replace(" ", "")
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if not s:
        raise ValueError(f"empty ring element in {text!r}")
    terms = re.findall(r"[+-]?[^+-]+", s)
    if "".join(terms) != s:
        raise ValueError(f"malformed ring element {text!r}")
    coeffs: dict = {}
    saw_x = False
    for term in terms:
        m = _TERM_RE.fullmatch(term)
        if not m or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"malformed term {term!r} in {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(3):
            saw_x = True
            exponent = int(m.group(4)) if m.group(4) else 1
        else:
            exponent = 0
        coeffs[exponent] = coeffs.get(exponent, Fraction(0)) + sign * coeff
    if not saw_x:
        return coeffs.get(0, Fraction(0))
    out = [Fraction(0)] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return Polynomial(out)
