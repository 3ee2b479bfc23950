"""Multifold convolutions of Bell-transform sequences.

The r-fold convolution sum_{m_1+...+m_r=n} y_{m_1} ... y_{m_r} admits the
closed form

    r * sum_{k=1..n} binom(a*n + b*k + r-1, k-1) * (k-1)!/n! * B_{n,k}(1!c_1, ...)

for n >= 1.  This module implements the brute-force composition oracle, the
closed form, its delta-shifted variant for the a=0, b=1 family, specialized
per-family formulas coded independently of the general one, and a numeric
checker for the two-index Bell convolution identity they all rest on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .bellpoly import bell_eval
from .ring import RingElement, X, format_element, generalized_binomial, normalized
from .seq import BellSequenceSpec, SequenceWindow, bell_transform

__all__ = [
    "ConvolutionReport",
    "LemmaGuardError",
    "SPECIALIZED_FAMILIES",
    "compositions",
    "convolution_oracle",
    "convolution_closed",
    "convolution_closed_specialized",
    "shifted_convolution_closed",
    "lemma_identity_check",
    "verify_theorem",
]


class LemmaGuardError(ValueError):
    """A summand of the convolution lemma divides by zero at (l, m)."""

    def __init__(self, l: int, m: int):
        super().__init__(f"lemma summand undefined at (l={l}, m={m})")
        self.l = l
        self.m = m


@dataclass(frozen=True)
class ConvolutionReport:
    """Oracle vs closed form at one (r, n) cell."""

    r: int
    n: int
    lhs: RingElement
    rhs: RingElement
    matched: bool

    def __post_init__(self):
        if self.matched != (self.lhs == self.rhs):
            raise ValueError("matched flag must equal exact lhs == rhs")

    def to_record(self) -> dict:
        return {
            "kind": "verification",
            "r": self.r,
            "n": self.n,
            "lhs": format_element(self.lhs),
            "rhs": format_element(self.rhs),
            "matched": self.matched,
        }


def compositions(n: int, r: int):
    """All r-tuples of non-negative integers summing to n, one at a time.

    Iterative odometer, O(r) memory, deterministic reverse-lexicographic
    order starting at (n, 0, ..., 0).
    """
    if n < 0 or r < 1:
        raise ValueError(f"need n >= 0 and r >= 1, got n={n}, r={r}")
    comp = [n] + [0] * (r - 1)
    while True:
        yield tuple(comp)
        if comp[-1] == n:
            return
        j = r - 2
        while comp[j] == 0:
            j -= 1
        comp[j] -= 1
        moved = comp[-1] + 1
        if j + 1 == r - 1:
            comp[-1] = moved
        else:
            comp[j + 1] = moved
            comp[-1] = 0


def convolution_oracle(window: SequenceWindow, r: int, n: int, delta: int = 0) -> RingElement:
    """Brute-force sum of products y_{m_1-delta} ... y_{m_r-delta} over all
    compositions m_1 + ... + m_r = n, with y at negative index equal to 0."""
    if r < 1:
        raise ValueError("r must be at least 1")
    if n < 0 or delta < 0:
        raise ValueError("n and delta must be non-negative")
    if window.last_index < n:
        raise ValueError(f"window covers 0..{window.last_index}, need 0..{n}")
    values = window.values
    total = 0
    for comp in compositions(n, r):
        product = 1
        for m in comp:
            idx = m - delta
            if idx < 0:
                product = 0
                break
            product = product * values[idx]
        total = total + product
    return normalized(total)


def convolution_closed(spec: BellSequenceSpec, r: int, n: int) -> RingElement:
    """Closed form of the r-fold convolution at index n >= 1."""
    if r < 1:
        raise ValueError("r must be at least 1")
    if n < 1:
        raise ValueError(
            "closed convolution form is stated for n >= 1 only; the n = 0 sum is 1"
        )
    args = spec.scaled_args(n)
    total = 0
    nfact = factorial(n)
    for k in range(1, n + 1):
        binom = generalized_binomial(spec.a * n + spec.b * k + r - 1, k - 1)
        if binom == 0:
            continue
        total = total + Fraction(binom * factorial(k - 1), nfact) * bell_eval(n, k, args)
    return normalized(r * total)


def shifted_convolution_closed(c, r: int, n: int, delta: int) -> RingElement:
    """Closed form for the a=0, b=1 family with every factor shifted by delta:

        sum_{k=0..n-delta*r} binom(k+r-1, k) * k!/(n-delta*r)! * B_{n-delta*r,k}(1!c_1, ...)

    Returns 0 when n < delta*r.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    if n < 0 or delta < 0:
        raise ValueError("n and delta must be non-negative")
    m = n - delta * r
    if m < 0:
        return 0
    spec_args = [factorial(j) * cj for j, cj in enumerate(c, start=1)]
    if len(spec_args) < m + 1:
        spec_args.extend([0] * (m + 1 - len(spec_args)))
    total = 0
    mfact = factorial(m)
    for k in range(m + 1):
        total = total + Fraction(
            generalized_binomial(k + r - 1, k) * factorial(k), mfact
        ) * bell_eval(m, k, spec_args)
    return normalized(total)


SPECIALIZED_FAMILIES = (
    "fibonacci",
    "tribonacci",
    "jacobsthal",
    "catalan",
    "motzkin",
    "fuss_catalan",
    "two_term",
)


def convolution_closed_specialized(
    family: str,
    r: int,
    n: int,
    *,
    b: int | None = None,
    c1: RingElement | None = None,
    c2: RingElement | None = None,
) -> RingElement:
    """Per-family convolution formulas, coded independently of
    :func:`convolution_closed` so the test suite can compare two separate
    routes against the oracle.

    fibonacci, tribonacci, jacobsthal sum over the shifted index range and
    return 0 below it; catalan, motzkin, fuss_catalan (parameter b) are the
    unshifted product formulas; two_term (parameters c1, c2) is the generic
    a=1, b=0 two-coefficient family, defined for n >= 1.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    if n < 0:
        raise ValueError("n must be non-negative")

    if family == "fibonacci":
        return sum(
            generalized_binomial(k + r - 1, k) * generalized_binomial(k, n - r - k)
            for k in range(n - r + 1)
        )
    if family == "tribonacci":
        total = 0
        for k in range(n - 2 * r + 1):
            base = generalized_binomial(k + r - 1, k)
            for l in range(k + 1):
                j = n - 2 * r - k - l
                if j < 0:
                    continue
                total += base * generalized_binomial(k, l) * generalized_binomial(l, j)
        return total
    if family == "jacobsthal":
        total = 0
        two_x = 2 * X
        for k in range(n - r + 1):
            scale = generalized_binomial(k + r - 1, k) * generalized_binomial(k, n - r - k)
            if scale:
                total = total + scale * two_x ** (n - r - k)
        return total
    if family == "catalan":
        return normalized(Fraction(r, n + r) * generalized_binomial(2 * (n + r), n))
    if family == "motzkin":
        inner = sum(
            generalized_binomial(n + r, k) * generalized_binomial(k, n - k)
            for k in range(n + 1)
        )
        return normalized(Fraction(r, n + r) * inner)
    if family == "fuss_catalan":
        if b is None or b == 0:
            raise ValueError("fuss_catalan requires parameter b != 0")
        if b * n + r == 0:
            raise ValueError(f"fuss_catalan form undefined at b*n + r == 0 (b={b}, n={n}, r={r})")
        return normalized(Fraction(r, b * n + r) * generalized_binomial(b * n + r, n))
    if family == "two_term":
        if c1 is None or c2 is None:
            raise ValueError("two_term requires parameters c1 and c2")
        if n < 1:
            raise ValueError("two_term form is stated for n >= 1 only; the n = 0 sum is 1")
        total = 0
        for k in range((n + 1) // 2, n + 1):
            binoms = generalized_binomial(n + r - 1, k - 1) * generalized_binomial(k, n - k)
            if binoms == 0:
                continue
            total = total + Fraction(r * binoms, k) * c1 ** (2 * k - n) * c2 ** (n - k)
        return normalized(total)
    raise ValueError(f"unknown family {family!r}; choose from {', '.join(SPECIALIZED_FAMILIES)}")


def lemma_identity_check(alpha_coeffs, tau: int, n: int, k: int, xs) -> bool:
    """Numerically verify the two-index Bell convolution identity.

    With alpha(l, m) = p*l + q*m + s (alpha_coeffs = (p, q, s)) and tau != 0,
    compares

        sum_{l=0..k} sum_{m=l..n} binom(alpha, k-l) binom(tau-alpha, l) binom(n, m)
            / (alpha (tau-alpha) binom(k, l)) * B_{m,l}(xs) B_{n-m,k-l}(xs)

    against

        (tau - alpha(0,0) + alpha(k,n)) / (tau alpha(k,n) (tau - alpha(0,0)))
            * binom(tau, k) * B_{n,k}(xs)

    over the given arguments, exactly.  Every summand denominator must be
    nonzero on the index band; offenders raise :class:`LemmaGuardError`.
    """
    p, q, s = alpha_coeffs
    if tau == 0:
        raise ValueError("tau must be nonzero")
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    if len(xs) < n + 1:
        raise ValueError(f"need at least n+1 = {n + 1} arguments, got {len(xs)}")

    def alpha(l, m):
        return p * l + q * m + s

    for l in range(k + 1):
        for m in range(l, n + 1):
            a = alpha(l, m)
            if a == 0 or tau - a == 0:
                raise LemmaGuardError(l, m)

    lhs = 0
    for l in range(k + 1):
        choose_l = generalized_binomial(k, l)
        for m in range(l, n + 1):
            a = alpha(l, m)
            numer = (
                generalized_binomial(a, k - l)
                * generalized_binomial(tau - a, l)
                * generalized_binomial(n, m)
            )
            if numer == 0:
                continue
            left = bell_eval(m, l, xs)
            right = bell_eval(n - m, k - l, xs)
            lhs = lhs + Fraction(numer, a * (tau - a) * choose_l) * left * right

    akn = alpha(k, n)
    a00 = alpha(0, 0)
    rhs = (
        Fraction(tau - a00 + akn, tau * akn * (tau - a00))
        * generalized_binomial(tau, k)
        * bell_eval(n, k, xs)
    )
    return lhs == rhs


def verify_theorem(spec: BellSequenceSpec, r_max: int, n_max: int) -> list:
    """Oracle-vs-closed-form reports for every (r, n) in [1, r_max] x [1, n_max]."""
    if r_max < 1 or n_max < 1:
        raise ValueError("r_max and n_max must be at least 1")
    window = bell_transform(spec, n_max)
    reports = []
    for r in range(1, r_max + 1):
        for n in range(1, n_max + 1):
            lhs = convolution_oracle(window, r, n)
            rhs = convolution_closed(spec, r, n)
            reports.append(ConvolutionReport(r, n, lhs, rhs, lhs == rhs))
    return reports
