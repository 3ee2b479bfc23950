"""Partial Bell polynomials B_{n,k}.

B_{n,k}(x_1, ..., x_{n-k+1}) sums, over all multi-indices alpha with
sum(alpha_i) = k and sum(i * alpha_i) = n, the monomials

    n! / (alpha_1! alpha_2! ...) * (x_1/1!)^alpha_1 * (x_2/2!)^alpha_2 * ...

Two independent evaluation routes are provided (direct enumeration of the
index set, and the binomial recurrence) so each can cross-check the other,
plus closed forms for the two argument patterns (c1, 2c2, 0, ...) and
(1!, 2!, 3!, 0, ...).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .ring import RingElement, generalized_binomial

__all__ = [
    "MultiIndex",
    "SymbolicBellPolynomial",
    "enumerate_pi",
    "bell_symbolic",
    "bell_eval",
    "bell_eval_recurrence",
    "bell_closed_two_term",
    "bell_closed_three_term",
]


@dataclass(frozen=True)
class MultiIndex:
    """Exponent vector of one B_{n,k} monomial: alpha_i parts of size i."""

    exponents: tuple
    n: int
    k: int

    def __post_init__(self):
        if len(self.exponents) != self.n - self.k + 1:
            raise ValueError(
                f"exponent vector must have length n-k+1 = {self.n - self.k + 1}, "
                f"got {len(self.exponents)}"
            )
        if any(a < 0 for a in self.exponents):
            raise ValueError("exponents must be non-negative")
        if sum(self.exponents) != self.k:
            raise ValueError(f"exponents must sum to k = {self.k}")
        if sum(i * a for i, a in enumerate(self.exponents, start=1)) != self.n:
            raise ValueError(f"weighted exponent sum must equal n = {self.n}")


def _check_nk(n: int, k: int) -> None:
    if n < 0 or k < 0:
        raise ValueError(f"n and k must be non-negative, got n={n}, k={k}")


def _check_args(n: int, k: int, xs) -> None:
    needed = n - k + 1
    if k <= n and len(xs) < needed:
        raise ValueError(
            f"argument list too short: B_({n},{k}) needs {needed} entries, got {len(xs)}"
        )


def enumerate_pi(n: int, k: int) -> list:
    """All multi-indices alpha with sum(alpha) = k and sum(i*alpha_i) = n.

    Bijective with the partitions of n into exactly k parts.  Returned in
    descending lexicographic order on the exponent vector; k > n yields the
    empty list.
    """
    _check_nk(n, k)
    if k > n:
        return []
    length = n - k + 1
    out = []
    expo = [0] * length

    def fill(pos, parts_left, weight_left):
        if parts_left == 0:
            # untouched positions are still zero
            if weight_left == 0:
                out.append(MultiIndex(tuple(expo), n, k))
            return
        if pos == length:
            return
        size = pos + 1
        # remaining parts have sizes in [size, length]
        if not parts_left * size <= weight_left <= parts_left * length:
            return
        for a in range(min(parts_left, weight_left // size), -1, -1):
            expo[pos] = a
            fill(pos + 1, parts_left - a, weight_left - a * size)
        expo[pos] = 0

    fill(0, k, n)
    return out


@dataclass(frozen=True)
class SymbolicBellPolynomial:
    """B_{n,k} as a list of (integer coefficient, MultiIndex) terms."""

    n: int
    k: int
    terms: tuple

    def evaluate(self, xs) -> RingElement:
        """Substitute xs[i-1] for x_i; extra entries beyond n-k+1 are ignored."""
        _check_args(self.n, self.k, xs)
        total = 0
        for coeff, index in self.terms:
            monomial = coeff
            for i, a in enumerate(index.exponents):
                if a:
                    monomial = monomial * xs[i] ** a
            total = total + monomial
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        rendered = []
        for coeff, index in self.terms:
            factors = [] if coeff == 1 else [str(coeff)]
            for i, a in enumerate(index.exponents, start=1):
                if a == 0:
                    continue
                factors.append(f"x{i}" if a == 1 else f"x{i}^{a}")
            rendered.append("*".join(factors) if factors else "1")
        return " + ".join(rendered)


def bell_symbolic(n: int, k: int) -> SymbolicBellPolynomial:
    """Symbolic B_{n,k}; term order follows :func:`enumerate_pi`."""
    _check_nk(n, k)
    terms = []
    for index in enumerate_pi(n, k):
        denom = 1
        for i, a in enumerate(index.exponents, start=1):
            denom *= factorial(a) * factorial(i) ** a
        terms.append((factorial(n) // denom, index))
    return SymbolicBellPolynomial(n, k, tuple(terms))


def bell_eval(n: int, k: int, xs) -> RingElement:
    """B_{n,k}(xs) by direct enumeration of the index set.

    xs must supply at least n-k+1 entries (extra ones are ignored); the
    entries may be ints, Fractions, or Polynomials.
    """
    return bell_symbolic(n, k).evaluate(xs)


def bell_eval_recurrence(n: int, k: int, xs) -> RingElement:
    """B_{n,k}(xs) via B_{n,k} = sum_i binom(n-1, i-1) x_i B_{n-i,k-1}.

    Independent of :func:`bell_eval`; the two must agree on all inputs.
    The (n, k) table is memoized per call, never globally.
    """
    _check_nk(n, k)
    _check_args(n, k, xs)
    memo = {}

    def rec(n_, k_):
        if k_ > n_:
            return 0
        if n_ == 0:
            return 1
        if k_ == 0:
            return 0
        try:
            return memo[n_, k_]
        except KeyError:
            pass
        total = 0
        for i in range(1, n_ - k_ + 2):
            total = total + generalized_binomial(n_ - 1, i - 1) * xs[i - 1] * rec(n_ - i, k_ - 1)
        memo[n_, k_] = total
        return total

    return rec(n, k)


def bell_closed_two_term(n: int, k: int, c1: RingElement, c2: RingElement) -> RingElement:
    """B_{n,k}(c1, 2*c2, 0, ...) = (n!/k!) * binom(k, n-k) * c1^(2k-n) * c2^(n-k).

    Zero whenever n - k > k, so no negative power of c1 is ever formed.
    """
    _check_nk(n, k)
    if k > n or n - k > k:
        return 0
    scale = (factorial(n) // factorial(k)) * generalized_binomial(k, n - k)
    return scale * c1 ** (2 * k - n) * c2 ** (n - k)


def bell_closed_three_term(n: int, k: int) -> int:
    """(k!/n!) * B_{n,k}(1!, 2!, 3!, 0, ...) as the closed binomial sum
    sum_l binom(k, l) * binom(l, n-k-l)."""
    _check_nk(n, k)
    total = 0
    for l in range(k + 1):
        j = n - k - l
        if j < 0:
            continue
        total += generalized_binomial(k, l) * generalized_binomial(l, j)
    return total
