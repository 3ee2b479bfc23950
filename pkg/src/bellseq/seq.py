"""Sequences built from partial Bell polynomials.

The central object is the family

    y_0 = 1,
    y_n = sum_{k=1..n} binom(a*n + b*k, k-1) * (k-1)!/n! * B_{n,k}(1!c_1, 2!c_2, ...)

parameterized by integers (a, b), not both zero, and a finite coefficient
list c.  Named presets cover Fibonacci, Tribonacci, Jacobsthal (polynomial
ring), Catalan, Motzkin, and the Fuss-Catalan family, and `decompose`
expresses an arbitrary constant-coefficient linear recurrence sequence as a
fixed linear combination of shifted y values (the a=0, b=1 member).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .bellpoly import bell_eval
from .ring import Polynomial, RingElement, X, generalized_binomial, normalized

__all__ = [
    "BellSequenceSpec",
    "SequenceWindow",
    "RecurrenceSpec",
    "RewrittenFormUndefined",
    "PRESET_NAMES",
    "bell_transform",
    "bell_transform_rewritten",
    "preset",
    "fuss_catalan_closed",
    "decompose",
    "binomial_sum_fibonacci",
    "binomial_double_sum_tribonacci",
    "jacobsthal_closed",
]


class RewrittenFormUndefined(ValueError):
    """The k-indexed rewrite of y_n divides by a*n + b*k + 1, which vanished."""

    def __init__(self, n: int, k: int):
        super().__init__(f"rewritten form undefined at (n={n}, k={k}): a*n + b*k + 1 == 0")
        self.n = n
        self.k = k


@dataclass(frozen=True)
class BellSequenceSpec:
    """The triple (a, b, c) defining one sequence of the family.

    c is 1-indexed and finite; entries past the end are zero.  The ring tag
    is derived from c: "polynomial" when any entry is a Polynomial.
    """

    a: int
    b: int
    c: tuple
    ring: str = field(default="", compare=False)

    def __post_init__(self):
        if not isinstance(self.a, int) or not isinstance(self.b, int):
            raise TypeError("a and b must be integers")
        if self.a == 0 and self.b == 0:
            raise ValueError("a and b must not both be zero")
        object.__setattr__(self, "c", tuple(self.c))
        for cj in self.c:
            if not isinstance(cj, (int, Fraction, Polynomial)) or isinstance(cj, bool):
                raise TypeError(f"exact coefficient expected, got {cj!r}")
        tag = "polynomial" if any(isinstance(cj, Polynomial) for cj in self.c) else "rational"
        if self.ring and self.ring != tag:
            raise ValueError(f"ring tag {self.ring!r} does not match coefficients ({tag})")
        object.__setattr__(self, "ring", tag)

    def scaled_args(self, length: int) -> list:
        """The Bell-polynomial argument list (1!c_1, 2!c_2, ...), zero-padded."""
        args = [factorial(j) * cj for j, cj in enumerate(self.c, start=1)]
        if len(args) < length:
            args.extend([0] * (length - len(args)))
        return args


@dataclass(frozen=True)
class SequenceWindow:
    """Values y_0..y_N with the convention y_n = 0 for n < 0."""

    values: tuple
    spec: BellSequenceSpec | None = None

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if not self.values:
            raise ValueError("window must contain at least y_0")
        if self.spec is not None and self.values[0] != 1:
            raise ValueError("y_0 must be 1")

    def __len__(self):
        return len(self.values)

    @property
    def last_index(self) -> int:
        return len(self.values) - 1

    def value_at(self, n: int) -> RingElement:
        """y_n, with y at negative index equal to 0."""
        if n < 0:
            return 0
        if n > self.last_index:
            raise IndexError(f"window covers 0..{self.last_index}, asked for {n}")
        return self.values[n]

    def shifted(self, offset: int, count: int) -> list:
        """The count values y_{n-offset} for n = 0..count-1."""
        if count - 1 - offset > self.last_index:
            raise IndexError(
                f"window covers 0..{self.last_index}, shift by {offset} needs {count - 1 - offset}"
            )
        return [self.value_at(n - offset) for n in range(count)]


@dataclass(frozen=True)
class RecurrenceSpec:
    """a_n = c_1 a_{n-1} + ... + c_d a_{n-d} with initial values a_0..a_{d-1}."""

    coefficients: tuple
    initial: tuple

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(self.coefficients))
        object.__setattr__(self, "initial", tuple(self.initial))
        if len(self.coefficients) < 1:
            raise ValueError("recurrence order d must be at least 1")
        if len(self.coefficients) != len(self.initial):
            raise ValueError(
                f"coefficients and initial values must have equal length, "
                f"got {len(self.coefficients)} and {len(self.initial)}"
            )
        for v in self.coefficients + self.initial:
            if not isinstance(v, (int, Fraction, Polynomial)) or isinstance(v, bool):
                raise TypeError(f"exact coefficient expected, got {v!r}")

    @property
    def order(self) -> int:
        return len(self.coefficients)


def bell_transform(spec: BellSequenceSpec, N: int) -> SequenceWindow:
    """y_0..y_N of the family defined by spec, exactly."""
    if N < 0:
        raise ValueError("N must be non-negative")
    args = spec.scaled_args(N + 1)
    values = [1]
    for n in range(1, N + 1):
        total = 0
        nfact = factorial(n)
        for k in range(1, n + 1):
            binom = generalized_binomial(spec.a * n + spec.b * k, k - 1)
            if binom == 0:
                continue
            total = total + Fraction(binom * factorial(k - 1), nfact) * bell_eval(n, k, args)
        values.append(normalized(total))
    return SequenceWindow(tuple(values), spec)


def bell_transform_rewritten(spec: BellSequenceSpec, N: int) -> SequenceWindow:
    """The k-from-0 rewrite of the same family:

        y_n = sum_{k=0..n} binom(a*n+b*k+1, k) / (a*n+b*k+1) * k!/n! * B_{n,k}(...)

    Defined only when a*n + b*k + 1 != 0 on the whole 0 <= k <= n <= N range;
    the first offending pair (in lexicographic order) is reported otherwise.
    Where defined it equals :func:`bell_transform`.
    """
    if N < 0:
        raise ValueError("N must be non-negative")
    for n in range(N + 1):
        for k in range(n + 1):
            if spec.a * n + spec.b * k + 1 == 0:
                raise RewrittenFormUndefined(n, k)
    args = spec.scaled_args(N + 1)
    values = []
    for n in range(N + 1):
        total = 0
        nfact = factorial(n)
        for k in range(n + 1):
            t = spec.a * n + spec.b * k + 1
            binom = generalized_binomial(t, k)
            if binom == 0:
                continue
            total = total + Fraction(binom * factorial(k), t * nfact) * bell_eval(n, k, args)
        values.append(normalized(total))
    return SequenceWindow(tuple(values), spec)


PRESET_NAMES = ("fibonacci", "tribonacci", "jacobsthal", "catalan", "motzkin", "fuss_catalan")


def preset(name: str, b: int | None = None) -> tuple:
    """Named (spec, offset) pairs for the classical sequences.

    The offset relates the classical sequence to y (classical_n = y_{n-offset}
    with zeros at negative index); fuss_catalan takes the required integer
    parameter b != 0.
    """
    if name == "fuss_catalan":
        if b is None:
            raise ValueError("fuss_catalan requires parameter b")
        if b == 0:
            raise ValueError("fuss_catalan requires b != 0")
        return BellSequenceSpec(0, b, (1,)), 0
    if b is not None:
        raise ValueError(f"preset {name!r} takes no parameter")
    if name == "fibonacci":
        return BellSequenceSpec(0, 1, (1, 1)), 1
    if name == "tribonacci":
        return BellSequenceSpec(0, 1, (1, 1, 1)), 2
    if name == "jacobsthal":
        return BellSequenceSpec(0, 1, (Polynomial((1,)), 2 * X)), 1
    if name == "catalan":
        return BellSequenceSpec(1, 0, (2, 1)), -1
    if name == "motzkin":
        return BellSequenceSpec(1, 0, (1, 1)), 0
    raise ValueError(f"unknown preset {name!r}; choose from {', '.join(PRESET_NAMES)}")


def fuss_catalan_closed(b: int, n: int) -> RingElement:
    """binom(b*n, n-1) * (n-1)!/n!, the closed form of the fuss_catalan preset."""
    if b == 0:
        raise ValueError("b must be nonzero")
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return 1
    return normalized(Fraction(generalized_binomial(b * n, n - 1), n))


def decompose(rec: RecurrenceSpec, N: int) -> tuple:
    """Express the recurrence sequence as sum_j lambda_j * y_{n-j}.

    y is the a=0, b=1 transform of the recurrence coefficients; the lambdas
    solve the unit-lower-triangular system a_i = sum_j lambda_j y_{i-j} for
    i < d.  Returns (lambdas, reconstruction window over 0..N).
    """
    d = rec.order
    if N < d - 1:
        raise ValueError(f"N must be at least d-1 = {d - 1}")
    y = bell_transform(BellSequenceSpec(0, 1, rec.coefficients), N)
    lambdas = []
    for i in range(d):
        acc = rec.initial[i]
        for j in range(i):
            acc = acc - lambdas[j] * y.value_at(i - j)
        lambdas.append(normalized(acc))
    values = []
    for n in range(N + 1):
        acc = 0
        for j in range(d):
            if n - j >= 0:
                acc = acc + lambdas[j] * y.value_at(n - j)
        values.append(normalized(acc))
    return tuple(lambdas), SequenceWindow(tuple(values))


def binomial_sum_fibonacci(n: int) -> int:
    """f_n as the closed sum of binom(k, n-1-k) over k = 0..n-1."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return sum(generalized_binomial(k, n - 1 - k) for k in range(n))


def binomial_double_sum_tribonacci(n: int) -> int:
    """t_n as the closed double sum over binom(k, l) * binom(l, n-2-k-l)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    total = 0
    for k in range(n - 1):
        for l in range(k + 1):
            j = n - 2 - k - l
            if j < 0:
                continue
            total += generalized_binomial(k, l) * generalized_binomial(l, j)
    return total


def jacobsthal_closed(n: int) -> Polynomial:
    """J_n(x) as the closed sum of binom(k, n-1-k) * (2x)^(n-1-k)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    total = Polynomial()
    two_x = 2 * X
    for k in range(n):
        binom = generalized_binomial(k, n - 1 - k)
        if binom:
            total = total + binom * two_x ** (n - 1 - k)
    return total
