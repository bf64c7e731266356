"""Exact bound expressions and their comparison against integer counts.

The bounds handled here all have the shape ``a * 3**(m/3) + b`` with ``a, m``
nonnegative integers and ``b`` rational.  When ``m`` is not a multiple of 3
the value is irrational, yet every bound must be compared *exactly* against
integer set counts: the comparison clears denominators and cubes, so no
floating point ever touches a verdict.  The auxiliary functions
:func:`claim1_h` and :func:`claim1_g` are the one deliberate exception; they
are evaluated in double precision for grid positivity reporting only.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


class Comparison(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class BoundValue:
    """Exact value ``a * 3**(m/3) + b`` with ``a >= 0``, ``m >= 0``.

    ``b`` is kept as a :class:`~fractions.Fraction`; the whole value is an
    integer exactly when ``m`` is a multiple of 3 and ``b`` is integral.
    """

    a: int
    m: int
    b: Fraction

    def __post_init__(self):
        if self.a < 0 or self.m < 0:
            raise ValueError("BoundValue requires a >= 0 and m >= 0")
        object.__setattr__(self, "b", Fraction(self.b))

    @property
    def is_integer(self) -> bool:
        return self.m % 3 == 0 and (self.a * 3 ** (self.m // 3) + self.b).denominator == 1

    def exact_int(self) -> int:
        if not self.is_integer:
            raise ValueError(f"{self.render()} is not an integer")
        return int(self.a * 3 ** (self.m // 3) + self.b)

    def __float__(self) -> float:
        return self.a * 3.0 ** (self.m / 3.0) + float(self.b)

    def render(self) -> str:
        """Exact decimal string when integral, symbolic form otherwise."""
        if self.is_integer:
            return str(self.exact_int())
        head = "3^(%d/3)" % self.m if self.a == 1 else "%d*3^(%d/3)" % (self.a, self.m)
        if self.b == 0:
            return head
        return f"{head}+{self.b}" if self.b > 0 else f"{head}-{-self.b}"


def compare(bound: BoundValue, phi: int) -> Comparison:
    """Exact trichotomy of ``bound`` against the integer ``phi``.

    ``a*3**(m/3) ? (phi - b)`` is decided by cubing both sides once the
    right-hand side is known to be positive; degenerate signs are handled
    directly.  LESS means the bound is below ``phi``.
    """
    r = Fraction(phi) - bound.b
    if bound.a == 0:
        diff = -r
        return Comparison(0 if diff == 0 else (1 if diff > 0 else -1))
    if r <= 0:
        return Comparison.GREATER
    lhs = Fraction(bound.a) ** 3 * 3 ** bound.m
    rhs = r ** 3
    return Comparison(0 if lhs == rhs else (1 if lhs > rhs else -1))


# ---------------------------------------------------------------------------
# the named bounds
# ---------------------------------------------------------------------------

def t_of(n: int) -> BoundValue:
    """Tree upper bound ``3**((n-1)/3) + (n-1)/3``; integral iff n = 1 mod 3."""
    if n < 1:
        raise ValueError(f"t(n) requires n >= 1, got {n}")
    return BoundValue(1, n - 1, Fraction(n - 1, 3))


def f1_of(n: int) -> BoundValue:
    """Forest maximum; the four congruence cases, always an exact integer."""
    if n < 3:
        raise ValueError(f"f1(n) requires n >= 3, got {n}")
    if n == 5:
        return BoundValue(5, 0, Fraction(0))
    r = n % 3
    if r == 0:
        return BoundValue(1, n, Fraction(0))
    if r == 1:
        return BoundValue(4, n - 4, Fraction(0))
    return BoundValue(16, n - 8, Fraction(0))  # r == 2, n >= 8


def f2_of(n: int) -> BoundValue:
    """Forest second maximum; seven cases, always an exact integer."""
    if n < 4:
        raise ValueError(f"f2(n) requires n >= 4, got {n}")
    if n == 4:
        return BoundValue(3, 0, Fraction(0))
    if n == 5:
        return BoundValue(4, 0, Fraction(0))
    if n == 6:
        return BoundValue(6, 0, Fraction(0))
    if n == 9:
        return BoundValue(20, 0, Fraction(0))
    r = n % 3
    if r == 1:
        return BoundValue(11, n - 7, Fraction(0))
    if r == 2:
        return BoundValue(15, n - 8, Fraction(0))
    return BoundValue(64, n - 12, Fraction(0))  # r == 0, n >= 12


def conjecture_of(n: int) -> BoundValue:
    """Conjectured tree maximum for n >= 7; integral in all three cases."""
    if n < 7:
        raise ValueError(f"conjecture value requires n >= 7, got {n}")
    r = n % 3
    if r == 1:
        return t_of(n)
    if r == 2:
        return BoundValue(4, n - 5, Fraction(n - 5))
    return BoundValue(16, n - 9, Fraction(3 * n - 25))


# ---------------------------------------------------------------------------
# positivity-grid helpers (floating point, reporting-grade)
# ---------------------------------------------------------------------------

def _check_hk_domain(p, k: int) -> Fraction:
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    if not isinstance(p, Rational):
        p = Fraction(str(p))
    p = Fraction(p)
    if p < 1:
        raise ValueError(f"p must be at least 1, got {p}")
    if k == 1 and p < Fraction(5, 3):
        raise ValueError(f"for k = 1, p must be at least 5/3, got {p}")
    return p


def claim1_h(p, k: int) -> float:
    """Slack of the composite tree count below the tree bound, as a function
    of the residual-subtree size parameter ``p`` and branch count ``k``."""
    pf = float(_check_hk_domain(p, k))
    upper = 3.0 ** (pf + k + 4.0 / 3.0) + pf + k + 4.0 / 3.0
    used = (
        3.0 ** (pf + 4.0 / 3.0) + pf + 4.0 / 3.0
        + 3.0 * (3.0 ** k - 1.0) * (3.0 ** pf + pf)
        + k * 3.0 ** pf
    )
    return upper - used


def claim1_g(p, k: int) -> float:
    """Normalised form of the same slack; positive iff the dominant term of
    :func:`claim1_h` is positive."""
    pf = float(_check_hk_domain(p, k))
    return (3.0 ** (1.0 / 3.0) - 1.0 - pf / 3.0 ** pf) - k / (3.0 ** (k + 1) - 3.0)
