"""Angular-momentum oracle: exact squared Clebsch-Gordan coefficients.

Only squares enter the pmf decomposition, and the square of the closed-form
coupling coefficient is rational, so everything stays in Fraction.  Inputs
are half-integers given as int or Fraction.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from ..dist import Params
from ..errors import SelectionRuleViolation


def _doubled(value, name: str) -> int:
    v = Fraction(value)
    if v.denominator > 2:
        raise SelectionRuleViolation(f"{name}={value} is not a half-integer")
    return int(v * 2)


def cg_square(j1, m1, j2, m2, j3, m3) -> Fraction:
    """The squared coupling coefficient <j1 m1 j2 m2 | j3 m3>**2.

    Raises SelectionRuleViolation unless m3 = m1 + m2, the triangle
    inequality |j1-j2| <= j3 <= j1+j2 holds with j1+j2+j3 integral,
    |mi| <= ji, and every ji - mi is integral.
    """
    tj = [_doubled(j, n) for j, n in ((j1, "j1"), (j2, "j2"), (j3, "j3"))]
    tm = [_doubled(m, n) for m, n in ((m1, "m1"), (m2, "m2"), (m3, "m3"))]
    for i in range(3):
        if tj[i] < 0:
            raise SelectionRuleViolation(f"j{i + 1} must be nonnegative")
        if abs(tm[i]) > tj[i]:
            raise SelectionRuleViolation(f"|m{i + 1}| <= j{i + 1} violated")
        if (tj[i] - tm[i]) % 2:
            raise SelectionRuleViolation(
                f"j{i + 1} - m{i + 1} must be an integer")
    if tm[2] != tm[0] + tm[1]:
        raise SelectionRuleViolation("m3 = m1 + m2 violated")
    if not abs(tj[0] - tj[1]) <= tj[2] <= tj[0] + tj[1]:
        raise SelectionRuleViolation("triangle rule |j1-j2| <= j3 <= j1+j2 violated")
    if (tj[0] + tj[1] + tj[2]) % 2:
        raise SelectionRuleViolation("j1 + j2 + j3 must be an integer")

    tj1, tj2, tj3 = tj
    tm1, tm2, tm3 = tm
    f = factorial
    # all arguments below are guaranteed integral by the checks above
    delta_sq = Fraction(
        f((tj1 + tj2 - tj3) // 2) * f((tj1 - tj2 + tj3) // 2)
        * f((-tj1 + tj2 + tj3) // 2),
        f((tj1 + tj2 + tj3) // 2 + 1))
    weight = (f((tj3 + tm3) // 2) * f((tj3 - tm3) // 2)
              * f((tj1 - tm1) // 2) * f((tj1 + tm1) // 2)
              * f((tj2 - tm2) // 2) * f((tj2 + tm2) // 2))
    t_lo = max(0, (tj2 - tj3 - tm1) // 2, (tj1 + tm2 - tj3) // 2)
    t_hi = min((tj1 + tj2 - tj3) // 2, (tj1 - tm1) // 2, (tj2 + tm2) // 2)
    alt = Fraction(0)
    for t in range(t_lo, t_hi + 1):
        den = (f(t) * f((tj1 + tj2 - tj3) // 2 - t)
               * f((tj1 - tm1) // 2 - t) * f((tj2 + tm2) // 2 - t)
               * f((tj3 - tj2 + tm1) // 2 + t) * f((tj3 - tj1 - tm2) // 2 + t))
        alt += Fraction(-1 if t % 2 else 1, den)
    return (tj3 + 1) * delta_sq * weight * alt * alt


def two_row_dimension(n: int, x: int) -> int:
    """dim of the two-row component (n-x, x): binom(n,x) - binom(n,x-1)."""
    return comb(n, x) - (comb(n, x - 1) if x >= 1 else 0)


@lru_cache(maxsize=None)
def _cg_pmf_cached(n: int, m: int, k: int, l: int, x: int) -> Fraction:
    half = Fraction(1, 2)
    total = Fraction(0)
    lo = max(0, x - (n - k))
    hi = min(x, k - x, l, k - l)
    for u in range(lo, hi + 1):
        c2 = cg_square(
            half * k - u, half * k - l,
            half * (n - k), half * (n - k) - (m - l),
            half * n - x, half * n - m)
        total += Fraction(two_row_dimension(k, u), comb(k, l)) * c2
    return total


def pmf_cg_oracle(p: Params, x: int) -> Fraction:
    """p(x) assembled from squared coupling coefficients and dimensions.

    Sums dim V_(k-u,u)/binom(k,l) * c(x,u)**2 over the coupling window
    max(0, x-(n-k)) <= u <= min(x, k-x, l, k-l); an empty window gives 0,
    which is exactly the off-support case x > min(k, m).
    """
    if not 0 <= x <= min(p.m, p.n - p.m):
        raise ValueError(f"x must lie in 0..min(m, n-m), got {x}")
    return _cg_pmf_cached(p.n, p.m, p.k, p.l, x)
