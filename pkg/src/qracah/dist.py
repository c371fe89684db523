"""The q-Racah probability distribution on {0, ..., m}.

Presentations implemented:

* ``pmf_q``            -- canonical path, a prefactor times one q-Racah
                          polynomial value.
* ``pmf_q_hahn_form``  -- independent verifier: prefactor times a sum of
                          q-Hahn (zonal spherical) values weighted by
                          q**(i*i) and two q-binomials.  The sum runs to
                          min(M, N): the factor [M i][N i] kills everything
                          beyond, which is also what makes the x-indexed
                          partial sums close up.
* ``cdf_q``            -- the closed 4_phi_3 form, never a running sum.
* ``pmf_limit`` / ``pmf_limit_hahn_form`` / ``cdf_limit`` -- the q -> 1
                          law via Racah / Hahn / closed 4_F_3 forms.

The verifier paths share nothing with the canonical path beyond the series
kernel, so the identity tests are not tautologies.  Everything is pure and
exact: Fraction for scalar q, RationalFunction for formal q.  Scalar q = 1
inputs are evaluated by reducing the formal value at 1 (pmf_limit is the
separately-coded limit law, kept independent for the coherence tests).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterator

from .errors import DenominatorZero, InternalMismatch, InvalidParams
from .polyfamilies import (
    QRacahParams,
    RacahParams,
    q_racah,
    racah,
    spherical_value,
    spherical_value_limit,
)
from .qseries import (
    Q,
    RationalFunction,
    as_base,
    basic_series,
    classical_series,
    q_binomial,
    q_integer,
)


def _check_relaxed(n: int, m: int, k: int, l: int) -> None:
    for name, v in (("n", n), ("m", m), ("k", k), ("l", l)):
        if not isinstance(v, int) or v < 0:
            raise InvalidParams(f"{name} must be a nonnegative integer, got {v!r}")
    if m > n:
        raise InvalidParams(f"m <= n violated: m={m}, n={n}")
    if k > n:
        raise InvalidParams(f"k <= n violated: k={k}, n={n}")
    if l < m + k - n:
        raise InvalidParams(f"m+k-n <= l violated: l={l}, m+k-n={m + k - n}")
    if l > min(m, k):
        raise InvalidParams(f"l <= min(m, k) violated: l={l}, min={min(m, k)}")


@dataclass(frozen=True)
class Params:
    """A validated parameter point (n, m, k, l) with m <= floor(n/2).

    Derived quantities: M = m - l and N = n - m - k + l; the four counts
    k - l, l, M, N are nonnegative and sum to n.  ``normalized_from``
    records the original tuple when the constructor folded a relaxed tuple
    through the (m, l) -> (n - m, k - l) symmetry.
    """

    n: int
    m: int
    k: int
    l: int
    normalized_from: tuple[int, int, int, int] | None = field(
        default=None, compare=False, repr=False)

    def __post_init__(self):
        _check_relaxed(self.n, self.m, self.k, self.l)
        if self.m > self.n // 2:
            raise InvalidParams(
                f"m <= floor(n/2) violated: m={self.m}, n={self.n} "
                "(normalize_params folds such tuples by symmetry)")

    @property
    def M(self) -> int:
        return self.m - self.l

    @property
    def N(self) -> int:
        return self.n - self.m - self.k + self.l

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n, self.m, self.k, self.l)


def normalize_params(n: int, m: int, k: int, l: int) -> Params:
    """Build Params from any relaxed tuple, folding m > n/2 by symmetry.

    The distribution is invariant under (m, l) -> (n - m, k - l), so tuples
    with m > floor(n/2) are mapped to their mirror; ``normalized_from``
    keeps the audit trail.
    """
    _check_relaxed(n, m, k, l)
    if m <= n // 2:
        return Params(n, m, k, l)
    return Params(n, n - m, k, k - l, normalized_from=(n, m, k, l))


def parameter_tuples(nmax: int, nmin: int = 0) -> Iterator[Params]:
    """All valid parameter points with nmin <= n <= nmax, in a fixed order."""
    for n in range(nmin, nmax + 1):
        for m in range(n // 2 + 1):
            for k in range(n + 1):
                for l in range(max(0, m + k - n), min(m, k) + 1):
                    yield Params(n, m, k, l)


class Regime(Enum):
    """Which positivity theorem (if any) covers a given q."""

    PRIME_POWER = "prime-power"
    ONE = "q=1"
    REAL = "real"
    FORMAL = "formal"


def is_prime_power(v: int) -> bool:
    if v < 2:
        return False
    p = 2
    while p * p <= v:
        if v % p == 0:
            while v % p == 0:
                v //= p
            return v == 1
        p += 1
    return True  # v itself prime


def classify_regime(q) -> Regime:
    if isinstance(q, RationalFunction):
        return Regime.FORMAL
    q = Fraction(q)
    if q == 1:
        return Regime.ONE
    if q.denominator == 1 and is_prime_power(q.numerator):
        return Regime.PRIME_POWER
    return Regime.REAL


def _check_x(p: Params, x: int) -> None:
    # evaluating outside {0..m} is a caller bug, not a zero
    if not 0 <= x <= p.m:
        raise InvalidParams(f"x must lie in 0..m={p.m}, got {x}")


# ---------------------------------------------------------------------------
# pmf / cdf at general q
# ---------------------------------------------------------------------------

def _pmf_q_core(n: int, m: int, k: int, l: int, x: int, q):
    M = m - l
    pref = (q_binomial(n - k, M, q)
            * q_binomial(n, x, q) / q_binomial(n, m, q)
            * q ** x
            * q_integer(n - 2 * x + 1, q) / q_integer(n - x + 1, q))
    poly = q_racah(
        QRacahParams(s=x, z=M, a=-m - 1, b=-n + m - 1, c=-n + k - 1, d=0), q)
    return pref * poly


@lru_cache(maxsize=None)
def _pmf_q_formal(n: int, m: int, k: int, l: int, x: int) -> RationalFunction:
    return _pmf_q_core(n, m, k, l, x, Q)


def pmf_q(p: Params, x: int, q=Q):
    """p(x; q) via the q-Racah presentation (the canonical path)."""
    _check_x(p, x)
    return _dispatch(_pmf_q_formal, _pmf_q_core, p, x, q)


def _pmf_hahn_core(n: int, m: int, k: int, l: int, x: int, q):
    M, N = m - l, n - m - k + l
    one = q ** 0
    pref = (q ** x * q_binomial(n, x, q) / q_binomial(n, m, q)
            * q_integer(n - 2 * x + 1, q) / q_integer(n - x + 1, q))
    total = one * 0
    for i in range(0, min(M, N) + 1):
        total = total + (q ** (i * i)
                         * q_binomial(M, i, q) * q_binomial(N, i, q)
                         * spherical_value(x, i, n, m, q))
    return pref * total


@lru_cache(maxsize=None)
def _pmf_hahn_formal(n: int, m: int, k: int, l: int, x: int) -> RationalFunction:
    return _pmf_hahn_core(n, m, k, l, x, Q)


def pmf_q_hahn_form(p: Params, x: int, q=Q):
    """p(x; q) via the q-Hahn presentation (independent verifier path)."""
    _check_x(p, x)
    return _dispatch(_pmf_hahn_formal, _pmf_hahn_core, p, x, q)


def _cdf_q_core(n: int, m: int, k: int, l: int, x: int, q):
    M, N = m - l, n - m - k + l
    pref = (q_binomial(n - k, M, q)
            * q_binomial(n, x, q) / q_binomial(n, m, q))
    ser = basic_series((-x, x - n, -M, -N), (-m, m - n, -(M + N)), q, 1)
    return pref * ser


@lru_cache(maxsize=None)
def _cdf_q_formal(n: int, m: int, k: int, l: int, x: int) -> RationalFunction:
    return _cdf_q_core(n, m, k, l, x, Q)


def cdf_q(p: Params, x: int, q=Q):
    """P[X <= x] as the closed terminating 4_phi_3, not a running sum."""
    _check_x(p, x)
    return _dispatch(_cdf_q_formal, _cdf_q_core, p, x, q)


def _dispatch(formal_cached, core, p: Params, x: int, q):
    q = as_base(q)
    if isinstance(q, RationalFunction):
        if q == Q:
            return formal_cached(p.n, p.m, p.k, p.l, x)
        return core(p.n, p.m, p.k, p.l, x, q)
    if q == 1:
        return formal_cached(p.n, p.m, p.k, p.l, x).at_one()
    return core(p.n, p.m, p.k, p.l, x, q)


def pmf_q_relaxed(n: int, m: int, k: int, l: int, x: int, q=Q):
    """p(x; q) for a relaxed tuple (m <= n allowed), x in 0..min(m, n-m).

    This is the raw defining formula; it exists so the m -> n - m symmetry
    can be tested against the normalized evaluation.
    """
    _check_relaxed(n, m, k, l)
    if not 0 <= x <= min(m, n - m):
        raise InvalidParams(f"x must lie in 0..min(m, n-m), got {x}")
    q = as_base(q)
    if not isinstance(q, RationalFunction) and q == 1:
        return _pmf_q_core(n, m, k, l, x, Q).at_one()
    return _pmf_q_core(n, m, k, l, x, q)


# ---------------------------------------------------------------------------
# the q -> 1 limit law
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _pmf_limit_cached(n: int, m: int, k: int, l: int, x: int) -> Fraction:
    M = m - l
    pref = (Fraction(comb(n - k, M) * comb(n, x), comb(n, m))
            * Fraction(n - 2 * x + 1, n - x + 1))
    poly = racah(RacahParams(
        s=x, y=M, alpha=-m - 1, beta=-n + m - 1, gamma=-n + k - 1, delta=0))
    return pref * poly


def pmf_limit(p: Params, x: int) -> Fraction:
    """p(x) = lim_{q -> 1} p(x; q) via the Racah presentation."""
    _check_x(p, x)
    return _pmf_limit_cached(p.n, p.m, p.k, p.l, x)


def pmf_limit_hahn_form(p: Params, x: int) -> Fraction:
    """p(x) via the Hahn presentation (independent verifier path)."""
    _check_x(p, x)
    n, m, k, l = p.as_tuple()
    M, N = p.M, p.N
    pref = Fraction(comb(n, x), comb(n, m)) * Fraction(n - 2 * x + 1, n - x + 1)
    total = Fraction(0)
    for i in range(0, min(M, N) + 1):
        total += comb(M, i) * comb(N, i) * spherical_value_limit(x, i, n, m)
    return pref * total


def cdf_limit(p: Params, x: int) -> Fraction:
    """P[X <= x] at q = 1 as the closed terminating 4_F_3."""
    _check_x(p, x)
    n, m, k, l = p.as_tuple()
    M, N = p.M, p.N
    pref = Fraction(comb(n - k, M) * comb(n, x), comb(n, m))
    return pref * classical_series(
        (-x, x - n, -M, -N), (-m, m - n, -(M + N)), 1)


def support_limit(p: Params) -> frozenset[int]:
    """The support of the q -> 1 law: {0, ..., min(k, m)}."""
    return frozenset(range(0, min(p.k, p.m) + 1))


def recurrence_residual(p: Params, x: int) -> Fraction:
    """Left-hand side of the three-term recurrence at x; contract: 0.

    The relation is the standard Racah three-term recurrence transported
    to the pmf: with d(x) = (n-2x+1)/(n-x+1) * binom(n, x) the dimension
    of the two-row component, it reads

        a_x p(x+1)/d(x+1) - (a_x + c_x - M N) p(x)/d(x) + c_x p(x-1)/d(x-1) = 0,

    where p(-1) and p(m+1) count as 0 (their addends are dropped, which
    also covers d(m+1) = 0 at n = 2m+1).  The coefficient a_x carries
    (n-2x)(n-2x+1) in its denominator, so n-2x in {0, -1} is a genuine
    degeneracy of the relation: DenominatorZero.
    """
    _check_x(p, x)
    n, m, k, l = p.as_tuple()
    if n - 2 * x in (0, -1):
        raise DenominatorZero(
            f"recurrence coefficient a_x undefined at n-2x={n - 2 * x}")
    M, N = p.M, p.N
    a_x = Fraction((m - x) * (n - m - x) * (n - k - x) * (n - x + 1),
                   (n - 2 * x) * (n - 2 * x + 1))
    c_x = Fraction(x * (x - k - 1) * (m - x + 1) * (n - m - x + 1),
                   (n - 2 * x + 1) * (n - 2 * x + 2))
    res = Fraction(0)
    if x + 1 <= m:
        res += (a_x * Fraction(n - x, n - 2 * x - 1) / comb(n, x + 1)
                * pmf_limit(p, x + 1))
    res -= ((a_x + c_x - M * N) * Fraction(n - x + 1, n - 2 * x + 1)
            / comb(n, x) * pmf_limit(p, x))
    if x - 1 >= 0:
        res += (c_x * Fraction(n - x + 2, n - 2 * x + 3) / comb(n, x - 1)
                * pmf_limit(p, x - 1))
    return res


def verify_cor23(n: int, M: int, N: int, m: int, x: int) -> bool:
    """Check the x-indexed partial-sum identity in Q(q).

    Sum_{u<=x} q**u [n u] [n-2u+1]/[n-u+1] 4phi3(q**-u, q**(u-n-1), ...)
    equals [n x] 4phi3(q**-x, q**(x-n), ...); parameters must come from a
    valid (n, m, k, l) point, i.e. m <= n/2, 0 <= M <= m, 0 <= N <= n - m.
    """
    if not (0 <= m <= n // 2 and 0 <= M <= m and 0 <= N <= n - m):
        raise InvalidParams("(n, M, N, m) not derivable from a valid tuple")
    if not 0 <= x <= m:
        raise InvalidParams(f"x must lie in 0..m={m}, got {x}")
    lower = (-m, m - n, -(M + N))
    lhs = RationalFunction(0)
    for u in range(x + 1):
        lhs = lhs + (Q ** u * q_binomial(n, u, Q)
                     * q_integer(n - 2 * u + 1, Q) / q_integer(n - u + 1, Q)
                     * basic_series((-u, u - n - 1, -M, -N), lower, Q, 1))
    rhs = (q_binomial(n, x, Q)
           * basic_series((-x, x - n, -M, -N), lower, Q, 1))
    return lhs == rhs


# ---------------------------------------------------------------------------
# tables and scans
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DistTable:
    """pmf and cdf over x = 0..m at one parameter point and one q."""

    params: Params
    q: object  # Fraction, or the formal Q
    regime: Regime
    pmf: tuple
    cdf: tuple

    def mean(self):
        acc = self.cdf[-1] * 0
        for x, v in enumerate(self.pmf):
            acc = acc + x * v
        return acc

    def variance(self):
        mu = self.mean()
        acc = self.cdf[-1] * 0
        for x, v in enumerate(self.pmf):
            acc = acc + x * x * v
        return acc - mu * mu


def dist_table(p: Params, q=Q) -> DistTable:
    """Build the exact pmf/cdf table, with its defining invariants checked.

    q = 1 produces the limit law.  In the regimes where positivity is a
    theorem (prime powers and q = 1) a negative entry is an internal error.
    """
    q = as_base(q)
    regime = classify_regime(q)
    if regime is Regime.ONE:
        pmf = tuple(pmf_limit(p, x) for x in range(p.m + 1))
        cdf = tuple(cdf_limit(p, x) for x in range(p.m + 1))
    else:
        pmf = tuple(pmf_q(p, x, q) for x in range(p.m + 1))
        cdf = tuple(cdf_q(p, x, q) for x in range(p.m + 1))
    one = q ** 0
    if cdf[-1] != one:
        raise InternalMismatch(f"cdf at x=m is {cdf[-1]}, expected 1")
    prev = one * 0
    for x in range(p.m + 1):
        if cdf[x] - prev != pmf[x]:
            raise InternalMismatch(f"cdf increment mismatch at x={x}")
        prev = cdf[x]
    if regime in (Regime.PRIME_POWER, Regime.ONE):
        for x, v in enumerate(pmf):
            if v < 0:
                raise InternalMismatch(
                    f"negative pmf {v} at x={x} in proven regime {regime.value}")
    return DistTable(params=p, q=q, regime=regime, pmf=pmf, cdf=cdf)


@dataclass(frozen=True)
class ScanPoint:
    q: Fraction
    min_pmf: Fraction
    argmin_x: int


def positivity_scan(p: Params, q_grid) -> list[ScanPoint]:
    """Minimum pmf value over x for each grid q; reported, never asserted.

    q = 1 entries route to the limit law.  This is an empirical probe of
    the open positivity range, so no positivity is assumed or enforced.
    """
    out = []
    for q in q_grid:
        q = Fraction(q)
        if q <= 0:
            raise InvalidParams("positivity scan needs positive rational q")
        if q == 1:
            values = [pmf_limit(p, x) for x in range(p.m + 1)]
        else:
            values = [pmf_q(p, x, q) for x in range(p.m + 1)]
        best_x = min(range(p.m + 1), key=lambda x: values[x])
        out.append(ScanPoint(q=q, min_pmf=values[best_x], argmin_x=best_x))
    return out
