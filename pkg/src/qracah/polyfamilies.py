"""The four hypergeometric polynomial families used by the distribution.

q-Racah, Racah, q-Hahn and Hahn (as zonal spherical values) are thin named
wrappers over the terminating-series evaluator.  Degrees and lattice points
are passed as the integers s, z (or y, i); the lattice maps mu/lambda are
internal.  Remaining parameters are exponents of q.

All functions are pure; a scalar base q = 1 is evaluated by reducing the
formal rational function and evaluating at 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import InternalMismatch, InvalidParams
from .qseries import Q, RationalFunction, as_base, basic_series, classical_series


def _basic(upper, lower, q):
    """Basic series at argument q; scalar q = 1 goes through the formal limit."""
    q = as_base(q)
    if not isinstance(q, RationalFunction) and q == 1:
        return basic_series(upper, lower, Q, 1).at_one()
    return basic_series(upper, lower, q, 1)


@dataclass(frozen=True)
class QRacahParams:
    """Degree s, lattice point z, and exponent-form parameters a, b, c, d."""

    s: int
    z: int
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.s < 0 or self.z < 0:
            raise InvalidParams("q-Racah needs degree s >= 0 and lattice z >= 0")


def q_racah(p: QRacahParams, q=Q):
    """R_s(mu(z); a, b, c, d; q), a terminating 4_phi_3 at argument q."""
    return _basic(
        (-p.s, p.a + p.b + p.s + 1, -p.z, p.c + p.d + p.z + 1),
        (p.a + 1, p.b + p.d + 1, p.c + 1),
        q)


@dataclass(frozen=True)
class RacahParams:
    """Degree s, lattice point y, and integer parameters alpha..delta."""

    s: int
    y: int
    alpha: int
    beta: int
    gamma: int
    delta: int

    def __post_init__(self):
        if self.s < 0 or self.y < 0:
            raise InvalidParams("Racah needs degree s >= 0 and lattice y >= 0")


def racah(p: RacahParams) -> Fraction:
    """R_s(lambda(y); alpha, beta, gamma, delta), a terminating 4_F_3 at 1."""
    return classical_series(
        (-p.s, p.s + p.alpha + p.beta + 1, -p.y, p.y + p.gamma + p.delta + 1),
        (p.alpha + 1, p.beta + p.delta + 1, p.gamma + 1),
        1)


def q_hahn(d: int, z: int, alpha: int, beta: int, cap: int, q=Q):
    """Q_d(q**-z; alpha, beta, cap; q), a terminating 3_phi_2 at argument q.

    ``cap`` is the lattice size D; requires 0 <= d <= D.
    """
    if not 0 <= d <= cap:
        raise InvalidParams("q-Hahn needs 0 <= d <= D")
    if z < 0:
        raise InvalidParams("q-Hahn needs z >= 0")
    return _basic((-z, -d, alpha + beta + d + 1), (alpha + 1, -cap), q)


def _check_spherical_args(x: int, i: int, n: int, m: int):
    if not 0 <= m <= n - m:
        raise InvalidParams("spherical values need 0 <= m <= n - m")
    if not (0 <= x <= m and 0 <= i <= m):
        raise InvalidParams("spherical values need 0 <= x, i <= m")


def spherical_value(x: int, i: int, n: int, m: int, q=Q):
    """Zonal spherical value omega(x; i; n, m; q) on the double coset K_i.

    Equals the q-Hahn evaluation
    3_phi_2(q**-i, q**-x, q**(x-n-1); q**-m, q**(m-n); q, q).
    """
    _check_spherical_args(x, i, n, m)
    return _basic((-i, -x, x - n - 1), (-m, m - n), q)


def spherical_value_limit(x: int, i: int, n: int, m: int) -> Fraction:
    """The q -> 1 spherical value omega_(n-x,x)(i), cross-checked two ways.

    Computes both the terminating 3_F_2 form and the alternating binomial
    sum; raises InternalMismatch if they ever disagree (they are two printed
    expressions for one quantity, so disagreement is an implementation bug).
    """
    _check_spherical_args(x, i, n, m)
    series_form = classical_series((-i, -x, x - n - 1), (-m, m - n), 1)
    acc = Fraction(0)
    for r in range(0, min(i, x) + 1):
        term = comb(x, r) * comb(m - x, i - r) * comb(n - m - x, i - r)
        acc += term if r % 2 == 0 else -term
    sum_form = acc / (comb(m, i) * comb(n - m, i))
    if series_form != sum_form:
        raise InternalMismatch(
            f"spherical value forms disagree at (x={x}, i={i}, n={n}, m={m}): "
            f"{series_form} vs {sum_form}")
    return series_form
