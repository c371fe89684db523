"""Terminating hypergeometric series and the classical q-identities.

Two kinds of series are supported:

* ``basic`` -- the series r_phi_s(a1..ar; b1..bs; q, z) with the
  ((-1)^i q^binom(i,2))^(1+s-r) correction factor applied exactly as in its
  textbook definition for every (r, s).  Parameters are given either as an
  ``int``, meaning the exponent e of a q-power parameter q**e, or as an
  explicit value (Fraction / RationalFunction).
* ``classical`` -- the series r_F_s(a1..ar; b1..bs; z) with rising
  factorials; parameters are plain numbers.

A spec must be terminating: some basic upper parameter is q**(-s) (given in
exponent form) or some classical upper parameter is a nonpositive integer.
The recorded termination index is the smallest such s, and only the terms
i = 0..s exist.  Lower-parameter Pochhammers are scanned for zeros up to the
termination index only; vanishing beyond it is irrelevant.

Evaluation is exact: Fraction in for a scalar base, RationalFunction out for
the formal base.  All functions are pure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from ..errors import (
    BalanceViolation,
    NonTerminatingSeries,
    ZeroLowerParameter,
)
from .ratfunc import Q, RationalFunction, _divisors

BASIC = "basic"
CLASSICAL = "classical"


def as_base(q):
    """Normalize a base: int/Fraction scalars become Fraction, Q stays formal."""
    if isinstance(q, RationalFunction):
        return q
    if isinstance(q, bool):
        raise TypeError("q must be a rational scalar or the formal variable Q")
    if isinstance(q, int):
        q = Fraction(q)
    if isinstance(q, Fraction):
        if q == 0:
            raise ValueError("q = 0 is not a valid base")
        return q
    raise TypeError(f"cannot use {type(q).__name__} as the base q")


def _is_formal(q) -> bool:
    return isinstance(q, RationalFunction)


def _param_value(p, q):
    """The numeric/formal value of a parameter (ints are q-exponents)."""
    if isinstance(p, int):
        return q ** p
    return p


@dataclass(frozen=True)
class SeriesSpec:
    """A terminating (basic) hypergeometric series, ready for evaluation.

    ``upper``/``lower`` follow the parameter conventions described in the
    module docstring; ``argument`` is an exponent-of-q int or a value for the
    basic kind, a plain number for the classical kind.  ``base`` is ignored
    (may be None) for the classical kind.
    """

    kind: str
    upper: tuple
    lower: tuple
    argument: object
    base: object = None
    termination_index: int = field(init=False)

    def __post_init__(self):
        if self.kind not in (BASIC, CLASSICAL):
            raise ValueError(f"unknown series kind {self.kind!r}")
        if self.kind == BASIC:
            base = as_base(self.base)
            object.__setattr__(self, "base", base)
            if not _is_formal(base) and base == 1:
                raise ValueError(
                    "basic series at scalar q=1 is 0/0 termwise; evaluate "
                    "formally and take .at_one(), or use the classical kind")
            candidates = [-p for p in self.upper if isinstance(p, int) and p <= 0]
        else:
            candidates = []
            for p in self.upper:
                v = Fraction(p) if isinstance(p, int) else p
                if isinstance(v, Fraction) and v <= 0 and v.denominator == 1:
                    candidates.append(-int(v))
        if not candidates:
            raise NonTerminatingSeries(
                "no upper parameter terminates the series")
        object.__setattr__(self, "termination_index", min(candidates))


def eval_series(spec: SeriesSpec):
    """Exact finite sum of the s+1 terms of a terminating series.

    Raises ZeroLowerParameter if a lower-parameter Pochhammer vanishes at
    some term index within range.
    """
    if spec.kind == CLASSICAL:
        return _eval_classical(spec)
    q = spec.base
    if (_is_formal(q) and q == Q and isinstance(spec.argument, int)
            and all(isinstance(p, int) for p in spec.upper)
            and all(isinstance(p, int) for p in spec.lower)):
        return _eval_basic_factored(spec)
    return _eval_basic_generic(spec)


# ---------------------------------------------------------------------------
# the factored fast path: formal q, every parameter a q-power
# ---------------------------------------------------------------------------
#
# Each factor normalizes as (1-q^e) = -Phi-product for e > 0 and
# (1-q^e) = q^e * Phi-product for e < 0, so every term of the series is
# sign * q^qpow * prod_d Phi_d^{m_d} with m_d in Z.  Cyclotomics are
# irreducible and pairwise coprime, hence summing the terms over the common
# factored denominator needs exactly one gcd reduction at the very end.

def _pochhammer_factored(c: int, i: int):
    """(q**c; q)_i as (sign, qpow, {d: mult}) or None when it vanishes."""
    sign, qpow = 1, 0
    phi: dict[int, int] = {}
    for t in range(i):
        e = c + t
        if e == 0:
            return None
        if e > 0:
            sign = -sign
            ds = _divisors(e)
        else:
            qpow += e
            ds = _divisors(-e)
        for d in ds:
            phi[d] = phi.get(d, 0) + 1
    return sign, qpow, phi


def _eval_basic_factored(spec: SeriesSpec) -> RationalFunction:
    s = spec.termination_index
    uppers = spec.upper
    lowers = (1,) + spec.lower  # the implicit (q; q)_i
    corr_pow = 1 + len(spec.lower) - len(uppers)
    zexp = spec.argument

    for c in spec.lower:
        if 0 <= -c <= s - 1:
            raise ZeroLowerParameter(
                f"lower parameter q**({c}) vanishes within the "
                f"terminating range (index {s})")

    terms: list[tuple[int, int, dict[int, int]]] = []
    for i in range(s + 1):
        sign = 1 if (i * corr_pow) % 2 == 0 else -1
        qpow = comb(i, 2) * corr_pow + zexp * i
        phi: dict[int, int] = {}
        dead = False
        for c in uppers:
            f = _pochhammer_factored(c, i)
            if f is None:
                dead = True
                break
            sg, qp, ph = f
            sign *= sg
            qpow += qp
            for d, e in ph.items():
                phi[d] = phi.get(d, 0) + e
        if dead:
            continue
        for c in lowers:
            f = _pochhammer_factored(c, i)
            assert f is not None, "zero lower Pochhammer escaped the scan"
            sg, qp, ph = f
            sign *= sg
            qpow -= qp
            for d, e in ph.items():
                phi[d] = phi.get(d, 0) - e
        terms.append((sign, qpow, phi))

    if not terms:
        return RationalFunction(0)

    # common factored denominator
    den_phi: dict[int, int] = {}
    den_qpow = 0
    for _, qpow, phi in terms:
        den_qpow = max(den_qpow, -qpow)
        for d, e in phi.items():
            if -e > den_phi.get(d, 0):
                den_phi[d] = -e
    num = RationalFunction(0)
    for sign, qpow, phi in terms:
        lifted = {d: phi.get(d, 0) + den_phi.get(d, 0)
                  for d in set(phi) | set(den_phi)}
        num = num + RationalFunction.from_factored(
            sign, Fraction(1), qpow + den_qpow, lifted)
    den = RationalFunction.from_factored(1, Fraction(1), den_qpow, den_phi)
    return num / den


# ---------------------------------------------------------------------------
# generic paths
# ---------------------------------------------------------------------------

def _eval_basic_generic(spec: SeriesSpec):
    q = spec.base
    one = q ** 0
    s = spec.termination_index
    corr_pow = 1 + len(spec.lower) - len(spec.upper)
    ups = [_param_value(p, q) for p in spec.upper]
    los = [_param_value(p, q) for p in spec.lower]
    z = _param_value(spec.argument, q)

    total = one
    term = one
    qi = one  # q**(i-1) while updating term i-1 -> i
    for i in range(1, s + 1):
        num = one
        for a in ups:
            num = num * (one - a * qi)
        den = one - q ** i
        for b in los:
            f = one - b * qi
            if not f:
                raise ZeroLowerParameter(
                    f"lower parameter Pochhammer vanishes at term {i}")
            den = den * f
        if corr_pow:
            num = num * ((-qi) ** corr_pow)
        term = term * num * z / den
        total = total + term
        qi = qi * q
    return total


def _eval_classical(spec: SeriesSpec) -> Fraction:
    s = spec.termination_index
    ups = [Fraction(p) for p in spec.upper]
    los = [Fraction(p) for p in spec.lower]
    z = Fraction(spec.argument)

    total = Fraction(1)
    term = Fraction(1)
    for i in range(1, s + 1):
        num = Fraction(1)
        for a in ups:
            num *= a + (i - 1)
        den = Fraction(i)
        for b in los:
            f = b + (i - 1)
            if f == 0:
                raise ZeroLowerParameter(
                    f"lower parameter {b} vanishes at term {i}")
            den *= f
        term = term * num * z / den
        total += term
    return total


def basic_series(upper, lower, q, z):
    """Evaluate the terminating basic series r_phi_s(upper; lower; q, z)."""
    return eval_series(SeriesSpec(BASIC, tuple(upper), tuple(lower), z, q))


def classical_series(upper, lower, z=1):
    """Evaluate the terminating classical series r_F_s(upper; lower; z)."""
    return eval_series(SeriesSpec(CLASSICAL, tuple(upper), tuple(lower), z))


# ---------------------------------------------------------------------------
# q-numbers
# ---------------------------------------------------------------------------

def q_integer(n: int, q=Q):
    """The q-integer [n]_q = 1 + q + ... + q**(n-1); 0 for n = 0."""
    if n < 0:
        raise ValueError("q_integer needs n >= 0")
    q = as_base(q)
    if _is_formal(q):
        if q == Q:
            return RationalFunction(tuple([1] * n) if n else 0)
        total = q ** 0 * 0
        for j in range(n):
            total = total + q ** j
        return total
    if q == 1:
        return Fraction(n)
    return (q ** n - 1) / (q - 1)


def q_factorial(n: int, q=Q):
    """[n]_q! = [1]_q [2]_q ... [n]_q."""
    q = as_base(q)
    out = q ** 0
    for j in range(2, n + 1):
        out = out * q_integer(j, q)
    return out


def q_pochhammer(a, q, n: int):
    """(a; q)_n = (1-a)(1-aq)...(1-a q**(n-1)); 1 for n = 0."""
    if n < 0:
        raise ValueError("q_pochhammer needs n >= 0")
    q = as_base(q)
    one = q ** 0
    out = one
    qj = one
    for _ in range(n):
        out = out * (one - a * qj)
        qj = qj * q
    return out


@lru_cache(maxsize=None)
def _gaussian_coeffs(n: int, m: int) -> tuple[int, ...]:
    """Coefficient tuple of the Gaussian polynomial [n m]_q."""
    if m < 0 or m > n:
        return ()
    if m == 0 or m == n:
        return (1,)
    # Pascal: [n m] = [n-1 m-1] + q**m [n-1 m]
    a = _gaussian_coeffs(n - 1, m - 1)
    b = _gaussian_coeffs(n - 1, m)
    out = [0] * max(len(a), m + len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[m + i] += c
    return tuple(out)


def q_binomial(n: int, m: int, q=Q):
    """The q-binomial (Gaussian) coefficient [n m]_q; 0 when m > n or m < 0."""
    q = as_base(q)
    coeffs = _gaussian_coeffs(n, m)
    if _is_formal(q):
        if q == Q:
            return RationalFunction(coeffs)
        poly = RationalFunction(coeffs)
        # evaluate the polynomial at a general element of Q(q)
        acc = q ** 0 * 0
        for e, c in poly.numerator_pairs():
            acc = acc + c * q ** e
        return acc
    if not coeffs:
        return Fraction(0)
    if q == 1:
        return Fraction(comb(n, m))
    acc = Fraction(0)
    power = Fraction(1)
    for c in coeffs:
        if c:
            acc += c * power
        power *= q
    return acc


def q_binomial_inversion_identity(n: int, m: int) -> bool:
    """Check both closed alternative forms of [n m]_q as Q(q) identities.

    The forms compared against the Gaussian polynomial are
    (q^n; q^-1)_m / (q^m; q^-1)_m and
    (q^-n; q)_m / (q; q)_m * (-q^n)^m * q^(-binom(m,2)).
    """
    if not 0 <= m <= n:
        raise ValueError("needs 0 <= m <= n")
    lhs = q_binomial(n, m, Q)
    qinv = Q ** -1
    denom = q_pochhammer(Q ** m, qinv, m)
    first = q_pochhammer(Q ** n, qinv, m) / denom if denom else None
    second = (q_pochhammer(Q ** -n, Q, m) / q_pochhammer(Q, Q, m)
              * (-(Q ** n)) ** m * Q ** (-comb(m, 2)))
    if first is None:
        return False
    return lhs == first and lhs == second


# ---------------------------------------------------------------------------
# summation and transformation identities
# ---------------------------------------------------------------------------

def q_chu_vandermonde(a: int, b, c, q=Q):
    """Both sides of the q-Chu-Vandermonde summation.

    lhs = 2_phi_1(q**-a, b; c; q, c q**a / b), rhs = (c/b; q)_a / (c; q)_a.
    ``b`` and ``c`` follow the basic-kind parameter convention (int means a
    q-exponent).  Returns (lhs, rhs); the caller asserts equality.
    """
    if a < 0:
        raise ValueError("q_chu_vandermonde needs a >= 0")
    q = as_base(q)
    if isinstance(b, int) and isinstance(c, int):
        z = c + a - b
    else:
        z = _param_value(c, q) * q ** a / _param_value(b, q)
    lhs = basic_series((-a, b), (c,), q, z)
    bv, cv = _param_value(b, q), _param_value(c, q)
    den = q_pochhammer(cv, q, a)
    if not den:
        raise ZeroLowerParameter("(c; q)_a vanishes")
    rhs = q_pochhammer(cv / bv, q, a) / den
    return lhs, rhs


def sears_43(s: int, a, b, c, d, e, f, q=Q):
    """Both sides of Sears' balanced 4_phi_3 transformation.

    Requires the exact balance abc = def * q**(s-1); otherwise raises
    BalanceViolation.  Parameters follow the basic-kind convention.
    Returns (lhs, rhs); the caller asserts equality.
    """
    if s < 0:
        raise ValueError("sears_43 needs s >= 0")
    q = as_base(q)
    av, bv, cv = (_param_value(p, q) for p in (a, b, c))
    dv, ev, fv = (_param_value(p, q) for p in (d, e, f))
    if av * bv * cv != dv * ev * fv * q ** (s - 1):
        raise BalanceViolation("need a*b*c = d*e*f*q**(s-1) exactly")
    lhs = basic_series((-s, a, b, c), (d, e, f), q, 1)

    all_ints = all(isinstance(p, int) for p in (a, b, c, d, e, f))
    if all_ints:
        up = (-s, a, d - b, d - c)
        lo = (d, d + e - b - c, 1 - s + a - e)
    else:
        up = (-s, av, dv / bv, dv / cv)
        lo = (dv, dv * ev / (bv * cv), q ** (1 - s) * av / ev)
    den = q_pochhammer(ev, q, s) * q_pochhammer(dv * ev / (av * bv * cv), q, s)
    if not den:
        raise ZeroLowerParameter("a prefactor Pochhammer on the right vanishes")
    pref = (q_pochhammer(ev / av, q, s)
            * q_pochhammer(dv * ev / (bv * cv), q, s)) / den
    rhs = pref * basic_series(up, lo, q, 1)
    return lhs, rhs
