"""Exact arithmetic in the rational function field Q(q).

A value is a reduced fraction of integer-coefficient polynomials in the
formal variable q.  Reduction is canonical: numerator and denominator share
no polynomial factor, their joint integer content is 1, and the denominator
has positive leading coefficient.  Equality is therefore componentwise and
exact, which is what certifying an identity "in Q(q)" requires.

Polynomials are represented internally as tuples of int coefficients in
ascending degree order with no trailing zeros; the zero polynomial is ``()``.
All numeric scalars are ``fractions.Fraction`` (exported as ExactRational).
Everything here is immutable and safe to share across threads.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd as _int_gcd

ExactRational = Fraction

_PZERO: tuple[int, ...] = ()
_PONE: tuple[int, ...] = (1,)


# ---------------------------------------------------------------------------
# integer-coefficient polynomial helpers (internal)
# ---------------------------------------------------------------------------

def _trim(cs: list[int]) -> tuple[int, ...]:
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


def _padd(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _psub(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return _trim(out)


def _pneg(a: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-c for c in a)


def _pmul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if not a or not b:
        return _PZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return tuple(out)


def _pmul_int(a: tuple[int, ...], c: int) -> tuple[int, ...]:
    if c == 0:
        return _PZERO
    if c == 1:
        return a
    return tuple(x * c for x in a)


def _pshift(a: tuple[int, ...], k: int) -> tuple[int, ...]:
    """Multiply by q**k, k >= 0."""
    if not a or k == 0:
        return a
    return (0,) * k + a


def _pcontent(a: tuple[int, ...]) -> int:
    g = 0
    for c in a:
        g = _int_gcd(g, c)
        if g == 1:
            return 1
    return g


def _pdiv_exact(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Exact quotient a // b when b divides a in Z[q]."""
    if not a:
        return _PZERO
    db = len(b) - 1
    lb = b[-1]
    rem = list(a)
    out = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        lead = rem[i]
        if lead == 0:
            continue
        coef, check = divmod(lead, lb)
        if check:
            raise ArithmeticError("non-exact polynomial division")
        out[i - db] = coef
        for j, bc in enumerate(b):
            rem[i - db + j] -= coef * bc
    if any(rem):
        raise ArithmeticError("non-exact polynomial division")
    return _trim(out)


def _ppseudo_rem(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Pseudo-remainder of a by b (up to a power of lc(b); fine for gcd)."""
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    while len(r) - 1 >= db:
        lead = r[-1]
        r = [lb * c for c in r]
        off = len(r) - 1 - db
        for j, bc in enumerate(b):
            r[off + j] -= lead * bc
        del r[-1]
        while r and r[-1] == 0:
            del r[-1]
        if not r:
            break
    return tuple(r)


def _pprimitive(a: tuple[int, ...]) -> tuple[int, ...]:
    c = _pcontent(a)
    if c > 1:
        return tuple(x // c for x in a)
    return a


def _pgcd(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """GCD in Z[q] via the primitive PRS, positive leading coefficient."""
    if not a:
        g = b
    elif not b:
        g = a
    else:
        ca, cb = _pcontent(a), _pcontent(b)
        c = _int_gcd(ca, cb)
        pa = tuple(x // ca for x in a)
        pb = tuple(x // cb for x in b)
        if len(pa) < len(pb):
            pa, pb = pb, pa
        while pb:
            r = _ppseudo_rem(pa, pb)
            pa, pb = pb, _pprimitive(r)
        g = _pmul_int(pa, c)
    if g and g[-1] < 0:
        g = _pneg(g)
    return g


def _peval(a: tuple[int, ...], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _pstr(a: tuple[int, ...], var: str = "q") -> str:
    if not a:
        return "0"
    parts: list[str] = []
    for e in range(len(a) - 1, -1, -1):
        c = a[e]
        if c == 0:
            continue
        if e == 0:
            mono = str(abs(c))
        else:
            head = "" if abs(c) == 1 else f"{abs(c)}*"
            mono = f"{head}{var}" + (f"^{e}" if e > 1 else "")
        if not parts:
            parts.append(("-" if c < 0 else "") + mono)
        else:
            parts.append(("- " if c < 0 else "+ ") + mono)
    return " ".join(parts)


@lru_cache(maxsize=None)
def _divisors(n: int) -> tuple[int, ...]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return tuple(out)


@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial."""
    num = _psub(_pshift(_PONE, n), _PONE)  # q^n - 1
    for d in _divisors(n):
        if d < n:
            num = _pdiv_exact(num, _cyclotomic(d))
    return num


class RationalFunction:
    """An element of Q(q) in canonical reduced form.

    Supports +, -, *, /, ** (integer exponents, negatives allowed), exact
    equality/hashing, and evaluation at rational points.  Mixed arithmetic
    with int and Fraction coerces the scalar into Q(q).
    """

    __slots__ = ("_num", "_den")

    def __init__(self, num=0, den=1):
        n, d = _coerce_pair(num, den)
        self._num, self._den = _normalize(n, d)

    @classmethod
    def _raw(cls, num: tuple[int, ...], den: tuple[int, ...]) -> "RationalFunction":
        """Wrap an already-reduced pair without re-normalizing."""
        self = object.__new__(cls)
        self._num = num
        self._den = den
        return self

    @classmethod
    def from_factored(cls, sign: int, coeff: Fraction, qpow: int,
                      phi_powers: dict[int, int]) -> "RationalFunction":
        """Build sign * coeff * q**qpow * prod Phi_d(q)**e_d, already reduced.

        Distinct cyclotomic factors are coprime and primitive, so splitting
        positive and negative exponents yields the canonical form directly.
        """
        num = _pmul_int(_PONE, sign * coeff.numerator)
        den = _pmul_int(_PONE, coeff.denominator)
        for d, e in phi_powers.items():
            if e > 0:
                base = _cyclotomic(d)
                for _ in range(e):
                    num = _pmul(num, base)
            elif e < 0:
                base = _cyclotomic(d)
                for _ in range(-e):
                    den = _pmul(den, base)
        if qpow > 0:
            num = _pshift(num, qpow)
        elif qpow < 0:
            den = _pshift(den, -qpow)
        if not num:
            return _RF_ZERO
        if den[-1] < 0:
            num, den = _pneg(num), _pneg(den)
        return cls._raw(num, den)

    # -- properties ---------------------------------------------------------

    @property
    def numerator_coefficients(self) -> tuple[int, ...]:
        """Numerator coefficients, ascending degree, no trailing zeros."""
        return self._num

    @property
    def denominator_coefficients(self) -> tuple[int, ...]:
        return self._den

    def numerator_pairs(self) -> list[tuple[int, int]]:
        """Sparse (exponent, coefficient) pairs, descending exponent."""
        return [(e, c) for e in range(len(self._num) - 1, -1, -1)
                if (c := self._num[e]) != 0]

    def denominator_pairs(self) -> list[tuple[int, int]]:
        return [(e, c) for e in range(len(self._den) - 1, -1, -1)
                if (c := self._den[e]) != 0]

    def is_zero(self) -> bool:
        return not self._num

    def is_polynomial(self) -> bool:
        return self._den == _PONE

    def as_fraction(self) -> Fraction:
        """Convert a degree-0 value to a Fraction; error if q appears."""
        if len(self._num) > 1 or len(self._den) > 1:
            raise ValueError("not a constant rational function")
        return Fraction(self._num[0] if self._num else 0, self._den[0])

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        o = _as_rf(other)
        if o is NotImplemented:
            return NotImplemented
        num = _padd(_pmul(self._num, o._den), _pmul(o._num, self._den))
        return _reduced(num, _pmul(self._den, o._den))

    __radd__ = __add__

    def __sub__(self, other):
        o = _as_rf(other)
        if o is NotImplemented:
            return NotImplemented
        num = _psub(_pmul(self._num, o._den), _pmul(o._num, self._den))
        return _reduced(num, _pmul(self._den, o._den))

    def __rsub__(self, other):
        o = _as_rf(other)
        if o is NotImplemented:
            return NotImplemented
        return o.__sub__(self)

    def __mul__(self, other):
        o = _as_rf(other)
        if o is NotImplemented:
            return NotImplemented
        # cross-reduce first: keeps the final gcd calls on small inputs
        g1 = _pgcd(self._num, o._den)
        g2 = _pgcd(o._num, self._den)
        n1 = self._num if g1 == _PONE else _pdiv_exact(self._num, g1)
        d2 = o._den if g1 == _PONE else _pdiv_exact(o._den, g1)
        n2 = o._num if g2 == _PONE else _pdiv_exact(o._num, g2)
        d1 = self._den if g2 == _PONE else _pdiv_exact(self._den, g2)
        num, den = _pmul(n1, n2), _pmul(d1, d2)
        if not num:
            return _RF_ZERO
        if den[-1] < 0:
            num, den = _pneg(num), _pneg(den)
        return RationalFunction._raw(num, den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _as_rf(other)
        if o is NotImplemented:
            return NotImplemented
        if not o._num:
            raise ZeroDivisionError("division by the zero rational function")
        return self.__mul__(RationalFunction._raw(*_normalize(o._den, o._num)))

    def __rtruediv__(self, other):
        o = _as_rf(other)
        if o is NotImplemented:
            return NotImplemented
        return o.__truediv__(self)

    def __neg__(self):
        return RationalFunction._raw(_pneg(self._num), self._den)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n == 0:
            return _RF_ONE
        base = self
        if n < 0:
            if not self._num:
                raise ZeroDivisionError("0**negative in Q(q)")
            base = RationalFunction._raw(*_normalize(self._den, self._num))
            n = -n
        out = _RF_ONE
        acc = base
        while n:
            if n & 1:
                out = out * acc
            acc = acc * acc if n > 1 else acc
            n >>= 1
        return out

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other):
        o = _as_rf(other)
        if o is NotImplemented:
            return NotImplemented
        return self._num == o._num and self._den == o._den

    def __hash__(self):
        # constants must hash like the equal Fraction/int
        if len(self._num) <= 1 and len(self._den) == 1:
            return hash(Fraction(self._num[0] if self._num else 0, self._den[0]))
        return hash((self._num, self._den))

    def __bool__(self):
        return bool(self._num)

    # -- evaluation ----------------------------------------------------------

    def __call__(self, point) -> Fraction:
        return self.evaluate(point)

    def evaluate(self, point) -> Fraction:
        """Evaluate at a rational point.

        The stored fraction is already reduced, so a vanishing denominator
        means the value genuinely has a pole there: hard error, no limits.
        """
        x = Fraction(point)
        den = _peval(self._den, x)
        if den == 0:
            raise ZeroDivisionError(f"denominator vanishes at q={x}")
        return _peval(self._num, x) / den

    def at_one(self) -> Fraction:
        return self.evaluate(1)

    # -- rendering -----------------------------------------------------------

    def __str__(self):
        if self.is_polynomial():
            return _pstr(self._num)
        return f"({_pstr(self._num)}) / ({_pstr(self._den)})"

    def __repr__(self):
        return f"RationalFunction({self})"


def _normalize(num: tuple[int, ...], den: tuple[int, ...]):
    if not den:
        raise ZeroDivisionError("zero denominator in Q(q)")
    if not num:
        return _PZERO, _PONE
    g = _pgcd(num, den)
    if g != _PONE:
        num = _pdiv_exact(num, g)
        den = _pdiv_exact(den, g)
    if den[-1] < 0:
        num, den = _pneg(num), _pneg(den)
    return num, den


def _reduced(num: tuple[int, ...], den: tuple[int, ...]) -> RationalFunction:
    return RationalFunction._raw(*_normalize(num, den))


def _coerce_pair(num, den):
    n = _as_rf_any(num)
    d = _as_rf_any(den)
    if not d._num:
        raise ZeroDivisionError("zero denominator in Q(q)")
    return _pmul(n._num, d._den), _pmul(n._den, d._num)


def _as_rf_any(v) -> "RationalFunction":
    if isinstance(v, tuple):
        return RationalFunction._raw(_trim(list(v)), _PONE)
    rf = _as_rf(v)
    if rf is NotImplemented:
        raise TypeError(f"cannot interpret {type(v).__name__} as an element of Q(q)")
    return rf


def _as_rf(v):
    if isinstance(v, RationalFunction):
        return v
    if isinstance(v, int):
        return RationalFunction._raw((v,) if v else _PZERO, _PONE)
    if isinstance(v, Fraction):
        num = (v.numerator,) if v.numerator else _PZERO
        return RationalFunction._raw(num, (v.denominator,))
    return NotImplemented


_RF_ZERO = RationalFunction._raw(_PZERO, _PONE)
_RF_ONE = RationalFunction._raw(_PONE, _PONE)

#: The formal variable q, generator of Q(q).
Q = RationalFunction._raw((0, 1), _PONE)
