"""Finite-field subspace enumeration oracle.

Counts m-dimensional subspaces of F_q^n and intersection-pattern pairs by
direct enumeration over canonical reduced-row-echelon bases, certifying the
Gaussian-binomial count and the q**(i*i)-weighted pair-count formula.

Supported fields: F_2, F_3, F_5 (prime) and F_4 = F_2[t]/(t^2+t+1), with
elements encoded as 0..q-1 (for F_4, the code is the bit pattern of the
polynomial, so 2 = t and 3 = t+1).  Ambient dimension is capped at 4: that
is already enough to certify the combinatorics, and enumeration cost grows
as q**(m(n-m)) per pivot pattern.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from ..errors import InvalidParams, ResourceLimit
from ..qseries import q_binomial

SUPPORTED_Q = (2, 3, 4, 5)
MAX_N = 4


class SmallField:
    """Arithmetic tables for one of the supported small fields."""

    def __init__(self, q: int):
        if q not in SUPPORTED_Q:
            raise ResourceLimit(f"supported field orders are {SUPPORTED_Q}, got {q}")
        self.q = q
        if q == 4:
            # F_2[t]/(t^2 + t + 1): carry-less multiply, then reduce
            def mul(a: int, b: int) -> int:
                acc = 0
                for bit in range(2):
                    if b >> bit & 1:
                        acc ^= a << bit
                for bit in (3, 2):
                    if acc >> bit & 1:
                        acc ^= 0b111 << (bit - 2)
                return acc

            self.add_table = [[a ^ b for b in range(4)] for a in range(4)]
            self.mul_table = [[mul(a, b) for b in range(4)] for a in range(4)]
            self.neg_table = [a for a in range(4)]
        else:
            self.add_table = [[(a + b) % q for b in range(q)] for a in range(q)]
            self.mul_table = [[(a * b) % q for b in range(q)] for a in range(q)]
            self.neg_table = [(-a) % q for a in range(q)]
        self.inv_table = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self.mul_table[a][b] == 1:
                    self.inv_table[a] = b
                    break

    def rank(self, rows: list[list[int]]) -> int:
        """Row rank via Gaussian elimination (destructive on the copy given)."""
        mul, add, neg, inv = (self.mul_table, self.add_table,
                              self.neg_table, self.inv_table)
        rank = 0
        ncols = len(rows[0]) if rows else 0
        for col in range(ncols):
            pivot = None
            for r in range(rank, len(rows)):
                if rows[r][col]:
                    pivot = r
                    break
            if pivot is None:
                continue
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            scale = inv[rows[rank][col]]
            rows[rank] = [mul[scale][v] for v in rows[rank]]
            for r in range(len(rows)):
                if r != rank and rows[r][col]:
                    factor = neg[rows[r][col]]
                    rows[r] = [add[rows[r][j]][mul[factor][rows[rank][j]]]
                               for j in range(ncols)]
            rank += 1
            if rank == len(rows):
                break
        return rank


@lru_cache(maxsize=None)
def _field(q: int) -> SmallField:
    return SmallField(q)


@dataclass(frozen=True)
class FqSubspace:
    """A subspace of F_q^n, canonically represented by its RREF basis rows."""

    q: int
    n: int
    basis: tuple[tuple[int, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)


def enumerate_subspaces(q: int, n: int, m: int) -> list[FqSubspace]:
    """All m-dimensional subspaces of F_q^n, duplicate-free and canonical.

    Every subspace has a unique RREF basis: pick pivot columns, then fill
    the free entries (positions right of each pivot that are not pivot
    columns themselves) with arbitrary field elements.
    """
    field = _field(q)
    if n < 0 or n > MAX_N:
        raise ResourceLimit(f"subspace enumeration is capped at n <= {MAX_N}")
    if m < 0 or m > n:
        return []
    if m == 0:
        return [FqSubspace(q, n, ())]
    out = []
    for pivots in combinations(range(n), m):
        free = [(r, c) for r in range(m) for c in range(n)
                if c > pivots[r] and c not in pivots]
        for fill in product(range(q), repeat=len(free)):
            rows = [[0] * n for _ in range(m)]
            for r, p in enumerate(pivots):
                rows[r][p] = 1
            for (r, c), v in zip(free, fill):
                rows[r][c] = v
            out.append(FqSubspace(q, n, tuple(tuple(r) for r in rows)))
    return out


def _stack_rank(field: SmallField, *row_groups) -> int:
    rows = [list(r) for g in row_groups for r in g]
    if not rows:
        return 0
    return field.rank(rows)


def _unit_rows(n: int, indices) -> tuple[tuple[int, ...], ...]:
    out = []
    for i in indices:
        row = [0] * n
        row[i] = 1
        out.append(tuple(row))
    return tuple(out)


def grassmann_set(q: int, n: int, m: int, k: int, l: int) -> list[FqSubspace]:
    """The flagged Grassmannian: subspaces W with span(e_1..e_l) inside W,
    dim W = m, and dim(W, cap with span(e_(k+1)..e_n)) = m - l."""
    _check_pair_params(q, n, m, k, l)
    field = _field(q)
    lower = _unit_rows(n, range(l))
    complement = _unit_rows(n, range(k, n))
    out = []
    for w in enumerate_subspaces(q, n, m):
        if _stack_rank(field, w.basis, lower) != m:
            continue  # span(e_1..e_l) not contained in W
        inter = m + (n - k) - _stack_rank(field, w.basis, complement)
        if inter == m - l:
            out.append(w)
    return out


def intersection_dimension(a: FqSubspace, b: FqSubspace) -> int:
    if (a.q, a.n) != (b.q, b.n):
        raise InvalidParams("subspaces live in different ambient spaces")
    field = _field(a.q)
    return (a.dimension + b.dimension
            - _stack_rank(field, a.basis, b.basis))


def _check_pair_params(q: int, n: int, m: int, k: int, l: int) -> None:
    if q not in SUPPORTED_Q:
        raise ResourceLimit(f"supported field orders are {SUPPORTED_Q}, got {q}")
    if n > MAX_N or n < 0:
        raise ResourceLimit(f"pair counting is capped at n <= {MAX_N}")
    if not (0 <= m <= n and 0 <= k <= n and m + k - n <= l <= min(m, k)):
        raise InvalidParams(
            "need 0 <= m, k <= n and m+k-n <= l <= min(m, k)")


def count_intersection_pairs(q: int, n: int, m: int, k: int, l: int,
                             i: int) -> int:
    """|{(W, W') in Gr(n,m|k,l)^2 : m - dim(W cap W') = i}| by enumeration."""
    gr = grassmann_set(q, n, m, k, l)
    field = _field(q)
    count = 0
    for a in gr:
        for b in gr:
            rank = _stack_rank(field, a.basis, b.basis)
            # dim(a cap b) = 2m - rank
            if m - (2 * m - rank) == i:
                count += 1
    return count


def pair_count_formula(q: int, n: int, m: int, k: int, l: int, i: int) -> int:
    """The closed form |Gr| * q**(i*i) * [M i]_q * [N i]_q as an integer."""
    M, N = m - l, n - m - k + l
    value = (q_binomial(n - k, M, Fraction(q)) * Fraction(q) ** (i * i)
             * q_binomial(M, i, Fraction(q)) * q_binomial(N, i, Fraction(q)))
    assert value.denominator == 1
    return value.numerator
