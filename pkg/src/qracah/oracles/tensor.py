"""Symmetric-group tensor oracle for the q -> 1 law.

Recomputes p(x) as the expectation of the isotypic projector for the
two-row component (n-x, x) of the n-fold qubit space, on the product of a
fixed |1..10..0> block with a Dicke state.  Two-row characters are
evaluated as fixed-subset-count differences: the permutation action on
j-subsets contains each two-row component (n-i, i) with i <= j exactly
once, so chi_(n-x,x)(g) = fix_x(g) - fix_(x-1)(g), and fix_j(g) depends
only on the cycle type (coefficient of t**j in prod (1 + t**len(c))).

Everything is exact; the full-group sums are embarrassingly parallel but
run sequentially here since n <= 8 keeps them in seconds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import comb, factorial
from typing import Mapping

from ..dist import Params
from ..errors import ResourceLimit
from .clebsch_gordan import two_row_dimension

MAX_TENSOR_N = 8
MAX_MATRIX_N = 5


@dataclass(frozen=True, eq=False)
class TensorState:
    """A vector in the n-qubit space with one square-rational global scale.

    The represented vector is sqrt(scale_sq) * sum_s amplitudes[s] |s>,
    over basis bitstrings s (tuples of 0/1).  States used here are unit
    vectors: norm_square() == 1.
    """

    n: int
    amplitudes: Mapping[tuple[int, ...], Fraction]
    scale_sq: Fraction

    def norm_square(self) -> Fraction:
        return self.scale_sq * sum(a * a for a in self.amplitudes.values())


def dicke_state(length: int, ones: int) -> TensorState:
    """The normalized symmetric superposition of all weight-`ones` strings."""
    if not 0 <= ones <= length:
        raise ValueError("need 0 <= ones <= length")
    amps = {}
    for pos in combinations(range(length), ones):
        s = [0] * length
        for i in pos:
            s[i] = 1
        amps[tuple(s)] = Fraction(1)
    return TensorState(length, amps, Fraction(1, comb(length, ones)))


def xi_state(p: Params) -> TensorState:
    """|1^l 0^(k-l)> tensored with the Dicke state of M ones in n-k slots."""
    n, m, k, l = p.as_tuple()
    M = p.M
    head = (1,) * l + (0,) * (k - l)
    amps = {}
    for pos in combinations(range(n - k), M):
        tail = [0] * (n - k)
        for i in pos:
            tail[i] = 1
        amps[head + tuple(tail)] = Fraction(1)
    return TensorState(n, amps, Fraction(1, comb(n - k, M)))


@lru_cache(maxsize=None)
def _fix_vector(cycle_type: tuple[int, ...], n: int) -> tuple[int, ...]:
    """fix_j for j = 0..n: setwise-fixed j-subsets of a permutation."""
    poly = [1]
    for length in cycle_type:
        new = poly + [0] * length
        for i, c in enumerate(poly):
            new[i + length] += c
        poly = new
    poly += [0] * (n + 1 - len(poly))
    return tuple(poly[: n + 1])


def _cycle_type(perm: tuple[int, ...]) -> tuple[int, ...]:
    seen = [False] * len(perm)
    lens = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        lens.append(length)
    return tuple(sorted(lens))


def two_row_character(perm: tuple[int, ...], x: int) -> int:
    """chi_(n-x,x)(perm) = fix_x(perm) - fix_(x-1)(perm)."""
    n = len(perm)
    fix = _fix_vector(_cycle_type(perm), n)
    return fix[x] - (fix[x - 1] if x >= 1 else 0)


def _ones_positions(state: TensorState) -> dict[tuple[int, ...], Fraction]:
    return {tuple(i for i, b in enumerate(s) if b): a
            for s, a in state.amplitudes.items()}


def projector_expectation(state: TensorState, x: int) -> Fraction:
    """<state| P_(n-x,x) |state>, exactly, by summing over the whole group."""
    table = _expectation_table(state)
    return table[x]


def _expectation_table(state: TensorState) -> tuple[Fraction, ...]:
    n = state.n
    if n > MAX_TENSOR_N:
        raise ResourceLimit(
            f"tensor oracle is capped at n <= {MAX_TENSOR_N} (got n={n})")
    by_ones = _ones_positions(state)
    supp = list(by_ones.items())
    uniform = all(a == 1 for _, a in supp)
    members = set(by_ones)
    xmax = n // 2
    acc = [Fraction(0)] * (xmax + 1)
    for perm in permutations(range(n)):
        if uniform:
            overlap = sum(
                1 for pos, _ in supp
                if tuple(sorted(perm[i] for i in pos)) in members)
            if not overlap:
                continue
        else:
            overlap = Fraction(0)
            for pos, a in supp:
                image = tuple(sorted(perm[i] for i in pos))
                other = by_ones.get(image)
                if other is not None:
                    overlap += a * other
            if not overlap:
                continue
        fix = _fix_vector(_cycle_type(perm), n)
        for x in range(xmax + 1):
            chi = fix[x] - (fix[x - 1] if x >= 1 else 0)
            if chi:
                acc[x] += chi * overlap
    nfact = factorial(n)
    return tuple(
        Fraction(two_row_dimension(n, x), nfact) * acc[x] * state.scale_sq
        for x in range(xmax + 1))


@lru_cache(maxsize=None)
def _xi_table(n: int, m: int, k: int, l: int) -> tuple[Fraction, ...]:
    return _expectation_table(xi_state(Params(n, m, k, l)))


def pmf_tensor_oracle(p: Params, x: int) -> Fraction:
    """p(x) as a projector expectation on the explicit tensor state."""
    if p.n > MAX_TENSOR_N:
        raise ResourceLimit(
            f"tensor oracle is capped at n <= {MAX_TENSOR_N} (got n={p.n})")
    if not 0 <= x <= p.n // 2:
        raise ValueError(f"x must lie in 0..floor(n/2), got {x}")
    return _xi_table(*p.as_tuple())[x]


def tensor_pmf_table(p: Params) -> tuple[Fraction, ...]:
    """All projector expectations x = 0..floor(n/2); they resolve 1."""
    if p.n > MAX_TENSOR_N:
        raise ResourceLimit(
            f"tensor oracle is capped at n <= {MAX_TENSOR_N} (got n={p.n})")
    return _xi_table(*p.as_tuple())


def projector_matrix(n: int, x: int) -> list[list[Fraction]]:
    """The 2**n x 2**n matrix of P_(n-x,x) in the computational basis.

    Materialized only for n <= MAX_MATRIX_N; used to check P**2 = P and
    P = P-transpose directly.
    """
    if n > MAX_MATRIX_N:
        raise ResourceLimit(
            f"projector matrices are capped at n <= {MAX_MATRIX_N} (got n={n})")
    if not 0 <= x <= n // 2:
        raise ValueError(f"x must lie in 0..floor(n/2), got {x}")
    dim = 1 << n
    scale = Fraction(two_row_dimension(n, x), factorial(n))
    mat = [[Fraction(0)] * dim for _ in range(dim)]
    for perm in permutations(range(n)):
        chi = two_row_character(perm, x)
        if not chi:
            continue
        for col in range(dim):
            # bit i of col goes to position perm[i]
            row = 0
            for i in range(n):
                if col >> i & 1:
                    row |= 1 << perm[i]
            mat[row][col] += chi
    for row in range(dim):
        for col in range(dim):
            mat[row][col] *= scale
    return mat
