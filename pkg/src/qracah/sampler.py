"""Seeded exact inverse-cdf sampling from the distribution.

Uniforms are the dyadic rationals j/2**64 produced by a fixed, versioned
64-bit generator; each is mapped to an outcome by exact comparison against
the rational cdf thresholds.  The comparison j/2**64 < c is precomputed as
the integer test j < ceil(c * 2**64) (exact for both integral and
non-integral c*2**64), so no floating point touches the decision path.

One SamplerState per thread; draws mutate only the generator stream, and
(seed, params, q, count) fully determines the output of a fresh state.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil

from .dist import DistTable, Params, Regime, dist_table
from .errors import EmptySample, InvalidParams, NegativeMass
from .qseries import RationalFunction, as_base

RNG_ID = "python-mt19937-getrandbits64/v1"
_SCALE = 1 << 64


@dataclass
class SamplerState:
    """Exact cumulative thresholds plus a seeded generator stream."""

    params: Params
    q: Fraction
    thresholds: tuple[Fraction, ...]
    seed: int
    rng_id: str = RNG_ID
    _cutoffs: tuple[int, ...] = field(repr=False, default=())
    _rng: random.Random = field(repr=False, default=None)

    def clone(self, stream_index: int) -> "SamplerState":
        """An independent state for a parallel batch, derived from the seed."""
        return build_sampler(self.params, self.q,
                             seed=hash((self.seed, stream_index)) & (_SCALE - 1))


def build_sampler(p: Params, q, seed: int) -> SamplerState:
    """Exact thresholds from the cdf; refuses distributions with negative mass.

    Any nonzero rational q is accepted; q outside the proven-positive
    regimes is exploratory, and a negative pmf value there surfaces as
    NegativeMass rather than a silently broken sampler.
    """
    if not 0 <= seed < _SCALE:
        raise InvalidParams("seed must be an unsigned 64-bit integer")
    q = as_base(q)
    if isinstance(q, RationalFunction):
        raise InvalidParams("sampling needs a numeric q, not a formal one")
    table = dist_table(p, q)
    for x, v in enumerate(table.pmf):
        if v < 0:
            raise NegativeMass(
                f"pmf({x}) = {v} < 0 at q = {q}: outside the validated "
                "positivity region")
    cutoffs = tuple(ceil(c * _SCALE) for c in table.cdf)
    state = SamplerState(params=p, q=q, thresholds=table.cdf, seed=seed,
                         _cutoffs=cutoffs, _rng=random.Random(seed))
    return state


def draw(state: SamplerState, count: int) -> list[int]:
    """The next `count` inverse-cdf draws from the state's stream."""
    if count < 0:
        raise InvalidParams("count must be nonnegative")
    cutoffs = state._cutoffs
    bits = state._rng.getrandbits
    out = []
    m1 = len(cutoffs)
    for _ in range(count):
        j = bits(64)
        # first x with j/2**64 < cdf[x]
        lo, hi = 0, m1 - 1
        while lo < hi:
            mid = (lo + hi) // 2
            if j < cutoffs[mid]:
                hi = mid
            else:
                lo = mid + 1
        out.append(lo)
    return out


@dataclass(frozen=True)
class SampleSummary:
    """Empirical statistics of a batch against the exact distribution."""

    count: int
    frequencies: tuple[int, ...]
    mean: Fraction
    variance: Fraction
    exact_mean: Fraction
    exact_variance: Fraction
    max_abs_error: Fraction   # max_x |freq_x/count - pmf_x|
    chi_square: Fraction      # over the support cells only
    off_support: int          # draws that landed where pmf = 0 (expect 0)


def empirical_summary(draws: list[int], p: Params, q) -> SampleSummary:
    """Frequencies, moments, max pmf deviation and chi-square, all exact."""
    if not draws:
        raise EmptySample("no draws to summarize")
    q = as_base(q)
    table = dist_table(p, q)
    freq = [0] * (p.m + 1)
    total = 0
    total_sq = 0
    for d in draws:
        freq[d] += 1
        total += d
        total_sq += d * d
    n = len(draws)
    mean = Fraction(total, n)
    variance = Fraction(total_sq, n) - mean * mean
    max_err = Fraction(0)
    chi2 = Fraction(0)
    off_support = 0
    for x in range(p.m + 1):
        pmf_x = table.pmf[x]
        err = abs(Fraction(freq[x], n) - pmf_x)
        max_err = max(max_err, err)
        if pmf_x > 0:
            expected = n * pmf_x
            diff = freq[x] - expected
            chi2 += diff * diff / expected
        elif freq[x]:
            off_support += freq[x]
    return SampleSummary(
        count=n,
        frequencies=tuple(freq),
        mean=mean,
        variance=variance,
        exact_mean=table.mean(),
        exact_variance=table.variance(),
        max_abs_error=max_err,
        chi_square=chi2,
        off_support=off_support,
    )
