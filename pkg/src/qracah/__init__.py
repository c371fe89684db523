"""Exact computation and verification of the q-Racah probability distribution.

The public surface is re-exported here: exact scalars and rational
functions in q (`qseries`), the hypergeometric polynomial families
(`polyfamilies`), the distribution itself (`dist`), brute-force oracles
(`oracles`), seeded exact sampling (`sampler`), and a CLI (`cli`).
"""

__version__ = "0.1.0"

from .dist import (
    DistTable,
    Params,
    Regime,
    cdf_limit,
    cdf_q,
    classify_regime,
    dist_table,
    normalize_params,
    parameter_tuples,
    pmf_limit,
    pmf_limit_hahn_form,
    pmf_q,
    pmf_q_hahn_form,
    positivity_scan,
    recurrence_residual,
    support_limit,
    verify_cor23,
)
from .polyfamilies import (
    QRacahParams,
    RacahParams,
    q_hahn,
    q_racah,
    racah,
    spherical_value,
    spherical_value_limit,
)
from .qseries import (
    ExactRational,
    Q,
    RationalFunction,
    SeriesSpec,
    basic_series,
    classical_series,
    eval_series,
    q_binomial,
    q_binomial_inversion_identity,
    q_chu_vandermonde,
    q_integer,
    q_pochhammer,
    sears_43,
)
from .sampler import (
    RNG_ID,
    SampleSummary,
    SamplerState,
    build_sampler,
    draw,
    empirical_summary,
)

__all__ = [
    "DistTable",
    "ExactRational",
    "Params",
    "Q",
    "QRacahParams",
    "RNG_ID",
    "RacahParams",
    "RationalFunction",
    "Regime",
    "SampleSummary",
    "SamplerState",
    "SeriesSpec",
    "__version__",
    "basic_series",
    "build_sampler",
    "cdf_limit",
    "cdf_q",
    "classical_series",
    "classify_regime",
    "dist_table",
    "draw",
    "empirical_summary",
    "eval_series",
    "normalize_params",
    "parameter_tuples",
    "pmf_limit",
    "pmf_limit_hahn_form",
    "pmf_q",
    "pmf_q_hahn_form",
    "positivity_scan",
    "q_binomial",
    "q_binomial_inversion_identity",
    "q_chu_vandermonde",
    "q_hahn",
    "q_integer",
    "q_pochhammer",
    "q_racah",
    "racah",
    "recurrence_residual",
    "sears_43",
    "spherical_value",
    "spherical_value_limit",
    "support_limit",
    "verify_cor23",
]
