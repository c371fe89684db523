"""Exact scalars, rational functions in q, and terminating hypergeometric series."""

from .ratfunc import ExactRational, Q, RationalFunction
from .series import (
    BASIC,
    CLASSICAL,
    SeriesSpec,
    as_base,
    basic_series,
    classical_series,
    eval_series,
    q_binomial,
    q_binomial_inversion_identity,
    q_chu_vandermonde,
    q_factorial,
    q_integer,
    q_pochhammer,
    sears_43,
)

__all__ = [
    "BASIC",
    "CLASSICAL",
    "ExactRational",
    "Q",
    "RationalFunction",
    "SeriesSpec",
    "as_base",
    "basic_series",
    "classical_series",
    "eval_series",
    "q_binomial",
    "q_binomial_inversion_identity",
    "q_chu_vandermonde",
    "q_factorial",
    "q_integer",
    "q_pochhammer",
    "sears_43",
]
