"""Python access to the rankforge core.

Finite-field elements are passed by enumeration index (sum of c_i p^i);
polynomials and number-field elements use the comma-separated text format,
constant term first.
"""

import json as _json

from ._core import (
    RankforgeError,
    average_A_p,
    landau_sum,
    prime_ideals,
    quad_sum,
    quadratic_character,
    run_cli,
)
from ._core import construct_family as _construct_family
from ._core import rank_estimate as _rank_estimate


def construct_family(spec):
    """Build a family from a spec dict; returns the family document as a dict."""
    return _json.loads(_construct_family(_json.dumps(spec)))


def rank_estimate(family, max_norm, threads=1):
    """`family` is a spec or family document (dict)."""
    return _rank_estimate(_json.dumps(family), max_norm, threads)


__all__ = [
    "RankforgeError",
    "average_A_p",
    "construct_family",
    "landau_sum",
    "prime_ideals",
    "quad_sum",
    "quadratic_character",
    "rank_estimate",
    "run_cli",
]
