"""Codegree squared sums of uniform hypergraphs.

Counts come back as Python ints and ratios as Fractions; search and verify
return plain dicts in the same shape as the ``outputs`` block of ``hx --json``.
"""

import json
from fractions import Fraction

from . import _core
from ._core import (
    Hypergraph,
    ParameterError,
    ParseError,
    claim_names,
    contains_pattern,
    covering_number,
    family,
    is_d_wise_t_intersecting,
    is_t_intersecting,
    matching_number,
)

__all__ = [
    "Hypergraph",
    "ParameterError",
    "ParseError",
    "bey",
    "claim_names",
    "co2",
    "co2_b_closed",
    "co2_star_closed",
    "contains_pattern",
    "covering_number",
    "family",
    "is_d_wise_t_intersecting",
    "is_t_intersecting",
    "matching_number",
    "search",
    "sigma_upper",
    "square_sum",
    "verify",
]


def co2(h):
    return int(_core.co2(h))


def square_sum(h, ell):
    return int(_core.square_sum(h, ell))


def co2_star_closed(n, k, t=1):
    return int(_core.co2_star_closed(n, k, t))


def co2_b_closed(n, k, s):
    return int(_core.co2_b_closed(n, k, s))


def sigma_upper(pi, k):
    return Fraction(_core.sigma_upper(str(Fraction(pi)), k))


def bey(h, ell):
    return json.loads(_core.bey(h, ell))


def search(n, k, constraints, mode="bnb", nontrivial_below=None, use_l1_caps=True,
           node_budget=1_000_000_000, workers=1):
    if isinstance(constraints, str):
        constraints = [constraints]
    return json.loads(_core.search(n, k, list(constraints), mode, nontrivial_below,
                                   use_l1_caps, node_budget, workers))


def verify(claim, n, k, s=2, t=1, run_search=True):
    return json.loads(_core.verify(claim, n, k, s, t, run_search))
