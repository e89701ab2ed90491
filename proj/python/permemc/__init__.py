"""Exact counting, spreadness and matching solvers for permutation families.

A family is passed as ``(n, members)`` where ``members`` is a list of image
sequences, 1-indexed (``[2, 3, 1]`` maps 1 to 2). Cells are ``(row, col)``
pairs. Rational parameters accept ``Fraction``, ``int`` or strings such as
``"5/2"``; report-valued functions return plain dicts.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Sequence

from . import _core
from ._core import (
    CapExceeded,
    DimensionMismatch,
    IoError,
    ParseError,
    all_permutations,
    covering_number,
    cross_matching,
    derangement_count,
    derangements,
    double_derangement_count,
    double_derangements,
    factorial,
    load_family,
    make_hm,
    make_hm_star_union,
    make_star,
    make_star_union,
    matching_number,
    permanent,
    pointed_derangement_count,
    save_family,
    suite_names,
    trace,
)

Members = Sequence[Sequence[int]]


def _rational(value: Fraction | int | str) -> str:
    if isinstance(value, str):
        return value
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def is_r_spread(n: int, members: Members, r) -> dict:
    return json.loads(_core.is_r_spread(n, members, _rational(r)))


def is_rq_spread(n: int, members: Members, r, q: int) -> dict:
    return json.loads(_core.is_rq_spread(n, members, _rational(r), q))


def exact_spreadness(n: int, members: Members) -> dict:
    return json.loads(_core.exact_spreadness(n, members))


def spread_approximate(n: int, members: Members, ambient: Members, r, q: int) -> dict:
    """Greedy approximation plus the checked guarantees under key ``check``."""
    return json.loads(_core.spread_approximate(n, members, ambient, _rational(r), q))


def containment_probability(n: int, members: Members, p) -> Fraction:
    report = json.loads(_core.containment_probability(n, members, _rational(p)))
    return Fraction(report["exact"])


def containment_probability_monte_carlo(n: int, members: Members, p, samples: int, seed: int) -> dict:
    return json.loads(_core.containment_probability_monte_carlo(n, members, _rational(p), samples, seed))


def coset_certificate(n: int, members: Members, s: int) -> dict:
    return json.loads(_core.coset_certificate(n, members, s))


def permanent_bound_check(rows: Sequence[Sequence[int]]) -> dict:
    return json.loads(_core.permanent_bound_check(rows))


def run_suite(name: str = "all", seed: int = 0) -> dict:
    return json.loads(_core.run_suite(name, seed))


__all__ = [
    "CapExceeded",
    "DimensionMismatch",
    "IoError",
    "ParseError",
    "all_permutations",
    "containment_probability",
    "containment_probability_monte_carlo",
    "coset_certificate",
    "covering_number",
    "cross_matching",
    "derangement_count",
    "derangements",
    "double_derangement_count",
    "double_derangements",
    "exact_spreadness",
    "factorial",
    "is_r_spread",
    "is_rq_spread",
    "load_family",
    "make_hm",
    "make_hm_star_union",
    "make_star",
    "make_star_union",
    "matching_number",
    "permanent",
    "permanent_bound_check",
    "pointed_derangement_count",
    "run_suite",
    "save_family",
    "spread_approximate",
    "suite_names",
    "trace",
]
