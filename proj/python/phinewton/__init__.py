"""Irreducibility certificates for Schur-type polynomials via phi-Newton polygons.

Polynomials are passed either as text (``"x^3-x+7"``) or as ascending integer
coefficient lists (``[7, -1, 0, 1]``); results use coefficient lists.
"""

import json
from fractions import Fraction

from ._core import (
    BudgetExceeded,
    DomainError,
    Error,
    NoWitness,
    ParseError,
    PreconditionError,
    bounded_factor_search,
    format_poly,
    hanson_scan,
    hanson_witness,
    irreducible_mod_all,
    is_irreducible_mod_p,
    legendre_vp_factorial,
    newton_polygon,
    parse_poly,
    phi_expand,
    render_polygon,
    scaled_poly,
    vp,
)
from . import _core

__all__ = [
    "BudgetExceeded",
    "DomainError",
    "Error",
    "NoWitness",
    "ParseError",
    "PreconditionError",
    "bounded_factor_search",
    "certify",
    "format_poly",
    "hanson_scan",
    "hanson_witness",
    "irreducible_mod_all",
    "is_irreducible_mod_p",
    "legendre_vp_factorial",
    "newton_polygon",
    "parse_poly",
    "phi_expand",
    "rational_roots",
    "render_polygon",
    "scaled_poly",
    "vp",
]


def certify(phi, n, a_n, a, *, oracle=False, candidate_cap=10_000_000):
    """Certificate for f = a_n phi^n/(n+1)! + sum_j a_j phi^j/(j+1)!, as a dict.

    ``a`` lists a_0 .. a_{n-1}, lowest index first.
    """
    return json.loads(_core.certify_json(phi, n, a_n, list(a), oracle, candidate_cap))


def rational_roots(poly):
    """Rational roots of an integer polynomial as sorted Fractions."""
    return [Fraction(num, den) for num, den in _core.rational_roots(poly)]
