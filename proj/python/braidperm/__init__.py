"""Homomorphisms of braid groups into symmetric groups."""

import json

from ._core import (
    BraidHom,
    BudgetExceeded,
    Permutation,
    build_phi_xy,
    catalog_names,
    census,
    classify,
    exponent_sum,
    h1,
    h1_of,
    hom_conjugacy,
    hom_from_json,
    is_valid,
    named_hom,
    perm_image,
    retraction,
    run_suite,
    suite_names,
    words_equal,
)
from ._core import census_bprime as _census_bprime


def census_bprime(k, workers=1):
    """Nontrivial B'_k -> S(k) up to conjugation, as dicts with keys hom, image_order, ..."""
    return [json.loads(s) for s in _census_bprime(k, workers)]


__all__ = [
    "BraidHom",
    "BudgetExceeded",
    "Permutation",
    "build_phi_xy",
    "catalog_names",
    "census",
    "census_bprime",
    "classify",
    "exponent_sum",
    "h1",
    "h1_of",
    "hom_conjugacy",
    "hom_from_json",
    "is_valid",
    "named_hom",
    "perm_image",
    "retraction",
    "run_suite",
    "suite_names",
    "words_equal",
]
