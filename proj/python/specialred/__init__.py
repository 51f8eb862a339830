"""Speciality classification for reductive groups and the exact lattice
algebra behind it."""

import json as _json

from . import _specialred as _ext
from ._specialred import (Error, ParseError, ValidationError, hnf,
                          is_saturated, kernel_basis, snf, solve_linear)

__all__ = [
    "Error", "ParseError", "ValidationError", "snf", "hnf", "kernel_basis",
    "solve_linear", "is_saturated", "h1", "is_invertible", "is_flasque",
    "is_coflasque", "classify", "normalize_descriptor",
    "anisotropy_certified", "isotropy_search",
]


def _text(doc):
    return doc if isinstance(doc, str) else _json.dumps(doc)


def h1(lattice, subgroup=None, **limits):
    """H^1 of the lattice over `subgroup` (element indices generating it;
    None for the whole group). Returns {"torsion", "free_rank", "text"}."""
    whole = subgroup is None
    gens = [] if whole else list(subgroup)
    return _json.loads(_ext.h1(_text(lattice), gens, whole, **limits))


def is_invertible(lattice, **limits):
    return _ext.is_invertible(_text(lattice), **limits)


def is_flasque(lattice):
    return _ext.is_flasque(_text(lattice))


def is_coflasque(lattice):
    return _ext.is_coflasque(_text(lattice))


def classify(descriptor, explain=False, **limits):
    """Report dict with verdict, criterion, witness and timings_ms."""
    return _json.loads(_ext.classify(_text(descriptor), explain, **limits))


def normalize_descriptor(descriptor):
    return _ext.normalize_descriptor(_text(descriptor))


def anisotropy_certified(spec):
    return _ext.anisotropy_certified(_text(spec))


def isotropy_search(spec, degree_bound=3, trials=10000, seed=0x5eed):
    """None, or one {exponent tuple: coefficient} dict per entry."""
    return _ext.isotropy_search(_text(spec), degree_bound, trials, seed)
