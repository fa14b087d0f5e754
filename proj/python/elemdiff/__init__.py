"""Elementary differentials of rooted trees: enumeration, certified dimensions,
identities and the representation data around W_2(5)."""

import json

from ._core import (
    DEFAULT_SEED,
    ElemdiffError,
    burnside_count,
    canonical_form,
    character_table,
    enumerate_trees,
    multi_indices,
    project_pi,
    subgroup_class_count,
)
from . import _core


def dimension_w(d, n, linear=False, seed=DEFAULT_SEED, threads=0):
    """Certified dimension record of W_d(n) (or LW_d(n) with linear=True)."""
    return json.loads(_core._dimension_w(d, n, linear, seed, threads))


def dimension_labelled(d, n, multiplicities, seed=DEFAULT_SEED, threads=0):
    return json.loads(_core._dimension_labelled(d, n, list(multiplicities), seed, threads))


def certify_s2d(k, dimension):
    """Exhaustive check of s_2k in the given dimension; includes a witness when it fails."""
    return json.loads(_core._certify_s2d(k, dimension))


def constraint_scan():
    return json.loads(_core._constraint_scan())


__all__ = [
    "DEFAULT_SEED",
    "ElemdiffError",
    "burnside_count",
    "canonical_form",
    "certify_s2d",
    "character_table",
    "constraint_scan",
    "dimension_labelled",
    "dimension_w",
    "enumerate_trees",
    "multi_indices",
    "project_pi",
    "subgroup_class_count",
]
