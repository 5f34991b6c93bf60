"""Exact computations on the SL(3,C) character variety of the figure-eight knot group."""

from .components import ComponentSet, catalog, classify, classify_orbit
from .constructors import (
    ExcludedLocus,
    SlicePoint,
    WPoint,
    dehn_rep,
    metabelian_points,
    slice_f,
    slice_g,
    slice_rep,
    v0_family,
    v1_family,
    v2_family,
    xpr_point,
    xpr_rep,
    xtr_point,
    xtr_rep,
)
from .coords import CharCoords, OrbitCoords, extract, mu3_act, orbit, sym_f, sym_h
from .grp import RelationError, Representation, check_relations, word
from .mat3 import Mat2, Mat3
from .numtower import Cyclo12, QuadExt, format_elem, parse_elem, sqrt_adjoin
from .verify import list_suites, run_suite

__version__ = "0.1.0"

__all__ = [
    "CharCoords",
    "ComponentSet",
    "Cyclo12",
    "ExcludedLocus",
    "Mat2",
    "Mat3",
    "OrbitCoords",
    "QuadExt",
    "RelationError",
    "Representation",
    "SlicePoint",
    "WPoint",
    "catalog",
    "check_relations",
    "classify",
    "classify_orbit",
    "dehn_rep",
    "extract",
    "format_elem",
    "list_suites",
    "metabelian_points",
    "mu3_act",
    "orbit",
    "parse_elem",
    "run_suite",
    "slice_f",
    "slice_g",
    "slice_rep",
    "sqrt_adjoin",
    "sym_f",
    "sym_h",
    "v0_family",
    "v1_family",
    "v2_family",
    "word",
    "xpr_point",
    "xpr_rep",
    "xtr_point",
    "xtr_rep",
]
