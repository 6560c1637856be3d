"""Skew Schur supports, quasisymmetric expansions, and overlap dominance."""

from skewsupport.bases import expansion_of
from skewsupport.overlaps import OverlapProfile, overlaps_dominated
from skewsupport.relations import relate, verify_implications
from skewsupport.shapes import (
    SkewShape,
    enumerate_shapes,
    format_shape,
    parse_shape,
)
from skewsupport.tableaux import (
    Expansion,
    f_expansion,
    f_support,
    m_expansion,
    schur_expansion,
    schur_support,
)

__version__ = "0.1.0"

__all__ = [
    "SkewShape",
    "parse_shape",
    "format_shape",
    "enumerate_shapes",
    "Expansion",
    "expansion_of",
    "schur_expansion",
    "schur_support",
    "f_expansion",
    "f_support",
    "m_expansion",
    "OverlapProfile",
    "overlaps_dominated",
    "relate",
    "verify_implications",
    "__version__",
]
