"""Mordell-Weil rank jumps on double planes branched along a sextic.

Exact geometry of a plane sextic and its lines, fibrations from pencils of
lines, multisection certificates, Shioda-Tate ranks, point counts over
finite fields, and elliptic-curve rank certificates.
"""

from .algebra import UniPoly, poly_gcd, resultant, squarefree_decompose
from .geometry import HomForm, Line, Pencil, ProjPoint, certify_smooth, intersection_profile, tangent_line
from .fibration import build_fibration, certify_saliently_ramified, classify_fiber, classify_line_pullback
from .lattice import GramMatrix2, ShiodaInput, isotropic_primitive_classes, shioda_tate_rank
from .counting import count_points, good_reduction_check
from .elliptic import QuarticModel, WeierstrassCurve, quartic_to_weierstrass, rank_ge_one_certificate

__version__ = "0.1.0"

__all__ = [
    "UniPoly",
    "poly_gcd",
    "resultant",
    "squarefree_decompose",
    "HomForm",
    "Line",
    "Pencil",
    "ProjPoint",
    "certify_smooth",
    "intersection_profile",
    "tangent_line",
    "build_fibration",
    "certify_saliently_ramified",
    "classify_fiber",
    "classify_line_pullback",
    "GramMatrix2",
    "ShiodaInput",
    "isotropic_primitive_classes",
    "shioda_tate_rank",
    "count_points",
    "good_reduction_check",
    "QuarticModel",
    "WeierstrassCurve",
    "quartic_to_weierstrass",
    "rank_ge_one_certificate",
]
