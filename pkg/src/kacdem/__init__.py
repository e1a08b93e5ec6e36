"""Affine Demazure modules, twisted affine Weyl groups and the coherence identity
comparing untwisted g[t]-stable Demazure modules with sums of twisted ones.
"""

from .alcove import facet, interior_point, interior_point_from_weight, sigma_levi
from .cartan import (AffineRootDatum, AffineTypeLabel, AffineWeight, InvalidType, MixedDatum,
                     build_datum, coweight_lattice, format_weight, special_elements, supported_labels)
from .crystal import demazure_crystal
from .demazure import (CharacterPoly, FiniteCharacter, VerificationReport, module_char, restrict_finite,
                       sum_char, twist, verify_identity)
from .parsing import ParseError, parse_coweight, parse_element, parse_facet, parse_weight
from .weyl import WeylElement, WeylGroup, weyl_group

__version__ = "0.1.0"

__all__ = [
    "AffineRootDatum", "AffineTypeLabel", "AffineWeight", "CharacterPoly", "FiniteCharacter",
    "InvalidType", "MixedDatum", "ParseError", "VerificationReport", "WeylElement", "WeylGroup",
    "build_datum", "coweight_lattice", "demazure_crystal", "facet", "format_weight", "interior_point",
    "interior_point_from_weight", "module_char", "parse_coweight", "parse_element", "parse_facet",
    "parse_weight", "restrict_finite", "sigma_levi", "special_elements", "sum_char", "supported_labels",
    "twist", "verify_identity", "weyl_group",
]
