"""Exact computation in topological full groups of odometers.

The package models an odometer of type (n_1, ..., n_K) through its clopen
algebra, elements of the topological full group as integer cocycles on
cylinder labels, and the Koopman representation as Laurent-polynomial
matrices over the Gaussian rationals.
"""

from .errors import DomainError, Inconclusive, NotAHomeomorphism, TFGError, VerificationFailure
from .scalars import GaussRational
from .odometer import ClopenSet, OdometerType, cylinder, refine, translate, measure, is_n_disjoint, first_return
from .full_group import (
    FullGroupElement,
    from_cocycle,
    identity,
    power_of_T,
    sigma_element,
    return_element,
    compose,
    inverse,
    act,
    index,
    normal_form,
    from_normal_form,
    in_derived_at_level,
    in_derived_up_to,
)
from .laurent import LaurentPoly, LaurentMatrix

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "Inconclusive",
    "NotAHomeomorphism",
    "TFGError",
    "VerificationFailure",
    "GaussRational",
    "ClopenSet",
    "OdometerType",
    "cylinder",
    "refine",
    "translate",
    "measure",
    "is_n_disjoint",
    "first_return",
    "FullGroupElement",
    "from_cocycle",
    "identity",
    "power_of_T",
    "sigma_element",
    "return_element",
    "compose",
    "inverse",
    "act",
    "index",
    "normal_form",
    "from_normal_form",
    "in_derived_at_level",
    "in_derived_up_to",
    "LaurentPoly",
    "LaurentMatrix",
]
