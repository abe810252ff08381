"""Exact commutative-algebra kernel and verifier for multiplicity bounds of
almost complete intersections."""

from __future__ import annotations

from .core import CoreResult, core_of_maximal_ideal, reduction_number
from .graded import hilbert, length_artinian, multiplicity, socle, standard_monomials
from .ideal import (
    Ideal,
    colon,
    dimension,
    groebner_basis,
    height,
    ideal_equal,
    intersection,
    is_regular_sequence,
    membership,
    min_generator_count,
    normal_form,
)
from .instances import ACIInstance, general_linear_forms, random_aci, random_regular_sequence
from .kernels import BACKEND
from .koszul import euler_characteristics, koszul_homology
from .polynomial import GREVLEX, LEX, MonomialOrder, Polynomial, RingContext, parse_polynomial
from .verify import VerificationReport, run_campaign, theorem_bound, verify_core_lemma, verify_instance

__version__ = "0.1.0"

__all__ = [
    "ACIInstance", "BACKEND", "CoreResult", "GREVLEX", "Ideal", "LEX", "MonomialOrder",
    "Polynomial", "RingContext", "VerificationReport", "colon", "core_of_maximal_ideal",
    "dimension", "euler_characteristics", "general_linear_forms", "groebner_basis", "height",
    "hilbert", "ideal_equal", "intersection", "is_regular_sequence", "koszul_homology",
    "length_artinian", "membership", "min_generator_count", "multiplicity", "normal_form",
    "parse_polynomial", "random_aci", "random_regular_sequence", "reduction_number",
    "run_campaign", "socle", "standard_monomials", "theorem_bound", "verify_core_lemma",
    "verify_instance",
]
