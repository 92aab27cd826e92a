"""Exact computations in centers of wreath product group algebras.

Structure constants of Z(C[G wr S_n]) for a finite group G given by its
multiplication table, their stable-in-n binomial polynomial form through
the algebra of G-labeled partial permutations, and pointwise verification
of the isomorphism with shifted symmetric functions on one alphabet per
irreducible character of G.
"""

from .center import AlgebraVector, c_coeff, product_classes
from .groups import FiniteGroup, builtin_group, group_from_json, group_from_table, resolve_group
from .kernels import BACKEND, available_backends
from .partial import (
    GPartialPermutation, act, class_size_partial, enumerate_partial_class,
    pp_multiply, pp_type, pp_unity, proj, psi, semigroup_order)
from .shifted import (
    CharacterCalculator, character_value, eta_value, image_eval,
    p_sharp_eval, s_sharp_eval, verify_theorem71)
from .universal import (
    PolynomialInN, k_coeff, k_coeff_oracle, structure_polynomial,
    verify_polynomiality)
from .wreath import (
    PartitionFamily, WreathElement, class_order, enumerate_class,
    families_of_size, families_up_to, type_of, w_inverse, w_multiply)

__version__ = "0.1.0"

__all__ = [
    "AlgebraVector", "BACKEND", "CharacterCalculator", "FiniteGroup",
    "GPartialPermutation", "PartitionFamily", "PolynomialInN",
    "WreathElement", "__version__", "act", "available_backends",
    "builtin_group", "c_coeff", "character_value", "class_order",
    "class_size_partial", "enumerate_class", "enumerate_partial_class",
    "eta_value", "families_of_size", "families_up_to", "group_from_json",
    "group_from_table", "image_eval", "k_coeff", "k_coeff_oracle",
    "p_sharp_eval", "pp_multiply", "pp_type", "pp_unity", "product_classes",
    "proj", "psi", "resolve_group", "s_sharp_eval", "semigroup_order",
    "structure_polynomial", "type_of", "verify_polynomiality",
    "verify_theorem71", "w_inverse", "w_multiply",
]
