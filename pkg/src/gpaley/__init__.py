"""Generalized Paley graphs, clique-number certificates, and direction sets
of Cartesian point sets in affine Galois planes."""

from .bounds import (BoundBundle, Certificate, best_bounds, prop41_certify,
                     remark32_bound, subfield_clique_orders, thm11_bound,
                     thm13_bound, thm14_certify, trivial_bound)
from .directions import (CorollaryReport, DirectionSet, PointSet, cor15_check,
                         cor23_check, cor24_check, direction_set,
                         thm16_lower_bound)
from .errors import InvariantViolation, PreconditionError
from .families import (FamilyInstance, FamilyRejection, counterexample_ex45,
                       counterexample_ex46, family_ex42, family_ex43,
                       family_ex44)
from .field import Field, FieldSpec, build_field
from .graph import (CliqueResult, Graph, build_cyclotomic_graph,
                    build_paley_graph, enumerate_max_cliques, is_clique,
                    max_clique)
from .intutil import (DigitVector, base_digits, binom_nonzero_mod_p, divisors,
                      factorize, is_prime, isqrt, prime_power)
from .redei import (Poly, PthPowerDecomposition, divides_xq_minus_x,
                    pth_power_decompose, redei_slice, szonyi_quotient)

__version__ = "0.1.0"

__all__ = [
    "BoundBundle", "Certificate", "CliqueResult", "CorollaryReport",
    "DigitVector", "DirectionSet", "FamilyInstance", "FamilyRejection",
    "Field", "FieldSpec", "Graph", "InvariantViolation", "PointSet", "Poly",
    "PreconditionError", "PthPowerDecomposition", "base_digits",
    "best_bounds", "binom_nonzero_mod_p", "build_cyclotomic_graph",
    "build_field", "build_paley_graph", "cor15_check", "cor23_check",
    "cor24_check", "counterexample_ex45", "counterexample_ex46",
    "direction_set", "divides_xq_minus_x", "divisors",
    "enumerate_max_cliques", "factorize", "family_ex42", "family_ex43",
    "family_ex44", "is_clique", "is_prime", "isqrt", "max_clique",
    "prime_power", "prop41_certify", "pth_power_decompose", "redei_slice",
    "remark32_bound", "subfield_clique_orders", "szonyi_quotient",
    "thm11_bound", "thm13_bound", "thm14_certify", "thm16_lower_bound",
    "trivial_bound",
]
