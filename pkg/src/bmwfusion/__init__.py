"""bmwfusion: exact primitive idempotents of Birman-Murakami-Wenzl
algebras by consecutive evaluation of the fusion function, with the
Hecke-quotient family and the two classical contractions to the Brauer
algebra."""

__version__ = "0.1.0"

from .bmwcore import AlgebraContext, AlgebraElement, build_context
from .brauer import BrauerAlgebra, BrauerElement
from .combinatorics import (UpDownTableau, classical_contents,
                            enumerate_tableaux, extension_spectrum,
                            quantum_contents)
from .contraction import (brauer_idempotent_via_contraction,
                          contraction_block_check, laurent_params,
                          structure_constant_oracle)
from .errors import (BmwError, CapExceeded, DimensionMismatch,
                     DivisionByZero, DomainMismatch, NegativeValuation,
                     NonInvertible, NotGeneric, PoleAtEvaluation, PoleError,
                     RewriteLimit)
from .fusion import (Idempotent, SpectralView, antisymmetrizer,
                     baxterized_Q, baxterized_T, baxterized_T_inverse,
                     check_reflection, complete_system_checks,
                     fusion_idempotent, jm_oracle_idempotent, symmetrizer,
                     verify_idempotent, Y_script)
from .hecke import HeckeAlgebra, HeckeElement, hecke_family_idempotent, \
    hecke_quotient
from .scalars import (ParamSet, RatFunc, TruncLaurent, make_params,
                      q_factorial, q_number, suggest_params)

__all__ = [
    "AlgebraContext", "AlgebraElement", "BmwError", "BrauerAlgebra",
    "BrauerElement", "CapExceeded", "DimensionMismatch", "DivisionByZero",
    "DomainMismatch", "HeckeAlgebra", "HeckeElement", "Idempotent",
    "NegativeValuation", "NonInvertible", "NotGeneric", "ParamSet",
    "PoleAtEvaluation", "PoleError", "RatFunc", "RewriteLimit",
    "SpectralView", "TruncLaurent", "UpDownTableau", "Y_script",
    "antisymmetrizer", "baxterized_Q", "baxterized_T",
    "baxterized_T_inverse", "brauer_idempotent_via_contraction",
    "build_context", "check_reflection", "classical_contents",
    "complete_system_checks", "contraction_block_check",
    "enumerate_tableaux", "extension_spectrum", "fusion_idempotent",
    "hecke_family_idempotent", "hecke_quotient", "jm_oracle_idempotent",
    "laurent_params", "make_params", "q_factorial", "q_number",
    "quantum_contents", "structure_constant_oracle", "suggest_params",
    "symmetrizer", "verify_idempotent",
]
