"""Self-dual regular polytopes of type {n,n} with 2^n * n flags.

The automorphism group is built as affine maps on GF(2)^(n-1), checked to be
a string C-group, turned into a face lattice, and cross-checked against a
finite presentation by coset enumeration.
"""

from ._backend import BACKEND
from .certificate import Certificate, verify
from .construction import PaperGenerators, build_generators, build_group, expected_order
from .errors import (ClosureExceedsCap, CosetOverflow, DimensionError, NotASubgroup,
                     OrderExceedsCap, OrderMismatch, RegpolyError, SearchBudgetExceeded,
                     WrongRank)
from .fpgroup import (Presentation, Word, check_self_dual, conjecture_presentation,
                      conjecture_sweep, paper_presentation, todd_coxeter, verify_presentation)
from .gf2 import Gf2Matrix, Gf2Vector
from .groups import (AffineMap, DihedralElement, GroupTable, Permutation, closure, compose,
                     coset_closure_bound, coset_decomposition, element_order)
from .polytope import (FaceLattice, build_lattice, check_diamond, check_strong_connectivity,
                       dual_lattice, enumerate_flags, lattices_isomorphic)
from .sggi import (GeneratorSystem, check_sggi, intersection_condition_full,
                   intersection_condition_rank3)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "Certificate", "verify",
    "PaperGenerators", "build_generators", "build_group", "expected_order",
    "ClosureExceedsCap", "CosetOverflow", "DimensionError", "NotASubgroup",
    "OrderExceedsCap", "OrderMismatch", "RegpolyError", "SearchBudgetExceeded", "WrongRank",
    "Presentation", "Word", "check_self_dual", "conjecture_presentation", "conjecture_sweep",
    "paper_presentation", "todd_coxeter", "verify_presentation",
    "Gf2Matrix", "Gf2Vector",
    "AffineMap", "DihedralElement", "GroupTable", "Permutation", "closure", "compose",
    "coset_closure_bound", "coset_decomposition", "element_order",
    "FaceLattice", "build_lattice", "check_diamond", "check_strong_connectivity",
    "dual_lattice", "enumerate_flags", "lattices_isomorphic",
    "GeneratorSystem", "check_sggi", "intersection_condition_full",
    "intersection_condition_rank3",
]
