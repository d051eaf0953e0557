"""pvsft: exact Fourier transforms of orbit indicator functions on five
prehomogeneous vector spaces over prime fields."""

__version__ = "0.1.0"

from .census import (CharacterHistogram, CountVector, SubspaceSpec,
                     character_histogram, count_in_subspace, full_census,
                     oracle_ft_matrix)
from .counts import EnumerationProvider, FormulaProvider, spanning_family
from .ffield import PrimeField, find_irreducible_monic, legendre, projective_points
from .ftsolver import (FTMatrix, OrbitFunction, ft_apply, solve_ft_matrix,
                       subspace_identity_check, verify_lemma)
from .qpoly import QPoly
from .reps import (REPS, classify, get_rep, orbit_representative, orbit_size,
                   pairing_weights)
from .symbolic import PolyMatrix, compare_paper, interpolate, render

__all__ = [
    "CharacterHistogram", "CountVector", "EnumerationProvider", "FTMatrix",
    "FormulaProvider", "OrbitFunction", "PolyMatrix", "PrimeField", "QPoly",
    "REPS", "SubspaceSpec", "character_histogram", "classify", "compare_paper",
    "count_in_subspace", "find_irreducible_monic", "ft_apply", "full_census",
    "get_rep", "interpolate", "legendre", "oracle_ft_matrix",
    "orbit_representative", "orbit_size", "pairing_weights",
    "projective_points", "render", "solve_ft_matrix", "spanning_family",
    "subspace_identity_check", "verify_lemma",
]
