"""Lattices of subsemimodules, closed and splitting subsemimodules, and projections
of free semimodules S^k over finite commutative semirings."""

from .errors import (AmbientMismatch, AxiomViolation, CapExceeded, EnumerationCapExceeded,
                     InvolutionNotClosed, NoBounds, NoInvolution, NotALattice, NotAPartialOrder, NotARing,
                     NotCommuting, NotOrthoposet, NotSplitting, RankMismatch, SearchCapExceeded,
                     SemimodError, ShapeError, SizeCapExceeded, UniquenessViolation)
from .poset import (FinitePoset, antiisomorphic_to_powerset, hasse_edges, is_antitone_involution,
                    is_atomic, is_boolean_algebra, is_complementation, is_distributive,
                    is_iso_MO2, is_lattice, is_modular, is_orthomodular_poset, is_orthoposet,
                    n5_witness, orthomodular_witness, poset_from_subsets, to_dot)
from .projections import (LinearMap, ProjectionPoset, decompose, enumerate_projections,
                          is_splitting, proj_complement, proj_join, proj_meet, proj_perp,
                          projection_of, splitting_subsemimodules)
from .semimodule import FreeSemimodule, check_nondegenerate, closure, free_semimodule
from .semiring import (FiniteSemiring, boolean_semiring, builtin, chain_lattice,
                       is_bounded_distributive_lattice, is_ring, is_zero_meet_irreducible,
                       modular_ring, validate_semiring)
from .sublattice import (Subsemimodule, closed_subsemimodules, enumerate_subsemimodules,
                         intersect, is_closed, join_closed, perp, sum_family, sum_sub)

__version__ = "0.1.0"
