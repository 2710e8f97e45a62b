"""Finite quandles: validation, decomposition into connected pieces, enumeration.

The package has three layers.  perm and quandle hold the basic objects
(permutation groups, operation tables, symmetries, inner and automorphism
groups).  augment and decompose implement the mesh calculus: splitting any
quandle into its orbit blocks plus the cross-block actions, and composing
such data back when it is coherent.  enumeration builds all connected
quandles of an order from transitive group data, and oracle brute-forces
the same census by independent means so the two can be checked against
each other.
"""

from .augment import (
    GammaHom,
    HomError,
    NotAnAutomorphismError,
    RelationViolationError,
    canonical_hom,
    evaluate,
    trivial_hom,
    validate_gamma_hom,
)
from .decompose import (
    Condition1ViolationError,
    Condition2ViolationError,
    Decomposition,
    DecompositionTree,
    DiagonalNotCanonicalError,
    Mesh,
    MeshError,
    decompose,
    decomposition_tree,
    disjoint_union,
    is_valid_mesh,
    semidisjoint_union,
    validate_mesh,
)
from .enumeration import (
    CensusEntry,
    ConnectedSeed,
    GenerationFailureError,
    NotConnectedError,
    check_generation,
    coset_quandle,
    enumerate_connected,
    realize,
)
from .oracle import Census, count_connected, enumerate_all
from .perm import (
    PermGroup,
    Permutation,
    compose,
    generate_group,
    transitive_subgroups_up_to_conjugacy,
)
from .quandle import (
    AxiomViolation,
    DistributivityViolation,
    IdempotenceViolation,
    InvertibilityViolation,
    Quandle,
    RangeViolation,
    axiom_violations,
    dihedral_quandle,
    is_quandle_table,
    trivial_quandle,
)

__version__ = "0.1.0"

__all__ = [
    "Permutation",
    "PermGroup",
    "compose",
    "generate_group",
    "transitive_subgroups_up_to_conjugacy",
    "Quandle",
    "AxiomViolation",
    "IdempotenceViolation",
    "InvertibilityViolation",
    "DistributivityViolation",
    "RangeViolation",
    "axiom_violations",
    "is_quandle_table",
    "trivial_quandle",
    "dihedral_quandle",
    "GammaHom",
    "HomError",
    "RelationViolationError",
    "NotAnAutomorphismError",
    "validate_gamma_hom",
    "canonical_hom",
    "trivial_hom",
    "evaluate",
    "Mesh",
    "MeshError",
    "DiagonalNotCanonicalError",
    "Condition1ViolationError",
    "Condition2ViolationError",
    "Decomposition",
    "DecompositionTree",
    "validate_mesh",
    "is_valid_mesh",
    "semidisjoint_union",
    "disjoint_union",
    "decompose",
    "decomposition_tree",
    "ConnectedSeed",
    "CensusEntry",
    "GenerationFailureError",
    "NotConnectedError",
    "check_generation",
    "coset_quandle",
    "realize",
    "enumerate_connected",
    "Census",
    "enumerate_all",
    "count_connected",
]
