"""Exact classification of four-dimensional BL4 algebras over the rationals."""

from .algebra import (
    StructureConstants,
    Subspace,
    apply_basis_change,
    derived_subalgebra,
    is_binary_lie,
    is_isomorphism,
    is_lie,
    is_malcev,
    jacobian,
    multiply,
)
from .groups import (
    AutFamily,
    AutNElement,
    AutNFactor,
    GroupId,
    aut_family_of,
    aut_membership,
    check_cocycle,
    phi,
    t_subgroup_commutator,
)
from .normal_form import (
    CanonicalLabel,
    Isomorphic,
    NotIsomorphic,
    WitnessChain,
    are_isomorphic,
    canonical_label,
    canonical_structure_constants,
    classify_constants,
    property_table,
    reduce_direct,
)
from .presentation import (
    Bl4Presentation,
    NotBl4,
    WeakIso,
    extract_presentation,
    is_bl4,
    iso_condition_holds,
    normalize_xi3,
    to_structure_constants,
)

__version__ = "0.1.0"
