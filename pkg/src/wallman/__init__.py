"""Finite-scale engine for normal/separative distributive lattices, their
prime-filter and ultrafilter spaces, the homomorphism-to-continuous-map
functor, and combinatorial covering certificates."""

from .lattice import (
    FiniteLattice,
    LatticeReport,
    atoms,
    attach_bottom,
    chain_lattice,
    generated_sublattice,
    is_boolean,
    is_distributive,
    is_generating,
    is_normal,
    is_separative,
    join_irreducibles,
    lattice_report,
    load_lattice,
    opposite,
    powerset_lattice,
)
from .filters import (
    FilterSet,
    enumerate_filters,
    generated_filter,
    is_centered,
    is_filter,
    is_ideal,
    is_prime,
    is_ultra,
    principal_filter,
    separate_by_prime,
    ultrafilter_extensions,
    unique_ultrafilter_extension,
)
from .spaces import (
    SeparationReport,
    SuiteReport,
    WallmanSpace,
    alexander_check,
    build_space,
    finite_separative_is_boolean,
    separation_axioms,
    ultrafilter_generated_by,
    theorem_suite,
)
from .homs import (
    AlexandrovResult,
    LatticeHom,
    SpaceMap,
    alexandrov,
    compose,
    embedding_from_separation,
    functor_laws,
    identity_hom,
    induced_map,
    is_separative_hom,
    separativity_equivalence,
    surjectivity_from_kernel,
    verify_hom,
)
from .covers import (
    CoverFamily,
    Member,
    centered_poset_rank,
    gulko_lt,
    gulko_lt_brute,
    is_T0_separating,
    max_increasing_chain,
    max_increasing_chain_brute,
    ord_count,
    phi_from_witness,
    rank_upper_bound,
    rosenthal_refinement,
    stabilized_rank,
    weakly_sigma_point_finite,
    wiec_refinement,
    witness_from_phi,
)

__version__ = "0.1.0"
