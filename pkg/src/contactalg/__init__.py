"""Finite contact algebras: axiom bundles, algebraic dimension and
weight invariants, morphism calculus, and a finite-topology oracle for
cross-checking everything against real spaces."""

from .boolean import (
    DEFAULT_MAX_ATOMS,
    BooleanHomomorphism,
    DenseSearchResult,
    Element,
    FiniteBooleanAlgebra,
    LawReport,
    RelativeAlgebra,
    Subalgebra,
    all_homomorphisms,
    all_subalgebras,
    boolean_operation,
    check_homomorphism,
    generated_subalgebra,
    is_dense_subset,
    min_dense_cardinality,
    powerset_algebra,
    relative_algebra,
)
from .contact import (
    AXIOM_NAMES,
    AxiomReport,
    ContactAlgebra,
    ContactStructure,
    adjacency_contact,
    all_contact_structures,
    check_axiom,
    check_ca_morphism,
    cycle_algebra,
    extremal_relation,
    is_ca_isomorphism,
    is_connected,
    path_algebra,
)
from .dimension import (
    DimensionQuery,
    DimensionResult,
    DimVerdict,
    MonotonicityReport,
    check_dimension_invariance,
    check_relative_monotonicity,
    dim_a,
    dim_leq,
    is_way_below_dense,
    lca_query,
    query,
)
from .errors import InternalInconsistencyError, MismatchError, ValidationError
from .lca import (
    CompletionReport,
    EmbeddingReport,
    LcaMorphismTable,
    LocalContactAlgebra,
    ProductLca,
    RelativeLca,
    all_dhlc_morphisms,
    check_dhlc_morphism,
    check_lca_axioms,
    check_lca_embedding,
    compose_diamond,
    identity_completion,
    is_dv_dense,
    lower_sharp,
    nca_as_lca,
    product_lca,
    relative_lca,
)
from .topology import (
    ContinuousMap,
    CoverReport,
    FiniteSpace,
    RcAlgebra,
    RegularShrinkingReport,
    RoAlgebra,
    SetFamily,
    chain_space,
    clopen_sets,
    closure,
    co_algebra,
    cover_predicates,
    dim_cl,
    discrete_space,
    enumerate_topologies,
    family_order,
    generate_topology,
    indiscrete_space,
    interior,
    is_connected_space,
    is_pi_semiregular,
    is_semiregular,
    is_shrinking_of,
    is_swelling_of,
    lambda_t_map,
    particular_point_space,
    pi_weight_of_space,
    rc_algebra,
    regular_shrinking_dim_check,
    ro_algebra,
    sierpinski_space,
    stone_dual,
    weight_of_space,
)
from .weight import (
    BaseSearchState,
    SubalgebraContactResult,
    WeightResult,
    algebra_weight,
    is_base,
    minimal_base_within,
    pi_weight,
    rho_from_subalgebra,
    s_part,
    zero_dim_criterion,
)

__version__ = "0.1.0"

__all__ = [
    "AXIOM_NAMES",
    "AxiomReport",
    "BaseSearchState",
    "BooleanHomomorphism",
    "CompletionReport",
    "ContactAlgebra",
    "ContactStructure",
    "ContinuousMap",
    "CoverReport",
    "DEFAULT_MAX_ATOMS",
    "DenseSearchResult",
    "DimVerdict",
    "DimensionQuery",
    "DimensionResult",
    "Element",
    "EmbeddingReport",
    "FiniteBooleanAlgebra",
    "FiniteSpace",
    "InternalInconsistencyError",
    "LawReport",
    "LcaMorphismTable",
    "LocalContactAlgebra",
    "MismatchError",
    "MonotonicityReport",
    "ProductLca",
    "RcAlgebra",
    "RegularShrinkingReport",
    "RelativeAlgebra",
    "RelativeLca",
    "RoAlgebra",
    "SetFamily",
    "Subalgebra",
    "SubalgebraContactResult",
    "ValidationError",
    "WeightResult",
    "adjacency_contact",
    "algebra_weight",
    "all_contact_structures",
    "all_dhlc_morphisms",
    "all_homomorphisms",
    "all_subalgebras",
    "boolean_operation",
    "chain_space",
    "check_axiom",
    "check_ca_morphism",
    "check_dhlc_morphism",
    "check_dimension_invariance",
    "check_homomorphism",
    "check_lca_axioms",
    "check_lca_embedding",
    "check_relative_monotonicity",
    "clopen_sets",
    "closure",
    "co_algebra",
    "compose_diamond",
    "cover_predicates",
    "cycle_algebra",
    "dim_a",
    "dim_cl",
    "dim_leq",
    "discrete_space",
    "enumerate_topologies",
    "extremal_relation",
    "family_order",
    "generate_topology",
    "generated_subalgebra",
    "identity_completion",
    "indiscrete_space",
    "interior",
    "is_base",
    "is_ca_isomorphism",
    "is_connected",
    "is_connected_space",
    "is_dense_subset",
    "is_dv_dense",
    "is_pi_semiregular",
    "is_semiregular",
    "is_shrinking_of",
    "is_swelling_of",
    "is_way_below_dense",
    "lambda_t_map",
    "lca_query",
    "lower_sharp",
    "min_dense_cardinality",
    "minimal_base_within",
    "nca_as_lca",
    "particular_point_space",
    "path_algebra",
    "pi_weight",
    "pi_weight_of_space",
    "powerset_algebra",
    "product_lca",
    "query",
    "rc_algebra",
    "regular_shrinking_dim_check",
    "relative_algebra",
    "relative_lca",
    "rho_from_subalgebra",
    "ro_algebra",
    "s_part",
    "sierpinski_space",
    "stone_dual",
    "weight_of_space",
    "zero_dim_criterion",
]
