"""Square-free monomial ideals whose facet and non-face complexes share an
f-vector, with the machinery to decide, enumerate, count, classify and
construct them."""

from .complexes import (
    FVector,
    SimplicialComplex,
    dimension,
    f_vector,
    facet_complex,
    is_pure,
    nonface_complex,
    nonfaces_minimal,
)
from .engine import (
    CountResult,
    FIdealVerdict,
    construct_f_ideal,
    construct_f_ideal_auto,
    count_by_enumeration,
    count_f_ideals_closed_form,
    count_least_perfect_f_ideals,
    degree_count_identity,
    enumerate_f_ideals,
    five_cycle_family,
    is_f_ideal,
    random_square_free_ideal,
    shadow_closure_identities,
    type_class_nonempty,
)
from .errors import (
    BudgetExceededError,
    ConstructionError,
    InputError,
    InternalInconsistencyError,
    ParseError,
)
from .graphs import (
    BipartitionReport,
    FCReport,
    Graph,
    TypeClassification,
    check_fc,
    complement,
    detect_type,
    from_graph,
    is_bipartite,
    is_triangle_free,
    max_degree_below,
    to_graph,
)
from .monomials import (
    Ideal,
    Monomial,
    MonomialSet,
    degree_slice,
    iterated_shadow,
    lower_shadow,
    parse_monomial,
    parse_monomial_set,
    shadow_closure,
    upper_shadow,
)
from .perfect import (
    PerfectNumberResult,
    is_lower_perfect,
    is_perfect,
    is_upper_perfect,
    iter_perfect_subsets,
    perfect_number,
    staircase_construction,
    two_part_construction,
)
from .unmixed import (
    PrimeCover,
    codimension,
    complement_lower_perfect,
    is_unmixed,
    minimal_primes,
)

__version__ = "0.1.0"

__all__ = [
    "BipartitionReport",
    "BudgetExceededError",
    "ConstructionError",
    "CountResult",
    "FCReport",
    "FIdealVerdict",
    "FVector",
    "Graph",
    "Ideal",
    "InputError",
    "InternalInconsistencyError",
    "Monomial",
    "MonomialSet",
    "ParseError",
    "PerfectNumberResult",
    "PrimeCover",
    "SimplicialComplex",
    "TypeClassification",
    "check_fc",
    "codimension",
    "complement",
    "complement_lower_perfect",
    "construct_f_ideal",
    "construct_f_ideal_auto",
    "count_by_enumeration",
    "count_f_ideals_closed_form",
    "count_least_perfect_f_ideals",
    "degree_count_identity",
    "degree_slice",
    "detect_type",
    "dimension",
    "enumerate_f_ideals",
    "f_vector",
    "facet_complex",
    "five_cycle_family",
    "from_graph",
    "is_bipartite",
    "is_f_ideal",
    "is_lower_perfect",
    "is_perfect",
    "is_pure",
    "is_triangle_free",
    "is_unmixed",
    "is_upper_perfect",
    "iter_perfect_subsets",
    "iterated_shadow",
    "lower_shadow",
    "max_degree_below",
    "minimal_primes",
    "nonface_complex",
    "nonfaces_minimal",
    "parse_monomial",
    "parse_monomial_set",
    "perfect_number",
    "random_square_free_ideal",
    "shadow_closure",
    "shadow_closure_identities",
    "staircase_construction",
    "to_graph",
    "two_part_construction",
    "type_class_nonempty",
    "upper_shadow",
]
