from .bn_poset import (
    BnPoset,
    PosetFormatError,
    TypeBPartition,
    dump_poset,
    kbp,
    linear_extensions_B,
    linear_poset_B,
    load_poset,
    p_partitions_bounded,
    poset_of,
    type_b_partition_extension,
    validate_bn,
)
from .distinguished import (
    NotRegularError,
    all_bn_posets,
    distinguished_representative,
    is_distinguished,
    is_regular,
    regularity_witness,
    sigma_rho_endpoints,
)
from .finite_poset import (
    BnPosetException,
    FinitePoset,
    all_posets,
    disjoint_union_A,
    dualize,
    linear_poset_A,
    reverse,
)
from .sampling import random_bn_poset, random_poset
from .surgery import (
    bullet_B,
    coaction_of_poset,
    coset_factorization,
    disjoint_union_B,
    extend_pair,
    incB,
    lower_subposets_B,
    minimal_coset_representatives,
    restriction_bijection,
    shuffle_B_coset,
    st_minus,
    st_plus,
    standardize_A,
    standardize_B,
    upper_subposets,
)

__all__ = [
    "BnPoset",
    "BnPosetException",
    "FinitePoset",
    "NotRegularError",
    "PosetFormatError",
    "TypeBPartition",
    "all_bn_posets",
    "all_posets",
    "bullet_B",
    "coaction_of_poset",
    "coset_factorization",
    "disjoint_union_A",
    "disjoint_union_B",
    "distinguished_representative",
    "dualize",
    "dump_poset",
    "extend_pair",
    "incB",
    "is_distinguished",
    "is_regular",
    "kbp",
    "linear_extensions_B",
    "linear_poset_A",
    "linear_poset_B",
    "load_poset",
    "lower_subposets_B",
    "minimal_coset_representatives",
    "p_partitions_bounded",
    "poset_of",
    "random_bn_poset",
    "random_poset",
    "regularity_witness",
    "restriction_bijection",
    "reverse",
    "shuffle_B_coset",
    "sigma_rho_endpoints",
    "st_minus",
    "st_plus",
    "standardize_A",
    "standardize_B",
    "type_b_partition_extension",
    "upper_subposets",
    "validate_bn",
]
