"""flexgroup: finite-group generation ranks, cyclicisers, and k-flexibility.

Groups are dense Cayley tables over element indices; every analysis is an
exhaustive search with certified witnesses, accelerated by numba kernels
(pure-numpy fallback via FLEXGROUP_BACKEND=numpy).
"""

from .backends import available_backends, get_backend, set_backend, use_backend
from .catalog import CatalogEntry, filter_entries, load_catalog
from .classify import (
    Check,
    StructureTag,
    StructureVariant,
    TheoremReport,
    classify_structure,
    predict_profile,
    verify_d2_case,
    verify_lemma_suite,
    verify_thm_1_flexible,
    verify_thm_2_flexible,
)
from .core import (
    FiniteGroup,
    GroupHom,
    are_isomorphic,
    cyclic,
    direct_product,
    elementary_abelian,
    find_isomorphism,
    from_cayley_table,
    from_json_doc,
    matrix_affine,
    miller_moreno,
    perm_group,
    quaternion8,
    quotient,
    resolve_order_cap,
    scalar_affine,
)
from .errors import (
    EqualPrimes,
    FlexgroupError,
    IndexOutOfRange,
    InternalInvariantViolation,
    InvalidAction,
    KOutOfRange,
    MissingInverse,
    NoIdentity,
    NotAssociative,
    NotASubgroup,
    NotBijection,
    NotNormal,
    NotPrime,
    OrderCapExceeded,
    ParseError,
    PreconditionViolated,
    RankMismatch,
    RankTooSmall,
    SingularMatrix,
    TrivialGroup,
    UnclassifiedStructure,
)
from .flexibility import (
    CycResult,
    FlexVerdict,
    RankResult,
    constructive_affine_extension,
    cycliciser,
    flexibility_profile,
    is_k_flexible,
    min_generators,
    subgroup_rank,
)
from .specs import GroupSpec, SpecCall, SpecProduct, parse_group_spec, parse_spec
from .subgroups import (
    SubgroupSet,
    all_normal_subgroups,
    all_subgroups,
    center,
    closure,
    commutator_subgroup,
    conjugacy_classes,
    is_cyclic_subgroup,
    is_normal,
    minimal_normal_subgroups,
    normal_closure,
)
from .verify import run_suite, run_verification

__version__ = "0.1.0"
