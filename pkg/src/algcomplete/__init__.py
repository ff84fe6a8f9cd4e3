"""Completeness classification for finite groups, rings and Lie algebras."""

from .errors import (
    AbelianInput,
    AlgebraError,
    CenterNonTrivial,
    ClosureTooLarge,
    CodomainMismatch,
    ConfigInvalid,
    NotASubgroup,
    NotCharacteristicallySimple,
    NotNormal,
    NotProtoComplete,
    SearchBudgetExceeded,
    SizeCap,
    TableInvalid,
)
from .groups import (
    DEFAULT_ELEMENT_CAP,
    FiniteGroup,
    GroupHom,
    Subgroup,
    direct_product,
    enumerate_homs,
    group_from_permutations,
    is_isomorphic,
    load_group,
    normal_subgroups,
    quotient,
)
from .commutators import center, centralizer, is_characteristic, subgroup_verdict
from .automorphisms import (
    AutomorphismGroup,
    RelativeClassifier,
    automorphism_group,
    conjugation_morphism,
    inner_subgroup,
    outer_quotient,
    relative_classifier,
)
from .extensions import (
    GroupAction,
    SplitExtension,
    classify_into_generic,
    enumerate_normal_embeddings,
    enumerate_split_extensions,
    holonomy,
    semidirect_product,
    trivial_action,
)
from .completeness import (
    ClassificationReport,
    ImplicationAudit,
    OracleVerdict,
    centerless_char_criterion,
    char_simple_audit,
    classify_completeness,
    decompose_proto_complete,
    implication_audit,
    one_step_check,
    oracle_completeness,
)
from .catalog import (
    alternating,
    build_catalog,
    cyclic,
    dicyclic,
    dihedral,
    resolve_catalog,
    symmetric,
)
from .rings import (
    FiniteRing,
    RingReport,
    ring_classify,
    ring_zn,
    subring,
    unitalization,
    zero_ring,
)
from .lie import (
    LieAlgebra,
    LieReport,
    abelian_lie,
    lie_classify,
    lie_derivations,
    nonabelian2,
    sl2,
)
from .cli import run_report

__all__ = [
    "AbelianInput",
    "AlgebraError",
    "AutomorphismGroup",
    "CenterNonTrivial",
    "ClassificationReport",
    "ClosureTooLarge",
    "CodomainMismatch",
    "ConfigInvalid",
    "DEFAULT_ELEMENT_CAP",
    "FiniteGroup",
    "FiniteRing",
    "GroupAction",
    "GroupHom",
    "ImplicationAudit",
    "LieAlgebra",
    "LieReport",
    "NotASubgroup",
    "NotCharacteristicallySimple",
    "NotNormal",
    "NotProtoComplete",
    "OracleVerdict",
    "RelativeClassifier",
    "RingReport",
    "SearchBudgetExceeded",
    "SizeCap",
    "SplitExtension",
    "Subgroup",
    "TableInvalid",
    "abelian_lie",
    "alternating",
    "automorphism_group",
    "build_catalog",
    "center",
    "centerless_char_criterion",
    "centralizer",
    "char_simple_audit",
    "classify_completeness",
    "classify_into_generic",
    "conjugation_morphism",
    "cyclic",
    "decompose_proto_complete",
    "dicyclic",
    "dihedral",
    "direct_product",
    "enumerate_homs",
    "enumerate_normal_embeddings",
    "enumerate_split_extensions",
    "group_from_permutations",
    "holonomy",
    "implication_audit",
    "inner_subgroup",
    "is_characteristic",
    "is_isomorphic",
    "lie_classify",
    "lie_derivations",
    "load_group",
    "nonabelian2",
    "normal_subgroups",
    "one_step_check",
    "oracle_completeness",
    "outer_quotient",
    "quotient",
    "relative_classifier",
    "resolve_catalog",
    "ring_classify",
    "ring_zn",
    "run_report",
    "semidirect_product",
    "sl2",
    "subgroup_verdict",
    "subring",
    "symmetric",
    "trivial_action",
    "unitalization",
    "zero_ring",
]
