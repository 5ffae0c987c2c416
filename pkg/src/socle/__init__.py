"""socle: desk-scale finite group computations around essential subgroups.

Highlights: fully enumerated permutation groups, the normal-subgroup
lattice, essentiality certificates and the essential core e(G), socles,
group actions with antichain certificates, automorphism groups and
holomorphs, a group-spec mini-language, and a theorem-verification harness
(`socle verify --suite ...`).

The hot table kernels run on a compiled extension when available
(`KERNEL_BACKEND == "c"`) and fall back to pure Python otherwise.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .actions import (
    GroupAction,
    StabilizerContainment,
    WholeGroup,
    action_kernel,
    coset_action,
    essential_from_action,
    essential_from_malnormal,
    essential_from_self_normalizing,
    fixed_points,
    is_malnormal,
    is_self_normalizing,
    natural_action,
    stabilizer,
    trivial_action,
)
from .autgrp import (
    AUT_CAP,
    AutGroup,
    Holomorph,
    Semidirect,
    automorphism_group,
    cyclic_power_semidirect,
    holomorph,
    is_complete,
    semidirect,
)
from .catalog import CATALOG_SPECS, catalog
from .errors import (
    InvalidAction,
    NotAbelian,
    NotAHomomorphism,
    NotMonomorphism,
    NotNormal,
    OrderBoundExceeded,
    PreconditionFailed,
    SocleError,
    SpecSemanticError,
    SpecSyntaxError,
    TrivialGroup,
    UnknownSuite,
)
from .essential import (
    EssentialCertificate,
    PrimaryDecomposition,
    PrimaryFactor,
    SplitConditions,
    abelian_essential_extension,
    abelian_primary_decomposition,
    essential_core,
    essential_subgroups,
    essentialize,
    has_proper_essential,
    is_essential,
    is_essential_definitional,
    socle,
    split_conditions,
)
from .group import (
    MAX_ORDER,
    DirectProduct,
    FiniteGroup,
    Homomorphism,
    SubgroupHandle,
    center,
    centralizer,
    close,
    compose_homs,
    direct_product,
    hom_from_generator_images,
    identity_hom,
    normal_closure,
    normalizer,
    quotient,
    subgroup_generated,
)
from .iso import find_isomorphism, invariant_profile, is_isomorphic
from .lattice import (
    ORACLE_CAP,
    NormalLattice,
    all_subgroups,
    conjugacy_classes,
    maximal_trivial_intersector,
    minimal_normal_subgroups,
    normal_complement,
    normal_subgroups,
)
from .named import (
    alternating,
    cyclic,
    dihedral,
    elementary_abelian,
    make_named,
    quaternion8,
    symmetric,
)
from .perm import Perm, compose
from .spec_lang import build, evaluate, parse, perm_literal, render
from .suites import SuiteOptions, VerificationReport, run_suite, suite_names

__version__ = "0.1.0"
