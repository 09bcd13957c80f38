"""Exact-arithmetic toolkit for resolvend transforms on abelian group rings,
Gauss sums with p-adic valuations, Stickelberger integrality, formal wild
symbol identities, and ramification filtrations, plus batch verification
suites behind a CLI."""

from .abelian import (
    Character,
    FiniteAbelianGroup,
    GroupElement,
    char_exponent,
    dual_enumerate,
    element_order,
)
from .cyclotomic import (
    CycloElement,
    conjugate,
    cyclotomic_polynomial,
    galois_map,
    root_of_unity,
)
from .gauss import (
    MultiplicativeCharacter,
    ResidueSubgroup,
    backend_coherence,
    character_sum_identity,
    gauss_sum,
    gauss_valuation,
    power_sum_S,
    verify_translation,
)
from .groupring import (
    CharacterVector,
    GroupMap,
    GroupRingElement,
    inverse_transform,
    involution,
    is_unit,
    reduced_equal,
    resolvend,
    resolvend_to_map,
    resolvent,
    transform,
    unit_inverse,
    unit_pair_check,
)
from .padic import (
    AT_CAP,
    PadicCycloElement,
    PrecisionError,
    embed_cyclo,
    pi_valuation,
    teichmuller,
    zeta_substitute,
)
from .ramify import (
    RamificationFiltration,
    classify,
    different_valuation,
    enumerate_filtrations,
    sqrt_inverse_different_valuation,
)
from .stickelberger import (
    EquivariantMap,
    RationalGroupElement,
    VirtualCharacter,
    det_map,
    in_S,
    kappa_twist,
    pairing,
    stickelberger_map,
    transpose_apply,
)
from .suites import CITATIONS, SUITES, ReportRecord, SuiteConfig, run
from .wildsym import (
    VerificationError,
    WildContext,
    WildElement,
    WildMonomial,
    build_alpha,
    build_g,
    c_of,
    conjugate_check,
    omega_action,
    omega_monomial,
    product_contexts,
    resolvent_at,
    tau_action,
    transpose_eval_g,
)

__version__ = "0.1.0"

__all__ = [
    "AT_CAP",
    "CITATIONS",
    "Character",
    "CharacterVector",
    "CycloElement",
    "EquivariantMap",
    "FiniteAbelianGroup",
    "GroupElement",
    "GroupMap",
    "GroupRingElement",
    "MultiplicativeCharacter",
    "PadicCycloElement",
    "PrecisionError",
    "RamificationFiltration",
    "RationalGroupElement",
    "ReportRecord",
    "ResidueSubgroup",
    "SUITES",
    "SuiteConfig",
    "VerificationError",
    "VirtualCharacter",
    "WildContext",
    "WildElement",
    "WildMonomial",
    "backend_coherence",
    "build_alpha",
    "build_g",
    "c_of",
    "char_exponent",
    "character_sum_identity",
    "classify",
    "conjugate",
    "conjugate_check",
    "cyclotomic_polynomial",
    "det_map",
    "different_valuation",
    "dual_enumerate",
    "element_order",
    "embed_cyclo",
    "enumerate_filtrations",
    "galois_map",
    "gauss_sum",
    "gauss_valuation",
    "in_S",
    "inverse_transform",
    "involution",
    "is_unit",
    "kappa_twist",
    "omega_action",
    "omega_monomial",
    "pairing",
    "pi_valuation",
    "power_sum_S",
    "product_contexts",
    "reduced_equal",
    "resolvend",
    "resolvend_to_map",
    "resolvent",
    "resolvent_at",
    "root_of_unity",
    "run",
    "sqrt_inverse_different_valuation",
    "stickelberger_map",
    "tau_action",
    "teichmuller",
    "transform",
    "transpose_apply",
    "transpose_eval_g",
    "unit_inverse",
    "unit_pair_check",
    "verify_translation",
    "zeta_substitute",
]
