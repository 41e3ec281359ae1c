"""towercalc: exact homology, free-Lie-algebra and embedding-tower arithmetic.

Integer chain-complex algebra through Smith normal form (with a compiled
fast path when the extension is built), Lyndon/Witt combinatorics, rational
homotopy tables for sphere wedges, and the connectivity/degree/rank formulas
of the embedding-calculus tower.
"""

from .chains import (
    ChainComplex,
    ChainMap,
    DesuspensionReport,
    GroupSummary,
    HomologySummary,
    NormalInvariantVerdict,
    Verdict,
    check_normal_invariant,
    compose,
    homology,
    identity_map,
    is_quasi_isomorphism,
    mapping_cone,
    quotient_complex,
    relative_homology,
    suspension,
    verify_desuspension,
    zero_map,
)
from .disklinks import (
    GroupDescriptor,
    SESRankReport,
    pi0_cardinality,
    pi1_description,
    ses_rank_report,
)
from .hilton import (
    GradedRankTable,
    SphereWedge,
    looped_product_ranks,
    serre_rank,
    wedge_pi_ranks,
)
from .lie import LyndonWord, grouped_witt_rank, is_lyndon, lyndon_words, witt_rank
from .matrix import Matrix
from .snf import HAVE_COMPILED_KERNEL, SNFResult, invariant_diagonal, smith_normal_form
from .tower import (
    BettiVector,
    ComparisonConnectivities,
    LayerProfile,
    TowerParams,
    codim_check,
    comparison_connectivities,
    connectivity_note,
    convergence_check,
    kunneth_power,
    layer_profile,
    obstruction_degree,
    obstruction_group_rank,
    phi_connectivity,
    stage_map_connectivity,
)

__version__ = "0.1.0"

__all__ = [
    "BettiVector",
    "ChainComplex",
    "ChainMap",
    "ComparisonConnectivities",
    "DesuspensionReport",
    "GradedRankTable",
    "GroupDescriptor",
    "GroupSummary",
    "HAVE_COMPILED_KERNEL",
    "HomologySummary",
    "LayerProfile",
    "LyndonWord",
    "Matrix",
    "NormalInvariantVerdict",
    "SESRankReport",
    "SNFResult",
    "SphereWedge",
    "TowerParams",
    "Verdict",
    "check_normal_invariant",
    "codim_check",
    "comparison_connectivities",
    "compose",
    "connectivity_note",
    "convergence_check",
    "grouped_witt_rank",
    "homology",
    "identity_map",
    "invariant_diagonal",
    "is_lyndon",
    "is_quasi_isomorphism",
    "kunneth_power",
    "layer_profile",
    "looped_product_ranks",
    "lyndon_words",
    "mapping_cone",
    "obstruction_degree",
    "obstruction_group_rank",
    "phi_connectivity",
    "pi0_cardinality",
    "pi1_description",
    "quotient_complex",
    "relative_homology",
    "serre_rank",
    "ses_rank_report",
    "smith_normal_form",
    "stage_map_connectivity",
    "suspension",
    "verify_desuspension",
    "wedge_pi_ranks",
    "witt_rank",
    "zero_map",
]
