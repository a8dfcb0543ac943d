"""Wave-particle duality toolkit for the Mach-Zehnder path qubit.

Bloch-sphere state and observable algebra, interferometer elements,
the duality bound P^2 + V^2 <= 1 and its equivalence with the
Schrodinger-Robertson and Landau-Pollak uncertainty relations, and
Renyi entropy-sum minimization exposing the critical index q*.
"""

__version__ = "0.1.0"

from .entropic import (
    LN2,
    ContourGrid,
    MinimizationResult,
    RegionMinimum,
    brute_force_min,
    classify_regime,
    constrained_min_over_region,
    contour_grid,
    entropy_of_observable,
    entropy_sum,
    find_q_star,
    minimize_entropy_sum,
    random_mixed_bloch,
    random_pure_bloch,
    renyi_entropy,
    unbiased_saturating_states,
)
from .interferometer import (
    BeamSplitter,
    DualityReport,
    FringeScan,
    MzElement,
    PhaseShifter,
    apply_beam_splitter,
    apply_elements,
    apply_phase_shifter,
    duality_report,
    fringe_scan,
    predictability,
    predictability_op,
    visibility,
    visibility_op,
    visibility_perp_op,
)
from .qubit import (
    MAXIMALLY_MIXED,
    BlochObservable,
    BlochVector,
    ProbPair,
    QubitState,
    expectation,
    overlap,
    probabilities,
    variance,
)
from .uncertainty import (
    EPS_GAP,
    EquivalenceAudit,
    UncertaintyVerdict,
    duality_inequality,
    equivalence_audit,
    hr_relation,
    lp_product_form,
    lp_qubit_form,
    lp_relation,
    max_prob,
    sr_pv_form,
    sr_relation,
)

__all__ = [
    "__version__",
    "BlochVector",
    "QubitState",
    "BlochObservable",
    "ProbPair",
    "MAXIMALLY_MIXED",
    "probabilities",
    "expectation",
    "variance",
    "overlap",
    "BeamSplitter",
    "PhaseShifter",
    "MzElement",
    "apply_beam_splitter",
    "apply_phase_shifter",
    "apply_elements",
    "predictability",
    "visibility",
    "predictability_op",
    "visibility_op",
    "visibility_perp_op",
    "FringeScan",
    "fringe_scan",
    "DualityReport",
    "duality_report",
    "UncertaintyVerdict",
    "sr_relation",
    "hr_relation",
    "sr_pv_form",
    "max_prob",
    "lp_relation",
    "lp_product_form",
    "lp_qubit_form",
    "duality_inequality",
    "EquivalenceAudit",
    "equivalence_audit",
    "EPS_GAP",
    "LN2",
    "renyi_entropy",
    "entropy_of_observable",
    "entropy_sum",
    "MinimizationResult",
    "minimize_entropy_sum",
    "find_q_star",
    "classify_regime",
    "brute_force_min",
    "ContourGrid",
    "contour_grid",
    "unbiased_saturating_states",
    "RegionMinimum",
    "constrained_min_over_region",
    "random_pure_bloch",
    "random_mixed_bloch",
]
