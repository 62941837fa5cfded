"""Phase-oracle synthesis and simulation for one-query constant-vs-balanced decisions."""

from .boolfn import (
    Anf,
    FunctionClass,
    TruthTable,
    TruthTableError,
    all_truth_tables,
    anf_to_truth_table,
    canonical,
    classify,
    complement,
    degree,
    enumerate_balanced,
    moebius_transform,
    parse_truth_table,
)
from .oracle_compiler import (
    Circuit,
    CircuitParseError,
    ConstructionType,
    ControlledPhase,
    GateCounts,
    GateOp,
    Hadamard,
    MultiControlledZ,
    PhaseFlip,
    SynthesisReport,
    classify_construction,
    emit_text,
    gate_counts,
    parse_text,
    synthesis_report,
    synthesize,
)
from .reports import (
    EntanglementSurvey,
    EnumerationReport,
    canonical_balanced,
    entanglement_survey,
    enumeration_report,
)
from .dj_runner import (
    ClassicalOutcome,
    DjOutcome,
    Mode,
    PromiseViolationError,
    Verdict,
    classical_decide,
    entanglement_profile,
    run_original,
    run_refined,
    zero_amplitude_formula,
)
from .simulator import (
    DiagonalEquivalence,
    EntanglementProfile,
    StateVector,
    amplitude,
    apply_circuit,
    apply_gate,
    apply_hadamard_all,
    apply_phase_oracle,
    basis_state,
    entanglement_diagnostics,
    equivalent_diagonal,
    probabilities,
    sample,
    sample_counts,
)
from .verify import CheckResult, run_verification

__version__ = "0.1.0"

__all__ = [
    "Anf",
    "CheckResult",
    "Circuit",
    "CircuitParseError",
    "ClassicalOutcome",
    "ConstructionType",
    "ControlledPhase",
    "DiagonalEquivalence",
    "DjOutcome",
    "EntanglementProfile",
    "EntanglementSurvey",
    "EnumerationReport",
    "FunctionClass",
    "GateCounts",
    "GateOp",
    "Hadamard",
    "Mode",
    "MultiControlledZ",
    "PhaseFlip",
    "PromiseViolationError",
    "StateVector",
    "SynthesisReport",
    "TruthTable",
    "TruthTableError",
    "Verdict",
    "all_truth_tables",
    "amplitude",
    "anf_to_truth_table",
    "apply_circuit",
    "apply_gate",
    "apply_hadamard_all",
    "apply_phase_oracle",
    "basis_state",
    "canonical",
    "canonical_balanced",
    "classical_decide",
    "classify",
    "classify_construction",
    "complement",
    "degree",
    "emit_text",
    "entanglement_diagnostics",
    "entanglement_profile",
    "entanglement_survey",
    "enumerate_balanced",
    "enumeration_report",
    "equivalent_diagonal",
    "gate_counts",
    "moebius_transform",
    "parse_text",
    "parse_truth_table",
    "probabilities",
    "run_original",
    "run_refined",
    "run_verification",
    "sample",
    "sample_counts",
    "synthesis_report",
    "synthesize",
    "zero_amplitude_formula",
]
