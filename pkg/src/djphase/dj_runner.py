"""End-to-end Deutsch-Jozsa runs on simulated statevectors.

Two quantum variants share the decision rule on the all-zeros amplitude
after the final Hadamard layer: magnitude 1 means constant (the sign
telling constant-0 from constant-1), magnitude 0 means balanced.

* refined: n qubits, the oracle is a diagonal phase circuit synthesized
  from the function's ANF.
* original: n query qubits plus a working qubit (qubit n+1, the least
  significant bit) prepared in |->; the oracle XORs f into the working
  qubit, which stays unentangled throughout.

A classical baseline queries fixed inputs until the promise forces a
verdict.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .boolfn import FunctionClass, TruthTable, classify, moebius_transform
from .oracle_compiler import Hadamard, PhaseFlip, synthesize
from .simulator import (
    EntanglementProfile,
    StateVector,
    apply_circuit,
    apply_gate,
    apply_hadamard_all,
    apply_phase_oracle,
    basis_state,
    entanglement_diagnostics,
    probabilities,
)

VERDICT_TOL = 1e-9


class Verdict(Enum):
    CONSTANT = "constant"
    BALANCED = "balanced"


class Mode(Enum):
    REFINED = "refined"
    ORIGINAL = "original"


class PromiseViolationError(ValueError):
    """The function is neither constant nor balanced."""


@dataclass(frozen=True)
class DjOutcome:
    verdict: Verdict
    zero_amplitude: float
    final_probabilities: np.ndarray
    queries_used: int
    mode: Mode
    final_amplitudes: np.ndarray
    working_qubit_purity: float | None


@dataclass(frozen=True)
class ClassicalOutcome:
    verdict: Verdict
    queries_used: int


def _check_promise(t: TruthTable) -> FunctionClass:
    kind = classify(t)
    if kind == FunctionClass.OTHER:
        raise PromiseViolationError(
            f"truth table {t.text} is neither constant nor balanced"
        )
    return kind


def _decide(zero: float, tol: float) -> Verdict:
    if abs(zero) >= 1.0 - tol:
        return Verdict.CONSTANT
    if abs(zero) <= tol:
        return Verdict.BALANCED
    raise RuntimeError(
        f"zero amplitude {zero!r} is neither near 0 nor near +-1; bad oracle?"
    )


def run_refined(t: TruthTable, tol: float = VERDICT_TOL) -> DjOutcome:
    """One oracle query on n qubits using the synthesized phase circuit."""
    _check_promise(t)
    anf = moebius_transform(t)
    circuit = synthesize(anf)
    state = basis_state(t.n, 0)
    apply_hadamard_all(state)
    apply_circuit(state, circuit)
    apply_hadamard_all(state)
    if anf.has_constant_term:
        # The synthesized circuit omits the constant-1 monomial; restore
        # its global -1 so the zero amplitude carries the right sign.
        state.amps *= -1.0
    zero = float(state.amps[0].real)
    return DjOutcome(
        verdict=_decide(zero, tol),
        zero_amplitude=zero,
        final_probabilities=probabilities(state),
        queries_used=1,
        mode=Mode.REFINED,
        final_amplitudes=state.amps.copy(),
        working_qubit_purity=None,
    )


def _apply_xor_oracle(state: StateVector, t: TruthTable) -> StateVector:
    # |x>|y> -> |x>|y XOR f(x)>: swap the working-qubit pair on every row
    # where f is 1.  The working qubit is the last axis, so rows of the
    # (2^n, 2) view are indexed by x directly.
    view = state.amps.reshape(-1, 2)
    mask = np.asarray(t.values, dtype=bool)
    view[mask] = view[mask][:, ::-1]
    return state


def run_original(t: TruthTable, tol: float = VERDICT_TOL) -> DjOutcome:
    """One query with a working qubit in |->, phase kickback style.

    The working qubit is checked to remain unentangled (purity 1 within
    tol) right after the oracle; the query register distribution is then
    read off the final state.
    """
    _check_promise(t)
    n = t.n
    state = basis_state(n + 1, 0)
    work = n + 1
    # Prepare |-> on the working qubit, |+>^n on the query register.
    apply_gate(state, Hadamard(work))
    apply_gate(state, PhaseFlip(work))
    for q in range(1, n + 1):
        apply_gate(state, Hadamard(q))
    _apply_xor_oracle(state, t)
    purity = entanglement_diagnostics(state).purities[work - 1]
    if abs(purity - 1.0) > tol:
        raise RuntimeError(
            f"working qubit purity {purity!r} drifted from 1; oracle not phase-kickback"
        )
    for q in range(1, n + 1):
        apply_gate(state, Hadamard(q))
    # Query-register amplitudes relative to the working |->: project the
    # pair (even, odd) onto (|0> - |1>)/sqrt(2).
    pairs = state.amps.reshape(-1, 2)
    query_amps = (pairs[:, 0] - pairs[:, 1]) / math.sqrt(2.0)
    zero = float(query_amps[0].real)
    marginal = probabilities(state).reshape(-1, 2).sum(axis=1)
    return DjOutcome(
        verdict=_decide(zero, tol),
        zero_amplitude=zero,
        final_probabilities=marginal,
        queries_used=1,
        mode=Mode.ORIGINAL,
        final_amplitudes=state.amps.copy(),
        working_qubit_purity=purity,
    )


def zero_amplitude_formula(t: TruthTable) -> float:
    """Closed form (1/2^n) sum over x of (-1)^f(x), exact in floats."""
    size = 1 << t.n
    return (size - 2 * t.weight) / size


def classical_decide(t: TruthTable) -> ClassicalOutcome:
    """Deterministic baseline: query inputs 0, 1, ... until certain.

    Under the promise, 2^(n-1)+1 equal answers force constant; any
    disagreement proves balanced immediately.
    """
    _check_promise(t)
    limit = (1 << (t.n - 1)) + 1
    first = t.values[0]
    for i in range(1, limit):
        if t.values[i] != first:
            return ClassicalOutcome(Verdict.BALANCED, i + 1)
    return ClassicalOutcome(Verdict.CONSTANT, limit)


def entanglement_profile(t: TruthTable) -> EntanglementProfile:
    """Diagnostics for the refined-run state right after the oracle."""
    state = basis_state(t.n, 0)
    apply_hadamard_all(state)
    apply_phase_oracle(state, t)
    return entanglement_diagnostics(state)
