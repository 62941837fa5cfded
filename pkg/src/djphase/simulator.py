"""Dense statevector simulation for diagonal-plus-Hadamard circuits.

Amplitudes live in a flat complex array of length 2^n, basis states
indexed big-endian (qubit 1 is the most significant bit).  Gates mutate
the array in place through reshaped views, so no gate matrices are ever
materialized.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .boolfn import TruthTable
from .oracle_compiler import Circuit, ControlledPhase, GateOp, Hadamard, MultiControlledZ, PhaseFlip

_INV_SQRT2 = 1.0 / math.sqrt(2.0)

MAX_QUBITS = 20
MAX_EQUIVALENCE_QUBITS = 12

PURITY_TOL = 1e-9
NORM_GUARD_TOL = 1e-6
SCHMIDT_CUTOFF = 1e-9


@dataclass
class StateVector:
    n: int
    amps: np.ndarray

    def copy(self) -> StateVector:
        return StateVector(self.n, self.amps.copy())


def basis_state(n: int, index: int = 0) -> StateVector:
    """|index> on n qubits; n is capped at 20 to bound memory."""
    if not 1 <= n <= MAX_QUBITS:
        raise ValueError(f"qubit count must be in 1..{MAX_QUBITS}, got {n}")
    dim = 1 << n
    if not 0 <= index < dim:
        raise ValueError(f"basis index {index} outside 0..{dim - 1}")
    amps = np.zeros(dim, dtype=np.complex128)
    amps[index] = 1.0
    return StateVector(n, amps)


def _axis_view(state: StateVector, qubits: tuple[int, ...]) -> np.ndarray:
    # Reshape to one axis per qubit and bring the listed qubits to the
    # front; qubit q maps to axis q-1 because indexing is big-endian.
    t = state.amps.reshape((2,) * state.n)
    axes = tuple(q - 1 for q in qubits)
    return np.moveaxis(t, axes, tuple(range(len(axes))))


def apply_gate(state: StateVector, gate: GateOp) -> StateVector:
    """Mutate state in place; returns it for chaining."""
    bad = [q for q in gate.qubits if q < 1 or q > state.n]
    if bad:
        raise ValueError(f"gate {gate.mnemonic} touches qubit {bad[0]} but state has {state.n}")
    if isinstance(gate, PhaseFlip):
        _axis_view(state, gate.qubits)[1] *= -1.0
    elif isinstance(gate, ControlledPhase):
        _axis_view(state, gate.qubits)[1, 1] *= -1.0
    elif isinstance(gate, MultiControlledZ):
        _axis_view(state, gate.qubits)[(1,) * len(gate.qubits)] *= -1.0
    elif isinstance(gate, Hadamard):
        v = _axis_view(state, gate.qubits)
        lo = v[0].copy()
        v[0] = (lo + v[1]) * _INV_SQRT2
        v[1] = (lo - v[1]) * _INV_SQRT2
    else:
        raise TypeError(f"unsupported gate {gate!r}")
    return state


def apply_circuit(state: StateVector, circuit: Circuit) -> StateVector:
    if circuit.n > state.n:
        raise ValueError(f"circuit needs {circuit.n} qubits, state has {state.n}")
    for gate in circuit.gates:
        apply_gate(state, gate)
    return state


def apply_hadamard_all(state: StateVector) -> StateVector:
    for q in range(1, state.n + 1):
        apply_gate(state, Hadamard(q))
    return state


def apply_phase_oracle(state: StateVector, t: TruthTable) -> StateVector:
    """Multiply each amplitude by (-1)^f(x) straight from the truth table."""
    if t.n != state.n:
        raise ValueError(f"truth table on {t.n} qubits, state on {state.n}")
    signs = 1.0 - 2.0 * np.asarray(t.values, dtype=np.float64)
    state.amps *= signs
    return state


def amplitude(state: StateVector, index: int) -> complex:
    if not 0 <= index < state.amps.size:
        raise ValueError(f"basis index {index} outside 0..{state.amps.size - 1}")
    return complex(state.amps[index])


def probabilities(state: StateVector) -> np.ndarray:
    return np.abs(state.amps) ** 2


def sample_counts(probs: np.ndarray, shots: int, seed: int) -> dict[int, int]:
    """Draw `shots` outcomes from a probability vector; {index: count}.

    Deterministic for a fixed seed.  Only observed outcomes appear, keys
    ascending.
    """
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    probs = np.asarray(probs, dtype=np.float64)
    total = float(probs.sum())
    if abs(total - 1.0) > NORM_GUARD_TOL:
        raise ValueError(f"probabilities sum to {total:.6f}, too far from 1 to sample")
    rng = np.random.default_rng(seed)
    cdf = np.cumsum(probs / total)
    draws = np.searchsorted(cdf, rng.random(shots), side="right")
    draws = np.minimum(draws, probs.size - 1)
    outcomes, counts = np.unique(draws, return_counts=True)
    return {int(o): int(c) for o, c in zip(outcomes, counts)}


def sample(state: StateVector, shots: int, seed: int) -> dict[int, int]:
    """Measure all qubits `shots` times; returns {basis index: count}."""
    return sample_counts(probabilities(state), shots, seed)


@dataclass(frozen=True)
class EntanglementProfile:
    purities: tuple[float, ...]
    schmidt_ranks: tuple[int, ...]
    fully_product: bool


def entanglement_diagnostics(state: StateVector) -> EntanglementProfile:
    """Single-qubit reduced purities and cut Schmidt ranks.

    For each qubit q the state is reshaped to a 2 x 2^(n-1) matrix M with
    qubit q on the rows; the reduced density matrix is M M^dagger, its
    purity Tr(rho^2), and the Schmidt rank across the q-vs-rest cut the
    number of singular values of M above 1e-9.  The state must be
    normalized.
    """
    norm = float(np.linalg.norm(state.amps))
    if abs(norm - 1.0) > NORM_GUARD_TOL:
        raise ValueError(f"state norm {norm:.6f} too far from 1 for diagnostics")
    purities = []
    ranks = []
    for q in range(1, state.n + 1):
        m = _axis_view(state, (q,)).reshape(2, -1)
        rho = m @ m.conj().T
        purities.append(float(np.trace(rho @ rho).real))
        singular = np.linalg.svd(m, compute_uv=False)
        ranks.append(int(np.sum(singular > SCHMIDT_CUTOFF)))
    fully_product = all(p >= 1.0 - PURITY_TOL for p in purities)
    return EntanglementProfile(tuple(purities), tuple(ranks), fully_product)


@dataclass(frozen=True)
class DiagonalEquivalence:
    match: bool
    global_sign: int
    max_deviation: float


def equivalent_diagonal(c: Circuit, t: TruthTable, tol: float = 1e-9) -> DiagonalEquivalence:
    """Check that circuit c equals the phase oracle of t up to global sign.

    Runs c on every computational basis state and compares the resulting
    diagonal with (-1)^f(x), trying both signs.  Restricted to n <= 12 so
    the 2^n sweep stays cheap.
    """
    if c.n != t.n:
        raise ValueError(f"circuit on {c.n} qubits, truth table on {t.n}")
    if c.n > MAX_EQUIVALENCE_QUBITS:
        raise ValueError(
            f"equivalence sweep supports up to {MAX_EQUIVALENCE_QUBITS} qubits, got {c.n}"
        )
    dim = 1 << c.n
    diag = np.empty(dim, dtype=np.complex128)
    max_offdiag = 0.0
    for i in range(dim):
        out = apply_circuit(basis_state(c.n, i), c).amps
        diag[i] = out[i]
        out[i] = 0.0
        max_offdiag = max(max_offdiag, float(np.max(np.abs(out))))
    target = 1.0 - 2.0 * np.asarray(t.values, dtype=np.float64)
    best_sign, best_dev = 1, math.inf
    for sign in (1, -1):
        dev = float(np.max(np.abs(diag - sign * target)))
        if dev < best_dev:
            best_sign, best_dev = sign, dev
    max_deviation = max(best_dev, max_offdiag)
    match = max_deviation <= tol
    return DiagonalEquivalence(match, best_sign if match else 1, max_deviation)
