"""Independent reference implementations used to cross-check the package.

Everything here recomputes results from first principles with explicit
bit loops and dense matrices, deliberately avoiding the reshape and
butterfly machinery under test.
"""

from __future__ import annotations

import numpy as np


def bit_of(index: int, qubit: int, n: int) -> int:
    """Value of 1-based qubit (qubit 1 = most significant bit) in index."""
    return (index >> (n - qubit)) & 1


def eval_monomials(monomials, x: int, n: int) -> int:
    """Evaluate an XOR of monomials at input x by direct substitution."""
    acc = 0
    for mono in monomials:
        term = 1
        for j in mono:
            term &= bit_of(x, j, n)
        acc ^= term
    return acc


def moebius_bruteforce(values, n: int) -> set[frozenset[int]]:
    """ANF coefficients via the subset-sum rule: a_S = XOR of f over x <= S."""
    monos = set()
    for m in range(1 << n):
        coeff = 0
        for x in range(1 << n):
            if x & ~m == 0:
                coeff ^= values[x]
        if coeff:
            monos.add(frozenset(j for j in range(1, n + 1) if (m >> (n - j)) & 1))
    return monos


def phase_flip_matrix(n: int, qubit: int) -> np.ndarray:
    dim = 1 << n
    m = np.zeros((dim, dim), dtype=complex)
    for i in range(dim):
        m[i, i] = -1.0 if bit_of(i, qubit, n) else 1.0
    return m


def controlled_phase_matrix(n: int, j: int, k: int) -> np.ndarray:
    dim = 1 << n
    m = np.zeros((dim, dim), dtype=complex)
    for i in range(dim):
        both = bit_of(i, j, n) and bit_of(i, k, n)
        m[i, i] = -1.0 if both else 1.0
    return m


def multi_controlled_z_matrix(n: int, qubits) -> np.ndarray:
    dim = 1 << n
    m = np.zeros((dim, dim), dtype=complex)
    for i in range(dim):
        allones = all(bit_of(i, q, n) for q in qubits)
        m[i, i] = -1.0 if allones else 1.0
    return m


def hadamard_matrix(n: int, qubit: int) -> np.ndarray:
    dim = 1 << n
    m = np.zeros((dim, dim), dtype=complex)
    s = 1.0 / np.sqrt(2.0)
    flip = 1 << (n - qubit)
    for col in range(dim):
        if bit_of(col, qubit, n) == 0:
            m[col, col] += s
            m[col ^ flip, col] += s
        else:
            m[col ^ flip, col] += s
            m[col, col] -= s
    return m


def gate_matrix(n: int, gate) -> np.ndarray:
    """Dense matrix for a package gate, dispatched on its mnemonic."""
    name = gate.mnemonic
    qs = gate.qubits
    if name == "z":
        return phase_flip_matrix(n, qs[0])
    if name == "cz":
        return controlled_phase_matrix(n, qs[0], qs[1])
    if name == "h":
        return hadamard_matrix(n, qs[0])
    return multi_controlled_z_matrix(n, qs)


def circuit_matrix(n: int, gates) -> np.ndarray:
    m = np.eye(1 << n, dtype=complex)
    for g in gates:
        m = gate_matrix(n, g) @ m
    return m


def reduced_purity(amps, qubit: int, n: int) -> float:
    """Tr(rho^2) of one qubit's marginal by an explicit double loop."""
    amps = np.asarray(amps)
    rho = np.zeros((2, 2), dtype=complex)
    clear = ~(1 << (n - qubit))
    for i in range(1 << n):
        for j in range(1 << n):
            if i & clear == j & clear:
                rho[bit_of(i, qubit, n), bit_of(j, qubit, n)] += amps[i] * np.conj(amps[j])
    purity = 0.0
    for a in range(2):
        for b in range(2):
            purity += (rho[a, b] * rho[b, a]).real
    return float(purity)


def post_oracle_state(values, n: int) -> np.ndarray:
    """The uniform superposition with signs (-1)^f(x), built directly."""
    dim = 1 << n
    return np.array([(-1.0) ** values[x] for x in range(dim)], dtype=complex) / np.sqrt(dim)
