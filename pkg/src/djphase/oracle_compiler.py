"""Compile Boolean functions into phase-oracle circuits.

Every ANF monomial maps to one diagonal gate: a singleton {j} becomes a
phase flip on qubit j, a pair {j, k} a controlled-phase between j and k,
and larger monomials a multi-controlled Z.  The constant-1 term only
contributes a global factor of -1, which a phase oracle cannot expose, so
it is dropped and recorded in the synthesis report.

Circuits round-trip through a line-oriented text format:

    qubits 3
    z 3
    cz 1 2

One gate per line, `#` starts a comment, qubit indices are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum

from .boolfn import Anf, FunctionClass, TruthTable, classify, moebius_transform


class CircuitParseError(ValueError):
    """Malformed circuit text."""


@dataclass(frozen=True)
class PhaseFlip:
    """Z on one qubit: flips the sign of amplitudes where the qubit is 1."""

    qubit: int

    def __post_init__(self) -> None:
        if self.qubit < 1:
            raise ValueError(f"qubit index must be >= 1, got {self.qubit}")

    @property
    def qubits(self) -> tuple[int, ...]:
        return (self.qubit,)

    @property
    def mnemonic(self) -> str:
        return "z"


@dataclass(frozen=True)
class ControlledPhase:
    """CZ between two qubits; symmetric, stored with the smaller index first."""

    j: int
    k: int

    def __post_init__(self) -> None:
        if self.j < 1 or self.k < 1:
            raise ValueError(f"qubit indices must be >= 1, got ({self.j}, {self.k})")
        if self.j == self.k:
            raise ValueError(f"controlled phase needs two distinct qubits, got {self.j} twice")
        if self.j > self.k:
            j, k = self.k, self.j
            object.__setattr__(self, "j", j)
            object.__setattr__(self, "k", k)

    @property
    def qubits(self) -> tuple[int, ...]:
        return (self.j, self.k)

    @property
    def mnemonic(self) -> str:
        return "cz"


@dataclass(frozen=True)
class MultiControlledZ:
    """Z controlled on all listed qubits being 1; needs three or more."""

    controls: tuple[int, ...]

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.controls))
        if len(ordered) < 3:
            raise ValueError(
                f"multi-controlled Z needs at least 3 qubits, got {len(ordered)}"
            )
        if len(set(ordered)) != len(ordered):
            raise ValueError(f"duplicate qubit in {self.controls}")
        if ordered[0] < 1:
            raise ValueError(f"qubit indices must be >= 1, got {ordered[0]}")
        object.__setattr__(self, "controls", ordered)

    @property
    def qubits(self) -> tuple[int, ...]:
        return self.controls

    @property
    def mnemonic(self) -> str:
        return "c" * (len(self.controls) - 1) + "z"


@dataclass(frozen=True)
class Hadamard:
    qubit: int

    def __post_init__(self) -> None:
        if self.qubit < 1:
            raise ValueError(f"qubit index must be >= 1, got {self.qubit}")

    @property
    def qubits(self) -> tuple[int, ...]:
        return (self.qubit,)

    @property
    def mnemonic(self) -> str:
        return "h"


GateOp = PhaseFlip | ControlledPhase | MultiControlledZ | Hadamard


@dataclass(frozen=True)
class Circuit:
    n: int
    gates: tuple[GateOp, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"qubit count must be at least 1, got {self.n}")
        for g in self.gates:
            bad = [q for q in g.qubits if q > self.n]
            if bad:
                raise ValueError(
                    f"gate {g.mnemonic} touches qubit {bad[0]} but circuit has {self.n}"
                )


class ConstructionType(IntEnum):
    """Oracle families for balanced three-input functions.

    Type 1 uses phase flips only; types 2 through 4 add one, two, or
    three controlled-phase gates.  The numeric value is 1 plus the
    controlled-phase count.
    """

    TYPE1 = 1
    TYPE2 = 2
    TYPE3 = 3
    TYPE4 = 4


@dataclass(frozen=True)
class GateCounts:
    z: int = 0
    cz: int = 0
    mcz: int = 0
    h: int = 0

    @property
    def total(self) -> int:
        return self.z + self.cz + self.mcz + self.h

    def as_dict(self) -> dict[str, int]:
        return {"z": self.z, "cz": self.cz, "mcz": self.mcz, "h": self.h}


@dataclass(frozen=True)
class SynthesisReport:
    truth_table: TruthTable
    anf: Anf
    circuit: Circuit
    counts: GateCounts
    construction_type: ConstructionType | None
    dropped_global_sign: bool


def synthesize(a: Anf) -> Circuit:
    """Monomial-by-monomial translation into diagonal gates.

    Gate order: phase flips by qubit, then controlled phases by index
    pair, then multi-controlled Z gates by control tuple.  The constant-1
    monomial is skipped (global sign only).
    """
    flips = []
    cps = []
    mczs = []
    for mono in a.monomials:
        if not mono:
            continue
        if len(mono) == 1:
            (j,) = mono
            flips.append(PhaseFlip(j))
        elif len(mono) == 2:
            j, k = sorted(mono)
            cps.append(ControlledPhase(j, k))
        else:
            mczs.append(MultiControlledZ(tuple(mono)))
    flips.sort(key=lambda g: g.qubit)
    cps.sort(key=lambda g: (g.j, g.k))
    mczs.sort(key=lambda g: g.controls)
    return Circuit(a.n, tuple(flips) + tuple(cps) + tuple(mczs))


def gate_counts(c: Circuit) -> GateCounts:
    z = cz = mcz = h = 0
    for g in c.gates:
        if isinstance(g, PhaseFlip):
            z += 1
        elif isinstance(g, ControlledPhase):
            cz += 1
        elif isinstance(g, MultiControlledZ):
            mcz += 1
        else:
            h += 1
    return GateCounts(z, cz, mcz, h)


def classify_construction(c: Circuit) -> ConstructionType:
    """Assign a balanced three-input oracle to its construction family.

    Defined only for circuits on exactly three qubits built from phase
    flips and controlled phases; anything else is rejected.
    """
    if c.n != 3:
        raise ValueError(f"construction types are defined for 3 qubits, got {c.n}")
    counts = gate_counts(c)
    if counts.mcz or counts.h:
        raise ValueError("construction types cover z/cz circuits only")
    if counts.cz > 3:
        raise ValueError(f"unexpected controlled-phase count {counts.cz}")
    return ConstructionType(1 + counts.cz)


def synthesis_report(t: TruthTable) -> SynthesisReport:
    """Synthesize t and bundle the artifacts one consumer step needs."""
    a = moebius_transform(t)
    c = synthesize(a)
    ctype = None
    if t.n == 3 and classify(t) == FunctionClass.BALANCED:
        ctype = classify_construction(c)
    return SynthesisReport(
        truth_table=t,
        anf=a,
        circuit=c,
        counts=gate_counts(c),
        construction_type=ctype,
        dropped_global_sign=a.has_constant_term,
    )


def emit_text(c: Circuit) -> str:
    """Serialize to the line format; every line ends with a newline."""
    lines = [f"qubits {c.n}"]
    for g in c.gates:
        lines.append(" ".join([g.mnemonic, *(str(q) for q in g.qubits)]))
    return "".join(line + "\n" for line in lines)


def _parse_indices(parts: list[str], lineno: int) -> list[int]:
    out = []
    for p in parts:
        try:
            out.append(int(p))
        except ValueError:
            raise CircuitParseError(f"line {lineno}: expected qubit index, got {p!r}") from None
    return out


def parse_text(text: str) -> Circuit:
    """Inverse of emit_text; tolerates comments and blank lines."""
    n = None
    gates: list[GateOp] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        keyword = parts[0]
        if n is None:
            if keyword != "qubits":
                raise CircuitParseError(f"line {lineno}: expected 'qubits <n>' header first")
            if len(parts) != 2:
                raise CircuitParseError(f"line {lineno}: 'qubits' takes exactly one count")
            (n,) = _parse_indices(parts[1:], lineno)
            if n < 1:
                raise CircuitParseError(f"line {lineno}: qubit count must be >= 1, got {n}")
            continue
        if keyword == "qubits":
            raise CircuitParseError(f"line {lineno}: duplicate 'qubits' header")
        indices = _parse_indices(parts[1:], lineno)
        if any(q < 1 or q > n for q in indices):
            raise CircuitParseError(f"line {lineno}: qubit index outside 1..{n}")
        try:
            if keyword == "z":
                if len(indices) != 1:
                    raise CircuitParseError(f"line {lineno}: 'z' takes one qubit")
                gates.append(PhaseFlip(indices[0]))
            elif keyword == "h":
                if len(indices) != 1:
                    raise CircuitParseError(f"line {lineno}: 'h' takes one qubit")
                gates.append(Hadamard(indices[0]))
            elif keyword == "cz":
                if len(indices) != 2:
                    raise CircuitParseError(f"line {lineno}: 'cz' takes two qubits")
                gates.append(ControlledPhase(indices[0], indices[1]))
            elif set(keyword) == {"c", "z"} and keyword.endswith("z") and keyword.count("z") == 1:
                if len(indices) != keyword.count("c") + 1:
                    raise CircuitParseError(
                        f"line {lineno}: '{keyword}' takes {keyword.count('c') + 1} qubits"
                    )
                gates.append(MultiControlledZ(tuple(indices)))
            else:
                raise CircuitParseError(f"line {lineno}: unknown gate {keyword!r}")
        except CircuitParseError:
            raise
        except ValueError as exc:
            raise CircuitParseError(f"line {lineno}: {exc}") from None
    if n is None:
        raise CircuitParseError("empty circuit text: missing 'qubits <n>' header")
    return Circuit(n, tuple(gates))
