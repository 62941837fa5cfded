"""Census reports over balanced functions.

Balanced functions come in complement pairs {f, 1 XOR f} whose oracles
differ only by a global sign, so the census walks canonical
representatives (f(0) = 0) and reports one row per class.  For n = 3 the
rows also carry the construction-type tally.
"""

from __future__ import annotations

from dataclasses import dataclass

from .boolfn import TruthTable, canonical, enumerate_balanced
from .oracle_compiler import SynthesisReport, emit_text, synthesis_report
from .dj_runner import entanglement_profile, zero_amplitude_formula


@dataclass(frozen=True)
class EnumerationRow:
    report: SynthesisReport
    zero_amplitude: float
    fully_product: bool

    def as_dict(self) -> dict:
        r = self.report
        return {
            "truth_table": r.truth_table.text,
            "anf": r.anf.render(),
            "circuit": emit_text(r.circuit),
            "type": int(r.construction_type) if r.construction_type is not None else None,
            "gate_counts": r.counts.as_dict(),
            "zero_amplitude": self.zero_amplitude,
            "fully_product": self.fully_product,
        }


@dataclass(frozen=True)
class EnumerationReport:
    n: int
    total_balanced: int
    classes: int
    type_counts: dict[int, int] | None
    rows: tuple[EnumerationRow, ...]

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "total_balanced": self.total_balanced,
            "classes": self.classes,
            "type_counts": (
                {str(k): v for k, v in sorted(self.type_counts.items())}
                if self.type_counts is not None
                else None
            ),
            "rows": [row.as_dict() for row in self.rows],
        }


def canonical_balanced(n: int) -> list[TruthTable]:
    """Canonical representatives of balanced complement pairs, ascending."""
    seen = set()
    reps = []
    for t in enumerate_balanced(n):
        rep = canonical(t)
        if rep.values not in seen:
            seen.add(rep.values)
            reps.append(rep)
    return reps


def enumeration_report(n: int) -> EnumerationReport:
    total = len(enumerate_balanced(n))
    reps = canonical_balanced(n)
    rows = []
    type_counts: dict[int, int] | None = {1: 0, 2: 0, 3: 0, 4: 0} if n == 3 else None
    for t in reps:
        report = synthesis_report(t)
        profile = entanglement_profile(t)
        rows.append(
            EnumerationRow(
                report=report,
                zero_amplitude=zero_amplitude_formula(t),
                fully_product=profile.fully_product,
            )
        )
        if type_counts is not None and report.construction_type is not None:
            type_counts[int(report.construction_type)] += 1
    return EnumerationReport(
        n=n,
        total_balanced=total,
        classes=len(reps),
        type_counts=type_counts,
        rows=tuple(rows),
    )


@dataclass(frozen=True)
class SurveyRow:
    truth_table: TruthTable
    construction_type: int | None
    purities: tuple[float, ...]
    fully_product: bool

    def as_dict(self) -> dict:
        return {
            "truth_table": self.truth_table.text,
            "type": self.construction_type,
            "purities": list(self.purities),
            "fully_product": self.fully_product,
        }


@dataclass(frozen=True)
class EntanglementSurvey:
    n: int
    classes: int
    product_classes: int
    entangled_classes: int
    rows: tuple[SurveyRow, ...]

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "classes": self.classes,
            "product_classes": self.product_classes,
            "entangled_classes": self.entangled_classes,
            "rows": [row.as_dict() for row in self.rows],
        }


def entanglement_survey(n: int) -> EntanglementSurvey:
    """Post-oracle entanglement across canonical balanced classes."""
    reps = canonical_balanced(n)
    rows = []
    product = 0
    for t in reps:
        report = synthesis_report(t)
        profile = entanglement_profile(t)
        if profile.fully_product:
            product += 1
        rows.append(
            SurveyRow(
                truth_table=t,
                construction_type=(
                    int(report.construction_type) if report.construction_type is not None else None
                ),
                purities=profile.purities,
                fully_product=profile.fully_product,
            )
        )
    return EntanglementSurvey(
        n=n,
        classes=len(reps),
        product_classes=product,
        entangled_classes=len(reps) - product,
        rows=tuple(rows),
    )
