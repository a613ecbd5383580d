"""Batch classification, verification sweeps, consistency checks, reports.

Discrepancies between the printed diagrams and the certified verifier are
first-class outputs here: the boundary scan flags every tuple whose printed
(w)-verdict says Holds while the printed (b)-verdict says Fails (the known
defect region of the Kuo-Verdier diagram), and verify-mode sweeps attach a
witness or an exhausted budget to every suspect verdict.
"""

from __future__ import annotations

import csv
import datetime as _dt
import io
import json
from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import Iterable, Optional, Sequence, Union

from ._version import __version__
from .classifier import c1_smooth, classify, profile
from .model import (Condition, Field, RegularityProfile, SurfaceParams,
                    Verdict, CONDITIONS, FIELDS)
from .search import FaultWitness, NoneFound, SearchBudget, find_fault

TOOL_NAME = "strat-regularity"


@dataclass(frozen=True)
class Violation:
    params: SurfaceParams
    rule: str
    detail: str

    def to_json(self) -> dict:
        return {"params": self.params.to_json(), "rule": self.rule,
                "detail": self.detail}


def boundary_flagged(params: SurfaceParams) -> bool:
    """Discrepancy-scan flag: printed (w) Holds while printed (b) Fails.

    These are exactly the tuples on which the printed Kuo-Verdier diagram
    cannot be trusted (it was only established inside the (b)-regular
    region); they include the equality tuples a(d-c) = b|d-a| with d > a
    and are surfaced, never suppressed.
    """
    w, _ = classify(params, Field.REAL, Condition.KUO_VERDIER_W)
    b, _ = classify(params, Field.REAL, Condition.WHITNEY_B)
    return w is Verdict.HOLDS and b is Verdict.FAILS


def consistency_check(prof: RegularityProfile) -> list[Violation]:
    """Implication-lattice and cross-field checks on one profile.

    Checked: Holds-direction implications L => w => b => a over the reals,
    equality of the three complex verdicts, complex Holds implying real
    Holds, the b = 1 equivalence of the real (a)- and (b)-verdicts, and
    C1-smoothness forcing both Whitney conditions.
    """
    v = {(f, c): prof.verdict(f, c) for f in FIELDS for c in CONDITIONS}
    params = prof.params
    out: list[Violation] = []
    H = Verdict.HOLDS

    chain = (Condition.MOSTOWSKI_L, Condition.KUO_VERDIER_W,
             Condition.WHITNEY_B, Condition.WHITNEY_A)
    for stronger, weaker in zip(chain, chain[1:]):
        if v[(Field.REAL, stronger)] is H and v[(Field.REAL, weaker)] is not H:
            out.append(Violation(
                params, f"{stronger.value}=>{weaker.value}",
                f"real {stronger.value} holds but {weaker.value} is "
                f"{v[(Field.REAL, weaker)].value}"))

    triple = [v[(Field.COMPLEX, c)] for c in
              (Condition.WHITNEY_B, Condition.KUO_VERDIER_W, Condition.MOSTOWSKI_L)]
    if len(set(triple)) != 1:
        out.append(Violation(params, "complex-triple",
                             f"complex b/w/L verdicts differ: "
                             f"{[t.value for t in triple]}"))

    for c in CONDITIONS:
        if v[(Field.COMPLEX, c)] is H and v[(Field.REAL, c)] is not H:
            out.append(Violation(params, "complex=>real",
                                 f"complex {c.value} holds but real gives "
                                 f"{v[(Field.REAL, c)].value}"))

    if params.b == 1 and v[(Field.REAL, Condition.WHITNEY_A)] != \
            v[(Field.REAL, Condition.WHITNEY_B)]:
        out.append(Violation(params, "b=1:a<=>b",
                             f"b=1 but real (a)={v[(Field.REAL, Condition.WHITNEY_A)].value}, "
                             f"(b)={v[(Field.REAL, Condition.WHITNEY_B)].value}"))

    if c1_smooth(params):
        for c in (Condition.WHITNEY_A, Condition.WHITNEY_B):
            if v[(Field.REAL, c)] is not H:
                out.append(Violation(params, "C1=>(a,b)",
                                     f"C1-smooth but real ({c.value}) is "
                                     f"{v[(Field.REAL, c)].value}"))
    return out


@dataclass(frozen=True)
class TupleRecord:
    profile: RegularityProfile
    flagged: bool
    evidence: dict  # (field, condition) -> FaultWitness | NoneFound

    def to_json(self) -> dict:
        out = self.profile.to_json()
        out["flagged_boundary"] = self.flagged
        out["traces"] = {
            f.value: {c.value: self.profile.verdicts[(f, c)].provenance
                      for c in CONDITIONS} for f in FIELDS}
        if self.evidence:
            out["evidence"] = {
                f"{f.value}:{c.value}": ev.to_json()
                for (f, c), ev in sorted(self.evidence.items(),
                                         key=lambda kv: (kv[0][0].value,
                                                         kv[0][1].value))}
        return out


@dataclass(frozen=True)
class SweepReport:
    bound: int
    fields: tuple[Field, ...]
    conditions: tuple[Condition, ...]
    records: tuple[TupleRecord, ...]
    violations: tuple[Violation, ...]
    discrepancies: tuple[dict, ...]  # holds-verdict contradicted by a witness

    def summary(self) -> dict:
        counts = {}
        for rec in self.records:
            for f in self.fields:
                for c in self.conditions:
                    key = f"{f.value}:{c.value}:{rec.profile.verdict(f, c).value}"
                    counts[key] = counts.get(key, 0) + 1
        return {
            "tuples": len(self.records),
            "verdict_counts": dict(sorted(counts.items())),
            "violations": len(self.violations),
            "flagged_boundary": sum(1 for r in self.records if r.flagged),
            "discrepancies": len(self.discrepancies),
        }

    def to_json(self) -> dict:
        return {
            "box_bound": self.bound,
            "fields": [f.value for f in self.fields],
            "conditions": [c.value for c in self.conditions],
            "summary": self.summary(),
            "violations": [v.to_json() for v in self.violations],
            "discrepancies": list(self.discrepancies),
            "records": [r.to_json() for r in self.records],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["a", "b", "c", "d", "field", "condition", "verdict",
                         "leaf_trace", "witness_json", "order", "class"])
        for rec in self.records:
            p = rec.profile.params
            for f in self.fields:
                for c in self.conditions:
                    ann = rec.profile.verdicts[(f, c)]
                    ev = rec.evidence.get((f, c))
                    wj, order, klass = "", "", ""
                    if isinstance(ev, FaultWitness):
                        wj = json.dumps(ev.to_json(), sort_keys=True)
                        order = ev.behavior.order_str()
                        klass = ev.behavior.klass.value
                    elif isinstance(ev, NoneFound):
                        wj = json.dumps(ev.to_json(), sort_keys=True)
                    writer.writerow([p.a, p.b, p.c, p.d, f.value, c.value,
                                     ann.verdict.value, ann.provenance or "",
                                     wj, order, klass])
        return buf.getvalue()


def box_tuples(bound: int) -> Iterable[SurfaceParams]:
    for a, b, c, d in product(range(1, bound + 1), repeat=4):
        yield SurfaceParams(a, b, c, d)


def sweep(bound: int, fields: Optional[Sequence[Field]] = None,
          conditions: Optional[Sequence[Condition]] = None,
          verify: bool = False,
          budget: Optional[SearchBudget] = None) -> SweepReport:
    """Classify every tuple in [1, bound]^4 (and optionally verify).

    In verify mode, the fault search runs on every real Fails verdict of the
    requested conditions and on every flagged boundary tuple; witnesses that
    contradict a printed Holds verdict are listed as discrepancies.
    """
    if bound < 1:
        raise ValueError("box bound must be >= 1")
    fields = tuple(fields) if fields else FIELDS
    conditions = tuple(conditions) if conditions else CONDITIONS
    budget = budget or SearchBudget(max_height=24, per_tuple_seconds=None)
    records = []
    violations: list[Violation] = []
    discrepancies: list[dict] = []
    for params in box_tuples(bound):
        prof = profile(params)
        violations.extend(consistency_check(prof))
        flagged = boundary_flagged(params)
        evidence = {}
        if verify:
            for f in fields:
                if f is not Field.REAL:
                    continue
                for c in conditions:
                    verdict = prof.verdict(f, c)
                    suspect = flagged and c in (Condition.KUO_VERDIER_W,
                                                Condition.WHITNEY_B)
                    if verdict is not Verdict.FAILS and not suspect:
                        continue
                    result = find_fault(params, f, c, budget)
                    evidence[(f, c)] = result
                    if isinstance(result, FaultWitness) and verdict is Verdict.HOLDS:
                        discrepancies.append({
                            "params": params.to_json(),
                            "field": f.value,
                            "condition": c.value,
                            "leaf_trace": prof.verdicts[(f, c)].provenance,
                            "witness": result.to_json(),
                        })
        records.append(TupleRecord(prof, flagged, evidence))
    return SweepReport(bound, fields, conditions, tuple(records),
                       tuple(violations), tuple(discrepancies))


def gap_scan(bound: int) -> list[SurfaceParams]:
    """Tuples in [1, bound]^4 where real (b) holds but real (w) fails."""
    if bound < 1:
        raise ValueError("box bound must be >= 1")
    out = []
    for params in box_tuples(bound):
        b, _ = classify(params, Field.REAL, Condition.WHITNEY_B)
        w, _ = classify(params, Field.REAL, Condition.KUO_VERDIER_W)
        if b is Verdict.HOLDS and w is Verdict.FAILS:
            out.append(params)
    return sorted(out)


def report_envelope(results: Union[dict, list], include_timestamp: bool = True) -> dict:
    out = {"tool": TOOL_NAME, "version": __version__, "results": results}
    if include_timestamp:
        out["generated_at"] = _dt.datetime.now(_dt.timezone.utc).isoformat()
    return out


def dump_json(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
