"""Exhaustive cross-validation of the two classifiers over weight boxes."""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .classifier import (
    Verdict,
    box_weights,
    chain,
    classify_char0,
    first_matching,
    intermediate_clauses,
    near_misses,
    reflection_witness,
    theorem_clauses,
)
from .field import GENERIC, InadmissibleContext, ScalarContext
from .lattice_forms import SuperType, Weight

D2_1, G3, F3_1 = SuperType.D2_1, SuperType.G3, SuperType.F3_1


@dataclass
class VerifyReport:
    type: SuperType
    ctx: ScalarContext
    box: tuple[int, ...]
    total_weights: int = 0
    finite_count: int = 0
    mismatches: list[dict] = field(default_factory=list)
    elapsed: float = 0.0
    finite: tuple[Weight, ...] = field(default=(), repr=False)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "type": self.type.value,
            "ctx": self.ctx.to_json(),
            "box": list(self.box),
            "total_weights": self.total_weights,
            "finite_count": self.finite_count,
            "mismatches": self.mismatches,
            "elapsed": round(self.elapsed, 3),
        }


def _entry(lam, kind, ctx, a_finite, b_finite, source, clause, witness) -> dict:
    return {
        "lambda": list(lam),
        "verdict_a": Verdict.of(a_finite).value,
        "verdict_b": Verdict.of(b_finite).value,
        "witness_node": None if witness is None else witness[0],
        "clause": clause,
        "source": source,
        "chain": chain(lam, kind, ctx).to_json(),
    }


def _explain(clauses, lam, ctx, matched):
    if matched is not None:
        return matched
    misses = near_misses(clauses, lam, ctx)
    return "; ".join(misses) if misses else None


def _scan(kind: SuperType, ctx: ScalarContext, box: tuple[int, ...], first: range, amended: bool):
    thm = theorem_clauses(kind, ctx, amended)
    mid = intermediate_clauses(kind, amended)
    total = 0
    finite: list[Weight] = []
    mismatches: list[dict] = []
    sub = (range(first.start, first.stop),) + tuple(range(b + 1) for b in box[1:])
    for lam in itertools.product(*sub):
        total += 1
        witness = reflection_witness(lam, kind, ctx)
        a = witness is None
        if a:
            finite.append(lam)
        for source, clauses in (("theorem", thm), ("intermediate", mid)):
            matched = first_matching(clauses, lam, ctx)
            if (matched is not None) != a:
                clause = _explain(clauses, lam, ctx, matched)
                mismatches.append(_entry(lam, kind, ctx, a, matched is not None, source, clause, witness))
    return total, finite, mismatches


def _chunks(n: int, parts: int) -> list[range]:
    parts = max(1, min(parts, n))
    step, extra = divmod(n, parts)
    out, start = [], 0
    for i in range(parts):
        stop = start + step + (i < extra)
        out.append(range(start, stop))
        start = stop
    return out


def verify_box(
    kind: SuperType,
    ctx: ScalarContext,
    box: Sequence[int],
    workers: int = 1,
    amended: bool = False,
) -> VerifyReport:
    """Reflections vs theorem vs intermediate table on every weight of the box.

    The box is split on its first coordinate; results are merged in
    lexicographic order so the report does not depend on ``workers``.
    """
    ctx.validate(kind)
    if ctx.is_char0:
        raise InadmissibleContext("characteristic 0: use char0_check")
    box = tuple(int(b) for b in box)
    if len(box) != kind.rank or min(box) < 0:
        raise ValueError(f"box for {kind.name} needs {kind.rank} nonnegative bounds")
    t0 = time.perf_counter()
    pieces = _chunks(box[0] + 1, workers)
    if workers > 1 and len(pieces) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_scan, *zip(*[(kind, ctx, box, r, amended) for r in pieces])))
    else:
        results = [_scan(kind, ctx, box, r, amended) for r in pieces]
    report = VerifyReport(kind, ctx, box)
    finite: list[Weight] = []
    for total, fin, mis in results:
        report.total_weights += total
        finite.extend(fin)
        report.mismatches.extend(mis)
    report.mismatches.sort(key=lambda m: (m["lambda"], m["source"]))
    report.finite = tuple(sorted(finite))
    report.finite_count = len(finite)
    report.elapsed = time.perf_counter() - t0
    return report


def symmetry_discrepancies(
    finite_z: Sequence[Weight], finite_inv: Sequence[Weight], box: Sequence[int]
) -> list[Weight]:
    """Weights (d,a,b) with (d,a,b) finite under zeta but (d,b,a) not under 1/zeta, or vice versa.

    Only weights whose swap stays inside the box are compared.
    """
    lim = min(box[1], box[2])
    inside = lambda w: w[1] <= lim and w[2] <= lim  # noqa: E731
    left = {(d, b, a) for d, a, b in finite_z if inside((d, a, b))}
    right = {w for w in finite_inv if inside(w)}
    return sorted(left ^ right)


def zeta_sweep(p: int, box: Sequence[int], workers: int = 1) -> list[VerifyReport]:
    """One report per admissible zeta in F_p, plus the zeta <-> 1/zeta check.

    A symmetry failure is appended to the report of the smaller zeta of the
    pair as a mismatch with source "zeta-symmetry".
    """
    if p == 2:
        raise InadmissibleContext("D(2|1;zeta) needs p > 2")
    reports = [verify_box(D2_1, ScalarContext.fp(p, z), box, workers) for z in range(1, p - 1)]
    by_zeta = {r.ctx.zeta: r for r in reports}
    for z, rep in by_zeta.items():
        zi = pow(z, -1, p)
        if zi < z:
            continue
        for w in symmetry_discrepancies(rep.finite, by_zeta[zi].finite, box):
            rep.mismatches.append({
                "lambda": list(w), "verdict_a": None, "verdict_b": None,
                "witness_node": None, "clause": f"zeta={z} vs zeta={zi} with a,b swapped",
                "source": "zeta-symmetry",
            })
    return reports


# --------------------------------------------------------------------------
# Characteristic 0


def _remark_g3(l) -> bool:
    d, r, s = l
    return (d == r == s == 0) or (d == 2 and s == 0) or d >= 3


def _remark_f4(l) -> bool:
    a, b, c, d = l
    return (a == b == c == d == 0) or (d == 2 and a == c == 0) or d >= 4


def _remark_d_generic(l) -> bool:
    d, a, b = l
    return (d == a == b == 0) or d >= 2


def remark_predicate(kind: SuperType, zeta=None) -> Callable[[Weight], bool] | None:
    """The characteristic-0 list as a literal predicate, where one exists."""
    if kind is G3:
        return _remark_g3
    if kind is F3_1:
        return _remark_f4
    if zeta == GENERIC:
        return _remark_d_generic
    return None


def char0_check(kind: SuperType, box: Sequence[int], zeta=None) -> VerifyReport:
    """Characteristic 0: reflections and theorem-at-p=infinity vs the remark lists.

    Each disagreement is reported with ``verdict_a`` from the reflections and
    ``verdict_b`` from the named source ("theorem" or "remark").
    """
    if kind is D2_1 and zeta is None:
        zeta = GENERIC
    ctx = ScalarContext.char0(zeta).validate(kind)
    box = tuple(int(b) for b in box)
    if len(box) != kind.rank or min(box) < 0:
        raise ValueError(f"box for {kind.name} needs {kind.rank} nonnegative bounds")
    remark = remark_predicate(kind, ctx.zeta)
    t0 = time.perf_counter()
    report = VerifyReport(kind, ctx, box)
    finite = []
    for lam in box_weights(box):
        report.total_weights += 1
        witness = reflection_witness(lam, kind, ctx)
        a = witness is None
        if a:
            finite.append(lam)
        t = classify_char0(lam, kind, ctx.zeta)
        checks = [("theorem", t.finite, t.matched_clause)]
        if remark is not None:
            checks.append(("remark", remark(lam), t.matched_clause))
        for source, b, clause in checks:
            if a != b:
                report.mismatches.append(_entry(lam, kind, ctx, a, b, source, clause, witness))
    report.finite = tuple(finite)
    report.finite_count = len(finite)
    report.elapsed = time.perf_counter() - t0
    return report
