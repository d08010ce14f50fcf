"""Deciding whether L(lambda) is finite dimensional.

Two independent routes:

* reflections -- transport lambda across every Borel of the odd-reflection
  graph and require each transported weight to be dominant.  This is the
  reference semantics.
* theorem -- the closed-form clause lists of the classification theorems,
  transcribed clause by clause so a disagreement names the clause.

A third table holds the intermediate (per-d or unsimplified) condition lists
the theorems were distilled from, for three-way cross-checks.

All congruences go through ``ScalarContext.vanishes``; in characteristic 0
it is exact equality, which is how the char-0 classification is read off.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .field import ScalarContext, UnsupportedCharacteristic, InadmissibleContext
from .lattice_forms import SuperType, Weight, check_weight
from .reflection import ChainResult, chain, chain_weights

D2_1, G3, F3_1 = SuperType.D2_1, SuperType.G3, SuperType.F3_1


class Verdict(enum.Enum):
    FINITE = "FINITE"
    INFINITE = "INFINITE"

    @classmethod
    def of(cls, finite: bool) -> "Verdict":
        return cls.FINITE if finite else cls.INFINITE


class NonDominantWeight(ValueError):
    pass


@dataclass(frozen=True)
class Classification:
    weight: Weight
    verdict: Verdict
    method: str
    witness_node: int | None = None
    witness_weight: Weight | None = None
    matched_clause: str | None = None
    chain: ChainResult | None = None

    @property
    def finite(self) -> bool:
        return self.verdict is Verdict.FINITE

    def to_json(self) -> dict:
        out = {"verdict": self.verdict.value, "method": self.method}
        if self.method == "reflections":
            out["witness"] = None if self.witness_node is None else {
                "node": self.witness_node, "weight": list(self.witness_weight)}
        else:
            out["clause"] = self.matched_clause
        return out


# --------------------------------------------------------------------------
# Clause tables.  Each entry is (clause id, predicate(lam, v)) or
# (clause id, predicate, side) where v(n0, n1=0) tests n0 + n1*zeta == 0 in
# the context and ``side`` is a (label, inequality) pair that must also hold.
# Keeping the printed side inequalities separate lets a mismatch report say
# which one rejected a weight.

Clause = tuple


def _side_ge(idx: int, bound: int, label: str):
    return label, lambda l: l[idx] >= bound


_C_GE_2 = _side_ge(2, 2, "c>=2")
_C_GE_1 = _side_ge(2, 1, "c>=1")
_A_GE_1 = _side_ge(0, 1, "a>=1")


def _f4_d2_iv(l, v):
    return l[3] == 2 and v(2 * l[0] - l[2] + 2) and v(2 * l[0] + l[1] + 3)


def _f4_d2_v(l, v):
    return l[3] == 2 and v(2 * l[0] + l[2] + 2) and v(l[0] - l[1])


def _d_theorem() -> list[Clause]:
    return [
        ("ThmD(1)", lambda l, v: l[0] == 0 and v(l[1]) and v(l[2])),
        ("ThmD(2)", lambda l, v: l[0] == 1 and v(l[1] + 1, -(l[2] + 1))),
        ("ThmD(3)", lambda l, v: l[0] == 1 and v(l[1] + 1, l[2] + 1)),
        ("ThmD(4)", lambda l, v: l[0] >= 2),
    ]


def _d_proof_list() -> list[Clause]:
    # the mutually exclusive list in the proof of the D(2|1;zeta) theorem
    def parts(l, v):
        d, a, b = l
        return (
            v(a + d, b + d),            # x
            v(a - d, -(b + d)),         # y2
            v(-(a + d), b - d),         # z2
            v(a - d + 2, -(b + d)),     # y1
            v(-(a + d), b - d + 2),     # z1
        )

    def c(fn):
        return lambda l, v: fn(l, *parts(l, v))

    return [
        ("PropD(i)", c(lambda l, x, y2, z2, y1, z1: l[0] == 0 and x and y2 and z2)),
        ("PropD(ii)", c(lambda l, x, y2, z2, y1, z1: l[0] == 1 and not x and y1 and z1)),
        ("PropD(iii-a)", c(lambda l, x, y2, z2, y1, z1:
                           l[0] == 1 and x and not y2 and l[1] >= 1 and not z2 and l[2] >= 1)),
        ("PropD(iii-b)", c(lambda l, x, y2, z2, y1, z1:
                           l[0] == 1 and x and y2 and not z2 and l[2] >= 1)),
        ("PropD(iv-a)", c(lambda l, x, y2, z2, y1, z1:
                          l[0] == 1 and x and not y2 and l[1] >= 1 and z2)),
        ("PropD(iv-b)", c(lambda l, x, y2, z2, y1, z1: l[0] == 1 and x and y2 and z2)),
        ("PropD(v)", lambda l, v: l[0] >= 2),
    ]


def _g3_theorem() -> list[Clause]:
    return [
        ("ThmG3(1)", lambda l, v: l[0] == 0 and v(3 * l[1]) and v(l[2])),
        ("ThmG3(2)(i)", lambda l, v: l[0] == 1 and v(l[2] - 1) and v(3 * l[1] + 4)),
        ("ThmG3(2)(ii)", lambda l, v: l[0] == 1 and v(l[2]) and v(3 * l[1] + 2)),
        ("ThmG3(3)(i)", lambda l, v: l[0] == 2 and v(l[2])),
        ("ThmG3(3)(ii)", lambda l, v: l[0] == 2 and v(3 * l[1] + l[2] + 3)),
        ("ThmG3(3)(iii)", lambda l, v: l[0] == 2 and v(3 * l[1] + 2 * l[2] + 4)),
        ("ThmG3(4)", lambda l, v: l[0] >= 3),
    ]


def _g3_theorem_p3() -> list[Clause]:
    return [
        ("ThmG3p3(1)", lambda l, v: l[0] == 0 and v(l[2])),
        ("ThmG3p3(2)", lambda l, v: l[0] == 2 and (v(l[2]) or v(l[2] - 1))),
        ("ThmG3p3(3)", lambda l, v: l[0] >= 3),
    ]


def _g3_raw() -> list[Clause]:
    # the unsimplified necessary-and-sufficient list, valid for p = 3 too
    def x(l):
        return 2 * l[0] + 3 * l[1] + 2 * l[2]

    return [
        ("PropG3(1)(a)(i)", lambda l, v: l[0] >= 3 and not v(x(l))
         and not v(2 * l[0] + 3 * l[1] + l[2] - 1) and not v(2 * l[0] + l[2] - 4)),
        ("PropG3(1)(a)(ii)", lambda l, v: l[0] >= 2 and v(2 * l[0] + l[2] - 4)
         and not v(3 * (l[1] + 1)) and not v(x(l))),
        ("PropG3(1)(b)(i)", lambda l, v: l[0] >= 2 and not v(3 * l[1])
         and v(2 * l[0] + 3 * l[1] + l[2] - 1) and not v(x(l))),
        ("PropG3(1)(b)(ii)", lambda l, v: l[0] >= 2 and v(3 * l[1])
         and v(2 * l[0] + l[2] - 1) and not v(x(l))),
        ("PropG3(2)(a)(i)", lambda l, v: l[0] >= 2 and not v(l[2]) and v(x(l))
         and not v(3 * l[1] + l[2] + 3)),
        ("PropG3(2)(a)(ii)", lambda l, v: l[0] >= 1 and not v(l[2]) and v(x(l))
         and v(3 * l[1] + l[2] + 3)),
        ("PropG3(2)(b)(i)", lambda l, v: v(l[2]) and not v(2 * l[0]) and v(2 * l[0] + 3 * l[1])),
        ("PropG3(2)(b)(ii)", lambda l, v: v(2 * l[0]) and v(3 * l[1]) and v(l[2])),
    ]


def _f4_theorem() -> list[Clause]:
    return [
        ("ThmF4(1)", lambda l, v: l[3] == 0 and v(l[0]) and v(l[1]) and v(l[2])),
        ("ThmF4(2)(i)", lambda l, v: l[3] == 1 and v(l[0]) and v(2 * l[1] + 3) and v(l[2] - 1)),
        ("ThmF4(2)(ii)", lambda l, v: l[3] == 1 and v(2 * l[0] + 1) and v(2 * l[1] + 1) and v(l[2])),
        ("ThmF4(2)(iii)", lambda l, v: l[3] == 1 and v(2 * l[0] + 3) and v(l[1]) and v(l[2])),
        ("ThmF4(3)(i)", lambda l, v: l[3] == 2 and v(l[0]) and v(l[2])),
        ("ThmF4(3)(ii)", lambda l, v: l[3] == 2 and v(2 * l[0] - l[2]) and v(l[0] + l[1] + 1)),
        ("ThmF4(3)(iii)", lambda l, v: l[3] == 2 and v(l[1]) and v(2 * l[0] + l[2] + 4)),
        ("ThmF4(3)(iv)", _f4_d2_iv, _C_GE_2),
        ("ThmF4(3)(v)", _f4_d2_v, _A_GE_1),
        ("ThmF4(3)(vi)", lambda l, v: l[3] == 2 and v(l[0] + 2 * l[1] + 3) and v(l[2])),
        ("ThmF4(4)(i)", lambda l, v: l[3] == 3 and v(2 * l[0] - l[2] + 1)),
        ("ThmF4(4)(ii)", lambda l, v: l[3] == 3 and v(2 * l[0] + l[2] + 3)),
        ("ThmF4(4)(iii)", lambda l, v: l[3] == 3 and v(2 * l[0] + 4 * l[1] + l[2] + 7)),
        ("ThmF4(4)(iv)", lambda l, v: l[3] == 3 and v(2 * l[0] + l[2] + 7) and v(l[1])),
        ("ThmF4(4)(v)", lambda l, v: l[3] == 3 and v(2 * l[0] + 4 * l[1] + 3 * l[2] + 9)),
        ("ThmF4(5)", lambda l, v: l[3] >= 4),
    ]


def _f4_props() -> list[Clause]:
    # per-d propositions: d in {0, >=4}, d = 1, d = 2 and d = 3 (simplified forms)
    return [
        ("PropF4First(1)", lambda l, v: l[3] >= 4),
        ("PropF4First(2)", lambda l, v: l[3] == 0 and v(l[0]) and v(l[1]) and v(l[2])),
        ("PropF4d1(i)", lambda l, v: l[3] == 1 and v(l[0]) and v(2 * l[1] + 3) and v(l[2] - 1)),
        ("PropF4d1(ii)", lambda l, v: l[3] == 1 and v(2 * l[0] + 1) and v(2 * l[1] + 1) and v(l[2])),
        ("PropF4d1(iii)", lambda l, v: l[3] == 1 and v(2 * l[0] + 3) and v(l[1]) and v(l[2])),
        ("PropF4d2(i)", lambda l, v: l[3] == 2 and v(l[0]) and v(l[2])),
        ("PropF4d2(ii)", lambda l, v: l[3] == 2 and v(2 * l[0] - l[2]) and v(l[0] + l[1] + 1)),
        ("PropF4d2(iii)", lambda l, v: l[3] == 2 and v(l[1]) and v(2 * l[0] + l[2] + 4)),
        ("PropF4d2(iv)", _f4_d2_iv, _C_GE_2),
        ("PropF4d2(v)", _f4_d2_v, _A_GE_1),
        ("PropF4d2(vi)", lambda l, v: l[3] == 2 and v(l[0] + 2 * l[1] + 3) and v(l[2])),
        ("PropF4d3(i)", lambda l, v: l[3] == 3 and v(2 * l[0] - l[2] + 1)),
        ("PropF4d3(ii)", lambda l, v: l[3] == 3 and v(2 * l[0] + l[2] + 3)),
        ("PropF4d3(iii)", lambda l, v: l[3] == 3 and v(2 * l[0] + 4 * l[1] + l[2] + 7)),
        ("PropF4d3(iv)", lambda l, v: l[3] == 3 and v(2 * l[0] + l[2] + 7) and v(l[1])),
        ("PropF4d3(v)", lambda l, v: l[3] == 3 and v(2 * l[0] + 4 * l[1] + 3 * l[2] + 9)),
    ]


def _amend_f4(clauses: list[Clause]) -> list[Clause]:
    """The F(3|1) d = 2 side conditions as the derivation supports them.

    The unsimplified d = 2 case list asks for c >= 1 (not c >= 2) in the
    clause that (iv) summarises, and its a >= 1 in the clause behind (v) is
    only needed when a is nonzero mod p, where it holds automatically.
    Amended clause ids carry a trailing "*".
    """
    out = []
    for name, pred, *side in clauses:
        if name.endswith("(iv)") and side:
            out.append((name + "*", pred, _C_GE_1))
        elif name.endswith("(v)") and side:
            out.append((name + "*", pred))
        else:
            out.append((name, pred, *side))
    return out


_THEOREMS = {D2_1: _d_theorem(), G3: _g3_theorem(), F3_1: _f4_theorem()}
_THEOREM_G3_P3 = _g3_theorem_p3()
_INTERMEDIATE = {D2_1: _d_proof_list(), G3: _g3_raw(), F3_1: _f4_props()}
AMENDED_F4 = _amend_f4(_THEOREMS[F3_1])
AMENDED_F4_PROPS = _amend_f4(_INTERMEDIATE[F3_1])


def theorem_clauses(kind: SuperType, ctx: ScalarContext, amended: bool = False) -> list[Clause]:
    if kind is G3 and ctx.characteristic == 3:
        return _THEOREM_G3_P3
    if amended and kind is F3_1:
        return AMENDED_F4
    return _THEOREMS[kind]


def intermediate_clauses(kind: SuperType, amended: bool = False) -> list[Clause]:
    if amended and kind is F3_1:
        return AMENDED_F4_PROPS
    return _INTERMEDIATE[kind]


def first_matching(clauses: Sequence[Clause], lam: Weight, ctx: ScalarContext) -> str | None:
    v = ctx.vanishes
    for name, pred, *side in clauses:
        if pred(lam, v) and (not side or side[0][1](lam)):
            return name
    return None


def near_misses(clauses: Sequence[Clause], lam: Weight, ctx: ScalarContext) -> list[str]:
    """Clauses whose congruences hold but whose side inequality fails."""
    v = ctx.vanishes
    return [
        f"{name} fails {side[0][0]}"
        for name, pred, *side in clauses
        if side and pred(lam, v) and not side[0][1](lam)
    ]


def reflection_witness(lam: Weight, kind: SuperType, ctx: ScalarContext) -> tuple[int, Weight] | None:
    """First node whose transported weight is not dominant, or None."""
    for node, w in enumerate(chain_weights(lam, kind, ctx)):
        if min(w) < 0:
            return node, w
    return None


# --------------------------------------------------------------------------
# Public classifiers


def _dominant_input(lam: Sequence[int], kind: SuperType) -> Weight:
    lam = check_weight(lam, kind)
    if min(lam) < 0:
        raise NonDominantWeight(f"{lam} is not dominant")
    return lam


def classify_by_reflections(lam: Sequence[int], kind: SuperType, ctx: ScalarContext) -> Classification:
    lam = _dominant_input(lam, kind)
    ctx.validate(kind)
    result = chain(lam, kind, ctx)
    for step in result.steps:
        if min(step.weight) < 0:
            return Classification(lam, Verdict.INFINITE, "reflections", step.node, step.weight, chain=result)
    return Classification(lam, Verdict.FINITE, "reflections", chain=result)


def classify_by_theorem(
    lam: Sequence[int], kind: SuperType, ctx: ScalarContext, amended: bool = False
) -> Classification:
    """Closed-form clause lists, as printed unless ``amended`` (F(3|1) only)."""
    lam = _dominant_input(lam, kind)
    ctx.validate(kind)
    if ctx.is_char0:
        raise InadmissibleContext("characteristic 0: use classify_char0")
    clause = first_matching(theorem_clauses(kind, ctx, amended), lam, ctx)
    return Classification(lam, Verdict.of(clause is not None), "theorem", matched_clause=clause)


def classify_char0(lam: Sequence[int], kind: SuperType, zeta=None) -> Classification:
    """The theorem clauses read at p = infinity (congruences become equalities)."""
    lam = _dominant_input(lam, kind)
    ctx = ScalarContext.char0(zeta).validate(kind)
    clause = first_matching(_THEOREMS[kind], lam, ctx)
    return Classification(lam, Verdict.of(clause is not None), "theorem-char0", matched_clause=clause)


def classify_by_intermediate(lam: Sequence[int], kind: SuperType, ctx: ScalarContext) -> Classification:
    lam = _dominant_input(lam, kind)
    ctx.validate(kind)
    if kind is F3_1 and ctx.characteristic == 3:
        raise UnsupportedCharacteristic("F(3|1) is not classified in characteristic 3")
    clause = first_matching(_INTERMEDIATE[kind], lam, ctx)
    return Classification(lam, Verdict.of(clause is not None), "intermediate", matched_clause=clause)


def box_weights(box: Sequence[int]) -> Iterator[Weight]:
    """Dominant weights with 0 <= coord_i <= box_i, in lexicographic order."""
    if any(b < 0 for b in box):
        raise ValueError("box bounds must be nonnegative")
    return itertools.product(*(range(b + 1) for b in box))


def list_finite(kind: SuperType, ctx: ScalarContext, box: Sequence[int]) -> list[Weight]:
    ctx.validate(kind)
    if len(box) != kind.rank:
        raise ValueError(f"box for {kind.name} needs {kind.rank} bounds")
    return [lam for lam in box_weights(box) if reflection_witness(lam, kind, ctx) is None]
