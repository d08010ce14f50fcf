"""Transport of a highest weight across the odd-reflection graph of Borels.

Crossing an edge labelled by the isotropic odd root beta, the highest weight
lam becomes lam - beta when (lam, beta) is nonzero in the scalar context and
stays put otherwise.  Nodes are visited in the fixed order 0, 1, 2, ...
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .field import ScalarContext
from .lattice_forms import (
    FormValue,
    SuperType,
    Weight,
    check_weight,
    odd_root_weights,
    pair_with_odd_root,
    pairing_table,
    root_datum,
)


class Branch(enum.Enum):
    REFLECTED = "REFLECTED"
    FIXED = "FIXED"


@dataclass(frozen=True)
class ChainStep:
    node: int
    weight: Weight
    parent: int | None = None
    odd_root: int | None = None
    pairing: FormValue | None = None
    branch: Branch | None = None

    def to_json(self, kind: SuperType) -> dict:
        out = {"node": self.node, "weight": list(self.weight)}
        if self.parent is None:
            out.update(parent=None, odd_root=None, pairing=None, branch=None)
        else:
            out.update(
                parent=self.parent,
                odd_root=root_datum(kind).odd_root_names[self.odd_root],
                pairing={"q0": str(self.pairing.q0), "q1": str(self.pairing.q1)},
                branch=self.branch.value,
            )
        return out


@dataclass(frozen=True)
class ChainResult:
    kind: SuperType
    steps: tuple[ChainStep, ...]

    @property
    def weights(self) -> tuple[Weight, ...]:
        return tuple(s.weight for s in self.steps)

    def __getitem__(self, node: int) -> ChainStep:
        return self.steps[node]

    def to_json(self) -> list[dict]:
        return [s.to_json(self.kind) for s in self.steps]


def _vanishes(lam: Weight, idx: int, kind: SuperType, ctx: ScalarContext) -> bool:
    u0, u1 = pairing_table(kind)[idx]
    n0 = sum(x * y for x, y in zip(u0, lam))
    n1 = sum(x * y for x, y in zip(u1, lam))
    return ctx.vanishes(n0, n1)


def odd_reflect(lam: Sequence[int], idx: int, kind: SuperType, ctx: ScalarContext) -> tuple[Weight, Branch]:
    """Highest weight after the odd reflection in odd root ``idx``."""
    lam = check_weight(lam, kind)
    if _vanishes(lam, idx, kind, ctx):
        return lam, Branch.FIXED
    beta = odd_root_weights(kind)[idx]
    return tuple(x - y for x, y in zip(lam, beta)), Branch.REFLECTED


def chain_weights(lam: Weight, kind: SuperType, ctx: ScalarContext) -> list[Weight]:
    """Just the weights lam^0..lam^k; the hot path used by the classifiers."""
    table = pairing_table(kind)
    betas = odd_root_weights(kind)
    p = ctx.characteristic
    zeta = ctx.zeta
    out = [lam]
    for src, _dst, idx in root_datum(kind).dag:
        cur = out[src]
        u0, u1 = table[idx]
        n0 = sum(x * y for x, y in zip(u0, cur))
        if kind is SuperType.D2_1:
            n1 = sum(x * y for x, y in zip(u1, cur))
            zero = (n0 + n1 * zeta) % p == 0 if p else ctx.vanishes(n0, n1)
        else:
            zero = n0 % p == 0 if p else n0 == 0
        if zero:
            out.append(cur)
        else:
            out.append(tuple(x - y for x, y in zip(cur, betas[idx])))
    return out


def chain(lam: Sequence[int], kind: SuperType, ctx: ScalarContext) -> ChainResult:
    """Highest weights of L(lam) at every Borel node, with the branch taken."""
    lam = check_weight(lam, kind)
    ctx.validate(kind)
    steps = [ChainStep(0, lam)]
    for src, dst, idx in root_datum(kind).dag:
        assert dst == len(steps)
        cur = steps[src].weight
        value = pair_with_odd_root(cur, idx, kind)
        new, branch = odd_reflect(cur, idx, kind, ctx)
        steps.append(ChainStep(dst, new, src, idx, value, branch))
    return ChainResult(kind, tuple(steps))
