"""Scalar contexts: deciding when a pairing vanishes.

A context is a characteristic (an odd prime, or 0) together with the zeta
parameter of D(2|1;zeta).  In characteristic p, zeta is an element of F_p;
in characteristic 0 it is an exact rational or the symbol ``GENERIC``
(transcendental zeta, where only the formally zero combination vanishes).

Pairings have denominators dividing 4, so they are scaled by 4 before any
reduction mod p.  This never changes whether a value is zero since p is odd.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Union

from .lattice_forms import FormValue, SuperType

GENERIC = "generic"

ZetaValue = Union[int, Q, str, None]


class InadmissibleContext(ValueError):
    """The characteristic/zeta combination is not allowed for the type."""


class UnsupportedCharacteristic(InadmissibleContext):
    """F(3|1) in characteristic 3, which is left open."""


@functools.lru_cache(maxsize=256)
def _is_prime(n: int) -> bool:
    import sympy

    return bool(sympy.isprime(n))


@dataclass(frozen=True)
class ScalarContext:
    characteristic: int = 0
    zeta: ZetaValue = None

    @classmethod
    def fp(cls, p: int, zeta: int | None = None) -> "ScalarContext":
        return cls(p, None if zeta is None else int(zeta) % p)

    @classmethod
    def char0(cls, zeta: ZetaValue = None) -> "ScalarContext":
        if zeta is not None and zeta != GENERIC:
            zeta = Q(zeta)
        return cls(0, zeta)

    @property
    def is_char0(self) -> bool:
        return self.characteristic == 0

    @property
    def is_generic(self) -> bool:
        return self.zeta == GENERIC

    def validate(self, kind: SuperType) -> "ScalarContext":
        p = self.characteristic
        if p != 0:
            if p < 3 or not _is_prime(p):
                raise InadmissibleContext(f"characteristic must be 0 or an odd prime, got {p}")
            if kind is SuperType.F3_1 and p == 3:
                raise UnsupportedCharacteristic("F(3|1) is not classified in characteristic 3")
        if kind is not SuperType.D2_1:
            if self.zeta is not None:
                raise InadmissibleContext("zeta is only meaningful for D(2|1;zeta)")
            return self
        if self.zeta is None:
            raise InadmissibleContext("D(2|1;zeta) needs a zeta value")
        if p != 0:
            if self.zeta == GENERIC or not isinstance(self.zeta, int):
                raise InadmissibleContext("in characteristic p, zeta must be an element of F_p")
            if self.zeta % p in (0, p - 1):
                raise InadmissibleContext(f"zeta must avoid 0 and -1 mod {p}")
        elif self.zeta != GENERIC and Q(self.zeta) in (0, -1):
            raise InadmissibleContext("zeta must avoid 0 and -1")
        return self

    def vanishes(self, n0, n1=0) -> bool:
        """Whether ``n0 + n1*zeta`` is zero in this context.

        n0, n1 are integers (finite characteristic) or rationals (char 0).
        """
        if n1 and self.zeta is None:
            raise InadmissibleContext("zeta-dependent value in a context without zeta")
        p = self.characteristic
        if p:
            z = self.zeta or 0
            return (n0 + n1 * z) % p == 0
        if n1 == 0:
            return n0 == 0
        if self.zeta == GENERIC:
            return n0 == 0 and n1 == 0
        return n0 + n1 * self.zeta == 0

    def inverse_zeta(self) -> "ScalarContext":
        """The context with zeta replaced by zeta^{-1}."""
        if self.zeta is None or self.zeta == GENERIC:
            return self
        if self.characteristic:
            return ScalarContext(self.characteristic, pow(self.zeta, -1, self.characteristic))
        return ScalarContext(0, 1 / Q(self.zeta))

    def to_json(self) -> dict:
        z = self.zeta
        if isinstance(z, Q):
            z = str(z)
        return {"characteristic": self.characteristic, "zeta": z}


def _check_shape(x: FormValue, ctx: ScalarContext) -> tuple[Q, Q]:
    q0, q1 = Q(x.q0), Q(x.q1)
    if (4 * q0).denominator != 1 or (4 * q1).denominator != 1:
        raise ValueError(f"denominators of {x} do not divide 4")
    if q1 and ctx.zeta is None:
        raise InadmissibleContext("zeta-dependent value in a context without zeta")
    return q0, q1


def reduce(x: FormValue, ctx: ScalarContext):
    """Canonical residue of ``4*x``.

    Finite characteristic: an int in [0, p).  Characteristic 0 with a
    concrete zeta: an exact Fraction.  Generic zeta: the pair (4*q0, 4*q1).
    The factor 4 is harmless for zero tests (p is odd).
    """
    q0, q1 = _check_shape(x, ctx)
    n0, n1 = int(4 * q0), int(4 * q1)
    p = ctx.characteristic
    if p:
        return (n0 + n1 * (ctx.zeta or 0)) % p
    if ctx.is_generic:
        return (n0, n1)
    return Q(n0) + Q(n1) * Q(ctx.zeta or 0)


def is_zero(x: FormValue, ctx: ScalarContext) -> bool:
    r = reduce(x, ctx)
    if isinstance(r, tuple):
        return r == (0, 0)
    return r == 0
