"""Root data for the exceptional supergroups D(2|1;zeta), G(3) and F(3|1).

Everything is exact.  Vectors in the *metric* basis are tuples of Fractions:

  D2_1 : (delta, eps1, eps2)
  G3   : (delta, eps1, eps2)          with eps3 = -eps1 - eps2
  F3_1 : (delta, eps1, eps2, eps3)

Weights are integer tuples in the basis each type classifies in:

  D2_1 : (d, a, b)     lambda = d delta + a eps1 + b eps2
  G3   : (d, r, s)     lambda = d delta + r omega1 + s omega2
  F3_1 : (a, b, c, d)  lambda = a omega1 + b omega2 + c omega3 + d omega4

The bilinear form of D(2|1;zeta) depends on zeta linearly, so pairings are
returned as a FormValue ``q0 + q1*zeta``; for the other two types q1 is 0.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Sequence

Vector = tuple[Q, ...]
Weight = tuple[int, ...]


class SuperType(enum.Enum):
    D2_1 = "d"
    G3 = "g3"
    F3_1 = "f4"

    @property
    def rank(self) -> int:
        return 4 if self is SuperType.F3_1 else 3

    @classmethod
    def parse(cls, name: str) -> "SuperType":
        key = name.strip().lower()
        aliases = {
            "d": cls.D2_1, "d2_1": cls.D2_1, "d(2|1)": cls.D2_1,
            "g3": cls.G3, "g(3)": cls.G3,
            "f4": cls.F3_1, "f3_1": cls.F3_1, "f(3|1)": cls.F3_1, "f(4)": cls.F3_1,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown supergroup type {name!r}") from None


@dataclass(frozen=True, order=True)
class FormValue:
    """The exact number ``q0 + q1*zeta``."""

    q0: Q = Q(0)
    q1: Q = Q(0)

    def __add__(self, other: "FormValue") -> "FormValue":
        return FormValue(self.q0 + other.q0, self.q1 + other.q1)

    def __sub__(self, other: "FormValue") -> "FormValue":
        return FormValue(self.q0 - other.q0, self.q1 - other.q1)

    def __neg__(self) -> "FormValue":
        return FormValue(-self.q0, -self.q1)

    def __mul__(self, c) -> "FormValue":
        c = Q(c)
        return FormValue(self.q0 * c, self.q1 * c)

    __rmul__ = __mul__

    def is_formally_zero(self) -> bool:
        return self.q0 == 0 and self.q1 == 0

    def evaluate(self, zeta) -> Q:
        return self.q0 + self.q1 * Q(zeta)

    def __str__(self) -> str:
        if self.q1 == 0:
            return str(self.q0)
        return f"{self.q0} + {self.q1}*zeta"


ZERO = FormValue()


def _vec(*xs) -> Vector:
    return tuple(Q(x) for x in xs)


def _neg(v: Vector) -> Vector:
    return tuple(-x for x in v)


def _add(u: Vector, v: Vector) -> Vector:
    return tuple(x + y for x, y in zip(u, v))


def _scale(c, v: Vector) -> Vector:
    return tuple(Q(c) * x for x in v)


@dataclass(frozen=True)
class RootDatum:
    """Fixed per-type root data, transcribed literally and checked by tests.

    ``gram0`` and ``gram1`` are the zeta-free and zeta-linear parts of the
    Gram matrix on the metric basis.  ``dag`` lists the odd-reflection edges
    ``(src, dst, odd_root_index)`` in traversal order.
    """

    kind: SuperType
    gram0: tuple[Vector, ...]
    gram1: tuple[Vector, ...]
    odd_roots: tuple[Vector, ...]
    odd_root_names: tuple[str, ...]
    simple_systems: tuple[tuple[Vector, ...], ...]
    even_simple_roots: tuple[Vector, ...]
    even_positive: tuple[Vector, ...]
    odd_positive: tuple[Vector, ...]
    rho: Vector
    rho0: Vector
    rho1: Vector
    dag: tuple[tuple[int, int, int], ...]

    @property
    def dim(self) -> int:
        return len(self.gram0)

    @property
    def roots(self) -> frozenset[Vector]:
        pos = self.even_positive + self.odd_positive
        return frozenset(pos) | frozenset(_neg(v) for v in pos)

    @property
    def even_roots(self) -> frozenset[Vector]:
        return frozenset(self.even_positive) | frozenset(_neg(v) for v in self.even_positive)


def _diag(*xs) -> tuple[Vector, ...]:
    n = len(xs)
    return tuple(tuple(Q(xs[i]) if i == j else Q(0) for j in range(n)) for i in range(n))


def _build_d() -> RootDatum:
    b1, b2, b3, b4 = _vec(1, -1, -1), _vec(1, 1, -1), _vec(1, -1, 1), _vec(1, 1, 1)
    two_delta, two_e1, two_e2 = _vec(2, 0, 0), _vec(0, 2, 0), _vec(0, 0, 2)
    return RootDatum(
        kind=SuperType.D2_1,
        # (delta,delta) = -(1+zeta), (eps1,eps1) = 1, (eps2,eps2) = zeta
        gram0=_diag(-1, 1, 0),
        gram1=_diag(-1, 0, 1),
        odd_roots=(b1, b2, b3, b4),
        odd_root_names=("beta1", "beta2", "beta3", "beta4"),
        simple_systems=(
            (b1, two_e1, two_e2),
            (_neg(b1), b2, b3),
            (two_e1, _neg(b2), two_delta),
            (two_e2, two_delta, _neg(b3)),
        ),
        even_simple_roots=(two_delta, two_e1, two_e2),
        even_positive=(two_delta, two_e1, two_e2),
        odd_positive=(b1, b2, b3, b4),
        rho=_vec(-1, 1, 1),
        rho0=_vec(1, 1, 1),
        rho1=_vec(2, 0, 0),
        dag=((0, 1, 0), (1, 2, 1), (1, 3, 2)),
    )


def _build_g3() -> RootDatum:
    delta = _vec(1, 0, 0)
    e1, e2 = _vec(0, 1, 0), _vec(0, 0, 1)
    e3 = _vec(0, -1, -1)
    b1 = _add(delta, e3)
    b2 = _add(delta, _neg(e2))
    b3 = _add(delta, _neg(e1))
    a1 = _add(e2, _neg(e1))
    even_pos = (
        _scale(2, delta), e1, e2, _neg(e3), a1, _add(e1, _neg(e3)), _add(e2, _neg(e3)),
    )
    odd_pos = (delta,) + tuple(_add(delta, s) for e in (e1, e2, e3) for s in (e, _neg(e)))
    return RootDatum(
        kind=SuperType.G3,
        gram0=(_vec(-2, 0, 0), _vec(0, 2, -1), _vec(0, -1, 2)),
        gram1=_diag(0, 0, 0),
        odd_roots=(b1, b2, b3),
        odd_root_names=("beta1", "beta2", "beta3"),
        simple_systems=(
            (a1, e1, b1),
            (a1, b2, _neg(b1)),
            (b3, _add(_neg(delta), e2), e1),
            (_add(_neg(delta), e1), a1, delta),
        ),
        even_simple_roots=(a1, e1, _scale(2, delta)),
        even_positive=even_pos,
        odd_positive=odd_pos,
        rho=_vec(Q(-5, 2), 2, 3),
        rho0=_vec(1, 2, 3),
        rho1=_vec(Q(7, 2), 0, 0),
        dag=((0, 1, 0), (1, 2, 1), (2, 3, 2)),
    )


def _build_f4() -> RootDatum:
    h = Q(1, 2)
    delta = _vec(1, 0, 0, 0)
    e = [None, _vec(0, 1, 0, 0), _vec(0, 0, 1, 0), _vec(0, 0, 0, 1)]
    g1 = _vec(h, -h, -h, -h)
    g2 = _vec(h, -h, -h, h)
    g3 = _vec(h, -h, h, -h)
    g4 = _vec(h, -h, h, h)
    g5 = _vec(h, h, -h, -h)
    e12 = _add(e[1], _neg(e[2]))
    e23 = _add(e[2], _neg(e[3]))
    even_pos = [delta]
    for i in range(1, 4):
        for j in range(i + 1, 4):
            even_pos.append(_add(e[i], _neg(e[j])))
            even_pos.append(_add(e[i], e[j]))
    even_pos += [e[1], e[2], e[3]]
    odd_pos = tuple(
        _vec(h, s1 * h, s2 * h, s3 * h)
        for s1 in (1, -1) for s2 in (1, -1) for s3 in (1, -1)
    )
    return RootDatum(
        kind=SuperType.F3_1,
        gram0=_diag(-3, 1, 1, 1),
        gram1=_diag(0, 0, 0, 0),
        odd_roots=(g1, g2, g3, g4, g5),
        odd_root_names=("gamma1", "gamma2", "gamma3", "gamma4", "gamma5"),
        simple_systems=(
            (e12, e23, e[3], g1),
            (e12, e23, g2, _neg(g1)),
            (e12, g3, _neg(g2), e[3]),
            (g5, _neg(g3), e23, g4),
            (delta, e[3], e23, _neg(g4)),
            (_neg(g5), e12, e23, delta),
        ),
        even_simple_roots=(e12, e23, e[3], delta),
        even_positive=tuple(even_pos),
        odd_positive=odd_pos,
        rho=_vec(Q(-3, 2), Q(5, 2), Q(3, 2), h),
        rho0=_vec(h, Q(5, 2), Q(3, 2), h),
        rho1=_vec(2, 0, 0, 0),
        dag=((0, 1, 0), (1, 2, 1), (2, 3, 2), (3, 4, 3), (3, 5, 4)),
    )


@functools.lru_cache(maxsize=None)
def root_datum(kind: SuperType) -> RootDatum:
    return {SuperType.D2_1: _build_d, SuperType.G3: _build_g3, SuperType.F3_1: _build_f4}[kind]()


def pairing(u: Sequence, v: Sequence, kind: SuperType) -> FormValue:
    """Exact value of (u, v) for metric-basis vectors u, v."""
    rd = root_datum(kind)
    n = rd.dim
    if len(u) != n or len(v) != n:
        raise ValueError(f"dimension mismatch: expected {n}, got {len(u)} and {len(v)}")
    q0 = sum(Q(u[i]) * rd.gram0[i][j] * Q(v[j]) for i in range(n) for j in range(n) if rd.gram0[i][j])
    q1 = sum(Q(u[i]) * rd.gram1[i][j] * Q(v[j]) for i in range(n) for j in range(n) if rd.gram1[i][j])
    return FormValue(Q(q0), Q(q1))


def coroot_ratio(v: Sequence, alpha: Sequence, kind: SuperType) -> Q:
    """2(v, alpha)/(alpha, alpha) for a non-isotropic alpha.

    For D(2|1;zeta) both pairings are zeta-linear and proportional, so the
    ratio is a plain rational independent of zeta.
    """
    num = pairing(v, alpha, kind) * 2
    den = pairing(alpha, alpha, kind)
    if den.q1 != 0:
        c = num.q1 / den.q1
        ok = num.q0 == c * den.q0
    elif den.q0 != 0:
        c = num.q0 / den.q0
        ok = num.q1 == 0
    else:
        raise ValueError(f"{alpha} is isotropic")
    if not ok:
        raise ValueError(f"pairing of {v} with {alpha} is not proportional to (alpha, alpha)")
    return c


# Images of the weight basis in metric coordinates (columns of the map).
_BASIS = {
    SuperType.D2_1: (_vec(1, 0, 0), _vec(0, 1, 0), _vec(0, 0, 1)),
    # delta, omega1 = eps1 + 2 eps2, omega2 = eps1 + eps2
    SuperType.G3: (_vec(1, 0, 0), _vec(0, 1, 2), _vec(0, 1, 1)),
    # omega1 = eps1, omega2 = eps1 + eps2, omega3 = (eps1+eps2+eps3)/2, omega4 = delta/2
    SuperType.F3_1: (
        _vec(0, 1, 0, 0), _vec(0, 1, 1, 0),
        _vec(0, Q(1, 2), Q(1, 2), Q(1, 2)), _vec(Q(1, 2), 0, 0, 0),
    ),
}


def weight_basis(kind: SuperType) -> tuple[Vector, ...]:
    return _BASIS[kind]


def check_weight(lam: Sequence[int], kind: SuperType) -> Weight:
    if len(lam) != kind.rank:
        raise ValueError(f"{kind.name} weights have {kind.rank} coordinates, got {len(lam)}")
    out = []
    for x in lam:
        if isinstance(x, bool) or Q(x).denominator != 1:
            raise ValueError(f"weight coordinates must be integers, got {x!r}")
        out.append(int(x))
    return tuple(out)


def to_metric(lam: Sequence[int], kind: SuperType) -> Vector:
    lam = check_weight(lam, kind)
    basis = _BASIS[kind]
    n = len(basis[0])
    return tuple(sum((c * b[i] for c, b in zip(lam, basis)), Q(0)) for i in range(n))


def from_metric(v: Sequence, kind: SuperType) -> Weight:
    """Inverse of :func:`to_metric`; rejects vectors outside the weight lattice."""
    v = tuple(Q(x) for x in v)
    if len(v) != root_datum(kind).dim:
        raise ValueError("dimension mismatch")
    if kind is SuperType.D2_1:
        coords = v
    elif kind is SuperType.G3:
        dl, x, y = v
        coords = (dl, y - x, 2 * x - y)
    else:
        dl, x, y, z = v
        coords = (x - y, y - z, 2 * z, 2 * dl)
    if any(c.denominator != 1 for c in coords):
        raise ValueError(f"{v} is not in the weight lattice of {kind.name}")
    return tuple(int(c) for c in coords)


def is_dominant(lam: Sequence[int], kind: SuperType) -> bool:
    return all(x >= 0 for x in check_weight(lam, kind))


@functools.lru_cache(maxsize=None)
def odd_root_weights(kind: SuperType) -> tuple[Weight, ...]:
    """The listed odd roots as integer weight vectors."""
    return tuple(from_metric(b, kind) for b in root_datum(kind).odd_roots)


@functools.lru_cache(maxsize=None)
def pairing_table(kind: SuperType) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    """Integer rows (u0, u1) with 4*(lambda, beta_i) = u0.lambda + zeta * u1.lambda.

    Lets the hot loops work on plain ints instead of Fractions.
    """
    rows = []
    for beta in root_datum(kind).odd_roots:
        u0, u1 = [], []
        for b in _BASIS[kind]:
            fv = pairing(b, beta, kind) * 4
            assert fv.q0.denominator == 1 and fv.q1.denominator == 1
            u0.append(int(fv.q0))
            u1.append(int(fv.q1))
        rows.append((tuple(u0), tuple(u1)))
    return tuple(rows)


def pair_with_odd_root(lam: Sequence[int], idx: int, kind: SuperType) -> FormValue:
    rd = root_datum(kind)
    if not 0 <= idx < len(rd.odd_roots):
        raise IndexError(f"odd root index {idx} out of range for {kind.name}")
    u0, u1 = pairing_table(kind)[idx]
    lam = check_weight(lam, kind)
    return FormValue(
        Q(sum(x * y for x, y in zip(u0, lam)), 4),
        Q(sum(x * y for x, y in zip(u1, lam)), 4),
    )


def reflect_simple_system(simple: Sequence[Vector], beta: Vector, kind: SuperType) -> tuple[Vector, ...]:
    """Set-level odd reflection r_beta for an isotropic simple root beta.

    beta goes to -beta; a simple root not orthogonal to beta becomes
    alpha + beta; an orthogonal one is unchanged.  Orthogonality is formal
    (as a polynomial in zeta).
    """
    if beta not in simple:
        raise ValueError("beta is not in the simple system")
    if not pairing(beta, beta, kind).is_formally_zero():
        raise ValueError("odd reflections need an isotropic root")
    out = []
    for alpha in simple:
        if alpha == beta:
            out.append(_neg(beta))
        elif pairing(alpha, beta, kind).is_formally_zero():
            out.append(alpha)
        else:
            out.append(_add(alpha, beta))
    return tuple(out)


def positive_roots_of(simple: Sequence[Vector], kind: SuperType) -> frozenset[Vector]:
    """Roots that are nonnegative combinations of ``simple`` (a basis)."""
    import sympy

    m = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in v] for v in simple]).T
    inv = m.inv()
    out = set()
    for r in root_datum(kind).roots:
        coeffs = inv * sympy.Matrix([sympy.Rational(x.numerator, x.denominator) for x in r])
        if all(c >= 0 for c in coeffs):
            out.add(r)
    return frozenset(out)
