"""Euler characteristic of the induced modules as a formal Laurent polynomial.

    chi(lam) = prod_{beta in Phi1+} (e^{beta/2} + e^{-beta/2})
               * sum_w sign(w) e^{w(lam+rho)} / prod_{alpha in Phi0+} (e^{alpha/2} - e^{-alpha/2})

Exponents are metric vectors multiplied by a per-type scale (2 for D(2|1;zeta)
and G(3), 4 for F(3|1)) so that every exponent that occurs is an integer tuple.
The computation is over the integers and does not depend on the scalar
context.
"""

from __future__ import annotations

import functools
import heapq
import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction as Q
from typing import Iterable, Mapping, Sequence

import numpy as np

from .lattice_forms import (
    SuperType,
    Vector,
    Weight,
    check_weight,
    coroot_ratio,
    from_metric,
    root_datum,
    to_metric,
    weight_basis,
)

SCALE = {SuperType.D2_1: 2, SuperType.G3: 2, SuperType.F3_1: 4}

Exponent = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]


class NonExactDivision(ArithmeticError):
    """A denominator factor left a remainder; this indicates a bug."""


class AmbiguousTop(ValueError):
    def __init__(self, points):
        self.points = points
        super().__init__(f"no unique maximal support point: {points}")


# --------------------------------------------------------------------------
# Weyl group


@dataclass(frozen=True)
class WeylElement:
    matrix: Matrix
    sign: int

    def apply(self, v: Sequence) -> tuple:
        return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in self.matrix)


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def reflection_matrix(alpha: Vector, kind: SuperType) -> Matrix:
    """Matrix of s_alpha on metric coordinates (column j = image of basis vector j)."""
    n = root_datum(kind).dim
    cols = []
    for j in range(n):
        e = tuple(Q(int(i == j)) for i in range(n))
        c = coroot_ratio(e, alpha, kind)
        cols.append(tuple(e[i] - c * alpha[i] for i in range(n)))
    rows = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
    if any(x.denominator != 1 for row in rows for x in row):
        raise ValueError(f"reflection in {alpha} is not integral on the metric basis")
    return tuple(tuple(int(x) for x in row) for row in rows)


@functools.lru_cache(maxsize=None)
def weyl_group(kind: SuperType) -> tuple[WeylElement, ...]:
    """All elements, by breadth-first closure of the even simple reflections."""
    n = root_datum(kind).dim
    gens = [reflection_matrix(a, kind) for a in root_datum(kind).even_simple_roots]
    ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    seen = {ident: 1}
    queue = deque([ident])
    while queue:
        m = queue.popleft()
        for g in gens:
            nm = _mat_mul(g, m)
            if nm not in seen:
                seen[nm] = -seen[m]
                queue.append(nm)
    return tuple(WeylElement(m, s) for m, s in seen.items())


# --------------------------------------------------------------------------
# Characters


@dataclass
class Character:
    """Sparse integer Laurent polynomial on scaled exponents."""

    scale: int
    terms: dict[Exponent, int] = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {k: v for k, v in self.terms.items() if v}

    @classmethod
    def monomial(cls, scale: int, exponent: Exponent, coeff: int = 1) -> "Character":
        return cls(scale, {tuple(exponent): coeff})

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, Character) and self.scale == other.scale and self.terms == other.terms

    def __add__(self, other: "Character") -> "Character":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return Character(self.scale, out)

    def __neg__(self) -> "Character":
        return Character(self.scale, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "Character") -> "Character":
        return self + (-other)

    def __mul__(self, other: "Character") -> "Character":
        out: dict[Exponent, int] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                out[k] = out.get(k, 0) + v1 * v2
        return Character(self.scale, out)

    def act(self, w: WeylElement) -> "Character":
        return Character(self.scale, {w.apply(k): v for k, v in self.terms.items()})

    def metric_support(self) -> dict[Vector, int]:
        return {tuple(Q(x, self.scale) for x in k): v for k, v in sorted(self.terms.items())}

    def divide_binomial(self, h: Exponent) -> "Character":
        """Exact quotient by (e^h - e^{-h}); raises NonExactDivision otherwise.

        Top-down division in lexicographic order: the leading term of the
        dividend is always leading(quotient) + h.
        """
        sign = 1
        if h < tuple(0 for _ in h):
            h, sign = tuple(-x for x in h), -1
        if not any(h):
            raise ZeroDivisionError("e^0 - e^0 is zero")
        rem = dict(self.terms)
        if not rem:
            return Character(self.scale)
        low = min(rem)
        floor = tuple(a + 2 * b for a, b in zip(low, h))
        heap = [tuple(-x for x in k) for k in rem]
        heapq.heapify(heap)
        quo: dict[Exponent, int] = {}
        while heap:
            m = tuple(-x for x in heapq.heappop(heap))
            c = rem.pop(m, 0)
            if not c:
                continue
            if m < floor:
                raise NonExactDivision(f"nonzero remainder dividing by binomial {h}")
            q = tuple(a - b for a, b in zip(m, h))
            quo[q] = sign * c
            t = tuple(a - 2 * b for a, b in zip(m, h))
            nv = rem.get(t, 0) + c
            if nv:
                if t not in rem:
                    heapq.heappush(heap, tuple(-x for x in t))
                rem[t] = nv
            else:
                rem.pop(t, None)
        return Character(self.scale, quo)


def _scaled(v: Sequence, s: int) -> Exponent:
    out = tuple(Q(x) * s for x in v)
    if any(x.denominator != 1 for x in out):
        raise ValueError(f"{v} is not integral at scale {s}")
    return tuple(int(x) for x in out)


def _binomial(v: Vector, s: int, sign: int) -> Character:
    half = _scaled(tuple(Q(x) / 2 for x in v), s)
    return Character(s, {half: 1, tuple(-x for x in half): sign})


def alternant(mu: Vector, kind: SuperType) -> Character:
    s = SCALE[kind]
    out: dict[Exponent, int] = {}
    for w in weyl_group(kind):
        k = _scaled(w.apply(mu), s)
        out[k] = out.get(k, 0) + w.sign
    return Character(s, out)


def euler_char(lam: Sequence[int], kind: SuperType) -> Character:
    """chi(lam); exact division is checked factor by factor."""
    lam = check_weight(lam, kind)
    rd = root_datum(kind)
    s = SCALE[kind]
    mu = tuple(a + b for a, b in zip(to_metric(lam, kind), rd.rho))
    num = alternant(mu, kind)
    for beta in rd.odd_positive:
        num = num * _binomial(beta, s, 1)
    for alpha in rd.even_positive:
        num = num.divide_binomial(_scaled(tuple(Q(x) / 2 for x in alpha), s))
    return num


# --------------------------------------------------------------------------
# Top term


@functools.lru_cache(maxsize=None)
def _inverse(cols: tuple[Vector, ...]) -> tuple[tuple[Q, ...], ...]:
    import sympy

    m = sympy.Matrix([[sympy.Rational(c[i].numerator, c[i].denominator) for c in cols]
                      for i in range(len(cols))]).inv()
    return tuple(tuple(Q(int(x.p), int(x.q)) for x in m.row(i)) for i in range(m.rows))


def _coords(v: Sequence, cols: tuple[Vector, ...]) -> tuple[Q, ...]:
    return tuple(sum((a * Q(x) for a, x in zip(row, v)), Q(0)) for row in _inverse(cols))


@functools.lru_cache(maxsize=None)
def _integer_inverse(cols: tuple[Vector, ...]) -> np.ndarray:
    """A positive multiple of the inverse with integer entries.

    Signs of coordinates are all the top-term search needs, so the common
    denominator can be dropped.
    """
    inv = _inverse(cols)
    den = math.lcm(*(x.denominator for row in inv for x in row))
    return np.array([[int(x * den) for x in row] for row in inv], dtype=np.int64)


def simple_root_coords(v: Sequence, kind: SuperType) -> tuple[Q, ...]:
    """Coordinates of a metric vector in the distinguished simple system."""
    return _coords(v, root_datum(kind).simple_systems[0])


def fundamental_coords(v: Sequence, kind: SuperType) -> tuple[Q, ...]:
    """Rational coordinates of a metric vector in the weight basis."""
    return _coords(v, weight_basis(kind))


def is_regular_dominant(lam: Sequence[int], kind: SuperType) -> bool:
    """Whether lam + rho has strictly positive fundamental coordinates."""
    lam = check_weight(lam, kind)
    mu = tuple(a + b for a, b in zip(to_metric(lam, kind), root_datum(kind).rho))
    return all(x > 0 for x in fundamental_coords(mu, kind))


@dataclass(frozen=True)
class TopTerm:
    point: Vector
    coefficient: int
    weight: Weight | None

    def to_json(self) -> dict:
        return {
            "weight": None if self.weight is None else list(self.weight),
            "metric": [str(x) for x in self.point],
            "coefficient": self.coefficient,
        }


def _keys(c: Character) -> np.ndarray:
    return np.array(sorted(c.terms), dtype=np.int64)


def top_term(c: Character, kind: SuperType) -> TopTerm:
    """The unique support point maximal for the order given by positive roots.

    mu <= nu when nu - mu is a nonnegative combination of the distinguished
    simple roots.  The even cone alone is too coarse: in G(3) it cannot
    compare 3 delta with 2 eps1 + 2 eps2.
    """
    if not c.terms:
        raise ValueError("empty character")
    keys = _keys(c)
    fund = _integer_inverse(weight_basis(kind))
    simple = _integer_inverse(root_datum(kind).simple_systems[0])
    # W-invariance puts every maximal point in the dominant chamber
    dom = (keys @ fund.T >= 0).all(axis=1)
    cand = keys[dom] if dom.any() else keys
    # a unique maximum also maximises the height, so test that point first
    best = cand[np.argmax((cand @ simple.T).sum(axis=1))]
    if ((best - cand) @ simple.T >= 0).all():
        maximal = [best]
    else:
        maximal = [
            v for v in cand
            if not any((u != v).any() and ((u - v) @ simple.T >= 0).all() for u in cand)
        ]
    points = [tuple(Q(int(x), c.scale) for x in v) for v in maximal]
    if len(points) != 1:
        raise AmbiguousTop(points)
    top = points[0]
    try:
        w = from_metric(top, kind)
    except ValueError:
        w = None
    return TopTerm(top, c.terms[tuple(int(x) for x in maximal[0])], w)


def is_w_invariant(c: Character, kind: SuperType) -> bool:
    """Check w.chi == chi for every element of the Weyl group."""
    if not c.terms:
        return True
    keys = _keys(c)
    coeffs = np.array([c.terms[tuple(k)] for k in keys.tolist()], dtype=np.int64)
    for w in weyl_group(kind):
        moved = keys @ np.array(w.matrix, dtype=np.int64).T
        order = np.lexsort(moved.T[::-1])
        if not (np.array_equal(moved[order], keys) and np.array_equal(coeffs[order], coeffs)):
            return False
    return True


def to_json(c: Character, kind: SuperType) -> dict:
    support = [[[str(x) for x in k], v] for k, v in c.metric_support().items()]
    try:
        top = top_term(c, kind).to_json()
    except AmbiguousTop as exc:
        top = {"ambiguous": [[str(x) for x in p] for p in exc.points]}
    return {"scale": c.scale, "support": support, "top": top}


def support_exponents(c: Character) -> Iterable[Exponent]:
    return sorted(c.terms)


def as_mapping(c: Character) -> Mapping[Exponent, int]:
    return dict(sorted(c.terms.items()))
