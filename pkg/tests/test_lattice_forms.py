from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st

from exsuper.field import ScalarContext
from exsuper.lattice_forms import (
    FormValue,
    SuperType,
    coroot_ratio,
    from_metric,
    is_dominant,
    pair_with_odd_root,
    pairing,
    positive_roots_of,
    reflect_simple_system,
    root_datum,
    to_metric,
    weight_basis,
)

D, G3, F4 = SuperType.D2_1, SuperType.G3, SuperType.F3_1
ALL = list(SuperType)


def v(*xs):
    return tuple(Q(x) for x in xs)


def half_sum(vs, n):
    return tuple(sum((x[i] for x in vs), Q(0)) / 2 for i in range(n))


# -- root data ---------------------------------------------------------------


@pytest.mark.parametrize("kind", ALL)
def test_rho_is_rho0_minus_rho1(kind):
    rd = root_datum(kind)
    rho0 = half_sum(rd.even_positive, rd.dim)
    rho1 = half_sum(rd.odd_positive, rd.dim)
    assert rho0 == rd.rho0
    assert rho1 == rd.rho1
    assert tuple(a - b for a, b in zip(rho0, rho1)) == rd.rho


def test_printed_rho_values():
    assert root_datum(D).rho == v(-1, 1, 1)
    # rho = -5/2 delta + omega1 + omega2
    assert root_datum(G3).rho == tuple(
        Q(-5, 2) * a + b + c for a, b, c in zip(*weight_basis(G3))
    )
    assert root_datum(G3).rho1 == v(Q(7, 2), 0, 0)
    # rho = omega1 + omega2 + omega3 - 3 omega4
    w = weight_basis(F4)
    assert root_datum(F4).rho == tuple(a + b + c - 3 * d for a, b, c, d in zip(*w))


@pytest.mark.parametrize("kind", ALL)
def test_gram_symmetric(kind):
    rd = root_datum(kind)
    n = rd.dim
    basis = [tuple(Q(int(i == j)) for i in range(n)) for j in range(n)]
    for u in basis:
        for w in basis:
            assert pairing(u, w, kind) == pairing(w, u, kind)


@pytest.mark.parametrize("kind", [D, F4])
def test_odd_roots_isotropic(kind):
    for beta in root_datum(kind).odd_positive:
        assert pairing(beta, beta, kind).is_formally_zero()


def test_g3_odd_roots_isotropic_except_delta():
    rd = root_datum(G3)
    for beta in rd.odd_roots:
        assert pairing(beta, beta, G3).is_formally_zero()
    assert pairing(v(1, 0, 0), v(1, 0, 0), G3) == FormValue(Q(-2))
    # (delta+eps3, delta+eps3) = -2 + 2
    assert pairing(v(1, -1, -1), v(1, -1, -1), G3).is_formally_zero()


@pytest.mark.parametrize("kind,count", [(D, 4), (G3, 4), (F4, 6)])
def test_number_of_simple_systems(kind, count):
    assert len(root_datum(kind).simple_systems) == count


@pytest.mark.parametrize("kind", ALL)
def test_simple_roots_are_roots(kind):
    rd = root_datum(kind)
    for simple in rd.simple_systems:
        assert set(simple) <= rd.roots


@pytest.mark.parametrize("kind", ALL)
def test_every_borel_has_the_same_even_part(kind):
    rd = root_datum(kind)
    even = set(rd.even_positive)
    for simple in rd.simple_systems:
        pos = positive_roots_of(simple, kind)
        assert len(pos) * 2 == len(rd.roots)
        assert pos & rd.even_roots == even


@pytest.mark.parametrize("kind", ALL)
def test_even_simple_coverage(kind):
    rd = root_datum(kind)
    listed = {r for simple in rd.simple_systems for r in simple}
    for alpha in rd.even_simple_roots:
        assert alpha in listed or tuple(x / 2 for x in alpha) in listed


@pytest.mark.parametrize("kind", ALL)
def test_odd_reflections_reproduce_the_listed_borels(kind):
    rd = root_datum(kind)
    for src, dst, idx in rd.dag:
        beta = rd.odd_roots[idx]
        assert beta in rd.simple_systems[src]
        got = reflect_simple_system(rd.simple_systems[src], beta, kind)
        assert set(got) == set(rd.simple_systems[dst])


@pytest.mark.parametrize("kind", ALL)
def test_dag_shape(kind):
    rd = root_datum(kind)
    n = len(rd.simple_systems)
    targets = [dst for _, dst, _ in rd.dag]
    assert sorted(targets) == list(range(1, n))
    assert all(src < dst for src, dst, _ in rd.dag)


def test_printed_simple_systems():
    assert set(root_datum(G3).simple_systems[3]) == {v(-1, 1, 0), v(0, -1, 1), v(1, 0, 0)}
    h = Q(1, 2)
    assert set(root_datum(F4).simple_systems[5]) == {
        v(-h, -h, h, h), v(0, 1, -1, 0), v(0, 0, 1, -1), v(1, 0, 0, 0)
    }


@pytest.mark.parametrize("kind", ALL)
def test_weight_coordinates_are_coroot_pairings(kind):
    # coordinatewise dominance is dominance for the even simple coroots
    rd = root_datum(kind)
    rows = sorted(
        tuple(coroot_ratio(b, a, kind) for b in weight_basis(kind)) for a in rd.even_simple_roots
    )
    n = kind.rank
    identity = sorted(tuple(Q(int(i == j)) for j in range(n)) for i in range(n))
    assert rows == identity


# -- pairings ------------------------------------------------------------------


def test_pairing_examples():
    assert pairing(v(1, 0, 0), v(1, 0, 0), D) == FormValue(Q(-1), Q(-1))
    omega4 = weight_basis(F4)[3]
    assert pairing(omega4, v(1, 0, 0, 0), F4) == FormValue(Q(-3, 2))
    for kind in ALL:
        n = root_datum(kind).dim
        assert pairing((0,) * n, root_datum(kind).odd_roots[0], kind).is_formally_zero()


def test_pairing_dimension_mismatch():
    with pytest.raises(ValueError):
        pairing(v(1, 0), v(1, 0, 0), D)


def test_pair_with_odd_root_examples():
    # (lambda, beta1) = -(2d + 3r + 2s)
    assert pair_with_odd_root((1, 1, 1), 0, G3) == FormValue(Q(-7))
    # -(a+d) - (b+d) zeta
    assert pair_with_odd_root((1, 0, 0), 0, D) == FormValue(Q(-1), Q(-1))
    assert pair_with_odd_root((0, 0, 0, 0), 0, F4) == FormValue()


def test_pair_with_odd_root_bad_index():
    with pytest.raises(IndexError):
        pair_with_odd_root((0, 0, 0), 3, G3)


@st.composite
def weight_of(draw, kind, lo=-20, hi=20):
    return tuple(draw(st.integers(lo, hi)) for _ in range(kind.rank))


@pytest.mark.parametrize("kind", ALL)
@given(data=st.data())
def test_pair_with_odd_root_matches_metric_pairing(kind, data):
    lam = data.draw(weight_of(kind))
    rd = root_datum(kind)
    for i, beta in enumerate(rd.odd_roots):
        fv = pair_with_odd_root(lam, i, kind)
        assert fv == pairing(to_metric(lam, kind), beta, kind)
        assert (4 * fv.q0).denominator == 1
        if kind is not D:
            assert fv.q1 == 0
        if kind is G3:
            assert fv.q0.denominator == 1


# -- coordinates ---------------------------------------------------------------


def test_to_metric_examples():
    assert to_metric((0, 1, 0), G3) == v(0, 1, 2)
    assert to_metric((0, 0, 1, 0), F4) == v(0, Q(1, 2), Q(1, 2), Q(1, 2))
    for kind in ALL:
        assert to_metric((0,) * kind.rank, kind) == (Q(0),) * root_datum(kind).dim


@pytest.mark.parametrize("kind", ALL)
@given(data=st.data())
def test_metric_round_trip(kind, data):
    lam = data.draw(weight_of(kind))
    assert from_metric(to_metric(lam, kind), kind) == lam


def test_from_metric_rejects_non_lattice_points():
    with pytest.raises(ValueError):
        from_metric(v(Q(1, 2), 0, 0), D)
    with pytest.raises(ValueError):
        from_metric(v(Q(1, 4), 0, 0, 0), F4)
    with pytest.raises(ValueError):
        from_metric(v(0, Q(1, 2), 0), G3)


def test_odd_roots_of_f4_are_half_vectors():
    for g in root_datum(F4).odd_positive:
        assert all(abs(x) == Q(1, 2) for x in g)


def test_is_dominant_examples():
    assert is_dominant((2, 0, 5), G3)
    assert not is_dominant((1, -1, 0), D)
    assert is_dominant((0, 0, 0, 0), F4)


def test_bad_weight_arity():
    with pytest.raises(ValueError):
        to_metric((1, 2), G3)


def test_supertype_parse():
    assert SuperType.parse("f4") is F4
    assert SuperType.parse("D2_1") is D
    with pytest.raises(ValueError):
        SuperType.parse("e8")


def test_context_free_of_type():
    # the root data never depend on a scalar context
    assert root_datum(D) is root_datum(D)
    ScalarContext.fp(5, 1).validate(D)
