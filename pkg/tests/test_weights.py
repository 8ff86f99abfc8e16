from fractions import Fraction
from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alcoves.weights import (
    FinitePermutation,
    RootVector,
    Weight,
    Zone,
    all_zones,
    cartan_matrix,
    coset_index,
    dominance_leq,
    dominant_rep,
    act_finite,
    fw_to_root,
    g_map,
    ideal,
    join,
    meet,
    phi_plus,
    root_to_fw,
    root_weight,
    zone_of,
    zvector_leq,
)


def weights(n, lo=-4, hi=4):
    return st.tuples(*[st.integers(lo, hi)] * n).map(Weight)


def ranked_weights(max_n=4, lo=-4, hi=4):
    return st.integers(1, max_n).flatmap(lambda n: weights(n, lo, hi))


def reflect(v: Weight, i: int) -> Weight:
    """Simple reflection by the Cartan formula ``v - <v, alpha_i> alpha_i``."""
    return v - root_weight(v.rank, (i, i)) * v[i - 1]


# -- Cartan data -------------------------------------------------------------

def test_cartan_rank_one():
    assert cartan_matrix(1).tolist() == [[2]]


def test_cartan_rank_two():
    assert cartan_matrix(2).tolist() == [[2, -1], [-1, 2]]


@pytest.mark.parametrize("n", range(1, 7))
def test_cartan_determinant(n):
    assert round(np.linalg.det(cartan_matrix(n))) == n + 1


def test_fw_to_root_a2():
    assert fw_to_root(Weight((1, 0))).coords == (Fraction(2, 3), Fraction(1, 3))


def test_fw_to_root_zero():
    assert fw_to_root(Weight.zero(4)).coords == (0, 0, 0, 0)


def test_alpha1_in_fundamental_basis():
    assert root_to_fw(RootVector((1, 0, 0))) == Weight((2, -1, 0))


@given(ranked_weights())
def test_root_round_trip(w):
    assert root_to_fw(fw_to_root(w)) == w


@given(ranked_weights())
def test_fw_to_root_inverts_cartan(w):
    # A applied to the root coordinates gives back the fundamental ones
    A = cartan_matrix(w.rank)
    r = fw_to_root(w).coords
    assert [sum(int(A[i, j]) * r[j] for j in range(w.rank)) for i in range(w.rank)] == list(w.coords)


# -- dominance -------------------------------------------------------------------

def test_dominance_example_a3():
    assert dominance_leq(Weight((0, 1, 0)), Weight((2, 0, 0)))


def test_dominance_incomparable_fundamentals():
    w1, w2 = Weight((1, 0)), Weight((0, 1))
    assert not dominance_leq(w1, w2) and not dominance_leq(w2, w1)


@settings(max_examples=200)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(weights(n), weights(n), weights(n))))
def test_dominance_is_partial_order(triple):
    a, b, c = triple
    assert dominance_leq(a, a)
    if dominance_leq(a, b) and dominance_leq(b, a):
        assert a == b
    if dominance_leq(a, b) and dominance_leq(b, c):
        assert dominance_leq(a, c)


# -- the Z^{n+1} model -------------------------------------------------------------

@pytest.mark.parametrize("n", range(1, 6))
def test_g_of_basis_vectors(n):
    m = n + 1
    for i in range(1, n + 1):
        prefix = tuple(1 if k < i else 0 for k in range(m))
        assert g_map(prefix) == Weight.fundamental(n, i)
        simple = tuple(1 if k == i - 1 else -1 if k == i else 0 for k in range(m))
        assert g_map(simple) == root_weight(n, (i, i))
    assert g_map((0,) * m) == Weight.zero(n)


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.tuples(*[st.integers(-5, 5)] * (n + 1)), st.integers(1, n))))
def test_g_is_equivariant_for_simple_transpositions(data):
    v, i = data
    n = len(v) - 1
    s = FinitePermutation.simple(n + 1, i)
    assert g_map(s.act(v)) == reflect(g_map(v), i)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_zvector_order_intertwines_dominance(n):
    vectors = list(product(range(-1, 2), repeat=n + 1))
    for u in vectors:
        for v in vectors:
            if sum(u) == sum(v):
                assert zvector_leq(u, v) == dominance_leq(g_map(u), g_map(v))


@given(ranked_weights())
def test_dominant_rep_lies_in_orbit(w):
    dom, perm = dominant_rep(w)
    assert dom.is_dominant()
    assert act_finite(perm, w) == dom


def test_dominant_rep_fixes_dominant():
    lam = Weight((2, 0, 1))
    assert dominant_rep(lam) == (lam, FinitePermutation.identity(4))


def test_dominant_rep_of_w0_image():
    w0 = FinitePermutation.longest(3)
    assert dominant_rep(act_finite(w0, Weight((1, 1))))[0] == Weight((1, 1))


def test_dominant_rep_after_reflection():
    lam = Weight((2, 0, 1))
    assert dominant_rep(reflect(lam, 1))[0] == lam


# -- covers, meet and join ---------------------------------------------------------

def test_phi_plus_long_example():
    lam = Weight((3, 4, 1, 0, 1, 1, 2, 1, 1, 5, 0, 1))
    assert phi_plus(lam) == {(1, 1), (2, 2), (3, 5), (5, 6), (7, 7), (8, 9), (10, 10)}


@pytest.mark.parametrize("i", [1, 2, 3, 4])
def test_phi_plus_of_fundamental_is_empty(i):
    assert phi_plus(Weight.fundamental(4, i)) == frozenset()


def test_phi_plus_rho_a3():
    assert phi_plus(Weight((1, 1, 1))) == {(1, 2), (2, 3)}


def test_phi_plus_rejects_non_dominant():
    with pytest.raises(ValueError):
        phi_plus(Weight((1, -1)))


def _brute_covers(lam: Weight) -> set[Weight]:
    bound = sum(lam.coords) + 1
    below = [
        mu for mu in map(Weight, product(range(bound + 1), repeat=lam.rank))
        if mu != lam and coset_index(mu) == coset_index(lam) and dominance_leq(mu, lam)
    ]
    return {lam - mu for mu in below
            if not any(nu != mu and dominance_leq(mu, nu) for nu in below)}


@pytest.mark.parametrize("n,bound", [(1, 4), (2, 3), (3, 2)])
def test_phi_plus_matches_brute_force_covers(n, bound):
    for coords in product(range(bound + 1), repeat=n):
        lam = Weight(coords)
        assert {root_weight(n, r) for r in phi_plus(lam)} == _brute_covers(lam)


def _from_root(coords):
    return root_to_fw(RootVector(coords))


def test_join_example():
    lam, mu = _from_root((3, 2, 1)), _from_root((1, 2, 3))
    assert fw_to_root(join(lam, mu)).coords == (3, 2, 3)


def test_meet_example():
    lam, mu = _from_root((3, 2, 1)), _from_root((1, 2, 3))
    assert fw_to_root(meet(lam, mu)).coords == (1, 2, 1)


def test_meet_rejects_coset_mismatch():
    with pytest.raises(ValueError):
        meet(Weight((1, 0)), Weight((0, 0)))


@settings(max_examples=150)
@given(st.integers(1, 3).flatmap(lambda n: st.tuples(
    *[st.tuples(*[st.integers(-3, 3)] * n)] * 3)))
def test_meet_join_lattice_axioms(roots):
    a, b, c = (_from_root(r) for r in roots)
    m, j = meet(a, b), join(a, b)
    assert meet(a, a) == a
    assert dominance_leq(m, a) and dominance_leq(m, b)
    assert dominance_leq(a, j) and dominance_leq(b, j)
    if dominance_leq(c, a) and dominance_leq(c, b):
        assert dominance_leq(c, m)
    if dominance_leq(a, c) and dominance_leq(b, c):
        assert dominance_leq(j, c)


def test_meet_of_dominant_is_dominant():
    for x, y in product(product(range(3), repeat=3), repeat=2):
        lam, mu = Weight(x), Weight(y)
        if coset_index(lam) == coset_index(mu):
            assert meet(lam, mu).is_dominant()


# -- zones and ideals ---------------------------------------------------------------

def test_zone_of_examples():
    assert zone_of(Weight((3, 0, 1))) == Zone((2, 0, 1))
    assert zone_of(Weight((0, 0, 0))) == Zone((0, 0, 0))
    assert zone_of(Weight((2, 2, 2))) == Zone((2, 2, 2))


def test_zone_rejects_bad_pattern():
    with pytest.raises(ValueError):
        Zone((3, 0))


def test_ideal_examples():
    assert ideal(Weight((1, 0))) == {Weight((1, 0))}
    assert ideal(Weight((1, 1))) == {Weight((0, 0)), Weight((1, 1))}
    assert ideal(Weight((0, 0, 0))) == {Weight((0, 0, 0))}


@pytest.mark.parametrize("n,bound", [(2, 4), (3, 3)])
def test_zones_partition_ideals(n, bound):
    zones = all_zones(n)
    assert len(zones) == 3**n
    for coords in product(range(bound + 1), repeat=n):
        members = ideal(Weight(coords))
        assert sum(sum(1 for mu in members if z.contains(mu)) for z in zones) == len(members)


def test_coset_index_examples():
    assert coset_index(Weight.zero(3)) == 0
    assert coset_index(root_weight(3, (1, 1))) == 0
    assert [coset_index(Weight.fundamental(3, i)) for i in (1, 2, 3)] == [1, 2, 3]


@given(ranked_weights())
def test_coset_index_matches_lift_sum(w):
    # the lift with last coordinate 0 has coordinate sum sum_i i*l_i
    from alcoves.weights import lift

    assert coset_index(w) == sum(lift(w)) % (w.rank + 1)


@given(ranked_weights(), st.integers(1, 4))
def test_coset_constant_on_root_shifts(w, k):
    i = (k - 1) % w.rank + 1
    assert coset_index(w + root_weight(w.rank, (i, i))) == coset_index(w)


def test_finite_permutation_validates():
    with pytest.raises(ValueError):
        FinitePermutation((1, 1, 2))
    p = FinitePermutation((2, 3, 1))
    assert p * p.inverse() == FinitePermutation.identity(3)
