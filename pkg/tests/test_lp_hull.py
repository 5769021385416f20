from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from kmweights.cartan import lattice_points
from kmweights.errors import RequiresFiniteType, TruncationUncertain
from kmweights.fixtures import named
from kmweights.hull import (
    hull_contains,
    hull_stabilizer,
    ray_decomposition,
    wt_via_hull,
)
from kmweights.lp import feasible_point, is_feasible
from kmweights.weights import integrability_of_simple, wt_parabolic_verma
from kmweights.weyl import Weight, reflect

from oracles import brute_weyl_group, solve

h = Fraction(1, 2)


def basic_feasible(A, b):
    """Brute force: some basic solution (invertible column subset) is non-negative."""
    rows, cols = len(A), len(A[0])
    # drop dependent rows by trying row subsets too
    if not any(b):
        return True
    for k in range(1, rows + 1):
        for R in combinations(range(rows), k):
            for C in combinations(range(cols), k):
                sub = [[A[r][c] for c in C] for r in R]
                try:
                    x = solve(sub, [b[r] for r in R])
                except StopIteration:
                    continue
                if any(v < 0 for v in x):
                    continue
                full = [0] * cols
                for c, v in zip(C, x):
                    full[c] = v
                if all(sum(A[r][c] * full[c] for c in range(cols)) == b[r]
                       for r in range(rows)):
                    return True
    return False


small = st.integers(-3, 3)


@given(st.integers(1, 3).flatmap(lambda r: st.integers(1, 4).flatmap(
    lambda c: st.tuples(st.lists(st.lists(small, min_size=c, max_size=c),
                                 min_size=r, max_size=r),
                        st.lists(small, min_size=r, max_size=r)))))
@settings(max_examples=150, deadline=None)
def test_lp_matches_basic_solution_search(Ab):
    A, b = Ab
    x = feasible_point(A, b)
    assert (x is not None) == basic_feasible(A, b)
    if x is not None:
        assert all(v >= 0 for v in x)
        assert all(sum(a * v for a, v in zip(row, x)) == rhs for row, rhs in zip(A, b))


def test_lp_simple_cases():
    assert is_feasible([[1, 1]], [1])
    assert not is_feasible([[1, 1]], [-1])
    assert is_feasible([[1, -1], [1, 1]], [0, 2])
    assert feasible_point([[2]], [1]) == [h]


def test_ray_decomposition_examples():
    a2 = named("A2")
    verma = ray_decomposition(a2, (1, 1), [])
    assert verma.vertices == {(0, 0)} and verma.rays == {(1, 0), (0, 1)}
    hexagon = ray_decomposition(a2, (1, 1), [0, 1])
    assert len(hexagon.vertices) == 6 and not hexagon.rays
    par = ray_decomposition(a2, (1, 1), [0])
    assert par.vertices == {(0, 0), (1, 0)}
    assert par.rays == {(0, 1), (1, 1)}
    assert not par.truncated


def test_ray_decomposition_affine_is_truncated():
    h_ = ray_decomposition(named("affineA1"), (1, 1), [0, 1], 6)
    assert h_.truncated
    with pytest.raises(TruncationUncertain):
        hull_contains(h_, (0, 0))
    with pytest.raises(ValueError):
        ray_decomposition(named("affineA1"), (1, 1), [0, 1])


def test_hull_membership_examples():
    hexagon = ray_decomposition(named("A2"), (1, 1), [0, 1])
    for v in hexagon.vertices:
        assert hull_contains(hexagon, v)
    assert hull_contains(hexagon, (1, 1))
    assert not hull_contains(hexagon, (3, 0))
    assert hull_contains(hexagon, (h, 0))


def test_wt_via_hull_examples():
    a2 = named("A2")
    assert wt_via_hull(a2, (1, 1), [0, 1], 5).offsets == {
        (0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (1, 2), (2, 2)}
    assert wt_via_hull(a2, (1, 1), [], 4).offsets == set(lattice_points(2, 4))
    assert wt_via_hull(a2, (2, -h), [0], 6) == wt_parabolic_verma(a2, (2, -h), [0], 6)


@pytest.mark.parametrize("name, c", [("A2", (2, 1)), ("B2", (1, 1)), ("B2", (0, 1)),
                                     ("G2", (1, 1)), ("A1xA1", (2, 0)),
                                     ("affineA1", (2, 1)), ("hyperbolic3", (1, 3))])
def test_hull_route_matches_slices(name, c):
    g = named(name)
    N = 7
    for J in [frozenset(), frozenset({0}), frozenset({1}), frozenset({0, 1})]:
        if not J <= integrability_of_simple(c):
            continue
        try:
            got = wt_via_hull(g, c, J, N)
        except TruncationUncertain:
            assert len(J) == 2 and name in ("affineA1", "hyperbolic3")
            continue
        assert got == wt_parabolic_verma(g, c, J, N)


@pytest.mark.parametrize("name", ["A2", "B2", "G2"])
@given(data=st.data())
@settings(max_examples=15, deadline=None)
def test_hull_is_weyl_invariant(name, data):
    g = named(name)
    c = tuple(data.draw(st.integers(0, 3)) for _ in g.indices)
    J = data.draw(st.sets(st.sampled_from(g.indices)))
    m = tuple(data.draw(st.integers(0, 5)) for _ in g.indices)
    hp = ray_decomposition(g, c, J)
    inside = hull_contains(hp, m)
    for j in J:
        r = reflect(g, j, Weight(c, m)).m
        assert hull_contains(hp, r) == inside


def test_stabilizer_examples():
    a2 = named("A2")
    full = hull_stabilizer(a2, ray_decomposition(a2, (1, 1), [0, 1]))
    assert len(full.elements) == 6 and full.generators == {0, 1}
    par = hull_stabilizer(a2, ray_decomposition(a2, (1, 1), [0]))
    assert sorted(w.indices for w in par.elements) == [(), (0,)]
    triv = hull_stabilizer(a2, ray_decomposition(a2, (1, 1), []))
    assert [w.indices for w in triv.elements] == [()]
    assert triv.to_json() == {"generators": [], "elements": [[]]}


@pytest.mark.parametrize("name, c", [("B2", (1, 1)), ("G2", (1, 2)), ("A3", (1, 1, 1)),
                                     ("A1xA1", (1, 1))])
def test_stabilizer_is_levi_group(name, c):
    g = named(name)
    idx = list(g.indices)
    for k in range(1 << len(idx)):
        J = {j for j in idx if k >> j & 1}
        stab = hull_stabilizer(g, ray_decomposition(g, c, J))
        assert stab.generators == J
        group, _ = brute_weyl_group(g.matrix, sorted(J))
        assert len(stab.elements) == len(group)


def test_stabilizer_needs_finite_type():
    g = named("affineA1")
    with pytest.raises(RequiresFiniteType):
        hull_stabilizer(g, ray_decomposition(g, (1, 1), [0]))


def test_hull_json():
    doc = ray_decomposition(named("A2"), (1, 1), [0]).to_json()
    assert doc == {"vertices": [[0, 0], [1, 0]], "rays": [[0, 1], [1, 1]], "truncated": False}
