from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qcohom.errors import AmbientMismatch, BadCodim, UnsupportedN
from qcohom.gw_check import (
    BOUND,
    LinearSubspace,
    SeededRng,
    Status,
    four_point_check,
    gw_degree_constraint,
    intersection_dim,
    random_subspace,
    variety_dim,
)


def test_degree_constraint_four_points():
    # n = 3: dim X = 7, deg q = 5; pt + s2 + s_i + s_j needs i + j = 4 at d = 1.
    assert gw_degree_constraint(3, [7, 2, 1, 3], 1)
    assert gw_degree_constraint(3, [7, 2, 2, 2], 1)
    assert not gw_degree_constraint(3, [7, 2, 1, 2], 1)
    assert not gw_degree_constraint(3, [7, 2, 1, 3], -1)


@given(st.integers(2, 8), st.integers(1, 14), st.integers(1, 14))
def test_four_point_constraint_is_i_plus_j(n, i, j):
    lhs = gw_degree_constraint(n, [variety_dim(n), 2, i, j], 1)
    assert lhs == (i + j == 2 * n - 2)


def test_three_point_constraint():
    # Classical cup products: deg a + deg b + deg c = dim X.
    assert gw_degree_constraint(3, [3, 4, 0], 0)
    assert gw_degree_constraint(3, [7, 5, 0], 1)


def test_rng_is_deterministic():
    a = SeededRng.for_trial(7, 3).vector(5)
    b = SeededRng.for_trial(7, 3).vector(5)
    c = SeededRng.for_trial(7, 4).vector(5)
    assert a == b != c
    assert all(abs(v.numerator) <= BOUND and 1 <= v.denominator <= BOUND for v in a)


def test_subspaces():
    rng = SeededRng(1)
    V = random_subspace(4, 1, rng)
    assert V.dim == 3 and len(V.annihilator()) == 1
    assert random_subspace(4, 4, rng).dim == 0
    assert intersection_dim([random_subspace(4, 0, rng)]) == 4
    with pytest.raises(BadCodim):
        random_subspace(4, 5, rng)
    with pytest.raises(AmbientMismatch):
        intersection_dim([random_subspace(4, 1, rng), random_subspace(3, 1, rng)])


def test_degenerate_intersection_is_detected():
    def line(i):
        return LinearSubspace(3, (tuple(Fraction(int(i == k)) for k in range(3)),))

    plane = LinearSubspace(3, ((Fraction(1), 0, 0), (0, Fraction(1), 0)))
    assert intersection_dim([plane, line(0)]) == 1
    assert intersection_dim([plane, line(2)]) == 0


@pytest.mark.parametrize("n", [3, 4])
def test_four_point_values(n):
    for i in range(1, 2 * n - 1):
        for j in range(i, 2 * n - 1):
            r = four_point_check(n, i, j, trials=20, seed=7)
            assert r.value == int(i + j == 2 * n - 2)
            if i + j != 2 * n - 2:
                assert r.status is Status.VanishesByDegree


def test_four_point_argument_checks():
    with pytest.raises(UnsupportedN):
        four_point_check(1, 1, 1)
    with pytest.raises(ValueError):
        four_point_check(3, 0, 4)
    with pytest.raises(ValueError):
        four_point_check(3, 1, 3, trials=0)
