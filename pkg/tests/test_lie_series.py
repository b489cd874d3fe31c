import random

import pytest
import sympy

from oracles import field_bracket, homogeneous_part, series_to_exprs
from wreathlie.algebra import DimensionError
from wreathlie.formal import FormalSeries, HomogeneousMap
from wreathlie.lie_series import (FieldSeries, bidegree_component, bracket_pointwise, bracket_S,
                                  embed_SY_into_SZ, embed_TY_into_SZ)
from wreathlie.sampling import random_homogeneous, random_series, random_vector


def field_1d(*coeffs, through=None):
    """x -> sum_m coeffs[m] x^m on Q^1."""
    n = len(coeffs) - 1 if through is None else through
    comps = [HomogeneousMap(1, 1, m, {(m,): (c,)}) for m, c in enumerate(coeffs)]
    return FormalSeries.from_maps(1, 1, comps, n)


def test_square_against_identity():
    xi = field_1d(0, 0, 1, through=3)   # x^2 d/dx
    eta = field_1d(0, 1, through=3)     # x d/dx
    out = bracket_S(xi, eta)
    assert out.valid_through == 2
    assert out == field_1d(0, 0, -1, through=2)


def test_bracket_with_self_vanishes(rng):
    xi = random_series(rng, 3, 3, 4)
    assert bracket_S(xi, xi).is_zero()


def test_bracket_S_rejects_non_fields():
    with pytest.raises(DimensionError):
        bracket_S(FormalSeries.zero(2, 3, 2), FormalSeries.zero(2, 3, 2))


@pytest.mark.parametrize("seed", range(4))
def test_bracket_S_matches_jacobian_commutator(seed):
    rng = random.Random(seed)
    dim = rng.randint(1, 3)
    xs = sympy.symbols(f"x0:{dim}")
    xi, eta = random_series(rng, dim, dim, 3), random_series(rng, dim, dim, 3)
    out = bracket_S(xi, eta)
    want = field_bracket(series_to_exprs(xi, xs, 3), series_to_exprs(eta, xs, 3), xs)
    for s in range(out.valid_through + 1):
        got = series_to_exprs(FormalSeries.from_maps(dim, dim, [out[s]], s), xs, s)
        assert all(sympy.expand(g - homogeneous_part(w, xs, s)) == 0 for g, w in zip(got, want))


@pytest.mark.parametrize("seed", range(4))
def test_bracket_S_degree_additivity(seed):
    rng = random.Random(seed)
    r, m = rng.randint(0, 3), rng.randint(1, 3)
    n = r + m
    xi = FormalSeries.from_maps(2, 2, [random_homogeneous(rng, 2, 2, r)], n)
    eta = FormalSeries.from_maps(2, 2, [random_homogeneous(rng, 2, 2, m)], n)
    out = bracket_S(xi, eta)
    assert all(out[s].is_zero() for s in range(out.valid_through + 1) if s != r + m - 1)


def test_pointwise_heisenberg(heisenberg):
    y1e1 = FormalSeries.from_maps(2, 3, [HomogeneousMap(2, 3, 1, {(1, 0): (1, 0, 0)})], 3)
    y2e2 = FormalSeries.from_maps(2, 3, [HomogeneousMap(2, 3, 1, {(0, 1): (0, 1, 0)})], 3)
    out = bracket_pointwise(y1e1, y2e2, heisenberg)
    assert out.valid_through == 3
    assert out == FormalSeries.from_maps(2, 3, [HomogeneousMap(2, 3, 2, {(1, 1): (0, 0, 1)})], 3)


def test_pointwise_validity_is_min(sl2, rng):
    f, g = random_series(rng, 2, 3, 2), random_series(rng, 2, 3, 5)
    assert bracket_pointwise(f, g, sl2).valid_through == 2


@pytest.mark.parametrize("seed", range(3))
def test_pointwise_antisymmetry_and_jacobi(seed, sl2):
    rng = random.Random(seed)
    f, g, h = (random_series(rng, 2, 3, 3) for _ in range(3))
    assert bracket_pointwise(f, g, sl2) == -bracket_pointwise(g, f, sl2)
    jac = (bracket_pointwise(f, bracket_pointwise(g, h, sl2), sl2)
           + bracket_pointwise(g, bracket_pointwise(h, f, sl2), sl2)
           + bracket_pointwise(h, bracket_pointwise(f, g, sl2), sl2))
    assert jac.is_zero()


def test_pointwise_degree_additivity(sl2, rng):
    f = FormalSeries.from_maps(2, 3, [random_homogeneous(rng, 2, 3, 1, 1.0)], 4)
    g = FormalSeries.from_maps(2, 3, [random_homogeneous(rng, 2, 3, 2, 1.0)], 4)
    out = bracket_pointwise(f, g, sl2)
    assert all(out[s].is_zero() for s in range(5) if s != 3)


def test_embed_SY_places_y_block():
    eta = FormalSeries.from_maps(1, 1, [HomogeneousMap(1, 1, 1, {(1,): (2,)})], 2)
    out = embed_SY_into_SZ(eta, 2)
    # Z = (x1, x2, y1); 2*y1 d/dy1
    assert out[1] == HomogeneousMap(3, 3, 1, {(0, 0, 1): (0, 0, 2)})
    assert out.valid_through == 2


def test_embed_SY_is_a_homomorphism(rng):
    xi, eta = random_series(rng, 2, 2, 4), random_series(rng, 2, 2, 4)
    lhs = embed_SY_into_SZ(bracket_S(xi, eta), 1)
    rhs = bracket_S(embed_SY_into_SZ(xi, 1), embed_SY_into_SZ(eta, 1))
    assert lhs == rhs


def test_embed_TY_cells_and_validity():
    x_field = FormalSeries.from_maps(1, 1, [HomogeneousMap(1, 1, 1, {(1,): (1,)})], 3)
    const = FormalSeries.from_maps(1, 1, [HomogeneousMap.constant(1, (5,))], 1)
    t = FieldSeries(1, 1, 2, {(0,): x_field, (2,): const})
    assert t.valid_through() == 2
    out = embed_TY_into_SZ(t)
    # x d/dx + 5 y^2 d/dx on Z = (x, y)
    assert out[1] == HomogeneousMap(2, 2, 1, {(1, 0): (1, 0)})
    assert out[2] == HomogeneousMap(2, 2, 2, {(0, 2): (5, 0)})
    assert bidegree_component(out, 1, 0, 2) == out[2]
    assert bidegree_component(out, 1, 1, 1).is_zero()


def test_embed_TY_is_a_homomorphism_on_y_constant_fields(rng):
    xi, eta = random_series(rng, 2, 2, 4), random_series(rng, 2, 2, 4)
    lift = lambda f: embed_TY_into_SZ(FieldSeries(2, 1, 4, {(0,): f}))
    assert bracket_S(lift(xi), lift(eta)) == lift(bracket_S(xi, eta)).truncate(3)


def test_flatten_then_evaluate(rng):
    coeffs = {(1, 0): random_series(rng, 2, 2, 3), (0, 2): random_series(rng, 2, 2, 2),
              (0, 0): random_series(rng, 2, 2, 4)}
    t = FieldSeries(2, 2, 3, coeffs)
    flat = embed_TY_into_SZ(t)
    y = random_vector(rng, 2)
    x = random_vector(rng, 2)
    by_degree = t.evaluate_at_y(y)
    # the Z-evaluation at (x, y) restricted to the certified degrees equals the sum of the X-fields at x
    n = flat.valid_through
    direct = flat.evaluate(x + y, n)
    indirect = [0, 0, 0, 0]
    for beta, tau in coeffs.items():
        c = y[0] ** beta[0] * y[1] ** beta[1]
        val = tau.evaluate(x, n - sum(beta))
        indirect = [a + c * v for a, v in zip(indirect, val + (0, 0))]
    assert list(direct) == indirect
    assert set(by_degree) == {0, 1, 2}


def test_field_series_validation():
    with pytest.raises(DimensionError):
        FieldSeries(1, 1, 1, {(2,): FormalSeries.zero(1, 1, 1)})
