import random

import pytest

from wreathlie import fixtures
from wreathlie.actions import fundamental_formal_action
from wreathlie.algebra import LieAlgebra, bracket
from wreathlie.formal import FormalSeries, HomogeneousMap, TruncationError
from wreathlie.lie_series import bracket_S, embed_SY_into_SZ
from wreathlie.sampling import random_series, random_vector
from wreathlie.wreath import WreathElement, WreathProduct, triangular_action, wreath_bracket


def random_element(rng, W, through=None):
    n = W.N if through is None else through
    return W.element(random_series(rng, W.y_dim, W.A.dim, n), random_vector(rng, W.B.dim))


def agree(u, v, through):
    assert u.point == v.point
    assert u.series.truncate(through) == v.series.truncate(through)


def neg(u):
    return WreathElement(-u.series, tuple(-x for x in u.point))


def test_center_line_example():
    A = LieAlgebra.abelian(1)
    W = WreathProduct(A, fixtures.algebra("abelian2"), 3)
    const_e3 = FormalSeries.from_maps(2, 1, [HomogeneousMap.constant(2, (1,))], 3)
    y1_e3 = FormalSeries.from_maps(2, 1, [HomogeneousMap(2, 1, 1, {(1, 0): (1,)})], 3)
    out = wreath_bracket(W, W.element(const_e3, (1, 0)), W.element(y1_e3, (0, 0)))
    assert out.point == (0, 0)
    assert out.series == const_e3.truncate(2)


def test_pure_B_elements_bracket_like_B(heisenberg):
    W = WreathProduct(fixtures.algebra("solvable2"), heisenberg, 4)
    e1, e2, e3 = heisenberg.basis()
    out = wreath_bracket(W, W.from_B(e1), W.from_B(e2))
    assert out.point == e3 and out.series.is_zero()


@pytest.mark.parametrize("seed", range(4))
def test_B_embeds_as_subalgebra(seed, sl2):
    rng = random.Random(seed)
    W = WreathProduct(fixtures.algebra("abelian2"), sl2, 4)
    b, b2 = random_vector(rng, 3), random_vector(rng, 3)
    out = wreath_bracket(W, W.from_B(b), W.from_B(b2))
    agree(out, W.from_B(bracket(sl2, b, b2)), 3)


@pytest.mark.parametrize("seed", range(4))
def test_series_part_is_an_ideal(seed, sl2, heisenberg):
    rng = random.Random(seed)
    W = WreathProduct(sl2, heisenberg, 4)
    out = wreath_bracket(W, W.from_A(random_series(rng, 3, 3, 4)), random_element(rng, W))
    assert all(x == 0 for x in out.point)


@pytest.mark.parametrize("seed", range(4))
def test_antisymmetry_and_jacobi(seed, sl2, solvable2):
    rng = random.Random(seed)
    W = WreathProduct(sl2, solvable2, 4)
    u, v, w = (random_element(rng, W) for _ in range(3))
    agree(wreath_bracket(W, u, v), neg(wreath_bracket(W, v, u)), 3)
    terms = [wreath_bracket(W, x, wreath_bracket(W, y, z)) for x, y, z in ((u, v, w), (v, w, u), (w, u, v))]
    total = terms[0].series + terms[1].series + terms[2].series
    assert total.valid_through == 2 and total.is_zero()
    assert all(sum(c) == 0 for c in zip(*(t.point for t in terms)))


def test_validity_drops_by_one(sl2, rng):
    W = WreathProduct(sl2, sl2, 4)
    out = wreath_bracket(W, random_element(rng, W, 4), random_element(rng, W, 2))
    assert out.valid_through == 1


def test_truncation_limits(sl2, rng):
    W = WreathProduct(sl2, sl2, 3)
    with pytest.raises(TruncationError):
        wreath_bracket(W, random_element(rng, W, 0), random_element(rng, W))
    with pytest.raises(TruncationError):
        W.validate(WreathElement(random_series(rng, 3, 3, 4), (0, 0, 0)))


def triangular_setups():
    algs = {n: fixtures.algebra(n) for n in ("abelian2", "solvable2")}
    return [(algs[a], algs[b]) for a in algs for b in algs]


@pytest.mark.parametrize("pair", range(4))
def test_triangular_action_is_homomorphism(pair):
    A, B = triangular_setups()[pair]
    rng = random.Random(pair)
    W = WreathProduct(A, B, 4)
    D = fundamental_formal_action(A, 4)
    for _ in range(3):
        u, v = random_element(rng, W), random_element(rng, W)
        lhs = triangular_action(W, D, wreath_bracket(W, u, v))
        rhs = bracket_S(triangular_action(W, D, u), triangular_action(W, D, v))
        n = min(lhs.valid_through, rhs.valid_through)
        assert n >= 2
        assert lhs.mismatched_degrees(rhs.truncate(n), n) == []


def test_triangular_of_point_is_embedded_fundamental(solvable2):
    W = WreathProduct(solvable2, solvable2, 3)
    D = fundamental_formal_action(solvable2, 3)
    b = (1, 2)
    out = triangular_action(W, D, W.from_B(b))
    assert out == embed_SY_into_SZ(W.d(b), 2)


def test_triangular_of_constant_series_is_X_field(solvable2):
    # a constant a in A acts on Z = X x Y through the X block only, independently of y
    W = WreathProduct(solvable2, fixtures.algebra("abelian2"), 3)
    D = fundamental_formal_action(solvable2, 3)
    a = FormalSeries.from_maps(2, 2, [HomogeneousMap.constant(2, (1, 0))], 3)
    out = triangular_action(W, D, W.from_A(a))
    for m in range(out.valid_through + 1):
        for alpha, vec in out[m].coeffs.items():
            assert alpha[2:] == (0, 0) and vec[2:] == (0, 0)
    x = (3, -1)
    assert out.evaluate(x + (5, 7)) == D((1, 0)).evaluate(x, out.valid_through) + (0, 0)


def test_action_must_belong_to_B(sl2, heisenberg):
    with pytest.raises(ValueError):
        WreathProduct(sl2, heisenberg, 3, fundamental_formal_action(sl2, 3))
