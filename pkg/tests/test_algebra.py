from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wreathlie import fixtures
from wreathlie.algebra import (DimensionError, InvalidLieAlgebra, LieAlgebra, LinearMap, NotAnIdeal, ad, add,
                               bracket, check_lie_algebra, is_zero, quotient, rank, scale, solve_in_span, unit,
                               vector)

rationals = st.fractions(min_value=-9, max_value=9, max_denominator=9)


def vectors(n):
    return st.tuples(*[rationals] * n)


def test_sl2_table(sl2):
    h, e, f = sl2.basis()
    assert bracket(sl2, e, f) == h
    assert bracket(sl2, h, e) == scale(2, e)
    assert bracket(sl2, h, f) == scale(-2, f)


def test_heisenberg_table(heisenberg):
    e1, e2, e3 = heisenberg.basis()
    assert bracket(heisenberg, e1, e2) == e3
    assert is_zero(bracket(heisenberg, e1, e3))


def test_bracket_dimension_mismatch(sl2):
    with pytest.raises(DimensionError, match="dimension 3"):
        bracket(sl2, (1, 0), (0, 1, 0))


def test_ad_matrices(heisenberg, sl2):
    e1, e2, e3 = heisenberg.basis()
    m = ad(heisenberg, e1)
    assert m(e2) == e3 and is_zero(m(e1)) and is_zero(m(e3))
    assert ad(sl2, (0, 0, 0)) == LinearMap.zeros(3, 3)
    assert ad(sl2, unit(3, 0)).entries == ((0, 0, 0), (0, 2, 0), (0, 0, -2))


@pytest.mark.parametrize("name", fixtures.ALGEBRAS)
def test_bundled_algebras_are_valid(name):
    assert check_lie_algebra(fixtures.algebra(name)).ok


def test_antisymmetry_violation_reported():
    grid = [[(0, 0, 0)] * 3 for _ in range(3)]
    grid[0][1] = (0, 0, 1)
    grid[1][0] = (0, 0, 1)
    alg = LieAlgebra("broken", ("e1", "e2", "e3"), tuple(tuple(vector(v) for v in r) for r in grid))
    report = check_lie_algebra(alg)
    assert report.antisymmetry == ((0, 1),)
    assert not report.ok


def test_jacobi_violation_reported():
    with pytest.raises(InvalidLieAlgebra) as info:
        LieAlgebra.from_brackets("bad", ["h", "e", "f"],
                                 {(0, 1): [0, 2, 0], (0, 2): [0, 0, -2], (1, 2): [1, 1, 0]})
    # brute force: [[h,e],f] + [[e,f],h] + [[f,h],e] with [e,f] = h + e
    assert info.value.report.jacobi == ((0, 1, 2),)


@settings(max_examples=60, deadline=None)
@given(x=vectors(3), y=vectors(3), z=vectors(3), name=st.sampled_from(["heisenberg", "sl2", "solvable3"]))
def test_antisymmetry_and_jacobi_on_random_elements(x, y, z, name):
    alg = fixtures.algebra(name)
    x, y, z = vector(x), vector(y), vector(z)
    assert bracket(alg, x, y) == scale(-1, bracket(alg, y, x))
    cyc = add(add(bracket(alg, x, bracket(alg, y, z)), bracket(alg, y, bracket(alg, z, x))),
              bracket(alg, z, bracket(alg, x, y)))
    assert is_zero(cyc)


@settings(max_examples=40, deadline=None)
@given(y=vectors(3), y2=vectors(3), c=rationals)
def test_ad_is_linear(y, y2, c, sl2):
    y, y2 = vector(y), vector(y2)
    assert ad(sl2, add(scale(c, y), y2)) == c * ad(sl2, y) + ad(sl2, y2)


def test_quotient_heisenberg_by_center(heisenberg):
    B, p = quotient(heisenberg, [(0, 0, 1)])
    assert B.dim == 2 and B.is_abelian()
    assert p.entries == ((1, 0, 0), (0, 1, 0))
    assert B.labels == ("e1", "e2")


def test_quotient_of_abelian_is_abelian():
    C = LieAlgebra.abelian(3)
    B, p = quotient(C, [(1, 1, 0)])
    assert B.is_abelian() and p.rank() == 2
    assert is_zero(p((1, 1, 0)))


def test_quotient_rejects_non_ideal(sl2):
    with pytest.raises(NotAnIdeal, match="outside"):
        quotient(sl2, [(0, 1, 0)])


def test_quotient_rejects_dependent_basis(heisenberg):
    with pytest.raises(ValueError, match="independent"):
        quotient(heisenberg, [(0, 0, 1), (0, 0, 2)])


def test_quotient_projection_properties(solvable2):
    ideal = [(0, 1)]
    B, p = quotient(solvable2, ideal)
    assert all(is_zero(p(vector(v))) for v in ideal)
    assert p.rank() == solvable2.dim - len(ideal)


def test_quotient_by_nonunit_ideal_vector():
    # gl2 = sl2 + center, ideal spanned by a rescaled central vector
    gl2 = LieAlgebra.from_brackets("gl2", ["h", "e", "f", "i"],
                                   {(0, 1): [0, 2, 0, 0], (0, 2): [0, 0, -2, 0], (1, 2): [1, 0, 0, 0]})
    B, p = quotient(gl2, [(0, 0, 0, 3)])
    assert B.dim == 3 and check_lie_algebra(B).ok
    for x in gl2.basis():
        for y in gl2.basis():
            assert p(bracket(gl2, x, y)) == bracket(B, p(x), p(y))


def test_solve_in_span_and_rank():
    basis = [vector((1, 2, 0)), vector((0, 1, 1))]
    assert solve_in_span(basis, vector((2, 5, 1))) == (2, 1)
    assert solve_in_span(basis, vector((0, 0, 1))) is None
    assert rank([(1, 2), (2, 4)]) == 1
    assert rank([]) == 0


def test_linear_map_compose_and_shape():
    a = LinearMap.from_rows([(1, 2), (0, 1)])
    b = LinearMap.from_rows([(Fraction(1, 2), 0), (0, 3)])
    assert (a @ b).entries == ((Fraction(1, 2), 6), (0, 3))
    with pytest.raises(DimensionError):
        LinearMap(2, 2, ((1, 2),))
