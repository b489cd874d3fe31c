"""Formal actions of Lie algebras: the fundamental action ``d_b(y) = G(ad y)(b)`` and friends.

``G(T) = T e^T / (e^T - 1) = sum_n t_n T^n``; the ``t_n`` are computed exactly by
series division in :func:`bernoulli_t`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .algebra import DimensionError, LieAlgebra, Vector, bracket, vector
from .formal import FormalSeries, HomogeneousMap, TruncationError, _accumulate, derive_series
from .lie_series import bracket_S


@lru_cache(maxsize=None)
def bernoulli_t(n_max: int) -> tuple:
    """Coefficients ``t_0..t_{n_max}`` of ``T e^T / (e^T - 1)`` as Fractions.

    Writes ``e^T - 1 = T H(T)`` with ``H = sum T^k/(k+1)!``, inverts ``H`` and
    multiplies by ``e^T``.
    """
    if n_max < 0:
        return ()
    h = [Fraction(1, math.factorial(k + 1)) for k in range(n_max + 1)]
    inv = [Fraction(1)]
    for k in range(1, n_max + 1):
        inv.append(-sum(h[j] * inv[k - j] for j in range(1, k + 1)))
    return tuple(sum(inv[k] * Fraction(1, math.factorial(n - k)) for k in range(n + 1))
                 for n in range(n_max + 1))


def ad_polynomial(alg: LieAlgebra, directions: Sequence[Vector], f: HomogeneousMap) -> HomogeneousMap:
    """``y -> [sum_i y_i directions[i], f(y)]`` as a polynomial one degree higher.

    ``f`` takes variables ``y`` (one per direction) and values in ``alg``.
    """
    if f.tgt_dim != alg.dim or f.src_dim != len(directions):
        raise DimensionError("polynomial does not match the algebra and direction count")
    n = f.src_dim
    acc: dict = {}
    for alpha, v in f.coeffs.items():
        for i, w in enumerate(directions):
            bv = bracket(alg, w, v)
            if any(bv):
                key = alpha[:i] + (alpha[i] + 1,) + alpha[i + 1:]
                _accumulate(acc, key, 1, bv)
    return HomogeneousMap(n, alg.dim, f.degree + 1, acc)


def fundamental_action(B: LieAlgebra, b: Sequence, N: int, coefficients: Sequence | None = None) -> FormalSeries:
    """The series ``d_b`` on ``B`` with components ``t_n (ad y)^n (b)`` for ``n <= N``.

    ``coefficients`` replaces the ``t_n`` (used to build deliberately wrong actions).
    """
    b = vector(b)
    if len(b) != B.dim:
        raise DimensionError(f"{B.name} has dimension {B.dim}; got element of length {len(b)}")
    t = bernoulli_t(N) if coefficients is None else tuple(Fraction(c) for c in coefficients)
    if len(t) < N + 1:
        raise ValueError(f"need {N + 1} coefficients, got {len(t)}")
    basis = B.basis()
    power = HomogeneousMap.constant(B.dim, b)
    comps = []
    for n in range(N + 1):
        if n:
            power = ad_polynomial(B, basis, power)
        comps.append(t[n] * power)
    return FormalSeries(B.dim, B.dim, comps)


@dataclass(frozen=True)
class FormalAction:
    """A linear assignment ``a -> D_a`` of vector fields on ``Q^space_dim``, stored on a basis.

    ``order`` is the validity reported when there are no images (zero algebra).
    """

    source: LieAlgebra
    space_dim: int
    images: tuple
    order: int = 0

    def __post_init__(self):
        if len(self.images) != self.source.dim:
            raise DimensionError("need one image per basis element of the source algebra")
        for img in self.images:
            if img.src_dim != self.space_dim or img.tgt_dim != self.space_dim:
                raise DimensionError("images must be vector fields on the acted-on space")

    @property
    def valid_through(self) -> int:
        return min((img.valid_through for img in self.images), default=self.order)

    def __call__(self, a: Sequence) -> FormalSeries:
        a = vector(a)
        if len(a) != self.source.dim:
            raise DimensionError(f"{self.source.name} has dimension {self.source.dim}")
        n = self.valid_through
        out = FormalSeries.zero(self.space_dim, self.space_dim, n)
        for ai, img in zip(a, self.images):
            if ai:
                out = out + ai * img.truncate(n)
        return out


def fundamental_formal_action(B: LieAlgebra, N: int, coefficients: Sequence | None = None) -> FormalAction:
    return FormalAction(B, B.dim, tuple(fundamental_action(B, e, N, coefficients) for e in B.basis()), N)


@dataclass(frozen=True)
class ActionReport:
    check_degree: int
    failures: tuple  # ((i, j), (degrees...)) for each failing basis pair
    labels: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def first_failing_degree(self) -> int | None:
        return min((d for _, ds in self.failures for d in ds), default=None)

    def failing_degrees(self) -> list[int]:
        return sorted({d for _, ds in self.failures for d in ds})


def verify_formal_action(D: FormalAction, check_degree: int) -> ActionReport:
    """Compare ``D_[e_i, e_j]`` with ``[D_{e_i}, D_{e_j}]`` on degrees ``<= check_degree``."""
    attainable = D.valid_through - 1
    if check_degree > attainable:
        raise TruncationError(f"check_degree {check_degree} exceeds the certified bound {attainable}")
    alg = D.source
    basis = alg.basis()
    failures = []
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            lhs = D(bracket(alg, basis[i], basis[j]))
            rhs = bracket_S(D.images[i], D.images[j])
            bad = lhs.mismatched_degrees(rhs, check_degree)
            if bad:
                failures.append(((i, j), tuple(bad)))
    return ActionReport(check_degree, tuple(failures), alg.labels)


def sigma_apply(d_b: FormalSeries, a: FormalSeries) -> FormalSeries:
    """Derivative of an algebra-valued series ``a`` along the field ``d_b``."""
    if d_b.src_dim != d_b.tgt_dim:
        raise DimensionError("d_b must be a vector field Y -> Y")
    if a.src_dim != d_b.src_dim:
        raise DimensionError("a must be a series in the same variables as d_b")
    return derive_series(d_b, a)

