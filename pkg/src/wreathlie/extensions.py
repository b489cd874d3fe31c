"""Extensions ``A -> C -> B`` and their embedding into the wreath product ``W(A, B)``.

For a linear section ``s`` of ``p`` and ``c`` in ``C`` the embedding is
``c -> (h_c, p(c))`` where, with ``z = s(y)``,

    h_{c,m}(y) = (ad z)^m(c) / m!  -  sum_{n+r=m} t_r/(n+1)! (ad z)^n (s p) (ad z)^r (c).

Every ``h_{c,m}(y)`` must land in ``A``; this is checked on every coefficient.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .actions import ad_polynomial, bernoulli_t
from .algebra import (DimensionError, LieAlgebra, LinearMap, Vector, bracket, is_zero,
                      quotient, rref, solve_in_span, unit, vector)
from .formal import FormalSeries, HomogeneousMap
from .sampling import random_vector
from .wreath import WreathElement, WreathProduct, wreath_bracket


class InvalidSection(ValueError):
    pass


class IdealEscape(RuntimeError):
    """A computed ``h_{c,m}`` coefficient left the ideal; indicates a bug, never bad input."""


@dataclass(frozen=True)
class Extension:
    C: LieAlgebra
    ideal_basis: tuple
    A: LieAlgebra
    B: LieAlgebra
    p: LinearMap  # C -> B
    incl: LinearMap  # A -> C
    complement: tuple  # coordinate positions of C used as the quotient basis

    def ideal_coords(self, v: Vector) -> Vector | None:
        return solve_in_span(self.ideal_basis, v)


@dataclass(frozen=True)
class Section:
    """Linear ``s: B -> C`` with ``p o s = id``; build with :func:`make_section`."""

    s: LinearMap

    def __call__(self, b) -> Vector:
        return self.s(vector(b))


def _ideal_label(C: LieAlgebra, v: Vector, k: int) -> str:
    nz = [i for i, a in enumerate(v) if a]
    if len(nz) == 1 and v[nz[0]] == 1:
        return C.labels[nz[0]]
    return f"a{k + 1}"


def make_extension(C: LieAlgebra, ideal_basis: Sequence[Sequence]) -> Extension:
    ideal = tuple(vector(v) for v in ideal_basis)
    B, p = quotient(C, ideal)
    brackets = {}
    for i in range(len(ideal)):
        for j in range(i + 1, len(ideal)):
            coords = solve_in_span(ideal, bracket(C, ideal[i], ideal[j]))
            if coords is None:
                raise RuntimeError("ideal bracket does not close")
            if not is_zero(coords):
                brackets[(i, j)] = coords
    labels = [_ideal_label(C, v, k) for k, v in enumerate(ideal)]
    if len(set(labels)) != len(labels):
        labels = [f"a{k + 1}" for k in range(len(ideal))]
    A = LieAlgebra.from_brackets(f"ideal of {C.name}", labels, brackets)
    basis = C.basis()
    for x in basis:
        for y in basis:
            if p(bracket(C, x, y)) != bracket(B, p(x), p(y)):
                raise RuntimeError("projection is not a homomorphism")
    _, pivots = rref(ideal)
    complement = tuple(q for q in range(C.dim) if q not in pivots)
    incl = LinearMap.from_columns(ideal, C.dim)
    return Extension(C, ideal, A, B, p, incl, complement)


def make_section(ext: Extension, images: Sequence[Sequence]) -> Section:
    """Section with ``s(b_k) = images[k]``; rejected unless ``p o s = id`` exactly."""
    images = [vector(v) for v in images]
    if len(images) != ext.B.dim or any(len(v) != ext.C.dim for v in images):
        raise DimensionError(f"a section needs {ext.B.dim} vectors of length {ext.C.dim}")
    s = Section(LinearMap.from_columns(images, ext.C.dim))
    check_section(ext, s)
    return s


def check_section(ext: Extension, s: Section) -> None:
    if (s.s.nrows, s.s.ncols) != (ext.C.dim, ext.B.dim):
        raise InvalidSection(f"section must be a {ext.C.dim}x{ext.B.dim} matrix")
    if ext.p @ s.s != LinearMap.identity(ext.B.dim):
        raise InvalidSection("p o s is not the identity on B")


def default_section(ext: Extension) -> Section:
    """``s(b_k) = e_q`` for the k-th complementary coordinate position ``q``."""
    return make_section(ext, [unit(ext.C.dim, q) for q in ext.complement])


def _to_ideal(ext: Extension, h: HomogeneousMap, m: int) -> HomogeneousMap:
    out = {}
    for alpha, v in h.coeffs.items():
        coords = ext.ideal_coords(v)
        if coords is None:
            raise IdealEscape(f"h_(c,{m}) coefficient of y^{alpha} is {v}, outside the ideal")
        out[alpha] = coords
    return HomogeneousMap(h.src_dim, ext.A.dim, h.degree, out)


def kk_series(ext: Extension, s: Section, c: Sequence, N: int) -> FormalSeries:
    """``(h_{c,m})_{m <= N}`` as a series ``B -> A`` in A-coordinates."""
    check_section(ext, s)
    c = vector(c)
    if len(c) != ext.C.dim:
        raise DimensionError(f"c must lie in {ext.C.name} (dimension {ext.C.dim})")
    C, nb = ext.C, ext.B.dim
    t = bernoulli_t(N)
    sp = s.s @ ext.p
    directions = s.s.columns()
    # powers[r] = (ad z)^r (c); chains[r][n] = (ad z)^n (s p) (ad z)^r (c)
    powers = [HomogeneousMap.constant(nb, c)]
    for _ in range(N):
        powers.append(ad_polynomial(C, directions, powers[-1]))
    chains = []
    for r in range(N + 1):
        chain = [powers[r].map_values(sp)]
        for _ in range(N - r):
            chain.append(ad_polynomial(C, directions, chain[-1]))
        chains.append(chain)
    comps = []
    for m in range(N + 1):
        h = Fraction(1, math.factorial(m)) * powers[m]
        for r in range(m + 1):
            n = m - r
            if t[r]:
                h = h - (t[r] / math.factorial(n + 1)) * chains[r][n]
        comps.append(_to_ideal(ext, h, m))
    return FormalSeries(nb, ext.A.dim, comps)


def kk_component(ext: Extension, s: Section, c: Sequence, m: int) -> HomogeneousMap:
    return kk_series(ext, s, c, m)[m]


def kk_embed(ext: Extension, s: Section, c: Sequence, N: int) -> WreathElement:
    c = vector(c)
    return WreathElement(kk_series(ext, s, c, N), ext.p(c))


@dataclass(frozen=True)
class KKReport:
    N: int
    homomorphism_failures: tuple  # (description, mismatched degrees, point mismatch)
    rank: int
    dim: int
    pairs_checked: int

    @property
    def homomorphism_ok(self) -> bool:
        return not self.homomorphism_failures

    @property
    def injectivity_ok(self) -> bool:
        return self.rank == self.dim

    @property
    def ok(self) -> bool:
        return self.homomorphism_ok and self.injectivity_ok


def injectivity_rank(ext: Extension, s: Section) -> int:
    """Rank of ``c -> (h_{c,0}, p(c))``; equal to ``dim C`` iff the embedding is injective."""
    cols = []
    for e in ext.C.basis():
        h0 = kk_series(ext, s, e, 0)[0]
        coords = h0.coeffs.get((0,) * ext.B.dim, (Fraction(0),) * ext.A.dim)
        cols.append(tuple(coords) + ext.p(e))
    return LinearMap.from_columns(cols, ext.A.dim + ext.B.dim).rank() if cols else 0


def verify_kk(ext: Extension, s: Section, N: int, trials: int = 0, seed: int = 0) -> KKReport:
    """Check ``[f(c), f(c')] = f([c, c'])`` through degree ``N - 1`` and injectivity.

    Basis pairs are always checked; ``trials`` random pairs are added from a
    seeded generator.
    """
    if N < 2:
        raise ValueError("N must be >= 2 for bracket verification")
    check_section(ext, s)
    W = WreathProduct(ext.A, ext.B, N)
    C = ext.C
    pairs = []
    basis = C.basis()
    labels = C.labels
    for i in range(C.dim):
        for j in range(i + 1, C.dim):
            pairs.append((f"({labels[i]}, {labels[j]})", basis[i], basis[j]))
    rng = random.Random(seed)
    for k in range(trials):
        pairs.append((f"trial {k}", random_vector(rng, C.dim), random_vector(rng, C.dim)))
    embedded = {}

    def f(c):
        if c not in embedded:
            embedded[c] = kk_embed(ext, s, c, N)
        return embedded[c]

    failures = []
    for name, c1, c2 in pairs:
        lhs = wreath_bracket(W, f(c1), f(c2))
        rhs = kk_embed(ext, s, bracket(C, c1, c2), N)
        bad = lhs.series.mismatched_degrees(rhs.series, N - 1)
        point_bad = lhs.point != rhs.point
        if bad or point_bad:
            failures.append((name, tuple(bad), point_bad))
    return KKReport(N, tuple(failures), injectivity_rank(ext, s), C.dim, len(pairs))
