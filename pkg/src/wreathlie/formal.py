"""Homogeneous polynomial maps between coordinatized spaces and truncated formal series.

A :class:`HomogeneousMap` of degree ``m`` from ``Q^n`` to ``Q^k`` is stored as
sparse monomial coefficients ``{alpha: vector}`` with ``|alpha| = m``.  A
:class:`FormalSeries` is the list of its homogeneous components for degrees
``0..valid_through``; anything above ``valid_through`` is unknown, not zero.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .algebra import DimensionError, LinearMap, Vector, is_zero, vector, zero

MultiIndex = tuple  # tuple[int, ...]

ORACLE_MAX_ARITY = 5


class TruncationError(ValueError):
    """Raised when a requested degree is above what a series can certify."""


def graded_lex_key(alpha: MultiIndex):
    return (sum(alpha), tuple(-a for a in alpha))


def monomials(dim: int, degree: int) -> Iterator[MultiIndex]:
    """All exponent tuples of the given degree, in graded-lex order (x1 highest)."""
    if degree < 0:
        return
    if dim == 0:
        if degree == 0:
            yield ()
        return
    for first in range(degree, -1, -1):
        for rest in monomials(dim - 1, degree - first):
            yield (first,) + rest


def unit_index(dim: int, i: int) -> MultiIndex:
    return tuple(1 if k == i else 0 for k in range(dim))


def mono_mul(a: MultiIndex, b: MultiIndex) -> MultiIndex:
    return tuple(x + y for x, y in zip(a, b))


def mono_eval(alpha: MultiIndex, x: Sequence) -> Fraction:
    out = Fraction(1)
    for xi, a in zip(x, alpha):
        if a:
            out *= xi ** a
    return out


def _accumulate(acc: dict, key, c, v: Vector) -> None:
    cur = acc.get(key)
    if cur is None:
        acc[key] = [c * a for a in v]
    else:
        for k, a in enumerate(v):
            if a:
                cur[k] += c * a


class HomogeneousMap:
    """Degree-``degree`` homogeneous polynomial map ``Q^src_dim -> Q^tgt_dim``."""

    __slots__ = ("src_dim", "tgt_dim", "degree", "coeffs")

    def __init__(self, src_dim: int, tgt_dim: int, degree: int, coeffs: dict | None = None):
        clean = {}
        for alpha, v in (coeffs or {}).items():
            alpha = tuple(alpha)
            if len(alpha) != src_dim or sum(alpha) != degree or min(alpha, default=0) < 0:
                raise DimensionError(f"monomial {alpha} does not fit degree {degree} on {src_dim} variables")
            v = vector(v)
            if len(v) != tgt_dim:
                raise DimensionError(f"coefficient of {alpha} has length {len(v)}, expected {tgt_dim}")
            if not is_zero(v):
                clean[alpha] = v
        self.src_dim = src_dim
        self.tgt_dim = tgt_dim
        self.degree = degree
        self.coeffs = dict(sorted(clean.items(), key=lambda kv: graded_lex_key(kv[0])))

    @classmethod
    def zero(cls, src_dim: int, tgt_dim: int, degree: int) -> "HomogeneousMap":
        return cls(src_dim, tgt_dim, degree)

    @classmethod
    def constant(cls, src_dim: int, value: Vector) -> "HomogeneousMap":
        value = vector(value)
        return cls(src_dim, len(value), 0, {(0,) * src_dim: value})

    @classmethod
    def linear(cls, matrix: LinearMap) -> "HomogeneousMap":
        n = matrix.ncols
        return cls(n, matrix.nrows, 1, {unit_index(n, j): col for j, col in enumerate(matrix.columns())})

    def __repr__(self):
        return f"HomogeneousMap({self.src_dim}, {self.tgt_dim}, {self.degree}, {self.coeffs!r})"

    def __eq__(self, other):
        if not isinstance(other, HomogeneousMap):
            return NotImplemented
        return (self.src_dim, self.tgt_dim, self.degree, self.coeffs) == (
            other.src_dim, other.tgt_dim, other.degree, other.coeffs)

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check_same_shape(self, other: "HomogeneousMap"):
        if (self.src_dim, self.tgt_dim, self.degree) != (other.src_dim, other.tgt_dim, other.degree):
            raise DimensionError("homogeneous maps differ in shape or degree")

    def __add__(self, other: "HomogeneousMap") -> "HomogeneousMap":
        self._check_same_shape(other)
        acc = {a: list(v) for a, v in self.coeffs.items()}
        for a, v in other.coeffs.items():
            _accumulate(acc, a, 1, v)
        return HomogeneousMap(self.src_dim, self.tgt_dim, self.degree, acc)

    def __neg__(self) -> "HomogeneousMap":
        return (-1) * self

    def __sub__(self, other: "HomogeneousMap") -> "HomogeneousMap":
        return self + (-other)

    def __rmul__(self, c) -> "HomogeneousMap":
        c = Fraction(c)
        return HomogeneousMap(self.src_dim, self.tgt_dim, self.degree,
                              {a: tuple(c * x for x in v) for a, v in self.coeffs.items()})

    def __call__(self, x: Sequence) -> Vector:
        return evaluate(self, x)

    def map_values(self, lin: LinearMap) -> "HomogeneousMap":
        """Post-compose with a linear map on the target."""
        if lin.ncols != self.tgt_dim:
            raise DimensionError("linear map does not accept this target")
        return HomogeneousMap(self.src_dim, lin.nrows, self.degree, {a: lin(v) for a, v in self.coeffs.items()})

    def component(self, i: int) -> dict:
        return {a: v[i] for a, v in self.coeffs.items() if v[i]}

    def partial(self, i: int) -> "HomogeneousMap":
        if self.degree == 0:
            return HomogeneousMap.zero(self.src_dim, self.tgt_dim, -1)
        out = {}
        for a, v in self.coeffs.items():
            if a[i]:
                b = a[:i] + (a[i] - 1,) + a[i + 1:]
                out[b] = tuple(a[i] * x for x in v)
        return HomogeneousMap(self.src_dim, self.tgt_dim, self.degree - 1, out)


def evaluate(f: HomogeneousMap, x: Sequence) -> Vector:
    if len(x) != f.src_dim:
        raise DimensionError(f"point of length {len(x)} for a map on {f.src_dim} variables")
    x = vector(x)
    out = [Fraction(0)] * f.tgt_dim
    for alpha, v in f.coeffs.items():
        m = mono_eval(alpha, x)
        if m:
            for k, a in enumerate(v):
                out[k] += m * a
    return tuple(out)


# --------------------------------------------------------------------------
# multilinear tensors (test oracles)


class MultilinearTensor:
    """Dense m-linear map ``(Q^src_dim)^m -> Q^tgt_dim``; entries keyed by index tuples."""

    def __init__(self, src_dim: int, tgt_dim: int, arity: int, entries: dict | None = None):
        self.src_dim = src_dim
        self.tgt_dim = tgt_dim
        self.arity = arity
        entries = entries or {}
        self.entries = {idx: vector(entries.get(idx, zero(tgt_dim)))
                        for idx in itertools.product(range(src_dim), repeat=arity)}

    def __call__(self, *xs: Sequence) -> Vector:
        if len(xs) != self.arity:
            raise DimensionError(f"expected {self.arity} arguments")
        out = [Fraction(0)] * self.tgt_dim
        for idx, v in self.entries.items():
            c = Fraction(1)
            for slot, i in enumerate(idx):
                c *= xs[slot][i]
                if not c:
                    break
            if c:
                for k, a in enumerate(v):
                    out[k] += c * a
        return tuple(out)

    def __add__(self, other: "MultilinearTensor") -> "MultilinearTensor":
        return MultilinearTensor(self.src_dim, self.tgt_dim, self.arity,
                                 {i: tuple(a + b for a, b in zip(v, other.entries[i]))
                                  for i, v in self.entries.items()})

    def symmetrized(self) -> "MultilinearTensor":
        perms = list(itertools.permutations(range(self.arity)))
        n = Fraction(1, len(perms))
        out = {}
        for idx in self.entries:
            acc = [Fraction(0)] * self.tgt_dim
            for perm in perms:
                v = self.entries[tuple(idx[p] for p in perm)]
                for k, a in enumerate(v):
                    acc[k] += a
            out[idx] = tuple(n * a for a in acc)
        return MultilinearTensor(self.src_dim, self.tgt_dim, self.arity, out)


def from_multilinear(u: MultilinearTensor) -> HomogeneousMap:
    """The homogeneous polynomial ``x -> u(x, ..., x)``."""
    acc: dict = {}
    for idx, v in u.entries.items():
        alpha = [0] * u.src_dim
        for i in idx:
            alpha[i] += 1
        _accumulate(acc, tuple(alpha), 1, v)
    return HomogeneousMap(u.src_dim, u.tgt_dim, u.arity, acc)


# --------------------------------------------------------------------------
# polarization


def _valid_multiplicities(p: Sequence[int], degree: int) -> bool:
    return all(pj >= 0 for pj in p) and sum(p) == degree


def polarize(f: HomogeneousMap, z: Sequence[Vector], p: Sequence[int]) -> Vector:
    """Coefficient of ``t^p`` in ``f(t_1 z_1 + ... + t_r z_r)``.

    Multiplicities that are negative or do not sum to the degree give zero.
    """
    if len(z) != len(p):
        raise DimensionError("z and p must have the same length")
    z = [vector(zj) for zj in z]
    if any(len(zj) != f.src_dim for zj in z):
        raise DimensionError(f"points must have length {f.src_dim}")
    p = tuple(int(pj) for pj in p)
    if not _valid_multiplicities(p, f.degree):
        return zero(f.tgt_dim)
    r = len(p)
    # linear forms x_i = sum_j t_j z_j[i]
    forms = [[(j, z[j][i]) for j in range(r) if z[j][i] and p[j]] for i in range(f.src_dim)]
    out = [Fraction(0)] * f.tgt_dim
    for alpha, v in f.coeffs.items():
        poly = {(0,) * r: Fraction(1)}
        for i, a in enumerate(alpha):
            for _ in range(a):
                nxt: dict = {}
                for e, c in poly.items():
                    for j, zij in forms[i]:
                        if e[j] < p[j]:
                            e2 = e[:j] + (e[j] + 1,) + e[j + 1:]
                            nxt[e2] = nxt.get(e2, 0) + c * zij
                poly = nxt
        c = poly.get(p, 0)
        if c:
            for k, a in enumerate(v):
                out[k] += c * a
    return tuple(out)


def _arrangements(p: Sequence[int]) -> Iterator[tuple]:
    """Distinct sequences with exactly p[j] copies of j."""
    total = sum(p)
    if total == 0:
        yield ()
        return
    for j, pj in enumerate(p):
        if pj:
            rest = list(p)
            rest[j] -= 1
            for tail in _arrangements(rest):
                yield (j,) + tail


def polarize_oracle(u: MultilinearTensor, z: Sequence[Vector], p: Sequence[int]) -> Vector:
    """Sum of ``u(x_1..x_m)`` over slot assignments with exactly ``p_j`` slots equal to ``z_j``."""
    if u.arity > ORACLE_MAX_ARITY:
        raise ValueError(f"arity {u.arity} too large for enumeration (max {ORACLE_MAX_ARITY})")
    if len(z) != len(p):
        raise DimensionError("z and p must have the same length")
    z = [vector(zj) for zj in z]
    if any(len(zj) != u.src_dim for zj in z):
        raise DimensionError(f"points must have length {u.src_dim}")
    if not _valid_multiplicities(p, u.arity):
        return zero(u.tgt_dim)
    out = zero(u.tgt_dim)
    for arr in _arrangements(p):
        out = tuple(a + b for a, b in zip(out, u(*(z[j] for j in arr))))
    return out


# --------------------------------------------------------------------------
# derivation along a vector field


def derive_homogeneous(xi: HomogeneousMap, f: HomogeneousMap) -> HomogeneousMap:
    """``(xi f)(x) = Df(x) . xi(x)``, homogeneous of degree ``deg xi + deg f - 1``."""
    if xi.src_dim != xi.tgt_dim:
        raise DimensionError("derivation direction must map a space to itself")
    if xi.src_dim != f.src_dim:
        raise DimensionError("direction and map live on different spaces")
    degree = xi.degree + f.degree - 1
    if f.degree <= 0:
        return HomogeneousMap.zero(f.src_dim, f.tgt_dim, degree)
    acc: dict = {}
    for beta, w in xi.coeffs.items():
        for i, wi in enumerate(w):
            if not wi:
                continue
            for alpha, v in f.coeffs.items():
                if alpha[i]:
                    key = tuple(b + a - (1 if k == i else 0) for k, (b, a) in enumerate(zip(beta, alpha)))
                    _accumulate(acc, key, wi * alpha[i], v)
    return HomogeneousMap(f.src_dim, f.tgt_dim, degree, acc)


class FormalSeries:
    """Truncated formal series: components for degrees ``0..valid_through``."""

    __slots__ = ("src_dim", "tgt_dim", "components")

    def __init__(self, src_dim: int, tgt_dim: int, components: Iterable[HomogeneousMap]):
        comps = tuple(components)
        for m, c in enumerate(comps):
            if c.degree != m or c.src_dim != src_dim or c.tgt_dim != tgt_dim:
                raise DimensionError(f"component {m} has shape ({c.src_dim}->{c.tgt_dim}, degree {c.degree})")
        self.src_dim = src_dim
        self.tgt_dim = tgt_dim
        self.components = comps

    @property
    def valid_through(self) -> int:
        return len(self.components) - 1

    @classmethod
    def zero(cls, src_dim: int, tgt_dim: int, valid_through: int) -> "FormalSeries":
        return cls(src_dim, tgt_dim, (HomogeneousMap.zero(src_dim, tgt_dim, m) for m in range(valid_through + 1)))

    @classmethod
    def from_maps(cls, src_dim: int, tgt_dim: int, maps: Iterable[HomogeneousMap], valid_through: int) -> "FormalSeries":
        """Sum homogeneous maps of any degree into a series valid through ``valid_through``."""
        comps = [HomogeneousMap.zero(src_dim, tgt_dim, m) for m in range(valid_through + 1)]
        for h in maps:
            if h.degree <= valid_through:
                comps[h.degree] = comps[h.degree] + h
        return cls(src_dim, tgt_dim, comps)

    def __repr__(self):
        return f"FormalSeries({self.src_dim}, {self.tgt_dim}, valid_through={self.valid_through}, {list(self.components)!r})"

    def __eq__(self, other):
        if not isinstance(other, FormalSeries):
            return NotImplemented
        return (self.src_dim, self.tgt_dim, self.components) == (other.src_dim, other.tgt_dim, other.components)

    __hash__ = None

    def __getitem__(self, m: int) -> HomogeneousMap:
        if m < 0:
            return HomogeneousMap.zero(self.src_dim, self.tgt_dim, m)
        if m > self.valid_through:
            raise TruncationError(f"degree {m} is above valid_through={self.valid_through}")
        return self.components[m]

    def truncate(self, n: int) -> "FormalSeries":
        if n > self.valid_through:
            raise TruncationError(f"cannot certify degree {n}; series valid through {self.valid_through}")
        return FormalSeries(self.src_dim, self.tgt_dim, self.components[:n + 1])

    def _check_same_shape(self, other: "FormalSeries"):
        if (self.src_dim, self.tgt_dim) != (other.src_dim, other.tgt_dim):
            raise DimensionError("series differ in shape")

    def __add__(self, other: "FormalSeries") -> "FormalSeries":
        self._check_same_shape(other)
        return FormalSeries(self.src_dim, self.tgt_dim, (a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other: "FormalSeries") -> "FormalSeries":
        self._check_same_shape(other)
        return FormalSeries(self.src_dim, self.tgt_dim, (a - b for a, b in zip(self.components, other.components)))

    def __neg__(self) -> "FormalSeries":
        return (-1) * self

    def __rmul__(self, c) -> "FormalSeries":
        return FormalSeries(self.src_dim, self.tgt_dim, (c * a for a in self.components))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def map_values(self, lin: LinearMap) -> "FormalSeries":
        return FormalSeries(self.src_dim, lin.nrows, (c.map_values(lin) for c in self.components))

    def evaluate(self, x: Sequence, through: int | None = None) -> Vector:
        """Sum of the components of degree <= ``through`` at ``x``."""
        through = self.valid_through if through is None else through
        out = zero(self.tgt_dim)
        for m in range(through + 1):
            out = tuple(a + b for a, b in zip(out, self[m](x)))
        return out

    def mismatched_degrees(self, other: "FormalSeries", through: int) -> list[int]:
        """Degrees ``<= through`` where the two series differ."""
        self._check_same_shape(other)
        return [m for m in range(through + 1) if self[m] != other[m]]


def derive_series(xi: FormalSeries, f: FormalSeries) -> FormalSeries:
    """Derivative of ``f`` along the vector field ``xi``; valid through ``min(N_xi, N_f) - 1``.

    Component ``s`` is ``sum_{r + m - 1 = s} xi_r f_m`` and needs both inputs up to
    degree ``s + 1``.  A result with no certified component has ``valid_through == -1``.
    """
    if xi.src_dim != xi.tgt_dim:
        raise DimensionError("derivation direction must map a space to itself")
    if xi.src_dim != f.src_dim:
        raise DimensionError("direction and series live on different spaces")
    n = min(xi.valid_through, f.valid_through) - 1
    comps = []
    for s in range(n + 1):
        g = HomogeneousMap.zero(f.src_dim, f.tgt_dim, s)
        for r in range(s + 2):
            term = derive_homogeneous(xi[r], f[s + 1 - r])
            if term.coeffs:
                g = g + term
        comps.append(g)
    return FormalSeries(f.src_dim, f.tgt_dim, comps)

