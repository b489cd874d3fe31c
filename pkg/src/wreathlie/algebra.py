"""Exact scalars, vectors, linear maps and finite-dimensional Lie algebras over Q.

Scalars are :class:`fractions.Fraction`.  A vector is a plain tuple of
fractions; a Lie algebra is given by its structure constants on a named basis.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple  # tuple[Fraction, ...]


class DimensionError(ValueError):
    pass


class InvalidLieAlgebra(ValueError):
    def __init__(self, report: "LieAlgebraReport"):
        self.report = report
        super().__init__(report.describe())


class NotAnIdeal(ValueError):
    pass


# --------------------------------------------------------------------------
# vectors


def to_fraction(value) -> Fraction:
    """Parse ``"p/q"``, ``"p"``, ints or fractions into a reduced Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        num, sep, den = text.partition("/")
        try:
            n = int(num)
            d = int(den) if sep else 1
        except ValueError:
            raise ValueError(f"malformed rational {value!r}") from None
        if d == 0:
            raise ZeroDivisionError(f"zero denominator in {value!r}")
        return Fraction(n, d)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def vector(values: Iterable) -> Vector:
    return tuple(to_fraction(v) for v in values)


def zero(dim: int) -> Vector:
    return (Fraction(0),) * dim


def unit(dim: int, i: int) -> Vector:
    return tuple(Fraction(1 if k == i else 0) for k in range(dim))


def add(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def scale(c, x: Vector) -> Vector:
    return tuple(c * a for a in x)


def axpy(c, x: Vector, y: Vector) -> Vector:
    """Return ``c*x + y``."""
    return tuple(c * a + b for a, b in zip(x, y))


def is_zero(x: Vector) -> bool:
    return not any(x)


def fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


# --------------------------------------------------------------------------
# exact linear algebra


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (nonzero rows, pivot columns)."""
    m = [[to_fraction(a) for a in row] for row in rows]
    pivots: list[int] = []
    if not m:
        return [], pivots
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [a * inv for a in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def solve_in_span(basis: Sequence[Vector], v: Vector) -> Vector | None:
    """Coordinates of ``v`` in the (independent) ``basis``, or None if v is outside the span."""
    k = len(basis)
    if k == 0:
        return () if is_zero(v) else None
    # columns are basis vectors, augmented by v
    aug = [[basis[j][i] for j in range(k)] + [v[i]] for i in range(len(v))]
    red, pivots = rref(aug)
    if k in pivots:
        return None
    coords = [Fraction(0)] * k
    for row, p in zip(red, pivots):
        coords[p] = row[k]
    return tuple(coords)


@dataclass(frozen=True)
class LinearMap:
    """A ``nrows x ncols`` rational matrix acting on column vectors."""

    nrows: int
    ncols: int
    entries: tuple  # tuple of row tuples

    def __post_init__(self):
        if len(self.entries) != self.nrows or any(len(r) != self.ncols for r in self.entries):
            raise DimensionError(f"entry grid is not {self.nrows}x{self.ncols}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], ncols: int | None = None) -> "LinearMap":
        rows = tuple(vector(r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, rows)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int) -> "LinearMap":
        cols = [vector(c) for c in cols]
        return cls(nrows, len(cols), tuple(tuple(c[i] for c in cols) for i in range(nrows)))

    @classmethod
    def identity(cls, n: int) -> "LinearMap":
        return cls(n, n, tuple(unit(n, i) for i in range(n)))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "LinearMap":
        return cls(nrows, ncols, tuple(zero(ncols) for _ in range(nrows)))

    def __call__(self, x: Vector) -> Vector:
        if len(x) != self.ncols:
            raise DimensionError(f"vector of length {len(x)} given to a map with {self.ncols} columns")
        return tuple(sum((a * b for a, b in zip(row, x)), Fraction(0)) for row in self.entries)

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        if self.ncols != other.nrows:
            raise DimensionError(f"cannot compose {self.nrows}x{self.ncols} with {other.nrows}x{other.ncols}")
        cols = [self(c) for c in other.columns()]
        return LinearMap.from_columns(cols, self.nrows)

    def __add__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.nrows, self.ncols, tuple(add(a, b) for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.nrows, self.ncols, tuple(sub(a, b) for a, b in zip(self.entries, other.entries)))

    def __rmul__(self, c) -> "LinearMap":
        return LinearMap(self.nrows, self.ncols, tuple(scale(c, r) for r in self.entries))

    def columns(self) -> list[Vector]:
        return [tuple(row[j] for row in self.entries) for j in range(self.ncols)]

    def rank(self) -> int:
        return rank(self.entries)


# --------------------------------------------------------------------------
# Lie algebras


@dataclass(frozen=True)
class LieAlgebraReport:
    antisymmetry: tuple = ()  # (i, j) pairs with [e_i,e_j] != -[e_j,e_i]
    jacobi: tuple = ()  # (i, j, k) triples with nonzero cyclic sum
    labels: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.antisymmetry and not self.jacobi

    def describe(self) -> str:
        if self.ok:
            return "valid Lie algebra"
        lab = self.labels
        parts = [f"antisymmetry violated at ({lab[i]}, {lab[j]})" for i, j in self.antisymmetry]
        parts += [f"Jacobi violated at ({lab[i]}, {lab[j]}, {lab[k]})" for i, j, k in self.jacobi]
        return "; ".join(parts)


@dataclass(frozen=True)
class LieAlgebra:
    """Finite-dimensional Lie algebra by structure constants.

    ``table[i][j]`` is the coordinate vector of ``[e_i, e_j]``.  Use
    :meth:`from_brackets` to build a validated algebra from upper-triangular data.
    """

    name: str
    labels: tuple
    table: tuple = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.labels)

    @classmethod
    def from_brackets(cls, name: str, labels: Sequence[str], brackets: dict, validate: bool = True) -> "LieAlgebra":
        """Build from ``{(i, j): vector}`` with i < j; antisymmetry fills the rest."""
        labels = tuple(labels)
        n = len(labels)
        if len(set(labels)) != n:
            raise ValueError("basis labels must be distinct")
        grid = [[zero(n) for _ in range(n)] for _ in range(n)]
        for (i, j), v in brackets.items():
            v = vector(v)
            if len(v) != n:
                raise DimensionError(f"bracket [{labels[i]},{labels[j]}] has {len(v)} coordinates, expected {n}")
            if i == j:
                if not is_zero(v):
                    raise ValueError(f"[{labels[i]},{labels[i]}] must vanish")
                continue
            grid[i][j] = v
            grid[j][i] = scale(-1, v)
        alg = cls(name, labels, tuple(tuple(r) for r in grid))
        if validate:
            report = check_lie_algebra(alg)
            if not report.ok:
                raise InvalidLieAlgebra(report)
        return alg

    @classmethod
    def abelian(cls, n: int, name: str | None = None, labels: Sequence[str] | None = None) -> "LieAlgebra":
        labels = tuple(labels) if labels is not None else tuple(f"e{i + 1}" for i in range(n))
        return cls.from_brackets(name or f"abelian{n}", labels, {})

    def basis(self) -> list[Vector]:
        return [unit(self.dim, i) for i in range(self.dim)]

    def is_abelian(self) -> bool:
        return all(is_zero(v) for row in self.table for v in row)


def bracket(alg: LieAlgebra, x: Vector, y: Vector) -> Vector:
    n = alg.dim
    if len(x) != n or len(y) != n:
        raise DimensionError(f"{alg.name} has dimension {n}; got vectors of length {len(x)} and {len(y)}")
    out = [Fraction(0)] * n
    for i, xi in enumerate(x):
        if not xi:
            continue
        row = alg.table[i]
        for j, yj in enumerate(y):
            if not yj:
                continue
            c = xi * yj
            for k, v in enumerate(row[j]):
                if v:
                    out[k] += c * v
    return tuple(out)


def ad(alg: LieAlgebra, y: Vector) -> LinearMap:
    """Matrix of ``b -> [y, b]``."""
    if len(y) != alg.dim:
        raise DimensionError(f"{alg.name} has dimension {alg.dim}; got vector of length {len(y)}")
    cols = [bracket(alg, y, e) for e in alg.basis()]
    return LinearMap.from_columns(cols, alg.dim)


def check_lie_algebra(alg: LieAlgebra) -> LieAlgebraReport:
    n = alg.dim
    anti = []
    for i in range(n):
        for j in range(i, n):
            if add(alg.table[i][j], alg.table[j][i]) != zero(n):
                anti.append((i, j))
    jac = []
    basis = alg.basis()
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                ei, ej, ek = basis[i], basis[j], basis[k]
                total = add(add(bracket(alg, bracket(alg, ei, ej), ek),
                                bracket(alg, bracket(alg, ej, ek), ei)),
                            bracket(alg, bracket(alg, ek, ei), ej))
                if not is_zero(total):
                    jac.append((i, j, k))
    return LieAlgebraReport(tuple(anti), tuple(jac), alg.labels)


def quotient(alg: LieAlgebra, ideal_basis: Sequence[Vector]) -> tuple[LieAlgebra, LinearMap]:
    """Quotient ``C/I`` on the complementary coordinate positions of the echelonized ideal.

    Returns the quotient algebra and the projection ``p: C -> C/I``.
    """
    n = alg.dim
    ideal_basis = [vector(v) for v in ideal_basis]
    if any(len(v) != n for v in ideal_basis):
        raise DimensionError(f"ideal vectors must have length {n}")
    red, pivots = rref(ideal_basis)
    if len(pivots) != len(ideal_basis):
        raise ValueError("ideal basis is not linearly independent")
    for e in alg.basis():
        for a in ideal_basis:
            if solve_in_span(ideal_basis, bracket(alg, e, a)) is None:
                raise NotAnIdeal(
                    f"span is not an ideal: [{_show(alg, e)}, {_show(alg, a)}] = "
                    f"{_show(alg, bracket(alg, e, a))} lies outside it")
    complement = [q for q in range(n) if q not in pivots]
    rows = []
    for q in complement:
        row = list(unit(n, q))
        for r, pcol in zip(red, pivots):
            row[pcol] -= r[q]
        rows.append(row)
    p = LinearMap.from_rows(rows, ncols=n)
    brackets = {}
    for a, qa in enumerate(complement):
        for b in range(a + 1, len(complement)):
            v = p(alg.table[qa][complement[b]])
            if not is_zero(v):
                brackets[(a, b)] = v
    labels = tuple(alg.labels[q] for q in complement)
    quo = LieAlgebra.from_brackets(f"{alg.name}/ideal", labels, brackets, validate=False)
    report = check_lie_algebra(quo)
    if not report.ok:
        raise RuntimeError(f"induced quotient table is not a Lie algebra: {report.describe()}")
    return quo, p


def _show(alg: LieAlgebra, v: Vector) -> str:
    terms = [f"{fmt_rational(c)}*{alg.labels[i]}" for i, c in enumerate(v) if c]
    return " + ".join(terms) if terms else "0"
