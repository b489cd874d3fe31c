"""The wreath product ``W(A, B; d) = A[[Y]] x B`` and its triangular action on ``Z = X x Y``."""
from __future__ import annotations

from dataclasses import dataclass, field

from .actions import FormalAction, fundamental_formal_action, sigma_apply
from .algebra import DimensionError, LieAlgebra, Vector, bracket, vector
from .formal import FormalSeries, TruncationError
from .lie_series import FieldSeries, bracket_pointwise, embed_SY_into_SZ, embed_TY_into_SZ


@dataclass(frozen=True)
class WreathElement:
    series: FormalSeries  # Y -> A
    point: Vector  # in B

    def __post_init__(self):
        object.__setattr__(self, "point", vector(self.point))

    @property
    def valid_through(self) -> int:
        return self.series.valid_through


@dataclass(frozen=True)
class WreathProduct:
    """``W(A, B; d)``; ``action`` defaults to the fundamental action of B on itself.

    Elements carry series valid through at most ``N``.
    """

    A: LieAlgebra
    B: LieAlgebra
    N: int
    action: FormalAction = field(default=None)

    def __post_init__(self):
        if self.action is None:
            object.__setattr__(self, "action", fundamental_formal_action(self.B, self.N))
        elif self.action.source != self.B:
            raise ValueError("the action must be an action of B")
        if self.action.valid_through < self.N:
            raise TruncationError(f"action is only valid through {self.action.valid_through} < N={self.N}")

    @property
    def y_dim(self) -> int:
        return self.action.space_dim

    def element(self, series: FormalSeries, point) -> WreathElement:
        w = WreathElement(series, point)
        self.validate(w)
        return w

    def validate(self, w: WreathElement) -> None:
        s = w.series
        if s.tgt_dim != self.A.dim or s.src_dim != self.y_dim:
            raise DimensionError(f"series must map Q^{self.y_dim} to {self.A.name} (dimension {self.A.dim})")
        if len(w.point) != self.B.dim:
            raise DimensionError(f"point must lie in {self.B.name} (dimension {self.B.dim})")
        if s.valid_through > self.N:
            raise TruncationError(f"series valid through {s.valid_through} exceeds the truncation order N={self.N}")

    def d(self, b) -> FormalSeries:
        return self.action(b)

    def zero(self) -> WreathElement:
        return WreathElement(FormalSeries.zero(self.y_dim, self.A.dim, self.N), (0,) * self.B.dim)

    def from_A(self, a: FormalSeries) -> WreathElement:
        return self.element(a, (0,) * self.B.dim)

    def from_B(self, b) -> WreathElement:
        return self.element(FormalSeries.zero(self.y_dim, self.A.dim, self.N), b)


def wreath_bracket(W: WreathProduct, u: WreathElement, v: WreathElement) -> WreathElement:
    """``[(a,b),(a',b')] = ([a,a'] + d_b a' - d_b' a, [b,b'])``.

    The series part is valid through ``min(N_a, N_a', N_d) - 1``.
    """
    W.validate(u)
    W.validate(v)
    if min(u.valid_through, v.valid_through) < 1:
        raise TruncationError("wreath bracket needs series valid through at least degree 1")
    (a, b), (a2, b2) = (u.series, u.point), (v.series, v.point)
    n = min(a.valid_through, a2.valid_through) - 1
    first = bracket_pointwise(a, a2, W.A).truncate(n)
    first = first + sigma_apply(W.d(b), a2).truncate(n)
    first = first - sigma_apply(W.d(b2), a).truncate(n)
    return WreathElement(first, bracket(W.B, b, b2))


def compose_action(D: FormalAction, a: FormalSeries) -> FieldSeries:
    """``D_a``: apply the action to every monomial coefficient of an A-valued series."""
    if a.tgt_dim != D.source.dim:
        raise DimensionError("series values do not lie in the acting algebra")
    coeffs = {}
    for comp in a.components:
        for beta, v in comp.coeffs.items():
            coeffs[beta] = D(v)
    return FieldSeries(D.space_dim, a.src_dim, a.valid_through, coeffs)


def triangular_action(W: WreathProduct, D: FormalAction, w: WreathElement) -> FormalSeries:
    """``Delta_(a,b) = D_a + d_b`` as a vector field on ``Z = X x Y`` (X block first).

    Valid through the smaller of the two embeddings' bounds.
    """
    if D.source != W.A:
        raise ValueError("D must be an action of the wreath product's A")
    W.validate(w)
    x_dim = D.space_dim
    part_a = embed_TY_into_SZ(compose_action(D, w.series))
    part_b = embed_SY_into_SZ(W.d(w.point), x_dim)
    n = min(part_a.valid_through, part_b.valid_through)
    return part_a.truncate(n) + part_b.truncate(n)
