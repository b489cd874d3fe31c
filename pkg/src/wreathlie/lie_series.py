"""Lie brackets on formal series and the identifications into series on ``Z = X x Y``.

Two shapes of :class:`~wreathlie.formal.FormalSeries` appear here: vector fields
``X -> X`` (bracket :func:`bracket_S`) and algebra-valued series ``Y -> A``
(bracket :func:`bracket_pointwise`).  On ``Z`` the X coordinates come first,
then the Y coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import DimensionError, LieAlgebra, bracket
from .formal import FormalSeries, HomogeneousMap, _accumulate, derive_series, mono_eval, mono_mul


def bracket_S(xi: FormalSeries, eta: FormalSeries) -> FormalSeries:
    """``[xi, eta] = xi eta - eta xi``; valid through ``min(N_xi, N_eta) - 1``."""
    if xi.src_dim != xi.tgt_dim or eta.src_dim != eta.tgt_dim:
        raise DimensionError("S(X) bracket needs vector fields X -> X")
    if xi.src_dim != eta.src_dim:
        raise DimensionError("vector fields live on different spaces")
    return derive_series(xi, eta) - derive_series(eta, xi)


def bracket_homogeneous(f: HomogeneousMap, g: HomogeneousMap, alg: LieAlgebra) -> HomogeneousMap:
    """Pointwise ``y -> [f(y), g(y)]``, homogeneous of degree ``deg f + deg g``."""
    acc: dict = {}
    for a, v in f.coeffs.items():
        for b, w in g.coeffs.items():
            _accumulate(acc, mono_mul(a, b), 1, bracket(alg, v, w))
    return HomogeneousMap(f.src_dim, alg.dim, f.degree + g.degree, acc)


def bracket_pointwise(f: FormalSeries, g: FormalSeries, alg: LieAlgebra) -> FormalSeries:
    """``[f, g]_s = sum_{n + r = s} [f_n, g_r]``; valid through ``min(N_f, N_g)``."""
    if f.tgt_dim != alg.dim or g.tgt_dim != alg.dim:
        raise DimensionError(f"series must take values in {alg.name} (dimension {alg.dim})")
    if f.src_dim != g.src_dim:
        raise DimensionError("series have different variable spaces")
    n = min(f.valid_through, g.valid_through)
    comps = []
    for s in range(n + 1):
        acc = HomogeneousMap.zero(f.src_dim, alg.dim, s)
        for k in range(s + 1):
            if f[k].coeffs and g[s - k].coeffs:
                acc = acc + bracket_homogeneous(f[k], g[s - k], alg)
        comps.append(acc)
    return FormalSeries(f.src_dim, alg.dim, comps)


def embed_SY_into_SZ(eta: FormalSeries, x_dim: int) -> FormalSeries:
    """View a vector field on Y as one on ``Z = X x Y`` depending only on y, valued in the Y block."""
    if eta.src_dim != eta.tgt_dim:
        raise DimensionError("expected a vector field Y -> Y")
    pad_a = (0,) * x_dim
    pad_v = (0,) * x_dim
    z_dim = x_dim + eta.src_dim
    comps = [HomogeneousMap(z_dim, z_dim, c.degree, {pad_a + a: pad_v + v for a, v in c.coeffs.items()})
             for c in eta.components]
    return FormalSeries(z_dim, z_dim, comps)


@dataclass
class FieldSeries:
    """A series in the Y variables whose coefficients are vector fields on X.

    ``coeffs`` maps a Y exponent tuple ``beta`` to the X-field multiplying
    ``y^beta``; Y-degrees through ``y_valid_through`` are known and missing
    exponents are zero.  Each X-field carries its own validity.
    """

    x_dim: int
    y_dim: int
    y_valid_through: int
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        for beta, tau in self.coeffs.items():
            if len(beta) != self.y_dim:
                raise DimensionError(f"Y exponent {beta} does not have {self.y_dim} entries")
            if sum(beta) > self.y_valid_through:
                raise DimensionError(f"Y exponent {beta} exceeds y_valid_through={self.y_valid_through}")
            if tau.src_dim != self.x_dim or tau.tgt_dim != self.x_dim:
                raise DimensionError("coefficients must be vector fields on X")

    def valid_through(self) -> int:
        """Highest total degree on Z whose every bidegree cell is known."""
        bound = self.y_valid_through
        for beta, tau in self.coeffs.items():
            bound = min(bound, sum(beta) + tau.valid_through)
        return bound

    def evaluate_at_y(self, y) -> dict:
        """Substitute ``y``: returns ``{Y-degree n: X-field}`` summed over ``|beta| = n``."""
        out: dict = {}
        for beta, tau in self.coeffs.items():
            c = mono_eval(beta, y)
            n = sum(beta)
            term = c * tau
            out[n] = term if n not in out else _add_truncating(out[n], term)
        return out


def _add_truncating(a: FormalSeries, b: FormalSeries) -> FormalSeries:
    n = min(a.valid_through, b.valid_through)
    return a.truncate(n) + b.truncate(n)


def embed_TY_into_SZ(t: FieldSeries) -> FormalSeries:
    """Flatten a Y-series of X-fields into a vector field on ``Z``, values in the X block.

    The bidegree ``(r, n)`` cell is ``y^beta`` times the degree-``r`` part of
    ``t.coeffs[beta]`` with ``|beta| = n``.  The result is valid through
    ``min(N_y, min_beta(|beta| + N_x(beta)))``.
    """
    z_dim = t.x_dim + t.y_dim
    n_valid = t.valid_through()
    pad_v = (0,) * t.y_dim
    comps = [dict() for _ in range(n_valid + 1)]
    for beta, tau in t.coeffs.items():
        nb = sum(beta)
        for r in range(0, n_valid - nb + 1):
            for a, v in tau[r].coeffs.items():
                _accumulate(comps[r + nb], a + tuple(beta), 1, v + pad_v)
    return FormalSeries(z_dim, z_dim, (HomogeneousMap(z_dim, z_dim, s, c) for s, c in enumerate(comps)))


def bidegree_component(F: FormalSeries, x_dim: int, r: int, n: int) -> HomogeneousMap:
    """The part of ``F[r + n]`` of degree ``r`` in the X variables and ``n`` in the Y variables."""
    comp = F[r + n]
    return HomogeneousMap(F.src_dim, F.tgt_dim, r + n,
                          {a: v for a, v in comp.coeffs.items() if sum(a[:x_dim]) == r})
