"""Independent reference computations used only by the tests.

Nothing here calls into the series machinery it is used to check: polynomials
go through sympy and matrices are built straight from structure tables.
"""
from fractions import Fraction
from math import comb, factorial

import sympy


def bernoulli_plus(n_max):
    """Bernoulli numbers with B_1 = +1/2, from sum_{k<=n} C(n+1, k) B_k = 0 (B_1 = -1/2) and a sign flip."""
    b = [Fraction(1)]
    for n in range(1, n_max + 1):
        b.append(-sum(comb(n + 1, k) * b[k] for k in range(n)) / (n + 1))
    if n_max >= 1:
        b[1] = -b[1]
    return b


def t_coefficients(n_max):
    return [bk / factorial(k) for k, bk in enumerate(bernoulli_plus(n_max))]


def structure_matrix(alg, w):
    """ad(w) built entry by entry from the structure table."""
    n = alg.dim
    return sympy.Matrix(n, n, lambda k, j: sum(sympy.sympify(w[i]) * sympy.Rational(alg.table[i][j][k])
                                               for i in range(n)))


def to_sympy_vec(v):
    return sympy.Matrix([sympy.Rational(x) for x in v])


def series_to_exprs(f, syms, through):
    """Sum of components 0..through of a FormalSeries as a list of sympy expressions."""
    out = [sympy.Integer(0)] * f.tgt_dim
    for m in range(through + 1):
        for alpha, v in f[m].coeffs.items():
            mono = sympy.Mul(*[s ** a for s, a in zip(syms, alpha)])
            for k, c in enumerate(v):
                out[k] += sympy.Rational(c) * mono
    return out


def homogeneous_part(expr, syms, degree):
    poly = sympy.Poly(sympy.expand(expr), *syms)
    return sum((c * sympy.Mul(*[s ** a for s, a in zip(syms, mon)])
                for mon, c in poly.terms() if sum(mon) == degree), sympy.Integer(0))


def field_bracket(xi, eta, syms):
    """Commutator of vector fields: D(eta).xi - D(xi).eta, via sympy Jacobians."""
    X, E = sympy.Matrix(xi), sympy.Matrix(eta)
    s = sympy.Matrix(syms)
    return list(E.jacobian(s) * X - X.jacobian(s) * E)
