"""
Formal vector fields and their bracket
======================================

A formal series X -> X is a vector field; the bracket is xi eta - eta xi where
(xi f) differentiates f along xi.  Truncation costs one degree per bracket.
"""
import random

from wreathlie.formal import FormalSeries, HomogeneousMap
from wreathlie.formats import format_series
from wreathlie.lie_series import bracket_S
from wreathlie.sampling import random_series

###############################################################################
# On the line: [x^2 d/dx, x d/dx] = -x^2 d/dx.
x2 = FormalSeries.from_maps(1, 1, [HomogeneousMap(1, 1, 2, {(2,): (1,)})], 3)
x1 = FormalSeries.from_maps(1, 1, [HomogeneousMap(1, 1, 1, {(1,): (1,)})], 3)
out = bracket_S(x2, x1)
print("\n".join(format_series(out, "c", ["x"], ["d/dx"])))

###############################################################################
# Jacobi holds on every certified degree for random fields on Q^3.
rng = random.Random(0)
a, b, c = (random_series(rng, 3, 3, 5) for _ in range(3))
jac = bracket_S(a, bracket_S(b, c)) + bracket_S(b, bracket_S(c, a)) + bracket_S(c, bracket_S(a, b))
print("Jacobi sum zero through degree", jac.valid_through, ":", jac.is_zero())
