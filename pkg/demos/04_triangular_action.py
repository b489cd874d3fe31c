"""
Triangular action on Z = X x Y
===============================

Given an action D of A on X, an element (a, b) of W(A, B) becomes a vector
field on Z: the series a acts in the X directions, the point b moves Y.
Coordinates on Z list X first, then Y.
"""
import random

from wreathlie import fixtures
from wreathlie.actions import fundamental_formal_action
from wreathlie.formats import format_series, variables
from wreathlie.lie_series import bracket_S
from wreathlie.sampling import random_series, random_vector
from wreathlie.wreath import WreathProduct, triangular_action, wreath_bracket

A = fixtures.algebra("solvable2")
B = fixtures.algebra("abelian2")
W = WreathProduct(A, B, 4)
D = fundamental_formal_action(A, 4)

rng = random.Random(2)
u, v = (W.element(random_series(rng, 2, 2, 4, 0.3), random_vector(rng, 2)) for _ in range(2))
names = variables("x", 2) + variables("y", 2)
print("\n".join(format_series(triangular_action(W, D, u), "Delta", names, [f"d/d{n}" for n in names])[:2]))

###############################################################################
# The assignment w -> Delta_w respects brackets on the certified degrees.
lhs = triangular_action(W, D, wreath_bracket(W, u, v))
rhs = bracket_S(triangular_action(W, D, u), triangular_action(W, D, v))
n = min(lhs.valid_through, rhs.valid_through)
print("homomorphism through degree", n, ":", lhs.truncate(n) == rhs.truncate(n))
