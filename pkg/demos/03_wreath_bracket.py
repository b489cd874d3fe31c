"""
The wreath product W(A, B)
==========================

Elements are pairs (a, b) with a an A-valued series in the B variables and b
in B.  B acts on the series part through the fundamental action.
"""
import random

from wreathlie import fixtures
from wreathlie.formal import FormalSeries, HomogeneousMap
from wreathlie.formats import format_series, format_vector, variables
from wreathlie.sampling import random_series, random_vector
from wreathlie.wreath import WreathProduct, wreath_bracket

###############################################################################
# A = span(e3), B = Q^2 abelian: the B part differentiates the series part.
A = fixtures.extension("heisenberg-center")[0].A
W = WreathProduct(A, fixtures.algebra("abelian2"), 3)
const = FormalSeries.from_maps(2, 1, [HomogeneousMap.constant(2, (1,))], 3)
y1 = FormalSeries.from_maps(2, 1, [HomogeneousMap(2, 1, 1, {(1, 0): (1,)})], 3)
w = wreath_bracket(W, W.element(const, (1, 0)), W.element(y1, (0, 0)))
print("\n".join(format_series(w.series, "a", variables("y", 2), A.labels)))
print("point =", format_vector(w.point))

###############################################################################
# A nonabelian case: Jacobi on random triples, certified through N - 2.
W = WreathProduct(fixtures.algebra("sl2"), fixtures.algebra("solvable2"), 4)
rng = random.Random(1)
u, v, x = (W.element(random_series(rng, 2, 3, 4), random_vector(rng, 2)) for _ in range(3))
terms = [wreath_bracket(W, p, wreath_bracket(W, q, r)) for p, q, r in ((u, v, x), (v, x, u), (x, u, v))]
total = terms[0].series + terms[1].series + terms[2].series
print("Jacobi through degree", total.valid_through, ":", total.is_zero())
