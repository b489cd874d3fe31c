"""
Bernoulli coefficients and the fundamental action
=================================================

The series G(T) = T e^T / (e^T - 1) has rational coefficients t_n.  Feeding
ad(y) into G turns every element b of a Lie algebra B into a formal vector
field d_b on B itself.
"""
from wreathlie import fixtures
from wreathlie.actions import bernoulli_t, fundamental_action, fundamental_formal_action, verify_formal_action
from wreathlie.formats import format_series, variables

###############################################################################
# The first coefficients.  Odd ones vanish after t_1.
for n, t in enumerate(bernoulli_t(8)):
    print(f"t_{n} = {t}")

###############################################################################
# d_e for e in sl2, through degree 3.
sl2 = fixtures.algebra("sl2")
d_e = fundamental_action(sl2, (0, 1, 0), 3)
print("\n".join(format_series(d_e, "d", variables("y", 3), sl2.labels)))

###############################################################################
# b -> d_b is a Lie algebra homomorphism into formal vector fields; the check
# compares d_[x,y] with [d_x, d_y] on every basis pair.
report = verify_formal_action(fundamental_formal_action(sl2, 5), 4)
print("homomorphism through degree 4:", report.ok)

###############################################################################
# Breaking a single coefficient is caught immediately.
bad = list(bernoulli_t(5))
bad[1] = 1
report = verify_formal_action(fundamental_formal_action(fixtures.algebra("heisenberg"), 5, bad), 4)
print("with t_1 = 1:", "fails in degrees", report.failing_degrees())
