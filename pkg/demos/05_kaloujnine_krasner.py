"""
Embedding an extension into the wreath product
==============================================

An extension A -> C -> B with a linear section s embeds C into W(A, B).
For the Heisenberg algebra over its center the series are short enough to
read off by hand: h_c = c3 e3 + (y1 c2 - y2 c1)/2 e3.
"""
from wreathlie import fixtures
from wreathlie.extensions import kk_embed, make_section, verify_kk
from wreathlie.formats import format_series, format_vector, variables

ext, s = fixtures.extension("heisenberg-center")
for c in ext.C.basis():
    elem = kk_embed(ext, s, c, 2)
    parts = format_series(elem.series, "h", variables("y", 2), ext.A.labels) + [f"point = {format_vector(elem.point)}"]
    print(f"c = {format_vector(c)}:", "; ".join(parts))

###############################################################################
# Bracket compatibility and injectivity, for the default and another section.
for sec in (s, make_section(ext, [(1, 0, 1), (0, 1, 0)])):
    print("section", [format_vector(v) for v in sec.s.columns()], "passes:", verify_kk(ext, sec, 4).ok)

###############################################################################
# sl2 acting on the plane exercises the higher coefficients t_2, t_4.
ext, s = fixtures.extension("sl2-plane")
report = verify_kk(ext, s, 5, trials=5)
print("sl2-plane:", report.ok, f"rank {report.rank} of {report.dim}, {report.pairs_checked} pairs")
