"""Compare the homotopy colimit over Q1 with the Grayson-Quillen model for
free F2-modules of rank at most 2."""

from rigcomplete.cube import CubeObj
from rigcomplete.effcat import Bound
from rigcomplete.examples import free_modules_F2
from rigcomplete.gq import check_gq, gq_build, gq_compare, q1_hocolim
from rigcomplete.indexing import JObj
from rigcomplete.thomason import HObj

F = free_modules_F2(2)
b = Bound(index=1, length=1, size=2)
Q = gq_build(F, b)
C = gq_compare(q1_hocolim(F), Q)

x = JObj(1, (1,))
print("1[{1},(2,1)] goes to", C.on_obj(HObj(((x, CubeObj(x, (2, 1))),))))

rep = check_gq(F, b, [b, b.but(length=2, size=1)], samples=200, seed=0)
print(rep)
for k, v in sorted(rep.counts.items()):
    print(f"  {k:<20} {v}")
