"""Build an additive inverse of a one-cube in the homotopy colimit over
finite sets, and walk the zigzag that connects the sum to zero."""

from rigcomplete.cube import CubeObj, build_GR
from rigcomplete.examples import finite_sets_E
from rigcomplete.indexing import JObj
from rigcomplete.pi0 import inverse_witness, verify_zigzag
from rigcomplete.thomason import HObj, Hocolim

H = Hocolim(build_GR(finite_sets_E()))
x = JObj(1, (1,))
a = HObj(((x, CubeObj(x, (2, 3))),))

w, zigzag, zero = inverse_witness(H, a)
print("object :", a)
print("inverse:", w)
print("start  :", zigzag.start)
for f, d in zigzag.steps:
    arrow = "->" if d > 0 else "<-"
    print(f"  {arrow} {f.tgt if d > 0 else f.src}")
verify_zigzag(H, zigzag, zero)
print("verified; ends at", zero)
