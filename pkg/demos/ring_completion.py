"""Complete Z/2 and the Boolean rig and print their rings of components.

Run with ``python3 demos/ring_completion.py``.
"""

from rigcomplete.cube import build_GR
from rigcomplete.effcat import Bound
from rigcomplete.examples import REGISTRY
from rigcomplete.pi0 import grothendieck_oracle, pi0_ring

bound = Bound(index=1, length=2, size=1)

for name in ("z2", "bool-rig"):
    spec = REGISTRY[name]
    K = grothendieck_oracle(spec.presentation)
    T = pi0_ring(build_GR(spec.build()), bound, K, spec.vector)
    print(f"{name}: {len(T)} component(s), stable under a longer bound: {T.stable}")
    for c in T.partition.classes():
        print(f"  class {c}: alt_sum {T.labels[c]!r}, {len(T.partition.members(c))} objects, "
              f"e.g. {T.partition.rep(c)!r}")
    print(f"  ring axioms: {T.check_ring().ok}, matches the Grothendieck ring: {T.check_iso(K).ok}")
    # labels print as p - q normal forms, so in Z/2 the unit shows as -1 = 1;
    # the Boolean rig has 1 + 1 = 1, so its completion collapses
    print()
