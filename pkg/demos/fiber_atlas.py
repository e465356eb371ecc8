"""An atlas of the closed fibers of the five-parameter family over GF(4).

Sweeps all 1024 parameter points, tallies the fiber classes and prints one
representative of each with its singular points.  Every singular set is
checked against the Jacobian criterion and every local invariant against
iterated blowups while we are at it.
"""

from collections import Counter

from fibra2 import fiber_geometry as fg
from fibra2.field_arith import gf
from fibra2.verify import check_fiber

F = gf(2)
tally, first, problems = Counter(), {}, 0
for p in fg.iter_params("Z", F):
    c = fg.classify_fiber(p)
    tally[c.tag] += 1
    first.setdefault(c.tag, c)
    problems += len(check_fiber(p))

print(f"Z-family over GF(4): {sum(tally.values())} fibers, {problems} oracle disagreements\n")
for tag in fg.FIBER_CLASSES:
    if tag not in tally:
        continue
    c = first[tag]
    j = "" if c.j is None else f", j = {F.format(c.j)}"
    print(f"{tag:22s} {tally[tag]:4d} fibers   e.g. {c.params.text()}{j}")
    for r in c.records:
        print(f"{'':29s}{r.point}  {r.local_type} (delta {r.delta}, {r.branches} branch(es))")

print("\nThe subfamily V always has two cusps or one ramphoid cusp:")
v = Counter(fg.classify_fiber_sub(p).tag for p in fg.iter_params("V", F))
for tag, n in sorted(v.items()):
    print(f"  {tag}: {n}")
