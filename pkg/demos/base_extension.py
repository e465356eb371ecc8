"""From a function field over GF(2)(s) to the fibers of its model.

A separable genus-2 field is a family of curves over the s-line.  Its
normal form coefficients define a map to the parameter space of the
fibration, and specializing s to a constant picks out one closed fiber.
Where the discriminant does not vanish the fiber is a cuspidal curve with
an elliptic normalization; elsewhere something worse happens.
"""

from fibra2 import fiber_geometry as fg
from fibra2.classifier_separable import discriminant_delta, genus_separable
from fibra2.curve_model import SeparableNormalForm, format_model
from fibra2.field_arith import gf

F = gf(2)
nf = SeparableNormalForm.of(F, "s", 1, "s^2+g", 1, "s+1")
inv = discriminant_delta(nf)
print("field:", format_model(nf.model()))
print("Delta =", inv.delta)
print("genus", genus_separable(nf).g)

cm = fg.base_extension_params(nf)
print("classifying map:", cm.text())
print()
for sigma in F.elements():
    p = cm.specialize(sigma)
    if p is None:
        print(f"s = {F.format(sigma)}: pole of a coefficient, no fiber")
        continue
    c = fg.classify_fiber(p)
    d = fg.delta(F, *p.to_z().coeffs)
    j = "" if c.j is None else f" j={F.format(c.j)}"
    print(f"s = {F.format(sigma):3s} Delta={F.format(d):3s} {c.tag}{j}  at {', '.join(str(r.point) for r in c.records)}")
