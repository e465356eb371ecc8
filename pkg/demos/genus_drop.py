"""Genus drop in characteristic 2, worked through three small fields.

Each field y^2 + a(x) y + b(x) = 0 over GF(2)(s) has arithmetic genus 2.
Over the algebraic closure of GF(2)(s) its genus can fall, and the amount
is the sum of the singularity degrees of the primes where the model stops
being smooth.  Both the closed-form predicates and the series engine are
run so the two answers can be compared side by side.
"""

from fibra2.classifier_inseparable import genus_inseparable
from fibra2.classifier_separable import discriminant_delta, genus_separable
from fibra2.curve_model import InseparableNormalForm, SeparableNormalForm, format_model
from fibra2.field_arith import gf
from fibra2.series_engine import expand_local_series, genus_via_rosenlicht, prime_specs

F = gf(1)


def show(title, nf, classify):
    print(f"== {title}")
    print("  model:", format_model(nf.model()))
    r, o = classify(nf), genus_via_rosenlicht(nf)
    print(f"  classifier: g={r.g} g_bar={r.g_bar} deltas={r.deltas}")
    print(f"  series:     g={o.g} g_bar={o.g_bar} deltas={o.deltas}")
    for spec in prime_specs(nf):
        ex = expand_local_series(nf, spec)
        print(f"  prime {spec.center} [{spec.branch}], {spec.local_parameter}")
        print(f"    expansion {ex.series.dump()}")
        print(f"    residual order {ex.residual.order()}")
    print()


# b6 = s is not a square: the pole of x is a singular prime of degree 1
nf = SeparableNormalForm.of(F, 1, 0, 0, 0, "s")
show("separable, j1 = 0, b6 = s", nf, genus_separable)
print("  j1 =", discriminant_delta(nf).j1, "\n")

# b6 = s^2 is a square, the same prime is smooth and the genus is already 1
show("separable, b6 = s^2", SeparableNormalForm.of(F, 1, 0, 0, 0, "s^2"), genus_separable)

# inseparable type: the geometric fiber is rational, so the drop is 2
show("inseparable, y^2 = x^5 + s", InseparableNormalForm.from_b(F, "x^5+s"), genus_inseparable)
