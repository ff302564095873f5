"""
Thick modules by weight posets
==============================

A module is thick exactly when it is weight multiplicity free and its
weights form a chain in the root order.  This script shows both tests and
then runs the bounded classification.
"""

from thickreps.character import IrrepLabel, weight_system
from thickreps.classify import Mode, ProductLabel, enumerate_classification, is_thick, product_thickness
from thickreps.poset import build_poset

# S^4 of SL2: a chain of five weights
print(build_poset(weight_system(IrrepLabel.of("A1", 4))).render())

# Lambda^2 of C^4 for SL4: multiplicity free, but the middle weights are incomparable
p = build_poset(weight_system(IrrepLabel.of("A3", 0, 1, 0)))
print(p.render())
print(is_thick(IrrepLabel.of("A3", 0, 1, 0)).reason)

for t, lam in [("C3", (1, 0, 0)), ("B2", (0, 1)), ("G2", (1, 0)), ("D4", (1, 0, 0, 0)), ("A2", (1, 1))]:
    v = is_thick(IrrepLabel.of(t, *lam))
    print(f"{t}{lam}: dim {v.dim}, thick {v.thick}, {v.reason.value}")

# outer tensor products are thick only when one factor is trivial
print(product_thickness(ProductLabel([IrrepLabel.of("A1", 1), IrrepLabel.of("A1", 1)])).reason)
print(product_thickness(ProductLabel([IrrepLabel.of("G2", 1, 0), IrrepLabel.of("B3", 0, 0, 0)])).thick)

# every irreducible of dimension <= 40 up to rank 5
res = enumerate_classification(40, max_rank=5, mode=Mode.THICK)
for v in res.verdicts:
    if v.dim > 1:
        print(str(v.label), v.dim)
print(res.summary["examined"], "examined,", res.summary["positives"], "thick")
