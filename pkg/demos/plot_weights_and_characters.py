"""
Root systems, weights and characters
====================================

Build a root system, list the weights of an irreducible module and check
the multiplicities against the Weyl dimension formula.
"""

from thickreps.character import IrrepLabel, decompose, exterior_power, tensor, weight_system, weyl_dim
from thickreps.rootsystem import build_root_system

# G2: Cartan matrix, positive roots in simple-root coordinates
g2 = build_root_system("G2")
print("Cartan matrix", g2.cartan_matrix)
print("positive roots", g2.positive_roots_root_coords)

# the 7-dimensional module: every weight has multiplicity one
label = IrrepLabel.of("G2", 1, 0)
ch = weight_system(label)
for w, m in ch.sorted_items():
    print(w, m)
print("dim", ch.dim, "Weyl dimension", weyl_dim(label))

# the adjoint module of A2 has a two-dimensional zero weight space
adj = weight_system(IrrepLabel.of("A2", 1, 1))
print("A2 adjoint zero weight multiplicity", adj[(0, 0)])

# characters multiply; decompose peels off highest weights
v = weight_system(IrrepLabel.of("A2", 1, 0))
print("V (x) V* =", decompose(tensor(v, weight_system(IrrepLabel.of("A2", 0, 1)))))

# exterior square of S^3 for SL2: V(4) + V(0), with the zero weight doubled
s3 = weight_system(IrrepLabel.of("A1", 3))
e2 = exterior_power(s3, 2)
print("Lambda^2 S^3 weights", dict(e2.sorted_items()))
print("Lambda^2 S^3 =", decompose(e2))
