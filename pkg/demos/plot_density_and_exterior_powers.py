"""
Density and exterior powers
===========================

A module of dimension n is m-dense when Lambda^m V is irreducible.  The
answer for m and n - m always agrees, and dense modules are thick.
"""

from thickreps.character import IrrepLabel, decompose, exterior_power, weight_system, weyl_dim
from thickreps.classify import is_dense, is_m_dense

# Sp4 is thick but Lambda^2 splits off the symplectic form
sp4 = weight_system(IrrepLabel.of("C2", 1, 0))
parts = decompose(exterior_power(sp4, 2))
print(parts, [weyl_dim(IrrepLabel.of("C2", *w)) for w, _ in parts])

# SO5 (the same Lie algebra, other module) is dense
print(is_dense(IrrepLabel.of("B2", 1, 0)))

# G2 on C^7: Lambda^2 contains the adjoint module
print(is_dense(IrrepLabel.of("G2", 1, 0)))
print(decompose(exterior_power(weight_system(IrrepLabel.of("G2", 1, 0)), 2)))

# SO8 fails only in the middle degree
print(is_dense(IrrepLabel.of("D4", 1, 0, 0, 0)))

# the two irreducibility tests agree: top-weight dimension count and full decomposition
label = IrrepLabel.of("A1", 5)
for m in range(1, 6):
    print(m, is_m_dense(label, m), is_m_dense(label, m, method="decompose"))
