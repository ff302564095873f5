"""
Sampling transversality on matrix groups
========================================

Concrete matrices for the classical groups, random group elements, and the
normalized wedge volume |det[orth(g V1) | orth(V2)]|.  Thick modules make
generic pairs transversal; SO(2n) has isotropic pairs that never are.
"""

import numpy as np

from thickreps.oracle import (
    SubspaceSample,
    build_matrix_rep,
    random_group_element,
    sample_thickness_evidence,
    so_even_witness,
    verify_nonthick_witness,
    wedge_volume,
)

sp4 = build_matrix_rep("sp-std", 2)
print("Chevalley residuals", sp4.residuals())
print("H spectrum matches the weight system:", sp4.spectrum_matches())

g = random_group_element(sp4, np.random.default_rng(0))
print("g^T J g - J:", np.abs(g.T @ sp4.form @ g - sp4.form).max())

# evidence, not proof: every sampled pair of complementary dimensions is made transversal
report = sample_thickness_evidence(sp4, 2, pairs=200, seed=42)
print(report.success_fraction, report.min_volume, report.note)

# the G2 module comes from the chain solver
g2 = build_matrix_rep("g2")
print([sample_thickness_evidence(g2, m, pairs=100, seed=1).success_fraction for m in range(1, 7)])

# SO(2n): two maximal isotropic subspaces whose intersection never becomes zero
for n in (2, 3, 4):
    rep = build_matrix_rep("so-even", n)
    w = verify_nonthick_witness(rep, so_even_witness(n), trials=1000, seed=42)
    print(n, w.verdict, w.max_volume)

# the opposite coordinate pair is transversal already at g = I
I = np.eye(4)
print(wedge_volume(np.eye(4), SubspaceSample(I[:, :2], I[:, 2:])))
