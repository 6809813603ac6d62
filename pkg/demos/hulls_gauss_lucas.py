"""
Slice hulls and Gauss-Lucas
===========================

Per-slice convex hulls of zero sets, the classical Gauss-Lucas containment for
the split components, and the commuting square relating zero data of f' to
hulls of f.
"""

import numpy as np

from slicereg import quaternion as Q
from slicereg.planar import cpolyder, from_roots
from slicereg.roots import complex_roots
from slicereg.zeros import (gauss_lucas_report, monic, morphism_gamma, random_spherical_product, skull,
                            slice_zero_set)

rng = np.random.default_rng(3)
slices = Q.fibonacci_sphere(12)

# a real quadratic factor puts a sphere of zeros through every slice
f = random_spherical_product(rng, 6, 2)
hulls = skull(f, slices)
print("hull vertices on the first three slices:")
for h in hulls[:3]:
    print(" ", np.round(h.polygon, 6).tolist())
print("Gauss-Lucas report:", gauss_lucas_report(f, Q.STANDARD_FRAME))

out = morphism_gamma(random_spherical_product(rng, 7, 1), Q.STANDARD_FRAME, slices)
print("morphism square residual:", out["residual"])

# slice-level containment is not automatic: here Z_f on C(e1) is {0}
F = from_roots([0, 1, 2j])
s = complex_roots(cpolyder(F)).points[0]
fr = Q.STANDARD_FRAME
h = monic(fr.assemble(F, np.array([0, -2 * s, 1, 0])))
print("Z_f on C(e1):", slice_zero_set(h, fr.i), " Z_f' on C(e1):", slice_zero_set(h.derivative_monic(), fr.i))
print("report:", gauss_lucas_report(h, fr))
