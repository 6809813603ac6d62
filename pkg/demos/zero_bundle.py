"""
Zero data of slice regular polynomials
======================================

Four root sets on two slices determine a polynomial whose coefficient vector
parts span R^3.  On one slice they do not.
"""

import numpy as np

from slicereg import quaternion as Q
from slicereg.verify import counterexample_pair
from slicereg.zeros import component_zero_sets, random_psrb, solve_bullet_factor, zero_bundle_project

rng = np.random.default_rng(2)
fr = Q.random_frame(rng)

f = random_psrb(rng, 5)
zd = component_zero_sets(f, fr)
for name, s in zd.sets().items():
    print(name, s)
print("reconstruction error:", zero_bundle_project(zd, 5).distance(f))

# (q^2 - 1) + (q - 1) e2 and (q^2 - 1) + 7 (q - 1) e2 share their data on C(e1)
f, g, fr = counterexample_pair()
zf, zg = component_zero_sets(f, fr), component_zero_sets(g, fr)
print("same first-slice data:", zf.s1.matches(zg.s1) and zf.s2.matches(zg.s2))
print("second-slice sets:", zf.s3, zg.s3)
print("g = f . (1 + c e2) with c =", solve_bullet_factor(g, f, fr))
rec = zero_bundle_project(zg, 2, require_psrb=False)
print("recovered second coefficient:", rec.coeffs[1])
