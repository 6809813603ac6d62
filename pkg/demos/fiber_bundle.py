"""
The harmonic-pair bundle
========================

Total-space elements are pairs of harmonic classes over a frame.  The
projection rebuilds a class of slice regular functions; sections and
trivializations go the other way.
"""

import numpy as np

from slicereg import quaternion as Q
from slicereg.bundle import (BaseClass, add, compatibility_residual, deriv_total, fiber_of, harmonic_class,
                             project, random_total, rotation_residual, section, trivialize, TotalElement,
                             ZERO_CLASS)
from slicereg.series import random_series

rng = np.random.default_rng(1)
fr = Q.STANDARD_FRAME

# (Re z, 0, (e1, e2)) projects to the class of f(q) = q
el = TotalElement(harmonic_class([0, 1]), ZERO_CLASS, fr)
print("project:", project(el).rep.coeffs[:2])

# a section followed by the projection is the identity on classes
f = BaseClass(random_series(rng, 8))
print("project(section(f)) - f:", project(section(fr, f)).distance(f))
u = Q.random_unit_quaternion(rng)
print("project(trivialize(u, f)) - f:", project(trivialize(u, f, fr)).distance(f))
v = Q.random_unit_quaternion(rng)
print("compatibility of two trivializations:", compatibility_residual(u, v, f, fr))

# the operations on the total space match those on the base
A, B = random_total(rng, 5, fr), random_total(rng, 5, fr)
print("additivity:", project(add(A, B)).distance(project(A) + project(B)))
print("derivative:", project(A).derivative().distance(project(deriv_total(A))))
print("rotation:", rotation_residual(u, A))

# an intrinsic function has no second component in any fiber element
g = BaseClass(random_series(rng, 4))
g = BaseClass(type(g.rep)(g.rep.coeffs * np.array([1, 0, 0, 0]), g.rep.radius))
print("largest c-class coefficient over 8 frames:",
      max(float(np.abs(e.c.rep.coeffs).max()) for e in fiber_of(g, Q.frame_sample(8))))
