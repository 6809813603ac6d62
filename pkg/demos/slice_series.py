"""
Slice regular power series
==========================

Evaluate a truncated series, split it along a frame and rebuild it.
"""

import numpy as np

from slicereg import quaternion as Q
from slicereg.series import (QPowerSeries, evaluate, extend, random_ball_points, representation_from_series,
                             roundtrip_PQ, split, star_product)

rng = np.random.default_rng(0)

# f(q) = q + q^2 e2 on the ball of radius 1.5
f = QPowerSeries(np.array([[0, 0, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0]], dtype=float), 1.5)
q = np.array([0.1, 0.2, -0.3, 0.4])
print("f(q) =", evaluate(f, q))

# restrict to the slice C(e1) and extend back from the two holomorphic components
fr = Q.STANDARD_FRAME
g = split(f, fr)
print("extension from C(e1):", extend(g, q))
print("round-trip residual over 50 points:", roundtrip_PQ(f, fr, random_ball_points(rng, 50, 1.3)))

# the value on any slice follows from the values on one slice
k = np.array([0.0, 0.6, 0.8])
print("representation formula:", representation_from_series(f, fr.i, k, 0.2, 0.5))
print("direct evaluation:     ", evaluate(f, Q.quat(0.2, *(0.5 * k))))

# the star product is the regular product; it is not the pointwise one
h = star_product(f, f)
print("(f*f)(q) =", evaluate(h, q), " f(q)^2 =", Q.qmul(evaluate(f, q), evaluate(f, q)))
