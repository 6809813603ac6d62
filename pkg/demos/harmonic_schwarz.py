"""
Harmonic conjugates and the quaternionic Schwarz formula
========================================================

Recover holomorphic and slice regular functions from real boundary data.
"""

import numpy as np

from slicereg import quaternion as Q
from slicereg.harmonic import (PlanarPath, conjugate_harmonic, path_independence_residual,
                               quaternionic_schwarz_coeffs, quaternionic_schwarz_eval, schwarz_complex, trace_of)
from slicereg.planar import HarmonicPoly

# u = Re z^3 = x^3 - 3xy^2 has conjugate Im z^3
u = HarmonicPoly([0, 0, 0, 1])
straight = PlanarPath([[0, 0], [0.5, 0.5]])
bent = PlanarPath([[0, 0], [0.5, 0], [0.5, 0.5]])
print("conjugate along a segment:", conjugate_harmonic(u, straight), " Im z^3 =", ((0.5 + 0.5j) ** 3).imag)
print("path independence residual:", path_independence_residual(u, straight, bent))

# Schwarz integral from 256 boundary samples of u on the circle of radius 1
trace = trace_of(u, 1.0, 256)
z = 0.3 - 0.4j
print("Schwarz integral:", schwarz_complex(trace, z), " z^3 =", z ** 3)

# two real traces a, c give a slice regular f with D-components a and c along the frame
a = trace_of(HarmonicPoly([0, 1, 0.5j]), 1.0, 256)
c = trace_of(HarmonicPoly([0, 0, 0.25]), 1.0, 256)
fr = Q.STANDARD_FRAME
f = quaternionic_schwarz_coeffs(a, c, fr)
print("first coefficients:\n", np.round(f.coeffs[:3], 12))
print("kernel value at q:", quaternionic_schwarz_eval(a, c, fr, np.array([0.1, 0.2, 0.0, -0.3])))
