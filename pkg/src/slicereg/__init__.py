"""Slice regular functions of a quaternionic variable: splitting, extension,
harmonic reconstruction, fiber-bundle structures and slice zero sets."""
from . import bundle, errors, harmonic, hull, planar, quaternion, roots, serialize, series, verify, zeros
from .bundle import BaseClass, HarmonicClass, TotalElement, project, section, trivialize
from .harmonic import BoundaryTrace, PlanarPath, conjugate_harmonic, quaternionic_schwarz_coeffs
from .planar import HarmonicPoly
from .quaternion import STANDARD_FRAME, Frame, qmul, rotate, rotate_frame
from .roots import RootSet, complex_roots
from .series import QPowerSeries, SlicePair, evaluate, extend, split
from .zeros import SlicePolynomial, ZeroData, component_zero_sets, zero_bundle_project

__version__ = "0.1.0"
