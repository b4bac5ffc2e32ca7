"""Exact width calculus for sloped generalized Heegaard splittings."""
from .decomposition import (
    Decomposition,
    DecompositionError,
    alpha_stabilize,
    fill,
    is_planar_heegaard,
    tube_to_closed,
    validate,
    width_of,
)
from .deduction import check_width_bounds, deduce, genus_width_bound, honest_by_genus_drop
from .slope import CLOSED, MERIDIAN, Slope, SlopeError, parse_slope, torus_knot_delta
from .surface import Component, Surface, cap_off, complexity, tube_merge, tube_same_component
from .torus_knot import SurgeryClass, classify, verify_bounds_sharpness
from .width import Width, add_at, add_pointwise, ceil, compare, contains, parse_width, scale

__version__ = "0.1.0"
