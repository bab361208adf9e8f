"""Exact computations with the quaternionic reflection groups of type P.

Scalars live in F = Q(sqrt2, sqrt3, sqrt5); quaternions, 2x2 quaternionic
and 4x4 complex matrices are built on top, with a batched finite-group
engine for orders, orbits and stabilizers.
"""

from .catalog import get as catalog_get
from .catalog import group as catalog_group
from .designs import (absolute_bound, c_t, design_potential, design_report, is_tt_design,
                      special_bound)
from .exactfield import SQRT2, SQRT3, SQRT5, ComplexElem, FieldElem, field_sign, parse_field
from .groups import MatGroup, closure, line_stabilizer, perm_action, pointwise_stabilizer, subgroup_conjugates
from .linalg import MatC, MatH, VecH, inner, kernel_rank_2x2
from .lines import Line, LineSet, angle, angle_set, line_of, line_orbit, orthocomplement
from .quaternion import Quat, circ, reflection_system_closure, unit_closure
from .reflections import detect_reflection, make_reflection, reflection_census, reflection_type
from .symplectic import blichfeldt_pipeline, c_to_h, fs_indicator, h_to_c

__version__ = "0.1.0"

__all__ = [
    "SQRT2", "SQRT3", "SQRT5", "ComplexElem", "FieldElem", "Line", "LineSet", "MatC", "MatGroup", "MatH",
    "Quat", "VecH", "absolute_bound", "angle", "angle_set", "blichfeldt_pipeline", "c_t", "c_to_h",
    "catalog_get", "catalog_group", "circ", "closure", "design_potential", "design_report", "detect_reflection",
    "field_sign", "fs_indicator", "h_to_c", "inner", "is_tt_design", "kernel_rank_2x2", "line_of", "line_orbit",
    "line_stabilizer", "make_reflection", "orthocomplement", "parse_field", "perm_action", "pointwise_stabilizer",
    "reflection_census", "reflection_system_closure", "reflection_type", "special_bound", "subgroup_conjugates",
    "unit_closure",
]
