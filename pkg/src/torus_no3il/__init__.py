"""No-three-in-line sets on the discrete torus T_{m x n}."""

from .constructions import (
    SearchStats,
    TauResult,
    conic_points,
    construct_gcd1,
    construct_gcd2,
    construct_max,
    construct_parabola_pair,
    is_quadratic_residue,
    lift_set,
    theorem_case,
    theorem_value,
)
from .lines import (
    Direction,
    TorusLine,
    diagonal_line,
    enumerate_lines,
    is_valid_direction,
    line_through,
    pencil_through_origin,
    preimage_line,
    torus_collinear,
    verify_diagonal_partition,
)
from .solver import SearchLimits, brute_force_tau, max_no3il, verify_no3il
from .torus import (
    Configuration,
    PlanePoint,
    TorusDims,
    TorusPoint,
    crt,
    det3,
    det_mod_test,
    diagonal_index,
    project_pi,
    project_rho,
)

__version__ = "0.1.0"
