"""Guarding 1.5D orthogonal terrains.

Linear-time optimal guards for the right (left) convex vertices, their union
as a 2-approximation for all vertices, and exact oracles to check both.
"""

from .generator import GenSpec, generate, generate_pattern, generate_random, random_corpus
from .kernels import BACKEND
from .oracle import (
    BudgetExceededError,
    InfeasibleCoverError,
    OracleResult,
    PropertyReport,
    certify_witness_independence,
    full_problem_optimum,
    left_problem_optimum,
    min_guard_set_exact,
    property_suite,
    right_problem_optimum,
)
from .render import render_svg
from .solver import (
    GuardSolution,
    solve_full,
    solve_left_convex,
    solve_right_convex_fast,
    solve_right_convex_reference,
    verify_coverage,
)
from .terrain import (
    Terrain,
    TerrainError,
    VertexClass,
    build_terrain,
    classify_vertices,
    mirror_terrain,
    terrain_from_json,
    terrain_to_json,
)
from .visibility import leftmost_visible_all, rightmost_visible_all, sees, visibility_matrix

__version__ = "0.1.0"
