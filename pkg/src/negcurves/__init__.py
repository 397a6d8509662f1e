"""Negative curves on blowups of weighted projective planes at a general point.

Exact arithmetic throughout: lattice geometry of triangles, Laurent
polynomials over the rationals, the Pell-type chains (M+N)^2 = KMN + 1 that
index the integral and rational triangle families, two independent ways of
computing the curves, and the Mori dream space decision for enlarged triangles.
"""

from .errors import *  # noqa: F401,F403
from .geometry import (AffineLatticeMap, Point, Triangle, column_profile, convex_hull, find_isomorphism,
                       lattice_count, lattice_points, minkowski_sum, picks_count, twice_area)
from .pell import (PellSolution, chain_index, chain_solution, enumerate_chain, f_sequence, iota0, iota1,
                   iota2, is_solution, iter_chain, tau, tau_inv)
from .families import (FamilyTriangle, Kind, class_triangle, make_it, make_rt, make_triangle, mirror_map,
                       negative_curve_budget)
from .laurent import LaurentPoly, exact_div, newton_polygon, parse, to_text, vanishing_order
from .solver import NegativeCurve, interpolation_dual, solve_curve
from .recurrence import XiPair, edge_coefficients, epsilon, xi, xi_chain, xi_int, xi_rat
from .mds import MdsVerdict, Status, classify, d0_intersection, mds_witness, nonmds_inequality
from .search import enumerate_dagger, verify_classification

__version__ = "0.1.0"
