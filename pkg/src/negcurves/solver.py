"""Negative-curve equations from lattice point sets.

A Laurent polynomial sum c_ab x^a y^b vanishes to order m at e = (1, 1)
exactly when the moments sum c_ab a^s b^t vanish for all s + t <= m - 1.
For a triangle with (m+1 choose 2) + 1 lattice points this is a square-plus-one
linear system whose one-dimensional nullspace is the curve.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence, Union

from . import geometry as geo
from .errors import NoCurve, NonUnique, PreconditionFailed, WrongCardinality
from .families import FamilyTriangle
from .geometry import LatticePoint, Triangle
from .laurent import LaurentPoly
from .linalg import nullspace


class Irreducibility(str, enum.Enum):
    PROVED_BY_EDGE_CRITERION = "ProvedByEdgeCriterion"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class NegativeCurve:
    triangle: Union[FamilyTriangle, Triangle]
    m: int
    poly: LaurentPoly
    self_intersection: Fraction
    irreducibility: Irreducibility

    @property
    def raw_triangle(self) -> Triangle:
        t = self.triangle
        return t.triangle if isinstance(t, FamilyTriangle) else t


def moment_exponents(m: int) -> list[tuple[int, int]]:
    """(s, t) with s + t <= m - 1, ordered by total degree then s."""
    return [(s, d - s) for d in range(m) for s in range(d, -1, -1)]


def moment_matrix(points: Sequence[LatticePoint], m: int) -> list[list[int]]:
    """Rows indexed by (s, t), columns by lattice points (a, b); entries a^s b^t."""
    return [[a ** s * b ** t for a, b in points] for s, t in moment_exponents(m)]


def interpolation_matrix(points: Sequence[LatticePoint], m: int) -> list[list[int]]:
    """Rows indexed by points, columns by monomials u^s v^t of degree <= m - 1."""
    exps = moment_exponents(m)
    return [[a ** s * b ** t for s, t in exps] for a, b in points]


def vanishing_polys(points: Sequence[LatticePoint], m: int) -> list[LaurentPoly]:
    """Basis of Laurent polynomials supported on ``points`` vanishing to order >= m at e."""
    pts = list(points)
    if m <= 0:
        rows: list[list[int]] = []
    else:
        rows = moment_matrix(pts, m)
    basis = nullspace(rows, len(pts))
    return [LaurentPoly({p: c for p, c in zip(pts, vec)}) for vec in basis]


def _triangle_of(t) -> Triangle:
    return t.triangle if isinstance(t, FamilyTriangle) else t


def self_intersection(t, m: int) -> Fraction:
    """C.C = 2 Area - m^2."""
    return geo.twice_area(_triangle_of(t)) - m * m


def irreducible_by_edge(nc: NegativeCurve, edge) -> bool:
    """Edge criterion: an edge whose only lattice points are its two ends,
    both carrying nonzero coefficients, forces irreducibility.
    """
    p, q = (geo.Point.of(*v) for v in edge)
    if not (p.is_lattice() and q.is_lattice()):
        return False
    p, q = p.as_lattice(), q.as_lattice()
    if geo.edge_lattice_count(p, q) != 1:
        return False
    return bool(nc.poly[p]) and bool(nc.poly[q])


def _irreducibility(tri: Triangle, poly: LaurentPoly) -> Irreducibility:
    probe = NegativeCurve(tri, 0, poly, Fraction(0), Irreducibility.INCONCLUSIVE)
    if any(irreducible_by_edge(probe, e) for e in tri.edges()):
        return Irreducibility.PROVED_BY_EDGE_CRITERION
    return Irreducibility.INCONCLUSIVE


def curve_from_poly(t, m: int, poly: LaurentPoly) -> NegativeCurve:
    """Wrap a polynomial computed elsewhere (e.g. by the recurrence)."""
    tri = _triangle_of(t)
    return NegativeCurve(t, m, poly, self_intersection(tri, m), _irreducibility(tri, poly))


def solve_curve(t, m: int, points: Iterable[LatticePoint] | None = None) -> NegativeCurve:
    """The unique (up to scalar) polynomial supported in ``t`` vanishing to order m at e.

    ``points`` overrides the column order of the linear system (the result is
    the same up to normalisation); by default the lattice points in
    lexicographic order are used.
    """
    tri = _triangle_of(t)
    if m < 1:
        raise PreconditionFailed("m must be positive")
    if geo.twice_area(tri) > m * m:
        raise PreconditionFailed(f"area of {tri} exceeds m^2/2 for m={m}")
    pts = list(points) if points is not None else geo.lattice_points(tri)
    basis = vanishing_polys(pts, m)
    if not basis:
        raise NoCurve(f"no polynomial supported in {tri} vanishes to order {m}")
    if len(basis) > 1:
        raise NonUnique(f"{len(basis)}-dimensional family of curves for {tri}, m={m}")
    poly = basis[0].normalized()
    return NegativeCurve(t, m, poly, self_intersection(tri, m), _irreducibility(tri, poly))


def interpolation_dual(S: Iterable[LatticePoint], m: int) -> tuple[bool, bool]:
    """(S supports a polynomial vanishing to order m at e,
        some nonzero polynomial of degree <= m - 1 vanishes on S).

    The two answers come from independent nullspace computations of the moment
    matrix and of the interpolation matrix.
    """
    pts = sorted(set(S))
    if len(pts) != comb(m + 1, 2):
        raise WrongCardinality(f"need {comb(m + 1, 2)} points for m={m}, got {len(pts)}")
    supports = bool(nullspace(moment_matrix(pts, m), len(pts)))
    interp = bool(nullspace(interpolation_matrix(pts, m), len(moment_exponents(m))))
    return supports, interp
