"""The integral and rational triangle families and their enlarged versions.

For a solution (M, N) of (M+N)^2 = KMN + 1:

    IT(M,N)_{a,b}: (-a, 0), (M+N, KN), (M+b, 0)
    RT(M,N)_{a,b}: (-a, 0), (M, M+N), (M - (M+N)/K + b, 0)

with a = b = 0 giving IT(M,N) and RT(M,N).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

from . import geometry as geo
from .errors import DegenerateTriangle
from .geometry import AffineLatticeMap, Point, Triangle
from .pell import PellSolution


class Kind(str, enum.Enum):
    INTEGRAL = "it"
    RATIONAL = "rt"

    @classmethod
    def parse(cls, value) -> "Kind":
        if isinstance(value, Kind):
            return value
        v = str(value).lower()
        if v in ("it", "int", "integral"):
            return cls.INTEGRAL
        if v in ("rt", "rat", "rational"):
            return cls.RATIONAL
        raise ValueError(f"unknown family {value!r}")


@dataclass(frozen=True)
class FamilyTriangle:
    kind: Kind
    solution: PellSolution
    alpha: Fraction
    beta: Fraction
    triangle: Triangle

    @property
    def K(self) -> int:
        return self.solution.K

    @property
    def M(self) -> int:
        return self.solution.M

    @property
    def N(self) -> int:
        return self.solution.N

    @property
    def m(self) -> int:
        """Vanishing order of the supported curve."""
        return self.M + self.N if self.kind is Kind.INTEGRAL else self.M

    @property
    def h(self) -> int:
        return self.K * self.N if self.kind is Kind.INTEGRAL else self.M + self.N

    @property
    def b(self) -> Fraction:
        """Base length of the un-enlarged triangle."""
        if self.kind is Kind.INTEGRAL:
            return Fraction(self.M)
        return self.M - Fraction(self.M + self.N, self.K)

    @property
    def apex(self) -> tuple[int, int]:
        return (self.m, self.h)

    @property
    def classification_representative(self) -> bool:
        """Whether this is one of the pairwise non-isomorphic representatives.

        IT(M,N) with M >= N > 0 and RT(M,N) with M > N > 1; K = 3 contributes
        IT(1,1) only.
        """
        if self.kind is Kind.INTEGRAL:
            return self.M >= self.N > 0
        return self.M > self.N > 1

    @property
    def is_base(self) -> bool:
        return self.alpha == 0 and self.beta == 0

    def base(self) -> "FamilyTriangle":
        return make_triangle(self.kind, self.solution)

    def lattice_points(self):
        return geo.lattice_points(self.triangle)

    def right_edge_lowest_lattice_y(self) -> int:
        """Height of the lowest lattice point on the edge of slope K."""
        bottom = Point(self.b + self.beta, Fraction(0))
        apex = Point.of(*self.apex)
        ys = [y for x, y in self.lattice_points()
              if geo.cross(bottom, apex, (x, y)) == 0]
        return min(ys)

    def __str__(self):
        name = "IT" if self.kind is Kind.INTEGRAL else "RT"
        s = f"{name}({self.M},{self.N}) K={self.K}"
        if not self.is_base:
            s += f" alpha={self.alpha} beta={self.beta}"
        return s


def make_it(s: PellSolution, alpha=0, beta=0) -> FamilyTriangle:
    alpha, beta = geo.as_rational(alpha), geo.as_rational(beta)
    if s.M < 1 or s.N < 1:
        raise DegenerateTriangle(f"IT needs M, N >= 1, got {s}")
    if alpha < 0 or beta < 0:
        raise ValueError("alpha and beta must be non-negative")
    M, N, K = s.M, s.N, s.K
    t = Triangle.of((-alpha, 0), (M + N, K * N), (M + beta, 0))
    return FamilyTriangle(Kind.INTEGRAL, s, alpha, beta, t)


def make_rt(s: PellSolution, alpha=0, beta=0) -> FamilyTriangle:
    alpha, beta = geo.as_rational(alpha), geo.as_rational(beta)
    if s.M < 1:
        raise DegenerateTriangle(f"RT needs M >= 1, got {s}")
    if alpha < 0 or beta < 0:
        raise ValueError("alpha and beta must be non-negative")
    M, N, K = s.M, s.N, s.K
    t = Triangle.of((-alpha, 0), (M, M + N), (M - Fraction(M + N, K) + beta, 0))
    return FamilyTriangle(Kind.RATIONAL, s, alpha, beta, t)


def make_triangle(kind, s: PellSolution, alpha=0, beta=0) -> FamilyTriangle:
    kind = Kind.parse(kind)
    return (make_it if kind is Kind.INTEGRAL else make_rt)(s, alpha, beta)


def with_alpha_beta(t: FamilyTriangle, alpha, beta) -> FamilyTriangle:
    return make_triangle(t.kind, t.solution, alpha, beta)


def expected_lattice_count(m: int) -> int:
    return comb(m + 1, 2) + 1


def negative_curve_budget(t: FamilyTriangle) -> Fraction:
    """Largest alpha + beta keeping the enlarged triangle's area <= m^2/2."""
    if t.kind is Kind.INTEGRAL:
        return Fraction(1, t.N * t.K)
    return Fraction(1, t.K * (t.M + t.N))


def class_triangle(t: FamilyTriangle) -> Triangle:
    """Triangle (0,0), (m,0), m/(b+alpha+beta) * (m+alpha, h) of the class H'."""
    m, h = t.m, t.h
    scale = Fraction(m) / (t.b + t.alpha + t.beta)
    return Triangle.of((0, 0), (m, 0), (scale * (m + t.alpha), scale * h))


def formula_multiplicities(t: FamilyTriangle) -> tuple[int, int, int]:
    M, N, K = t.M, t.N, t.K
    if t.kind is Kind.INTEGRAL:
        triple = (N * K, K, M * K)
    else:
        triple = (M + N, K, M * K - M - N)
    return tuple(sorted(triple))


def multiplicities(t: FamilyTriangle) -> tuple[int, int, int]:
    """Normal-fan cone multiplicities, computed from the vertices."""
    return geo.normal_fan_multiplicities(list(t.triangle.vertices))


def mirror_map(t: FamilyTriangle) -> AffineLatticeMap:
    """The explicit isomorphism IT(M,N) -> IT(N,M), RT(M,N) -> RT(iota1(M,N))."""
    M, N, K = t.M, t.N, t.K
    if t.kind is Kind.INTEGRAL:
        # (x, y) -> (M+N-x, K(M-x)+y)
        return AffineLatticeMap(-1, 0, -K, 1, M + N, K * M)
    # (x, y) -> (M-x, K(M-x)+y-(M+N))
    return AffineLatticeMap(-1, 0, -K, 1, M, K * M - (M + N))


def is_isomorphic(t1: FamilyTriangle, t2: FamilyTriangle) -> Optional[AffineLatticeMap]:
    """An affine lattice map carrying t1's triangle onto t2's, or None."""
    if multiplicities(t1) != multiplicities(t2):
        return None
    if t1.triangle == t2.triangle:
        return AffineLatticeMap.identity()
    f = mirror_map(t1)
    if f.apply_triangle(t1.triangle) == t2.triangle:
        return f
    return geo.find_isomorphism(t1.triangle, t2.triangle)
