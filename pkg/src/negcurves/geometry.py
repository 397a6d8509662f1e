"""Exact plane geometry over the rationals.

Everything here works with :class:`fractions.Fraction` (or ``int``) coordinates;
there is no floating point anywhere.  Triangles are closed, lattice points are
plain ``(x, y)`` integer tuples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import DegenerateTriangle, NonIntegralVertices

Rational = Fraction
LatticePoint = tuple[int, int]


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating point values are not accepted; use Fraction or 'p/q'")
    return Fraction(value)


def is_integral(q) -> bool:
    return Fraction(q).denominator == 1


def ceil_q(q: Fraction) -> int:
    return -((-q.numerator) // q.denominator)


def floor_q(q: Fraction) -> int:
    return q.numerator // q.denominator


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x, y) -> "Point":
        return cls(as_rational(x), as_rational(y))

    def is_lattice(self) -> bool:
        return self.x.denominator == 1 and self.y.denominator == 1

    def as_lattice(self) -> LatticePoint:
        if not self.is_lattice():
            raise NonIntegralVertices(f"{self} is not a lattice point")
        return (self.x.numerator, self.y.numerator)


def cross(o, a, b) -> Fraction:
    """z-component of (a - o) x (b - o)."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


@dataclass(frozen=True)
class Triangle:
    """A non-degenerate triangle, vertices stored counterclockwise."""

    v0: Point
    v1: Point
    v2: Point

    def __post_init__(self):
        pts = [Point.of(*v) for v in (self.v0, self.v1, self.v2)]
        orient = cross(*pts)
        if orient == 0:
            raise DegenerateTriangle(f"collinear vertices {pts}")
        if orient < 0:
            pts[1], pts[2] = pts[2], pts[1]
        object.__setattr__(self, "v0", pts[0])
        object.__setattr__(self, "v1", pts[1])
        object.__setattr__(self, "v2", pts[2])

    @classmethod
    def of(cls, a, b, c) -> "Triangle":
        return cls(Point.of(*a), Point.of(*b), Point.of(*c))

    @property
    def vertices(self) -> tuple[Point, Point, Point]:
        return (self.v0, self.v1, self.v2)

    def edges(self) -> list[tuple[Point, Point]]:
        v = self.vertices
        return [(v[i], v[(i + 1) % 3]) for i in range(3)]

    def vertex_set(self) -> frozenset[Point]:
        return frozenset(self.vertices)

    def contains(self, p) -> bool:
        """Closed containment test."""
        return all(cross(a, b, p) >= 0 for a, b in self.edges())

    def is_integral(self) -> bool:
        return all(v.is_lattice() for v in self.vertices)

    def __eq__(self, other):
        if not isinstance(other, Triangle):
            return NotImplemented
        return self.vertex_set() == other.vertex_set()

    def __hash__(self):
        return hash(self.vertex_set())


def twice_area(t: Triangle) -> Fraction:
    return abs(cross(t.v0, t.v1, t.v2))


def polygon_twice_area(vertices: Sequence) -> Fraction:
    """Shoelace formula, absolute value; fewer than three vertices give 0."""
    n = len(vertices)
    if n < 3:
        return Fraction(0)
    s = Fraction(0)
    for i in range(n):
        x0, y0 = vertices[i]
        x1, y1 = vertices[(i + 1) % n]
        s += Fraction(x0) * y1 - Fraction(x1) * y0
    return abs(s)


def column_interval(t: Triangle, x: int) -> Optional[tuple[Fraction, Fraction]]:
    """Exact y-range of the vertical slice of ``t`` at abscissa ``x``."""
    ys = []
    for p, q in t.edges():
        if p.x == q.x:
            if p.x == x:
                ys.extend((p.y, q.y))
            continue
        lo, hi = (p, q) if p.x < q.x else (q, p)
        if lo.x <= x <= hi.x:
            ys.append(lo.y + (hi.y - lo.y) * (x - lo.x) / (hi.x - lo.x))
    if not ys:
        return None
    return min(ys), max(ys)


def x_range(t: Triangle) -> range:
    xs = [v.x for v in t.vertices]
    return range(ceil_q(min(xs)), floor_q(max(xs)) + 1)


def _column(t: Triangle, x: int) -> range:
    iv = column_interval(t, x)
    if iv is None:
        return range(0)
    return range(ceil_q(iv[0]), floor_q(iv[1]) + 1)


def lattice_points(t: Triangle) -> list[LatticePoint]:
    """All lattice points of the closed triangle, sorted by (x, y)."""
    return [(x, y) for x in x_range(t) for y in _column(t, x)]


def lattice_count(t: Triangle) -> int:
    return sum(len(_column(t, x)) for x in x_range(t))


def column_profile(t: Triangle) -> tuple[int, ...]:
    """Number of lattice points in each integer column, left to right."""
    return tuple(len(_column(t, x)) for x in x_range(t))


def columns(t: Triangle) -> dict[int, int]:
    return {x: len(_column(t, x)) for x in x_range(t)}


def shear_point(p, K: int, b) -> Point:
    x, y = Point.of(*p)
    return Point(x, y - K * (x - as_rational(b)))


def shear(t: Triangle, K: int, b) -> Triangle:
    """Image of ``t`` under (x, y) -> (x, y - K(x - b))."""
    return Triangle(*(shear_point(v, K, b) for v in t.vertices))


def split_at(t: Triangle, b) -> tuple[Triangle, Triangle]:
    """Cut a triangle with vertices (0,0), (b,0), (m,h) along x = b.

    Returns the left piece (0,0),(b,0),(b, bh/m) and the right piece
    (b,0),(m,h),(b, bh/m).
    """
    b = as_rational(b)
    apex = max(t.vertices, key=lambda v: v.y)
    m, h = apex
    mid = Point(b, b * h / m)
    left = Triangle(Point.of(0, 0), Point(b, Fraction(0)), mid)
    right = Triangle(Point(b, Fraction(0)), apex, mid)
    return left, right


def dagger_shear(t: Triangle, K: int, b) -> Triangle:
    """Glue the left piece to the sheared right piece of a (dagger) triangle.

    The result has vertices (0,0), (m,0), (b, bh/m).
    """
    left, right = split_at(t, b)
    sheared = shear(right, K, b)
    pts = set(left.vertices) | set(sheared.vertices)
    hull = convex_hull(pts)
    if len(hull) != 3:
        raise DegenerateTriangle(f"sheared union is not a triangle: {hull}")
    return Triangle(*hull)


def edge_lattice_count(p: LatticePoint, q: LatticePoint) -> int:
    """Lattice length of a lattice segment (number of primitive steps)."""
    return math.gcd(q[0] - p[0], q[1] - p[1])


def picks_count(t: Triangle) -> tuple[Fraction, int, int]:
    """(twice area, boundary lattice points, interior lattice points).

    The interior count comes from direct enumeration, not from Pick's formula,
    so the identity can be checked independently.
    """
    if not t.is_integral():
        raise NonIntegralVertices(f"{t} has non-integral vertices")
    vs = [v.as_lattice() for v in t.vertices]
    boundary = sum(edge_lattice_count(vs[i], vs[(i + 1) % 3]) for i in range(3))
    interior = lattice_count(t) - boundary
    return twice_area(t), boundary, interior


# -- convex hulls -----------------------------------------------------------

def convex_hull(points: Iterable) -> list:
    """Counterclockwise hull starting at the lexicographic minimum.

    Collinear boundary points are dropped. Returns one point for a singleton
    set and the two endpoints for a collinear set.
    """
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower: list = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        return hull[:1]
    return hull


def minkowski_sum(p: Sequence, q: Sequence) -> list:
    """Vertices of the Minkowski sum of two convex polygons (brute force)."""
    return convex_hull((a[0] + b[0], a[1] + b[1]) for a in p for b in q)


def polygon_contains(vertices: Sequence, point) -> bool:
    """Closed containment for a ccw convex polygon (any dimension 0..2)."""
    n = len(vertices)
    if n == 1:
        return tuple(vertices[0]) == tuple(point)
    if n == 2:
        a, b = vertices
        if cross(a, b, point) != 0:
            return False
        return (min(a[0], b[0]) <= point[0] <= max(a[0], b[0])
                and min(a[1], b[1]) <= point[1] <= max(a[1], b[1]))
    return all(cross(vertices[i], vertices[(i + 1) % n], point) >= 0 for i in range(n))


# -- affine lattice maps ------------------------------------------------------

@dataclass(frozen=True)
class AffineLatticeMap:
    """(x, y) -> A (x, y) + t with A integral and det A = +-1."""

    a: int
    b: int
    c: int
    d: int
    tx: int = 0
    ty: int = 0

    def __post_init__(self):
        if self.det not in (1, -1):
            raise ValueError(f"matrix [[{self.a},{self.b}],[{self.c},{self.d}]] is not unimodular")

    @classmethod
    def identity(cls) -> "AffineLatticeMap":
        return cls(1, 0, 0, 1)

    @classmethod
    def translation(cls, tx: int, ty: int) -> "AffineLatticeMap":
        return cls(1, 0, 0, 1, tx, ty)

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def __call__(self, p):
        x, y = p
        out = (self.a * x + self.b * y + self.tx, self.c * x + self.d * y + self.ty)
        if isinstance(p, Point):
            return Point(Fraction(out[0]), Fraction(out[1]))
        return out

    def compose(self, other: "AffineLatticeMap") -> "AffineLatticeMap":
        """self after other."""
        a = self.a * other.a + self.b * other.c
        b = self.a * other.b + self.b * other.d
        c = self.c * other.a + self.d * other.c
        d = self.c * other.b + self.d * other.d
        tx, ty = self((other.tx, other.ty))
        return AffineLatticeMap(a, b, c, d, tx, ty)

    def inverse(self) -> "AffineLatticeMap":
        det = self.det
        a, b, c, d = self.d * det, -self.b * det, -self.c * det, self.a * det
        tx = -(a * self.tx + b * self.ty)
        ty = -(c * self.tx + d * self.ty)
        return AffineLatticeMap(a, b, c, d, tx, ty)

    def apply_triangle(self, t: Triangle) -> Triangle:
        return Triangle(*(self(v) for v in t.vertices))

    def as_dict(self) -> dict:
        return {"matrix": [[self.a, self.b], [self.c, self.d]], "translation": [self.tx, self.ty]}


def apply_map(f: AffineLatticeMap, p):
    return f(p)


def _solve_linear_map(src: Sequence, dst: Sequence) -> Optional[tuple[Fraction, ...]]:
    """The linear map sending the two vectors in ``src`` to those in ``dst``."""
    (p1, p2), (q1, q2) = src
    (r1, r2), (s1, s2) = dst
    det = Fraction(p1) * q2 - Fraction(q1) * p2
    if det == 0:
        return None
    # A [p q] = [r s]  =>  A = [r s] [p q]^-1
    i11, i12, i21, i22 = q2 / det, -q1 / det, -p2 / det, p1 / det
    return (r1 * i11 + s1 * i21, r1 * i12 + s1 * i22,
            r2 * i11 + s2 * i21, r2 * i12 + s2 * i22)


def _map_from_frames(p0, p_dirs, q0, q_dirs) -> Optional[AffineLatticeMap]:
    lin = _solve_linear_map(p_dirs, q_dirs)
    if lin is None or not all(is_integral(v) for v in lin):
        return None
    a, b, c, d = (int(v) for v in lin)
    if a * d - b * c not in (1, -1):
        return None
    tx = Fraction(q0[0]) - (a * Fraction(p0[0]) + b * Fraction(p0[1]))
    ty = Fraction(q0[1]) - (c * Fraction(p0[0]) + d * Fraction(p0[1]))
    if not (is_integral(tx) and is_integral(ty)):
        return None
    return AffineLatticeMap(a, b, c, d, int(tx), int(ty))


def _sub(p, q):
    return (Fraction(p[0]) - q[0], Fraction(p[1]) - q[1])


def _unimodular_completion(d: LatticePoint) -> LatticePoint:
    """A lattice vector e with det(d, e) = 1, for primitive d."""
    g, s, t = _ext_gcd(d[0], d[1])
    assert g == 1
    # det([d0, e0],[d1, e1]) = d0 e1 - d1 e0 = 1 with e = (-t, s)
    return (-t, s)


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r, old_s, s, old_t, t = a, b, 1, 0, 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def polygon_isomorphisms(p: Sequence, q: Sequence) -> list[AffineLatticeMap]:
    """All affine lattice automorphisms carrying convex polygon ``p`` onto ``q``.

    Both arguments are vertex lists as returned by :func:`convex_hull`
    (vertices may be rational for two-dimensional polygons). Segments and
    points must be integral; for these only representative maps are returned,
    one per orientation, since the stabiliser of a segment is infinite.
    """
    p, q = list(p), list(q)
    if len(p) != len(q):
        return []
    n = len(p)
    if n == 1:
        return [AffineLatticeMap.translation(q[0][0] - p[0][0], q[0][1] - p[0][1])]
    if n == 2:
        gp = edge_lattice_count(p[0], p[1])
        gq = edge_lattice_count(q[0], q[1])
        if gp != gq:
            return []
        dp = ((p[1][0] - p[0][0]) // gp, (p[1][1] - p[0][1]) // gp)
        out = []
        for a, b in ((q[0], q[1]), (q[1], q[0])):
            dq = ((b[0] - a[0]) // gq, (b[1] - a[1]) // gq)
            f = _map_from_frames(p[0], (dp, _unimodular_completion(dp)),
                                 a, (dq, _unimodular_completion(dq)))
            if f is not None:
                out.append(f)
        return out
    out = []
    pset = {(Fraction(x), Fraction(y)) for x, y in p}
    qset = {(Fraction(x), Fraction(y)) for x, y in q}
    for j in range(n):
        for s in (1, -1):
            f = _map_from_frames(
                p[0], (_sub(p[1], p[0]), _sub(p[-1], p[0])),
                q[j], (_sub(q[(j + s) % n], q[j]), _sub(q[(j - s) % n], q[j])))
            if f is None:
                continue
            if {tuple(Fraction(c) for c in f(v)) for v in pset} == qset:
                out.append(f)
    return out


def find_isomorphism(t1: Triangle, t2: Triangle) -> Optional[AffineLatticeMap]:
    maps = polygon_isomorphisms(list(t1.vertices), list(t2.vertices))
    return maps[0] if maps else None


# -- normal fans --------------------------------------------------------------

def primitive_direction(p, q) -> LatticePoint:
    """Primitive integer vector pointing from p to q (rational endpoints ok)."""
    dx, dy = _sub(q, p)
    lcm = dx.denominator * dy.denominator // math.gcd(dx.denominator, dy.denominator)
    ix, iy = int(dx * lcm), int(dy * lcm)
    g = math.gcd(ix, iy)
    return (ix // g, iy // g)


def normal_fan_multiplicities(vertices: Sequence) -> tuple[int, ...]:
    """Sorted multiplicities of the maximal cones of a convex polygon's normal fan.

    ``vertices`` must be in counterclockwise order.
    """
    n = len(vertices)
    normals = []
    for i in range(n):
        dx, dy = primitive_direction(vertices[i], vertices[(i + 1) % n])
        normals.append((dy, -dx))  # outward for ccw order
    mults = []
    for i in range(n):
        u, w = normals[i - 1], normals[i]
        mults.append(abs(u[0] * w[1] - u[1] * w[0]))
    return tuple(sorted(mults))
