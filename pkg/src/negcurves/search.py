"""Exhaustive search over (dagger)-form triangles at fixed m.

A (dagger) triangle has vertices (0,0), (b,0), (m,h) with gcd(m,h) = 1,
0 < b < m and integral right-edge slope K = h/(m-b). Triangles with at least
(m+1 choose 2)+1 lattice points and twice-area <= m^2 carry a negative curve;
the census groups these curves up to affine lattice isomorphism and matches
each against the integral and rational families.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd
from typing import Optional

from . import geometry as geo
from .families import FamilyTriangle, Kind, make_it, make_rt
from .geometry import AffineLatticeMap, Triangle
from .laurent import LaurentPoly, newton_polygon
from .pell import PellSolution, is_solution
from .recurrence import xi_family
from .solver import solve_curve

EXCEPTIONAL_NOTE = (
    "curves whose triangle has fewer than (m+1 choose 2)+1 lattice points or "
    "non-(dagger) vertices are exceptional type, cf. Kurano-Matsuoka; not searched"
)


def default_bounds(m: int) -> tuple[int, int]:
    """(h_max, k_max) used when the caller gives none."""
    return 4 * m * m, m * m + 2


@dataclass(frozen=True)
class DaggerCell:
    h: int
    K: int
    b: Fraction
    triangle: Triangle


def dagger_triangle(m: int, h: int, K: int) -> Triangle:
    b = m - Fraction(h, K)
    return Triangle.of((0, 0), (b, 0), (m, h))


def scan_dagger(m: int, h_max: int, k_max: int) -> list[DaggerCell]:
    """Every (h, K) cell passing the filters, ordered by (K, h)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    need = comb(m + 1, 2) + 1
    out = []
    for K in range(1, k_max + 1):
        # b > 0 means h < mK
        for h in range(1, min(h_max, m * K - 1) + 1):
            if gcd(m, h) != 1:
                continue
            # twice area b h <= m^2, cleared of the denominator K
            if (m * K - h) * h > m * m * K:
                continue
            t = dagger_triangle(m, h, K)
            if geo.lattice_count(t) >= need:
                out.append(DaggerCell(h, K, m - Fraction(h, K), t))
    return out


def naive_dagger(m: int, h_max: int, k_max: int) -> set[tuple[int, int]]:
    """(h, K) cells found by a plain double loop with point-in-triangle counting."""
    need = comb(m + 1, 2) + 1
    found = set()
    for h in range(1, h_max + 1):
        for K in range(1, k_max + 1):
            b = Fraction(m) - Fraction(h, K)
            if not (0 < b < m) or gcd(m, h) != 1 or b * h > m * m:
                continue
            t = Triangle.of((0, 0), (b, 0), (m, h))
            count = sum(1 for x in range(0, m + 1) for y in range(0, h + 1) if t.contains((x, y)))
            if count >= need:
                found.add((h, K))
    return found


def enumerate_dagger(m: int, h_max: int, k_max: int) -> list[Triangle]:
    """Filtered (dagger) triangles, one per affine lattice isomorphism class."""
    reps: list[tuple[tuple, Triangle]] = []
    for cell in scan_dagger(m, h_max, k_max):
        t = cell.triangle
        mult = geo.normal_fan_multiplicities(list(t.vertices))
        if any(mult == mu and geo.find_isomorphism(t, r) is not None for mu, r in reps):
            continue
        reps.append((mult, t))
    return [t for _, t in reps]


# -- curve isomorphism --------------------------------------------------------

def curve_isomorphism(p: LaurentPoly, q: LaurentPoly) -> Optional[AffineLatticeMap]:
    """An affine lattice map f with p(f(exponents)) = c q for a scalar c, or None."""
    if len(p) != len(q):
        return None
    key = min(q.support())
    target = q.scale_to(key)
    for f in geo.polygon_isomorphisms(newton_polygon(p).vertices, newton_polygon(q).vertices):
        r = p.transform(f)
        if key in r.support() and r.scale_to(key) == target:
            return f
    return None


def reference_instances(m: int) -> list[FamilyTriangle]:
    """Integral and rational family triangles with the given m."""
    out = []
    for M in range(1, m):
        N = m - M
        if (m * m - 1) % (M * N) == 0:
            K = (m * m - 1) // (M * N)
            if K >= 3:
                out.append(make_it(PellSolution(K, M, N)))
    if m == 1:
        return [make_rt(PellSolution(3, 1, 0)), make_rt(PellSolution(3, 1, 1))]
    for N in range(1, m * m):
        if (m * m - 1) % N:
            continue
        num = (m + N) ** 2 - 1
        if num % (m * N) == 0 and is_solution(num // (m * N), m, N):
            out.append(make_rt(PellSolution(num // (m * N), m, N)))
    return out


def _reference_curve(t: FamilyTriangle) -> LaurentPoly:
    try:
        return xi_family(t.kind, t.solution)
    except ValueError:
        # beyond the recurrence cap
        return solve_curve(t, t.m).poly


@dataclass(frozen=True)
class Match:
    kind: Kind
    K: int
    M: int
    N: int
    map: AffineLatticeMap

    def label(self) -> str:
        return f"{self.kind.name[0]}T({self.M},{self.N}) K={self.K}"


@dataclass
class CurveRecord:
    triangle: Triangle
    h: int
    K: int
    b: Fraction
    poly: LaurentPoly
    self_intersection: Fraction
    matches: list[Match] = field(default_factory=list)


@dataclass
class CensusClass:
    representative: Optional[Match]
    members: list[int]
    matches: list[Match]


@dataclass
class CensusReport:
    m: int
    h_max: int
    k_max: int
    cells: int
    records: list[CurveRecord]
    classes: list[CensusClass]
    flagged: list[int]
    notes: list[str]

    @property
    def exhaustive_within(self) -> str:
        return f"1 <= h <= {self.h_max}, 1 <= K <= {self.k_max}"


def _rank(match: Match):
    t = make_it if match.kind is Kind.INTEGRAL else make_rt
    rep = t(PellSolution(match.K, match.M, match.N)).classification_representative
    return (not rep, match.kind is not Kind.INTEGRAL, match.K, -match.M, match.N)


def verify_classification(m: int, h_max: Optional[int] = None, k_max: Optional[int] = None) -> CensusReport:
    dh, dk = default_bounds(m)
    h_max = dh if h_max is None else h_max
    k_max = dk if k_max is None else k_max
    cells = scan_dagger(m, h_max, k_max)
    refs = [(r, _reference_curve(r)) for r in reference_instances(m)]

    records: list[CurveRecord] = []
    for tri in enumerate_dagger(m, h_max, k_max):
        apex = max(tri.vertices, key=lambda v: (v.y, v.x))
        h = int(apex.y)
        b = max(v.x for v in tri.vertices if v.y == 0)
        K = int(h / (m - b))
        nc = solve_curve(tri, m)
        rec = CurveRecord(tri, h, K, b, nc.poly, nc.self_intersection)
        for ref, q in refs:
            f = curve_isomorphism(nc.poly, q)
            if f is not None:
                rec.matches.append(Match(ref.kind, ref.K, ref.M, ref.N, f))
        rec.matches.sort(key=_rank)
        records.append(rec)

    # group records whose curves are isomorphic
    parent = list(range(len(records)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(records)):
        for j in range(i):
            if find(i) != find(j) and curve_isomorphism(records[i].poly, records[j].poly) is not None:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(len(records)):
        groups.setdefault(find(i), []).append(i)

    classes = []
    for members in groups.values():
        seen = {}
        for i in members:
            for mt in records[i].matches:
                seen.setdefault((mt.kind, mt.K, mt.M, mt.N), mt)
        matches = sorted(seen.values(), key=_rank)
        classes.append(CensusClass(matches[0] if matches else None, members, matches))

    classes.sort(key=lambda c: (0, _rank(c.representative)) if c.representative else (1,))
    flagged = [i for i, r in enumerate(records) if not r.matches]
    return CensusReport(m, h_max, k_max, len(cells), records, classes, flagged, [EXCEPTIONAL_NOTE])
