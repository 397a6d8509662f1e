"""The invariant suite behind ``negcurves verify``.

Each check returns a :class:`CheckResult`; :func:`run_all` runs them in a
fixed order, one after another.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable

from . import geometry as geo
from .errors import NonExactDivision
from .families import Kind, expected_lattice_count, make_triangle, negative_curve_budget, with_alpha_beta
from .laurent import LaurentPoly, edge_lattice_length, newton_polygon, vanishing_order
from .mds import Status, classify, d0_intersection, d0_intersection_mixed, nonmds_inequality
from .pell import chain_solution, enumerate_chain, is_solution, iter_chain
from .recurrence import (edge_coefficients, epsilon, expected_edge_coefficients, relation_residuals,
                         xi_chain)
from .search import verify_classification
from .solver import interpolation_dual, solve_curve

# (K, largest n) pairs for the edge-coefficient laws; coefficient sizes grow
# fast in K, so larger K stop earlier
EDGE_GRID = {4: 6, 5: 4, 6: 3, 7: 3, 8: 2}


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.name}: {self.detail} ({self.seconds:.2f}s)"


def chain_instances(max_k: int, max_m: int, kinds=(Kind.INTEGRAL, Kind.RATIONAL)):
    """Family triangles (alpha = beta = 0) along the chains with m <= max_m.

    Mirror rational triangles RT(M, N) with M < N have N <= (K-2)M, so the walk
    can stop once M + N exceeds (K-1) max_m.
    """
    out = []
    for K in range(3, max_k + 1):
        for s in iter_chain(K):
            if s.M + s.N > (K - 1) * max_m:
                break
            for kind in kinds:
                if kind is Kind.INTEGRAL and (s.M < 1 or s.N < 1):
                    continue
                if kind is Kind.RATIONAL and s.M < 1:
                    continue
                t = make_triangle(kind, s)
                if t.m <= max_m:
                    out.append(t)
    return out


def _chain_n(K, max_m):
    """Chain indices n >= 1 with both curves of order <= max_m."""
    ns = []
    n = 1
    while True:
        try:
            s = chain_solution(K, n)
        except ValueError:
            break
        if s.M + s.N > max_m:
            break
        ns.append(n)
        n += 1
    return ns


def check_pell(ks=range(3, 11)) -> tuple[bool, str]:
    bad = [(K, s) for K in ks for s in enumerate_chain(K, 8) if not is_solution(K, s.M, s.N)]
    k3 = len(set(iter_chain(3)))
    prefix = [s.pair for s in enumerate_chain(5, 6)]
    want = [(0, 1), (1, 0), (1, 3), (3, 1), (3, 8), (8, 3)]
    ok = not bad and k3 == 3 and prefix == want
    return ok, f"{len(bad)} bad entries, K=3 has {k3} solutions, K=5 prefix {prefix}"


def check_lattice_counts(max_m=60, max_k=None) -> tuple[bool, str]:
    max_k = max_k or max_m * max_m + 2
    count = 0
    bad = []
    for t in chain_instances(max_k, max_m):
        count += 1
        prof = sorted(geo.column_profile(t.triangle))
        want = [1] + list(range(1, t.m + 1))
        if geo.lattice_count(t.triangle) != expected_lattice_count(t.m) or prof != want:
            bad.append(str(t))
    return not bad, f"{count} triangles, {len(bad)} mismatches {bad[:3]}"


def check_dual_method(max_k=8, max_m=12) -> tuple[bool, str]:
    checked = 0
    bad = []
    try:
        for K in range(3, max_k + 1):
            for n in _chain_n(K, max_m):
                pair = xi_chain(K, n)
                s = pair.solution
                for kind, poly in ((Kind.INTEGRAL, pair.xi_int), (Kind.RATIONAL, pair.xi_rat)):
                    t = make_triangle(kind, s)
                    if t.m > max_m:
                        continue
                    checked += 1
                    if solve_curve(t, t.m).poly != poly or vanishing_order(poly) != t.m:
                        bad.append(str(t))
                r1, r2 = relation_residuals(K, n)
                if r1 or r2:
                    bad.append(f"relations K={K} n={n}")
    except NonExactDivision as e:
        return False, f"NonExactDivision: {e}"
    return not bad, f"{checked} curves, {len(bad)} mismatches {bad[:3]}"


def check_self_intersections(max_m=40, max_k=None) -> tuple[bool, str]:
    max_k = max_k or max_m * max_m + 2
    bad = []
    count = 0
    for t in chain_instances(max_k, max_m):
        count += 1
        want = Fraction(-1) if t.kind is Kind.INTEGRAL else Fraction(-1, t.K)
        if geo.twice_area(t.triangle) - t.m ** 2 != want:
            bad.append(str(t))
    return not bad, f"{count} triangles, {len(bad)} mismatches {bad[:3]}"


def check_newton_polygons(max_k=8, max_m=12, grid=EDGE_GRID) -> tuple[bool, str]:
    bad = []
    for K in range(3, max_k + 1):
        for n in _chain_n(K, max_m):
            pair = xi_chain(K, n)
            t = make_triangle(Kind.INTEGRAL, pair.solution)
            if t.m <= max_m and set(newton_polygon(pair.xi_int).vertices) != set(t.triangle.vertices):
                bad.append(f"NP {t}")
    for K in range(4, max_k + 1):
        length = edge_lattice_length(newton_polygon(xi_chain(K, 2).xi_rat), (K, -1))
        if length != K - 3:
            bad.append(f"slope edge K={K}: {length}")
    cells = 0
    for K, top in grid.items():
        if K > max_k:
            continue
        for n in range(2, top + 1):
            s = xi_chain(K, n).solution
            for fam in ("rt", "it"):
                cells += 1
                if edge_coefficients(s, fam) != expected_edge_coefficients(K, n, fam):
                    bad.append(f"edge coefficients K={K} n={n} {fam}")
    return not bad, f"{cells} edge-coefficient cells, {len(bad)} failures {bad[:3]}"


def check_epsilon(ks=range(3, 11), max_n=8, max_k=8, max_m=12) -> tuple[bool, str]:
    bad = []
    for K in ks:
        for n in range(1, max_n + 1):
            ei, er = epsilon(K, n, "it"), epsilon(K, n, "rt")
            ei0, er0 = epsilon(K, n - 1, "it"), epsilon(K, n - 1, "rt")
            if ei != er * er0 or er0 ** K != ei * ei0:
                bad.append((K, n))
            if K % 2 == 0:
                want = (-1, (-1) ** (n + 1))
            else:
                want = (1 if n % 3 == 1 else -1, 1 if n % 3 == 2 else -1)
            if (ei, er) != want:
                bad.append((K, n, "table"))
    # the signs are the actual top coefficients of the computed curves
    for K in range(3, max_k + 1):
        for n in _chain_n(K, max_m):
            p = xi_chain(K, n)
            s = p.solution
            if p.xi_int[(s.M + s.N, s.K * s.N)] != p.eps_int or p.xi_rat[(s.M, s.M + s.N)] != p.eps_rat:
                bad.append((K, n, "top"))
    return not bad, f"{len(bad)} failures {bad[:3]}"


def check_mds_table(max_k=6, max_n=4) -> tuple[bool, str]:
    count = 0
    bad = []
    for K in range(3, max_k + 1):
        for n in range(0, max_n + 1):
            try:
                s = chain_solution(K, n)
            except ValueError:
                break
            for kind in (Kind.INTEGRAL, Kind.RATIONAL):
                if kind is Kind.INTEGRAL and s.N < 1:
                    continue
                base = make_triangle(kind, s)
                budget = negative_curve_budget(base)
                values = (Fraction(0), budget / 3, budget / 2)
                for a in values:
                    for b in values:
                        t = with_alpha_beta(base, a, b)
                        count += 1
                        v = classify(t)
                        if a == 0 or b == 0:
                            want = Status.MDS
                        elif (t.N > 1 if kind is Kind.INTEGRAL else t.M + t.N > 1):
                            want = Status.NON_MDS
                        else:
                            want = Status.UNKNOWN
                        if v.status is not want:
                            bad.append(f"{t}: {v.status.value}")
                        if d0_intersection(t) != 0 or d0_intersection_mixed(t) != 0:
                            bad.append(f"{t}: D0.C")
                        if a > 0 and b > 0 and (v.status is Status.NON_MDS) != nonmds_inequality(t):
                            bad.append(f"{t}: inequality")
    return not bad, f"{count} instances, {len(bad)} failures {bad[:3]}"


CENSUS_EXPECTED = {
    2: {("it", 3, 1, 1)},
    3: {("it", 4, 2, 1), ("rt", 4, 3, 2)},
    4: {("it", 5, 3, 1), ("rt", 4, 4, 3)},
}


def check_census(expected=CENSUS_EXPECTED) -> tuple[bool, str]:
    parts = []
    ok = True
    for m, want in expected.items():
        r = verify_classification(m)
        got = {(c.representative.kind.value, c.representative.K, c.representative.M, c.representative.N)
               for c in r.classes if c.representative is not None}
        good = got == want and len(r.classes) == len(want) and not r.flagged
        ok &= good
        parts.append(f"m={m}: {len(r.classes)} classes")
    return ok, ", ".join(parts)


def _random_poly(rng, terms=4, span=3):
    return LaurentPoly({(rng.randint(-span, span), rng.randint(-span, span)): rng.randint(-3, 3)
                        for _ in range(terms)})


def check_properties(seed=0, sets=500, pairs=200, triangles=200) -> tuple[bool, str]:
    rng = random.Random(seed)
    bad = []
    for _ in range(sets):
        m = rng.randint(1, 5)
        box = m + 2
        cells = [(a, b) for a in range(box) for b in range(box)]
        S = rng.sample(cells, comb(m + 1, 2))
        d1, d2 = interpolation_dual(S, m)
        if d1 != d2:
            bad.append(("duality", tuple(S)))
    done = 0
    while done < pairs:
        p, q = _random_poly(rng), _random_poly(rng)
        x, y = LaurentPoly.x(), LaurentPoly.y()
        p = p * (x - 1) ** rng.randint(0, 2)
        q = q * (y - 1) ** rng.randint(0, 2)
        if not p or not q:
            continue
        done += 1
        if vanishing_order(p * q) != vanishing_order(p) + vanishing_order(q):
            bad.append(("order", str(p), str(q)))
    done = 0
    while done < triangles:
        pts = [(rng.randint(-6, 6), rng.randint(-6, 6)) for _ in range(3)]
        if geo.cross(*pts) == 0:
            continue
        done += 1
        t = geo.Triangle.of(*pts)
        area2, bnd, inner = geo.picks_count(t)
        if area2 != 2 * inner + bnd - 2 or geo.lattice_count(t) != inner + bnd:
            bad.append(("pick", pts))
        while True:
            a, b, c, d = (rng.randint(-3, 3) for _ in range(4))
            if a * d - b * c in (1, -1):
                break
        f = geo.AffineLatticeMap(a, b, c, d, rng.randint(-5, 5), rng.randint(-5, 5))
        u = f.apply_triangle(t)
        if geo.lattice_count(u) != geo.lattice_count(t) or geo.twice_area(u) != geo.twice_area(t):
            bad.append(("map", pts))
    return not bad, f"{sets} point sets, {pairs} pairs, {triangles} triangles, {len(bad)} failures"


def suite(max_m: int = 60, max_k: int = 10) -> list[tuple[str, Callable[[], tuple[bool, str]]]]:
    km = min(max_k, 8)
    return [
        ("1 pell chains", lambda: check_pell(range(3, max_k + 1))),
        ("2 lattice counts", lambda: check_lattice_counts(max_m)),
        ("3 dual-method curves", lambda: check_dual_method(km, min(max_m, 12))),
        ("4 self-intersections", lambda: check_self_intersections(min(max_m, 40))),
        ("5 newton polygons", lambda: check_newton_polygons(km, min(max_m, 12))),
        ("6 epsilon tables", lambda: check_epsilon(range(3, max_k + 1), 8, km, min(max_m, 12))),
        ("7 mds truth table", lambda: check_mds_table(min(max_k, 6), 4)),
        ("8 census", check_census),
        ("9 property suites", check_properties),
    ]


def run_all(max_m: int = 60, max_k: int = 10, progress=None) -> list[CheckResult]:
    results = []
    for name, fn in suite(max_m, max_k):
        t0 = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as e:  # a crash is a failed check, not a crashed suite
            ok, detail = False, f"{type(e).__name__}: {e}"
        r = CheckResult(name, ok, detail, time.perf_counter() - t0)
        results.append(r)
        if progress:
            progress(r)
    return results
