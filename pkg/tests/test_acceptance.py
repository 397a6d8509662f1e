"""Acceptance criteria 1-9, each checked against an oracle written here
rather than against the library's own verify suite."""

import random
from fractions import Fraction as F
from math import comb, floor, ceil, gcd

import sympy

from negcurves import geometry as geo
from negcurves.errors import NonExactDivision
from negcurves.families import Kind, make_it, make_rt, make_triangle, negative_curve_budget
from negcurves.laurent import LaurentPoly, newton_polygon, vanishing_order
from negcurves.mds import Status, classify, d0_intersection
from negcurves.pell import PellSolution, enumerate_chain, iter_chain
from negcurves.recurrence import edge_coefficients, epsilon, xi_chain
from negcurves.search import naive_dagger, scan_dagger, default_bounds, verify_classification
from negcurves.solver import interpolation_dual, solve_curve
from negcurves.verify import EDGE_GRID, chain_instances

x, y = LaurentPoly.x(), LaurentPoly.y()


def chain_ns(K, max_m):
    """n >= 1 with M_n + N_n <= max_m, walking the chain by hand."""
    M, N, n = 1, 0, 0
    out = []
    while True:
        M, N, n = (K - 2) * M - N, M, n + 1
        # K = 3 runs out after (1, 1)
        if M < N or M + N > max_m:
            return out
        out.append(n)


def fib_like(K, n):
    f = [0, 1]
    while len(f) <= n:
        f.append((K - 2) * f[-1] - f[-2])
    return f


def column_counts(t):
    """Lattice points per integer column, from floor/ceil of the edge heights."""
    vs = [(F(v.x), F(v.y)) for v in t.vertices]
    xs = [v[0] for v in vs]
    out = []
    for c in range(ceil(min(xs)), floor(max(xs)) + 1):
        ys = []
        for (x0, y0), (x1, y1) in ((vs[0], vs[1]), (vs[1], vs[2]), (vs[2], vs[0])):
            if x0 == x1:
                if x0 == c:
                    ys += [y0, y1]
            elif min(x0, x1) <= c <= max(x0, x1):
                ys.append(y0 + (y1 - y0) * (c - x0) / (x1 - x0))
        out.append(floor(max(ys)) - ceil(min(ys)) + 1)
    return out


def test_criterion_1_pell(criterion):
    def body():
        bad = 0
        for K in range(3, 11):
            chain = enumerate_chain(K, 8)
            bad += sum((s.M + s.N) ** 2 != K * s.M * s.N + 1 for s in chain)
            bad += len(chain) != 8 and K != 3
        k3 = {(s.M, s.N) for s in iter_chain(3)}
        prefix = [(s.M, s.N) for s in enumerate_chain(5, 6)]
        ok = bad == 0 and len(k3) == 3 and prefix == [(0, 1), (1, 0), (1, 3), (3, 1), (3, 8), (8, 3)]
        return ok, f"K=3..10 first 8 entries solve the equation ({bad} bad); K=3 has {len(k3)}; K=5 prefix {prefix}"
    criterion(1, "Pell chains", body, limit=1)


def test_criterion_2_lattice_counts(criterion):
    def body():
        instances = chain_instances(60 * 60 + 2, 60)
        bad = []
        for t in instances:
            counts = column_counts(t.triangle)
            want = [1] + list(range(1, t.m + 1))
            if sum(counts) != comb(t.m + 1, 2) + 1 or sorted(counts) != want:
                bad.append(str(t))
        kinds = {t.kind for t in instances}
        ok = not bad and kinds == set(Kind) and max(t.m for t in instances) == 60
        return ok, f"{len(instances)} triangles with m <= 60, {len(bad)} mismatches {bad[:2]}"
    criterion(2, "lattice counts", body, limit=60)


def test_criterion_3_dual_method(criterion):
    def body():
        checked, bad = 0, []
        try:
            for K in range(3, 9):
                for n in chain_ns(K, 12):
                    cur, prev = xi_chain(K, n), xi_chain(K, n - 1)
                    M, N = cur.solution.M, cur.solution.N
                    for kind, poly in ((Kind.INTEGRAL, cur.xi_int), (Kind.RATIONAL, cur.xi_rat)):
                        t = make_triangle(kind, cur.solution)
                        if t.m > 12:
                            continue
                        checked += 1
                        if solve_curve(t, t.m).poly != poly or vanishing_order(poly) != t.m:
                            bad.append(str(t))
                    # both three-term relations, multiplied out
                    lhs1 = cur.xi_rat * prev.xi_rat
                    rhs1 = cur.xi_int + cur.eps_rat * x ** M * (y - 1) ** (M + N)
                    lhs2 = cur.xi_int * prev.xi_int
                    rhs2 = prev.xi_rat ** K + cur.eps_int * x ** (M + N) * (y - 1) ** (K * N)
                    if lhs1 != rhs1 or lhs2 != rhs2:
                        bad.append(f"relations K={K} n={n}")
        except NonExactDivision as e:
            return False, f"NonExactDivision raised: {e}"
        return not bad and checked > 0, f"{checked} curves (K <= 8, m <= 12), {len(bad)} mismatches {bad[:2]}"
    criterion(3, "dual-method curves", body)


def test_criterion_4_self_intersections(criterion):
    def body():
        bad = []
        instances = chain_instances(40 * 40 + 2, 40)
        for t in instances:
            pts = [(sympy.Rational(v.x.numerator, v.x.denominator), sympy.Rational(v.y.numerator, v.y.denominator))
                   for v in t.triangle.vertices]
            area = abs(sympy.Polygon(*pts).area)
            cc = 2 * area - t.m ** 2
            want = -1 if t.kind is Kind.INTEGRAL else sympy.Rational(-1, t.K)
            if cc != want:
                bad.append(str(t))
        fig_a = solve_curve(make_it(PellSolution(5, 3, 1)), 4).self_intersection
        fig_b = solve_curve(make_rt(PellSolution(4, 4, 3)), 4).self_intersection
        ok = not bad and fig_a == -1 and fig_b == F(-1, 4)
        return ok, f"{len(instances)} triangles with m <= 40, {len(bad)} mismatches; m=4 values {fig_a}, {fig_b}"
    criterion(4, "self-intersections", body)


def test_criterion_5_newton_polygons(criterion):
    def body():
        bad = []
        for K in range(3, 9):
            for n in chain_ns(K, 12):
                p = xi_chain(K, n)
                t = make_it(p.solution)
                if t.m > 12:
                    continue
                hull = sympy.convex_hull(*[sympy.Point(a, b) for a, b in p.xi_int.support()])
                got = {(int(v.x), int(v.y)) for v in hull.vertices}
                if got != {(int(v.x), int(v.y)) for v in t.triangle.vertices}:
                    bad.append(f"NP {t}")
        lengths = {}
        for K in range(4, 9):
            support = xi_chain(K, 2).xi_rat.support()
            top = max(K * a - b for a, b in support)
            edge = sorted(p for p in support if K * p[0] - p[1] == top)
            (a0, b0), (a1, b1) = edge[0], edge[-1]
            lengths[K] = gcd(a1 - a0, b1 - b0)
            if lengths[K] != K - 3:
                bad.append(f"slope edge K={K}: {lengths[K]}")
        cells = 0
        for K, top_n in EDGE_GRID.items():
            for n in range(2, top_n + 1):
                f = fib_like(K, n)
                s = xi_chain(K, n).solution
                want = {"rt": (f[n], (-1) ** K * f[n - 1]),
                        "it": (f[n] + f[n - 1], (-1) ** K * (f[n - 1] + f[n - 2]))}
                for fam in ("rt", "it"):
                    cells += 1
                    if edge_coefficients(s, fam) != want[fam]:
                        bad.append(f"edge K={K} n={n} {fam}")
        n_range = sorted(range(2, EDGE_GRID[4] + 1))
        ok = not bad and n_range == [2, 3, 4, 5, 6]
        return ok, (f"NP(xi_int) = IT on K <= 8, m <= 12; slope-K edge lengths {lengths}; "
                    f"{cells} edge-coefficient cells over n = 2..6 (K=4) and (K, n) grid {EDGE_GRID}; "
                    f"{len(bad)} failures {bad[:2]}")
    criterion(5, "Newton polygons", body)


def test_criterion_6_epsilon(criterion):
    def body():
        bad = []
        for K in range(3, 11):
            for n in range(0, 9):
                ei, er = epsilon(K, n, "it"), epsilon(K, n, "rt")
                if n == 0:
                    want = (-1, -1)
                elif K % 2 == 0:
                    want = (-1, (-1) ** (n + 1))
                else:
                    want = (1 if n % 3 == 1 else -1, 1 if n % 3 == 2 else -1)
                if (ei, er) != want:
                    bad.append((K, n, "table"))
                if n >= 1:
                    ei0, er0 = epsilon(K, n - 1, "it"), epsilon(K, n - 1, "rt")
                    if ei != er * er0 or er0 ** K != ei * ei0:
                        bad.append((K, n, "relation"))
        # the signs are the top coefficients of the solver's curves
        for K in range(3, 9):
            for n in chain_ns(K, 10):
                p = xi_chain(K, n)
                s = p.solution
                if solve_curve(make_it(s), s.M + s.N).poly[(s.M + s.N, K * s.N)] != epsilon(K, n, "it"):
                    bad.append((K, n, "top int"))
                if solve_curve(make_rt(s), s.M).poly[(s.M, s.M + s.N)] != epsilon(K, n, "rt"):
                    bad.append((K, n, "top rat"))
        return not bad, f"K = 3..10, n <= 8: {len(bad)} failures {bad[:3]}"
    criterion(6, "epsilon tables", body)


def _mixed_twice_area(p, q):
    pts = [sympy.Point(a.x + b.x, a.y + b.y) for a in p.vertices for b in q.vertices]
    return abs(sympy.convex_hull(*pts).area) * 2


def test_criterion_7_mds(criterion):
    def body():
        count, bad = 0, []
        for K in range(3, 7):
            M, N = 1, 0
            for n in range(0, 5):
                if M < N:
                    break
                s = PellSolution(K, M, N)
                for kind in Kind:
                    if kind is Kind.INTEGRAL and N < 1:
                        continue
                    budget = negative_curve_budget(make_triangle(kind, s))
                    for a in (F(0), budget / 3, budget / 2):
                        for b in (F(0), budget / 3, budget / 2):
                            t = make_triangle(kind, s, a, b)
                            count += 1
                            v = classify(t)
                            if a == 0 or b == 0:
                                want = Status.MDS
                            elif (N > 1) if kind is Kind.INTEGRAL else (M + N > 1):
                                want = Status.NON_MDS
                            else:
                                want = Status.UNKNOWN
                            if v.status is not want:
                                bad.append(f"{t}: {v.status.value}")
                            # D0.C = H.H' - m h, H.H' as a mixed area
                            m, h = t.m, t.h
                            c = m / (t.b + a + b)
                            hp = geo.Triangle.of((0, 0), (m, 0), (c * (m + a), c * h))
                            tri = t.triangle
                            mixed = (_mixed_twice_area(tri, hp) - geo.twice_area(tri) - geo.twice_area(hp)) / 2
                            if mixed - m * h != 0 or d0_intersection(t) != 0:
                                bad.append(f"{t}: D0.C = {mixed - m * h}")
                            if a > 0 and b > 0:
                                ineq = h * (t.b + F(1, K)) > m * m
                                if ineq != (v.status is Status.NON_MDS):
                                    bad.append(f"{t}: inequality")
                M, N = (K - 2) * M - N, M
        return not bad, f"{count} instances (K <= 6, n <= 4), {len(bad)} failures {bad[:2]}"
    criterion(7, "MDS truth table", body)


def test_criterion_8_census(criterion):
    def body():
        found = {}
        for m in (2, 3, 4):
            r = verify_classification(m)
            if r.flagged:
                return False, f"m={m}: unmatched curves {r.flagged}"
            found[m] = [c.representative.label() for c in r.classes]
            if {(c.h, c.K) for c in scan_dagger(m, *default_bounds(m))} != naive_dagger(m, *default_bounds(m)):
                return False, f"m={m}: cell scan disagrees with the naive scan"
        ok = (found[4] == ["IT(3,1) K=5", "RT(4,3) K=4"] and len(found[2]) == 1 and len(found[3]) == 2)
        return ok, f"classes {found}"
    criterion(8, "census", body, limit=120)


def test_criterion_9_properties(criterion):
    def body():
        rng = random.Random(20240611)
        bad = []
        for _ in range(500):
            m = rng.randint(1, 5)
            cells = [(a, b) for a in range(m + 2) for b in range(m + 2)]
            S = rng.sample(cells, comb(m + 1, 2))
            monos = [(i, j) for i in range(m) for j in range(m - i)]
            det = sympy.Matrix([[a ** i * b ** j for i, j in monos] for a, b in S]).det(method="bareiss")
            supports, interp = interpolation_dual(S, m)
            if not (supports == interp == (det == 0)):
                bad.append(("duality", S))
        pairs = 0
        while pairs < 200:
            p = LaurentPoly({(rng.randint(-3, 3), rng.randint(-3, 3)): rng.randint(-3, 3) for _ in range(4)})
            q = LaurentPoly({(rng.randint(-3, 3), rng.randint(-3, 3)): rng.randint(-3, 3) for _ in range(4)})
            p, q = p * (x - 1) ** rng.randint(0, 2), q * (y - 1) ** rng.randint(0, 2)
            if p.is_zero() or q.is_zero():
                continue
            pairs += 1
            if vanishing_order(p * q) != vanishing_order(p) + vanishing_order(q):
                bad.append(("order", p, q))
        tris = 0
        while tris < 200:
            pts = [(rng.randint(-6, 6), rng.randint(-6, 6)) for _ in range(3)]
            if geo.cross(*pts) == 0:
                continue
            tris += 1
            t = geo.Triangle.of(*pts)
            a2, bnd, inner = geo.picks_count(t)
            edges = sum(gcd(pts[i][0] - pts[i - 1][0], pts[i][1] - pts[i - 1][1]) for i in range(3))
            if bnd != edges or a2 != 2 * inner + bnd - 2 or sum(column_counts(t)) != inner + bnd:
                bad.append(("pick", pts))
            while True:
                a, b, c, d = (rng.randint(-3, 3) for _ in range(4))
                if a * d - b * c in (1, -1):
                    break
            f = geo.AffineLatticeMap(a, b, c, d, rng.randint(-5, 5), rng.randint(-5, 5))
            u = f.apply_triangle(t)
            if sum(column_counts(u)) != sum(column_counts(t)) or geo.twice_area(u) != a2:
                bad.append(("map", pts))
        return not bad, f"500 point sets, 200 polynomial pairs, 200 triangles and maps: {len(bad)} failures"
    criterion(9, "property suites", body)
