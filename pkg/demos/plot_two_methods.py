"""
One curve, two ways
===================

The negative curve on a family triangle can be found by brute linear
algebra (the unique polynomial supported on the triangle that vanishes to
order m at (1, 1)) or by the two three-term recurrences along the chain.
Here both are run side by side and the results compared.
"""

import time

from negcurves.families import make_it, make_rt
from negcurves.laurent import newton_polygon, to_text, vanishing_order
from negcurves.pell import chain_solution
from negcurves.recurrence import xi_family
from negcurves.solver import solve_curve

K = 5
for n in (1, 2):
    s = chain_solution(K, n)
    for t in (make_it(s), make_rt(s)):
        t0 = time.perf_counter()
        by_solver = solve_curve(t, t.m)
        t1 = time.perf_counter()
        by_recurrence = xi_family(t.kind, s)
        t2 = time.perf_counter()
        print(t, "agree" if by_solver.poly == by_recurrence else "DISAGREE",
              f"solver {t1 - t0:.3f}s, recurrence {t2 - t1:.3f}s")
        print("   ", to_text(by_recurrence)[:100], "..." if len(by_recurrence) > 8 else "")
        print("    order", vanishing_order(by_recurrence), " C.C =", by_solver.self_intersection)

# the Newton polygon of the integral curve is the triangle itself
s = chain_solution(K, 2)
print(newton_polygon(xi_family("it", s)).vertices)
print([(int(v.x), int(v.y)) for v in make_it(s).triangle.vertices])
