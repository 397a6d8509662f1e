"""
Which blowups are Mori dream spaces
===================================

Enlarge a family triangle by alpha on the left and beta on the right. If
either is zero there is an explicit curve disjoint from the negative curve
and the blowup is a MDS. If both are positive the answer is no, except in
the two smallest cases where it is left open.
"""

from fractions import Fraction

from negcurves.families import make_it, make_rt, negative_curve_budget
from negcurves.laurent import to_text
from negcurves.mds import classify, d0_intersection, witness_in_class
from negcurves.pell import chain_solution

s = chain_solution(4, 1)
for make in (make_it, make_rt):
    budget = negative_curve_budget(make(s))
    print(make(s), "budget", budget)
    for a, b in [(0, 0), (0, budget), (budget / 2, 0), (budget / 3, budget / 3)]:
        t = make(s, a, b)
        v = classify(t)
        line = f"  alpha={Fraction(a)!s:6} beta={Fraction(b)!s:6} {v.status.value:8} D0.C={d0_intersection(t)}"
        if v.witness is not None:
            line += f"  witness in class: {witness_in_class(t, v.witness)}"
        print(line)

# the integral witness for beta = 0 is a power of the previous rational curve
print(to_text(classify(make_it(s, Fraction(1, 16), 0)).witness))

# N = 1: the integral case with both margins positive is not decided
print(classify(make_it(chain_solution(5, 1), Fraction(1, 20), Fraction(1, 20))))
