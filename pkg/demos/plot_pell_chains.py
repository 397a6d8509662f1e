"""
Walking the Pell chains
=======================

Solutions of (M+N)^2 = K M N + 1 come in a single chain per K, generated
from (1, 0) by the map (M, N) -> ((K-2)M - N, M). Each solution gives two
triangles, and both hold exactly (m+1 choose 2)+1 lattice points.
"""

from negcurves import geometry as geo
from negcurves.families import expected_lattice_count, make_it, make_rt
from negcurves.pell import enumerate_chain, tau

# the first few solutions for K = 5
chain = enumerate_chain(5, 8)
print([s.pair for s in chain])

# tau steps back along the chain
s = chain[-1]
print(s.pair, "->", tau(s).pair)

# K = 3 is the exception: the chain closes up after three entries
print([s.pair for s in enumerate_chain(3, 8)])

for s in chain[2:6]:
    if s.M < 1 or s.N < 1:
        continue
    for t in (make_it(s), make_rt(s)):
        n = geo.lattice_count(t.triangle)
        print(f"{t!s:16} m={t.m:3}  points={n:5}  expected={expected_lattice_count(t.m)}")
