"""
Minimal resolutions and Betti numbers, two ways
===============================================

"""

from dgares.betti import betti_table, betti_table_direct, t_vector
from dgares.complexes import is_minimal, is_resolution, taylor_complex
from dgares.ioformats import parse_ideal_text
from dgares.minimize import minimize

# an ideal can be written as monomials, one generator per line
ideal = parse_ideal_text("""
vars: 6
x1*x2
x2*x3
x3*x4
x4*x5
x5*x6
x6*x1
""")
print("ideal:", ideal.generators)

# the full simplex complex has one basis element per generator subset
T = taylor_complex(ideal)
print("full complex ranks:", T.ranks())

# cancelling equal-degree differential entries shrinks it to the
# minimal resolution, together with an inclusion/projection/homotopy
# triple certifying the homotopy equivalence
small, transfer = minimize(T)
assert is_resolution(small, ideal) and is_minimal(small)
assert transfer.verify()
print("minimal ranks:", small.ranks())

# the ranks, graded finely, are the Betti numbers; an independent
# route computes them as homology of equal-degree strands
table = betti_table(ideal)
direct = betti_table_direct(ideal)
assert table.entries == direct.entries
print("betti totals:", table.totals())
for i in range(1, table.projective_dimension() + 1):
    print("  degrees in hdeg %d:" % i,
          " ".join(str(list(a)) for a in table.degrees(i)))

# the t-vector records the top total degree per homological degree
print("t-vector:", t_vector(table).values)
