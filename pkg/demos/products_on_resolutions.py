"""
Products on resolutions: the shuffle product and its relatives
==============================================================

"""

from fractions import Fraction

from dgares.complexes import algebraic_scarf, taylor_complex
from dgares.corpus import tagged_four_cycle_ideal, taylor_equals_scarf_ideal
from dgares.multiplication import check_dga_axioms, taylor_multiplication
from dgares.solve import leibniz_solution_space

# the full simplex complex always carries the shuffle product, an
# honest associative multiplication
ideal = taylor_equals_scarf_ideal()
T = taylor_complex(ideal)
MT = taylor_multiplication(T)
print("shuffle product axioms:", check_dga_axioms(MT).summary())

# this particular complex is already minimal, so every Leibniz
# multiplication on the minimal resolution lives in one affine space;
# here it is a line, with the shuffle product at parameter 1
space = leibniz_solution_space(T)
print("solution space dimension:", space.dim)
print("shuffle product sits at:", space.locate(MT))

# the point at parameter 0 is a different associative product
modified = space.particular()
print("modified product axioms:", check_dga_axioms(modified).summary())
for pair in sorted(modified.table):
    print("  %s * %s -> %s" % (pair[0], pair[1], modified.table[pair]))

# a four-generator ideal whose opposite generators have no forced
# product: its space is a plane, and distinct members are genuinely
# different multiplications that all satisfy every axiom
four = tagged_four_cycle_ideal()
plane = leibniz_solution_space(algebraic_scarf(four))
print("four-cycle space dimension:", plane.dim)
pair = ((0,), (2,))
for values in [(Fraction(0), Fraction(0)), (Fraction(0), Fraction(-1))]:
    member = plane.at(values)
    print("  at %s: %s * %s -> %s, axioms %s"
          % (values, pair[0], pair[1], member.table.get(pair, {}),
             check_dga_axioms(member).summary()))
