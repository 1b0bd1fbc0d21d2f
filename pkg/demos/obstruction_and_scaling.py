"""
An ideal whose minimal resolution carries no product, until scaled
==================================================================

"""

from dgares.betti import betti_table
from dgares.complexes import is_minimal, is_resolution
from dgares.corpus import path_ideal
from dgares.homotopy import scaled_dga
from dgares.minimize import minimal_resolution
from dgares.multiplication import check_dga_axioms, taylor_multiplication, transfer_multiplication
from dgares.solve import leibniz_solution_space
from dgares.structure import avramov_obstruction

ideal = path_ideal(6)
print("ideal:", ideal.generators)
print("betti totals:", betti_table(ideal).totals())

# transferring the shuffle product down to the minimal resolution
# keeps every axiom except associativity
res = minimal_resolution(ideal)
down = transfer_multiplication(taylor_multiplication(res.taylor), res.transfer)
print("transferred product:", check_dga_axioms(down).summary())

# and no other choice does better: the full space of Leibniz
# multiplications on this resolution contains no associative member,
# certified degree by degree
rep = avramov_obstruction(ideal)
print("obstruction certificate ok:", rep.ok)
print("  vanishing windows:", rep.betti_vanishing)
print("  combination:", sorted(rep.combination.coeffs.items()))
print("  unique-degree witnesses:", rep.scarf_witnesses)

space = leibniz_solution_space(res.complex)
print("solution space dimension:", space.dim)

# multiplying every generator by a fresh variable changes nothing
# combinatorial, but the scaled copy does carry a full product
sd = scaled_dga(ideal)
assert is_resolution(sd.complex, sd.scaled_ideal) and is_minimal(sd.complex)
print("scaled ideal:", sd.scaled_ideal.generators)
print("scaled product:", check_dga_axioms(sd.multiplication).summary())

# the scaled product, pushed back over the original ideal, needs
# negative exponents: it is defined over Laurent polynomials only
by_id = sd.laurent.complex.by_id
neg = [
    ((u, v), w)
    for (u, v), row in sd.laurent.table.items()
    for w in row
    if any(
        a + b - c < 0
        for a, b, c in zip(by_id[u].mdeg, by_id[v].mdeg, by_id[w].mdeg)
    )
]
print("laurent entries with negative exponents:", len(neg))
