"""
Which products are forced, and which are free
=============================================

"""

import random
from fractions import Fraction

from dgares.complexes import algebraic_scarf
from dgares.corpus import strongly_generic_ideal
from dgares.ideals import is_strongly_generic, total_degree
from dgares.multiplication import associator
from dgares.solve import associativity_scan, forced_products, leibniz_solution_space

# no variable appears with the same nonzero exponent in two
# generators, so the unique-degree subsets already span the minimal
# resolution
ideal = strongly_generic_ideal()
assert is_strongly_generic(ideal)
res = algebraic_scarf(ideal)
print("ranks:", res.ranks())
for i, blist in sorted(res.bases.items()):
    if i == 0:
        continue
    print("  hdeg %d:" % i, " ".join(
        "%s(deg %d)" % (b.bid, total_degree(b.mdeg)) for b in blist))

# the Leibniz rule alone pins down many products before any choice is
# made; pairs whose row is determined are "forced"
fp = forced_products(res)
print("forced pairs: %d, free pairs: %d"
      % (len(fp.forced_pairs()), len(fp.free_pairs())))
shown = 0
for pair in fp.forced_pairs():
    value = fp.get(*pair)
    if value.is_zero():
        continue
    print("  %s * %s -> %s" % (pair[0], pair[1], dict(value.coeffs)))
    shown += 1
    if shown == 4:
        break

# forced rows are invariant across the whole solution space: sampling
# parameters changes only the free pairs
space = leibniz_solution_space(res)
pair = ((0,), (2,))
rows = {
    tuple(space.at((Fraction(t),)).table.get(pair, {}).items())
    for t in (-2, 0, 5)
}
print("forced row %s * %s constant across samples: %s"
      % (pair[0], pair[1], len(rows) == 1))

# yet no member of the space is associative: the associator of the
# three outer generators is a boundary that no parameter kills
scan = associativity_scan(space, samples=12, rng=random.Random(7))
print("associative members among %d samples: %d"
      % (len(scan), sum(1 for _, w in scan if w is None)))

M = space.particular()
g = res.basis_element
gap = associator(M, g((0,)), g((2,)), g((4,)))
print("associator of the outer generators:", dict(gap.coeffs))
print("equals the boundary of the top face shifted by (0,1,1,0):",
      gap == res.apply_diff(g((0, 1, 3, 4))).shifted((0, 1, 1, 0)))
