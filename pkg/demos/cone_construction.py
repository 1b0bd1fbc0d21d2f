"""
From a cone complex to an ideal with a prescribed lattice
=========================================================

"""

from dgares.complexes import is_minimal, is_resolution, taylor_complex
from dgares.morse import (
    cone_morse_matching,
    ideal_from_cone_complex,
    morse_quotient,
    verify_morse_matching,
)
from dgares.multiplication import check_dga_axioms, taylor_multiplication
from dgares.simplicial import SimplicialComplex, cone, f_vector, is_cone_fvector
from dgares.structure import hilbert_cone_check

# start from a cone: here the cone over a path on three vertices
base = SimplicialComplex.from_faces(3, [(0, 1), (1, 2)])
delta = cone(base)
print("cone f-vector:", f_vector(delta))

# one squarefree variable per nonempty face, one generator per vertex;
# the lcm lattice of the result is the face poset with a top adjoined
ideal = ideal_from_cone_complex(delta)
print("ideal: %d generators in %d variables" % (ideal.k, ideal.num_vars))

# pair every non-face containing the apex with the same set minus the
# apex; the pairs have equal degrees and the matching is acyclic
apex = delta.num_vertices - 1
matching = cone_morse_matching(ideal, delta, apex)
T = taylor_complex(ideal)
report = verify_morse_matching(matching, T)
print("matching: %d pairs, valid %s" % (len(matching), report.valid))

# the matched span is a DG-ideal for the shuffle product, so the
# quotient inherits a full associative multiplication and the quotient
# complex is the minimal resolution
small, mult, transfer = morse_quotient(T, taylor_multiplication(T), matching)
assert is_resolution(small, ideal) and is_minimal(small)
print("quotient ranks:", small.ranks())
assert small.ranks() == f_vector(delta)
print("quotient product:", check_dga_axioms(mult).summary())

# whenever a minimal resolution carries such a product, its rank
# sequence deconvolves as (1,1) * (f-vector of the base)
hc = hilbert_cone_check(mult)
print("hilbert sequence %s = (1,1) * %s, passed %s"
      % (hc.hilbert, hc.cone_base, hc.passed))

# going the other way, some vectors are ruled out: no cone, in fact no
# simplicial complex at all, has the face counts 1 6 9 6 2
for vec in ((1, 4, 5, 2), (1, 6, 9, 6, 2)):
    print("is_cone_fvector%s = %s" % (vec, is_cone_fvector(vec)))
