"""From a cone simplicial complex to a minimal DGA resolution.

The route: ideal_from_cone_complex builds a squarefree monomial ideal
whose lcm lattice is the face poset of the complex (plus a top when one
is missing); cone_morse_matching pairs every non-face Taylor basis
element with its apex partner; verify_morse_matching checks the pairing
is a valid acyclic matching with degree-equal edges; morse_quotient
cancels the matching, transfers the Taylor multiplication, and checks
that the matched span really is a two-sided DG-ideal, so the quotient
is again a DGA.  The quotient complex is minimal with ranks equal to
the f-vector of the input complex.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import linalg
from .ideals import MonomialIdeal, divides
from .lattices import Poset, lcm_lattice, poset_isomorphic
from .minimize import cancel_pairs
from .multiplication import transfer_multiplication

ZERO = Fraction(0)
ONE = Fraction(1)

# sentinel for the adjoined maximum of the expected lattice
TOP = "top"


def expected_cone_lattice(delta):
    """Face poset of the complex (empty face included), with an extra
    maximum adjoined unless the complex is the full simplex (whose face
    poset already has one; a second would break atomicity)."""
    elements = sorted(
        (tuple(sorted(f)) for f in delta.faces), key=lambda f: (len(f), f)
    )
    if not delta.is_full_simplex():
        elements.append(TOP)

    def leq(a, b):
        if b == TOP:
            return True
        if a == TOP:
            return False
        return set(a) <= set(b)

    return Poset.from_leq(tuple(elements), leq)


def ideal_from_cone_complex(delta):
    """Squarefree monomial ideal whose lcm lattice is the face poset of
    delta plus a top element.

    One variable per nonempty face; the generator for vertex j is the
    product of the variables at faces not containing j.  Then a subset
    W of vertices has lcm = product over faces p with W not a subset of
    p, so faces embed into the lcm lattice and every non-face hits the
    top.  The isomorphism with the expected poset is verified before
    returning; generator order equals vertex order.
    """
    k = delta.num_vertices
    if k < 1:
        raise ValueError("need at least one vertex")
    for j in range(k):
        if frozenset((j,)) not in delta.faces:
            raise ValueError(f"vertex {j} is not a face")
    if k == 1:
        # the construction below would give the unit monomial; a single
        # variable already has the right 2-chain lattice
        ideal = MonomialIdeal(1, ((1,),))
    else:
        face_vars = sorted(
            (tuple(sorted(f)) for f in delta.faces if f), key=lambda f: (len(f), f)
        )
        gens = []
        for j in range(k):
            gens.append(tuple(0 if j in p else 1 for p in face_vars))
        ideal = MonomialIdeal(len(face_vars), tuple(gens))
    iso = poset_isomorphic(expected_cone_lattice(delta), lcm_lattice(ideal).to_poset())
    if iso is None:
        raise AssertionError("lcm lattice does not match the face poset")
    return ideal


def cone_morse_matching(ideal, delta, apex):
    """Matching on Taylor basis ids of the ideal built from delta:
    every non-face W containing the apex pairs with W minus the apex.

    In a cone with this apex, adding or removing the apex maps
    non-faces to non-faces, so the pairing is perfect on non-faces and
    the unmatched ids are exactly the faces of delta.  Pairs come back
    as (lower, upper) in cancellation order.
    """
    faces = {tuple(sorted(f)) for f in delta.faces}
    k = ideal.k
    assert delta.num_vertices == k
    matching = []
    for size in range(1, k + 1):
        for w in combinations(range(k), size):
            if w in faces or apex not in w:
                continue
            lower = tuple(v for v in w if v != apex)
            assert lower not in faces, (lower, w)
            matching.append((lower, w))
    return matching


@dataclass
class MatchingReport:
    """Validity checks for a Morse matching on a free complex:
    disjointness of the pairs, existence of the matched differential
    edges, equal multidegrees along them (so cancellation stays
    multigraded), and acyclicity of the edge-reversed diagram."""

    disjoint: bool
    edges: bool
    equal_degrees: bool
    acyclic: bool

    @property
    def valid(self):
        return self.disjoint and self.edges and self.equal_degrees and self.acyclic


def verify_morse_matching(matching, complex_):
    seen = set()
    disjoint = True
    for lower, upper in matching:
        if lower in seen or upper in seen or lower == upper:
            disjoint = False
        seen.add(lower)
        seen.add(upper)

    edges = True
    equal_degrees = True
    for lower, upper in matching:
        bl = complex_.by_id.get(lower)
        bu = complex_.by_id.get(upper)
        if bl is None or bu is None or bu.hdeg != bl.hdeg + 1:
            edges = False
            continue
        if not complex_.diff_of(upper).get(lower):
            edges = False
        if bu.mdeg != bl.mdeg:
            equal_degrees = False

    # reversed diagram: matched edges point lower -> upper, all other
    # differential edges upper -> lower; a directed cycle kills the
    # Morse collapse
    matched = set(matching)
    graph = {bid: [] for bid in complex_.by_id}
    for lower, upper in matching:
        if upper in graph and lower in graph:
            graph[lower].append(upper)
    for g, row in complex_.diff.items():
        for h in row:
            if (h, g) not in matched:
                graph[g].append(h)
    acyclic = True
    state = {}
    for start in graph:
        if state.get(start):
            continue
        stack = [(start, iter(graph[start]))]
        state[start] = "open"
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if state.get(nxt) == "open":
                    acyclic = False
                elif nxt not in state:
                    state[nxt] = "open"
                    stack.append((nxt, iter(graph[nxt])))
                    advanced = True
                    break
            if not advanced:
                state[node] = "done"
                stack.pop()
        if not acyclic:
            break

    return MatchingReport(disjoint, edges, equal_degrees, acyclic)


def in_matched_span(complex_, uppers, f):
    """Is f in the S-span of {g_W, dg_W : W an upper element}?  Tested
    in the strand of f's multidegree."""
    if not f.coeffs:
        return True
    cols = [b.bid for b in complex_.basis_at(f.hdeg) if divides(b.mdeg, f.mdeg)]
    index = {c: j for j, c in enumerate(cols)}
    rows = []
    for w in uppers:
        bw = complex_.by_id[w]
        if bw.hdeg == f.hdeg and divides(bw.mdeg, f.mdeg):
            row = [ZERO] * len(cols)
            row[index[w]] = ONE
            rows.append(row)
        elif bw.hdeg == f.hdeg + 1 and divides(bw.mdeg, f.mdeg):
            d = complex_.diff_of(w)
            rows.append([d.get(c, ZERO) for c in cols])
    vec = [f.coeffs.get(c, ZERO) for c in cols]
    return linalg.in_row_space(rows, vec)


def dga_ideal_check(mult, matching, max_witnesses=10):
    """Is the matched span a two-sided DG-ideal?  It is closed under
    the differential by construction, so only products need checking:
    g_u * g_W and g_u * dg_W must stay in the span for every basis u
    and matched upper W.  Returns (ok, witnesses)."""
    T = mult.complex
    uppers = [u for (_, u) in matching]
    ids = [
        b.bid
        for i, blist in sorted(T.bases.items())
        if i >= 1
        for b in blist
    ]
    witnesses = []
    for w in uppers:
        gw = T.basis_element(w)
        dgw = T.apply_diff(gw)
        for u in ids:
            gu = T.basis_element(u)
            for f in (gw, dgw):
                if not in_matched_span(T, uppers, mult.multiply(gu, f)):
                    witnesses.append((u, w))
                    break
    return not witnesses, witnesses[:max_witnesses]


def morse_quotient(taylor, mult, matching):
    """Cancel a verified matching, transfer the multiplication, and
    check the matched span is a DG-ideal (so the quotient inherits a
    DGA structure, not just a chain homotopy type).

    Returns (small complex, transferred multiplication, transfer data).
    Raises ValueError when a pair never becomes cancellable or the span
    fails the ideal check.
    """
    assert mult.complex is taylor
    ok, wit = dga_ideal_check(mult, matching)
    if not ok:
        raise ValueError(f"matched span is not a DG-ideal; witness {wit[:1]}")
    small, transfer, leftover = cancel_pairs(taylor, matching)
    if leftover:
        raise ValueError(f"uncancellable pairs remain: {leftover[:3]}")
    return small, transfer_multiplication(mult, transfer), transfer
