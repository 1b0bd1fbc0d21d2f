"""Multigraded free complexes with scalarized differentials.

A complex stores, per homological degree, an ordered list of basis
elements carrying multidegrees, and the differential as scalar
coefficients only: the entry c on (g -> h) means the actual matrix
entry is c * x^(mdeg g - mdeg h).  Because monomial factors telescope
under composition, dated identities like d∘d = 0 reduce to exact scalar
identities, and homology in a fixed multidegree becomes plain linear
algebra over Q.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import linalg
from .ideals import (
    divides, join_all, is_squarefree, squarefree_cap, vec_sub, zero_degree,
)
from .lattices import lcm_lattice
from .simplicial import SimplicialComplex

ONE = Fraction(1)


@dataclass(frozen=True)
class BasisElement:
    """bid is an opaque sortable id; Taylor-derived bases use the sorted
    tuple of generator indices, and the hdeg-0 generator is ()."""

    bid: tuple
    hdeg: int
    mdeg: tuple
    label: frozenset = None


class Element:
    """A homogeneous element of a free complex.

    Stored as (hdeg, mdeg, coeffs) where coeffs maps basis id -> scalar;
    the monomial on basis g is implied: x^(mdeg - mdeg g).  Over the
    polynomial ring those exponents are nonnegative; Laurent-context
    elements simply drop that constraint.
    """

    __slots__ = ("hdeg", "mdeg", "coeffs")

    def __init__(self, hdeg, mdeg, coeffs=None):
        self.hdeg = hdeg
        self.mdeg = tuple(mdeg)
        self.coeffs = {g: c for g, c in (coeffs or {}).items() if c}

    def is_zero(self):
        return not self.coeffs

    def add(self, other):
        assert self.hdeg == other.hdeg and self.mdeg == other.mdeg
        out = dict(self.coeffs)
        for g, c in other.coeffs.items():
            out[g] = out.get(g, 0) + c
        return Element(self.hdeg, self.mdeg, out)

    def sub(self, other):
        return self.add(other.scale(-ONE))

    def scale(self, c):
        return Element(self.hdeg, self.mdeg, {g: c * v for g, v in self.coeffs.items()})

    def neg(self):
        return self.scale(-ONE)

    def shifted(self, m):
        """Multiply by the monomial x^m (multidegree translation)."""
        return Element(self.hdeg, tuple(a + b for a, b in zip(self.mdeg, m)), self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and self.hdeg == other.hdeg
            and self.mdeg == other.mdeg
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        terms = ", ".join(f"{c}*{g}" for g, c in sorted(self.coeffs.items()))
        return f"Element(hdeg={self.hdeg}, mdeg={self.mdeg}, [{terms}])"


class FreeComplex:
    """bases: {hdeg: ordered list of BasisElement};
    diff: {source id: {target id: scalar}} with one drop in hdeg per entry."""

    __slots__ = ("num_vars", "bases", "diff", "augmented", "by_id")

    def __init__(self, num_vars, bases, diff, augmented=True, check=True):
        self.num_vars = num_vars
        self.bases = {i: list(b) for i, b in bases.items() if b}
        self.diff = {g: {h: c for h, c in row.items() if c} for g, row in diff.items()}
        self.diff = {g: row for g, row in self.diff.items() if row}
        self.augmented = augmented
        self.by_id = {}
        for blist in self.bases.values():
            for b in blist:
                if b.bid in self.by_id:
                    raise ValueError(f"duplicate basis id {b.bid}")
                self.by_id[b.bid] = b
        if check:
            self.validate()

    # -- structure ---------------------------------------------------------

    @property
    def max_hdeg(self):
        return max(self.bases) if self.bases else 0

    def basis_at(self, i):
        return self.bases.get(i, [])

    def ranks(self):
        return tuple(len(self.basis_at(i)) for i in range(self.max_hdeg + 1))

    def diff_of(self, bid):
        return self.diff.get(bid, {})

    def basis_element(self, bid):
        b = self.by_id[bid]
        return Element(b.hdeg, b.mdeg, {bid: ONE})

    def unit(self):
        assert self.augmented
        (b,) = self.basis_at(0)
        return Element(0, b.mdeg, {b.bid: ONE})

    def validate(self):
        if self.augmented:
            zeros = self.basis_at(0)
            if len(zeros) != 1 or any(zeros[0].mdeg):
                raise ValueError("augmented complex needs exactly one hdeg-0 generator in degree 0")
        for g, row in self.diff.items():
            src = self.by_id[g]
            for h, c in row.items():
                tgt = self.by_id[h]
                if tgt.hdeg != src.hdeg - 1:
                    raise ValueError(f"diff entry {g}->{h} does not drop hdeg by one")
                if not divides(tgt.mdeg, src.mdeg):
                    raise ValueError(f"diff entry {g}->{h} violates multigrading")
        for g in self.diff:
            acc = {}
            for h, c1 in self.diff[g].items():
                for e, c2 in self.diff_of(h).items():
                    acc[e] = acc.get(e, 0) + c1 * c2
            if any(acc.values()):
                raise ValueError(f"d∘d != 0 at {g}")

    def apply_diff(self, f):
        out = {}
        for g, c in f.coeffs.items():
            for h, c2 in self.diff_of(g).items():
                out[h] = out.get(h, 0) + c * c2
        return Element(f.hdeg - 1, f.mdeg, out)

    def restricted_to(self, ids):
        """Subcomplex on the given basis ids; the differential must not
        leave the id set."""
        ids = set(ids)
        bases = {
            i: [b for b in blist if b.bid in ids] for i, blist in self.bases.items()
        }
        diff = {}
        for g in ids:
            row = self.diff_of(g)
            if not row:
                continue
            for h in row:
                assert h in ids, f"differential leaves the subcomplex at {g}->{h}"
            diff[g] = dict(row)
        return FreeComplex(self.num_vars, bases, diff, augmented=self.augmented)

    def with_degrees(self, mdeg_map, num_vars=None):
        """Same ids and scalar differential, new multidegrees."""
        n = self.num_vars if num_vars is None else num_vars
        bases = {
            i: [BasisElement(b.bid, b.hdeg, mdeg_map(b), b.label) for b in blist]
            for i, blist in self.bases.items()
        }
        return FreeComplex(n, bases, self.diff, augmented=self.augmented)

    def matrices(self):
        """{i: scalar matrix of d_i : F_i -> F_{i-1}} over the full bases,
        rows indexed by the hdeg i-1 basis order, columns by hdeg i."""
        out = {}
        for i in range(1, self.max_hdeg + 1):
            rows = self.basis_at(i - 1)
            cols = self.basis_at(i)
            idx = {b.bid: r for r, b in enumerate(rows)}
            mat = linalg.zeros(len(rows), len(cols))
            for c, src in enumerate(cols):
                for h, coeff in self.diff_of(src.bid).items():
                    mat[idx[h]][c] = coeff
            out[i] = mat
        return out


# -- constructions ---------------------------------------------------------


def taylor_complex(ideal, cap=16):
    """The Taylor complex of a monomial ideal.

    Basis g_W per subset W of generator indices, deg g_W = lcm(W),
    d(g_W) = sum over m in W of (-1)^pos * (lcm W / lcm W-m) * g_(W-m)
    where pos counts the generators of W preceding m in input order.
    """
    k = ideal.k
    if k > cap:
        raise ValueError(f"{k} generators exceed the Taylor cap of {cap}")
    bases = {}
    diff = {}
    for size in range(k + 1):
        blist = []
        for w in combinations(range(k), size):
            mdeg = ideal.lcm_of(w)
            blist.append(BasisElement(w, size, mdeg, frozenset(w)))
            if size >= 1:
                row = {}
                for pos in range(size):
                    sub = w[:pos] + w[pos + 1:]
                    row[sub] = Fraction(-1) ** pos
                diff[w] = row
        bases[size] = blist
    return FreeComplex(ideal.num_vars, bases, diff)


def scarf_complex(ideal):
    """Subsets of generators whose lcm is unique among all subsets."""
    k = ideal.k
    multiplicity = {}
    for size in range(k + 1):
        for w in combinations(range(k), size):
            d = ideal.lcm_of(w)
            multiplicity[d] = multiplicity.get(d, 0) + 1
    faces = set()
    for size in range(k + 1):
        for w in combinations(range(k), size):
            if multiplicity[ideal.lcm_of(w)] == 1:
                faces.add(frozenset(w))
    # unique lcms are closed under subsets
    for f in faces:
        for v in f:
            assert f - {v} in faces
    return SimplicialComplex(k, frozenset(faces))


def algebraic_scarf(ideal):
    """The Taylor subcomplex spanned by the Scarf faces."""
    delta = scarf_complex(ideal)
    t = taylor_complex(ideal)
    ids = [tuple(sorted(f)) for f in delta.faces]
    return t.restricted_to(ids)


def lyubeznik(ideal, order):
    """Taylor subcomplex on the rooted sets for a total order on generators.

    `order` is a permutation of the generator indices listing them from
    smallest to largest.  W is rooted when for every tail T of W (in
    that order) no generator strictly below min(T) divides lcm(T).
    """
    k = ideal.k
    if sorted(order) != list(range(k)):
        raise ValueError(f"order {order} is not a permutation of 0..{k - 1}")
    pos = {g: p for p, g in enumerate(order)}
    t = taylor_complex(ideal)

    def rooted(w):
        ws = sorted(w, key=lambda g: pos[g])
        for i, head in enumerate(ws):
            tail_lcm = ideal.lcm_of(ws[i:])
            for q in range(k):
                if pos[q] < pos[head] and divides(ideal.generators[q], tail_lcm):
                    return False
        return True

    ids = [w for size in range(k + 1) for w in combinations(range(k), size) if rooted(w)]
    return t.restricted_to(ids)


# -- graded strands and homology ------------------------------------------


@dataclass
class GradedComponent:
    """The degree-a strand: per hdeg the surviving basis ids (mdeg <= a)
    and the scalar matrices between consecutive strands."""

    degree: tuple
    ids: dict
    matrices: dict


def graded_component(complex_, a):
    ids = {}
    for i, blist in complex_.bases.items():
        kept = [b.bid for b in blist if divides(b.mdeg, a)]
        if kept:
            ids[i] = kept
    matrices = {}
    top = max(ids) if ids else 0
    for i in range(1, top + 1):
        rows = ids.get(i - 1, [])
        cols = ids.get(i, [])
        idx = {h: r for r, h in enumerate(rows)}
        mat = linalg.zeros(len(rows), len(cols))
        for c, g in enumerate(cols):
            for h, coeff in complex_.diff_of(g).items():
                # targets stay under a by multigrading
                mat[idx[h]][c] = coeff
        matrices[i] = mat
    return GradedComponent(tuple(a), ids, matrices)


def homology_dims(gc):
    """{i: dim_k H_i} of a graded component."""
    top = max(gc.ids) if gc.ids else -1
    dims = {}
    ranks = {}
    for i in range(1, top + 2):
        mat = gc.matrices.get(i)
        ranks[i] = linalg.rank(mat) if mat else 0
    for i in range(0, top + 1):
        n_i = len(gc.ids.get(i, []))
        kernel = n_i - ranks.get(i, 0) if i >= 1 else n_i
        dims[i] = kernel - ranks.get(i + 1, 0)
    return dims


def exactness_test_degrees(ideal):
    """All lcm-lattice degrees plus pairwise joins (the lattice is
    join-closed, so the joins add nothing; kept for explicitness)."""
    lattice = lcm_lattice(ideal)
    degrees = set(lattice.elements)
    elems = list(lattice.elements)
    for i, a in enumerate(elems):
        for b in elems[i:]:
            degrees.add(tuple(max(x, y) for x, y in zip(a, b)))
    return sorted(degrees)


def is_resolution(complex_, ideal):
    """Does the complex resolve S/I?  Checked degreewise on the lcm
    lattice: strands must be exact in positive hdeg, and H_0 must be
    k exactly when x^a is outside the ideal."""
    if not complex_.augmented:
        return False
    for a in exactness_test_degrees(ideal):
        dims = homology_dims(graded_component(complex_, a))
        expected_h0 = 0 if ideal.contains_monomial(a) else 1
        if dims.get(0, 0) != expected_h0:
            return False
        if any(d != 0 for i, d in dims.items() if i >= 1):
            return False
    return True


def is_minimal(complex_):
    """No differential entry between equal multidegrees (no unit entries)."""
    for g, row in complex_.diff.items():
        src = complex_.by_id[g]
        for h in row:
            if complex_.by_id[h].mdeg == src.mdeg:
                return False
    return True


# -- squarefree part -------------------------------------------------------


def squarefree_part(complex_, f):
    """Factor f = x^m * f' with deg f' = (deg f) wedge (1,...,1).

    Defined for complexes with squarefree basis degrees; k-linear on
    each multidegree (but not S-linear).  Returns (m, f').
    """
    for g in f.coeffs:
        if not is_squarefree(complex_.by_id[g].mdeg):
            raise ValueError(f"basis degree of {g} is not squarefree")
    cap = squarefree_cap(f.mdeg)
    m = vec_sub(f.mdeg, cap)
    return m, Element(f.hdeg, cap, f.coeffs)


def try_squarefree_part(complex_, f):
    """squarefree_part with the guard disabled: returns None when some
    support term does not fit under the capped degree."""
    cap = squarefree_cap(f.mdeg)
    for g in f.coeffs:
        if not divides(complex_.by_id[g].mdeg, cap):
            return None
    return vec_sub(f.mdeg, cap), Element(f.hdeg, cap, f.coeffs)


# -- misc helpers ----------------------------------------------------------


def strand_ids(complex_, hdeg, a):
    return [b.bid for b in complex_.basis_at(hdeg) if divides(b.mdeg, a)]


def element_vector(f, ids):
    return [f.coeffs.get(g, Fraction(0)) for g in ids]


def vector_element(hdeg, a, ids, vec):
    return Element(hdeg, a, {g: c for g, c in zip(ids, vec) if c})
