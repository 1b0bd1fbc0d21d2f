"""Contracting homotopies of scalarized resolutions and the products
they induce.

Reading only the scalar coefficients of a resolution of S/I gives an
exact complex of Q-vector spaces: after inverting all variables the
ideal contains units, so the localized complex resolves zero, and every
multidegree strand of it is the full scalar complex.  A contraction s
of that complex (ds + sd = id, ss = 0) turns each Leibniz right-hand
side into a product, u*v := s(du * v + (-1)^|u| u * dv), level by
level.  The table is a DGA whose implied monomials may carry negative
exponents; shifting every positive-degree basis degree by the lcm of
the generators makes them polynomial again.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .complexes import Element, FreeComplex
from .ideals import scale_ideal, vec_add
from .minimize import minimal_resolution
from .multiplication import Multiplication
from .solve import canonical_pairs

ONE = Fraction(1)


class Homotopy:
    """A contraction of the scalar complex: sigma[i] maps scalar
    coordinates at hdeg i to hdeg i+1, with d sigma + sigma d = id,
    sigma sigma = 0 and sigma d sigma = sigma."""

    __slots__ = ("complex", "sigma", "orders")

    def __init__(self, complex_, sigma):
        self.complex = complex_
        self.sigma = sigma
        self.orders = {
            i: [b.bid for b in complex_.basis_at(i)]
            for i in range(complex_.max_hdeg + 1)
        }

    def apply(self, f):
        """sigma on an element; the multidegree rides along unchanged,
        so the result is Laurent in general."""
        i = f.hdeg
        if i < 0 or i not in self.sigma:
            return Element(i + 1, f.mdeg, {})
        vec = [f.coeffs.get(g, Fraction(0)) for g in self.orders[i]]
        out = linalg.mat_vec(self.sigma[i], vec)
        target = self.orders.get(i + 1, [])
        return Element(i + 1, f.mdeg, {g: c for g, c in zip(target, out) if c})

    def verify(self):
        """Exact matrix check of the contraction identities."""
        mats = self.complex.matrices()
        top = self.complex.max_hdeg
        sizes = {i: len(self.orders.get(i, [])) for i in range(top + 2)}
        for i in range(top + 1):
            n = sizes[i]
            acc = linalg.zeros(n, n)
            if i + 1 in mats and sizes[i + 1]:
                acc = linalg.mat_mul(mats[i + 1], self.sigma[i])
            if i >= 1 and sizes[i - 1]:
                lower = linalg.mat_mul(self.sigma[i - 1], mats[i])
                acc = [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(acc, lower)]
            if acc != linalg.identity(n):
                return False
            if i + 1 <= top and sizes[i + 1]:
                if any(any(row) for row in linalg.mat_mul(self.sigma[i + 1], self.sigma[i])):
                    return False
                sds = linalg.mat_mul(
                    self.sigma[i], linalg.mat_mul(mats[i + 1], self.sigma[i])
                )
                if sds != self.sigma[i]:
                    return False
        return True


def _pivot_columns(mat):
    if not mat or not mat[0]:
        return []
    return linalg.rref(mat)[1]


def contracting_homotopy(complex_):
    """Build a contraction of the scalar complex.

    At each hdeg i the pivot columns of d_{i+1} span a complement V of
    ker d_{i+1}, and exactness forces Q^{n_i} = d(V) + V_i with V_i the
    pivot coordinates of d_i; sigma inverts d on the first summand and
    kills the second.  Raises when the scalar complex is not exact,
    which means the input was not a resolution."""
    mats = complex_.matrices()
    top = complex_.max_hdeg
    sizes = {i: len(complex_.basis_at(i)) for i in range(top + 2)}
    pivots = {i: _pivot_columns(mats.get(i)) for i in range(1, top + 2)}
    sigma = {}
    for i in range(top + 1):
        n = sizes[i]
        d_next = mats.get(i + 1)
        p_next = pivots.get(i + 1, [])
        p_cur = pivots.get(i, []) if i >= 1 else []
        cols = [[d_next[r][j] for r in range(n)] for j in p_next]
        for j in p_cur:
            cols.append([ONE if r == j else Fraction(0) for r in range(n)])
        if len(cols) != n:
            raise ValueError(f"scalar complex is not exact at hdeg {i}; not a resolution")
        m = [[cols[c][r] for c in range(n)] for r in range(n)]
        inv_cols = linalg.solve_many(m, [list(col) for col in linalg.identity(n)])
        if any(c is None for c in inv_cols):
            raise ValueError(f"scalar complex is not exact at hdeg {i}; not a resolution")
        s = linalg.zeros(sizes.get(i + 1, 0), n)
        for t, row_idx in enumerate(p_next):
            for j in range(n):
                s[row_idx][j] = inv_cols[j][t]
        sigma[i] = s
    return Homotopy(complex_, sigma)


def _concrete_rhs(complex_, table, u, v):
    """d(u)*v + (-1)^|u| u*d(v) with products drawn from a partial
    scalar table on canonical pairs."""
    by_id = complex_.by_id

    def prod(a, b):
        ba, bb = by_id[a], by_id[b]
        if ba.hdeg == 0:
            return {b: ONE}
        if bb.hdeg == 0:
            return {a: ONE}
        sign = ONE
        if a > b:
            a, b = b, a
            sign = ONE * (-1) ** (ba.hdeg * bb.hdeg)
        if a == b and ba.hdeg % 2 == 1:
            return {}
        row = table.get((a, b), {})
        if sign == ONE:
            return row
        return {w: sign * c for w, c in row.items()}

    acc = {}
    for h, d in complex_.diff_of(u).items():
        for w, c in prod(h, v).items():
            acc[w] = acc.get(w, 0) + d * c
    s = ONE * (-1) ** by_id[u].hdeg
    for h, d in complex_.diff_of(v).items():
        for w, c in prod(u, h).items():
            acc[w] = acc.get(w, 0) + s * d * c
    bu, bv = by_id[u], by_id[v]
    return Element(bu.hdeg + bv.hdeg - 1, vec_add(bu.mdeg, bv.mdeg), acc)


def laurent_dga(complex_, homotopy=None):
    """The contraction-induced multiplication, with Laurent
    coefficients allowed.

    Every product of positive-degree elements lies in the image of
    sigma, and a sigma-image cycle is zero (ss = 0), which kills the
    associator; the result is an honest DGA over the Laurent ring."""
    if homotopy is None:
        homotopy = contracting_homotopy(complex_)
    table = {}
    for pair in canonical_pairs(complex_):
        u, v = pair
        rho = _concrete_rhs(complex_, table, u, v)
        prod = homotopy.apply(rho)
        if prod.coeffs:
            table[pair] = dict(prod.coeffs)
    return Multiplication(complex_, table, laurent=True)


def scale_complex(complex_, s):
    """Shift every basis degree in positive hdeg by s; scalar data is
    untouched, so resolutions stay resolutions (of the scaled ideal)."""
    return complex_.with_degrees(
        lambda b: b.mdeg if b.hdeg == 0 else vec_add(b.mdeg, s)
    )


@dataclass
class ScaledDGA:
    """A minimal DGA resolution of x^s * I, s = lcm of the generators.

    base/laurent are the minimal resolution of S/I and its contraction
    product; complex/multiplication are the shifted copies.  Every basis
    degree divides x^s, so all shifted product exponents are >= 0."""

    ideal: object
    scaled_ideal: object
    base: FreeComplex
    laurent: Multiplication
    complex: FreeComplex
    multiplication: Multiplication


def scaled_dga(ideal, cap=16):
    res = minimal_resolution(ideal, cap=cap)
    lau = laurent_dga(res.complex)
    s = ideal.top_degree()
    shifted = scale_complex(res.complex, s)
    mult = Multiplication(shifted, {p: dict(r) for p, r in lau.table.items()})
    return ScaledDGA(ideal, scale_ideal(ideal), res.complex, lau, shifted, mult)
