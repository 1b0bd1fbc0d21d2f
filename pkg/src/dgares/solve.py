"""Solving the Leibniz rule for multiplications on a resolution.

The Leibniz constraints are linear in the table entries, and the entry
for a pair only depends on pairs of strictly smaller total homological
degree, so the full solution set is an affine space that can be built
level by level: solve each pair's linear system, absorb its kernel as
fresh free parameters, and carry everything forward as affine scalars.

Affine scalars are dicts {parameter index: coefficient} with the key -1
holding the constant term.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import linalg
from .complexes import Element
from .ideals import divides, vec_add
from .multiplication import Multiplication

ONE = Fraction(1)
CONST = -1


def aff_const(c):
    return {CONST: c} if c else {}


def aff_add(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v}


def aff_scale(a, c):
    if not c:
        return {}
    return {k: c * v for k, v in a.items()}


def aff_eval(a, values):
    out = a.get(CONST, Fraction(0))
    for k, v in a.items():
        if k != CONST:
            out += v * values[k]
    return out


def canonical_pairs(complex_):
    """Basis pairs (u, v) with u <= v, both of positive hdeg, odd
    squares excluded, sorted by total hdeg then by id."""
    ids = [
        b.bid
        for i, blist in sorted(complex_.bases.items())
        if i >= 1
        for b in blist
    ]
    pairs = list(combinations(sorted(ids), 2))
    pairs += [(u, u) for u in ids if complex_.by_id[u].hdeg % 2 == 0]

    def level(pair):
        u, v = pair
        return complex_.by_id[u].hdeg + complex_.by_id[v].hdeg

    return sorted(pairs, key=lambda p: (level(p), p))


def _strand_data(complex_, u, v):
    """Candidate product targets W, differential targets T, and the
    scalar matrix of d restricted to the strand below mdeg u + mdeg v."""
    bu, bv = complex_.by_id[u], complex_.by_id[v]
    level = bu.hdeg + bv.hdeg
    degree = vec_add(bu.mdeg, bv.mdeg)
    targets = [b.bid for b in complex_.basis_at(level) if divides(b.mdeg, degree)]
    below = [b.bid for b in complex_.basis_at(level - 1) if divides(b.mdeg, degree)]
    idx = {h: r for r, h in enumerate(below)}
    mat = linalg.zeros(len(below), len(targets))
    for c, w in enumerate(targets):
        for h, coeff in complex_.diff_of(w).items():
            mat[idx[h]][c] = coeff
    return degree, targets, below, mat


def _rhs_affine(complex_, table, u, v):
    """d(u)*v + (-1)^|u| u*d(v) with lower products taken from the
    affine table; returns {target id: affine scalar}."""
    by_id = complex_.by_id

    def prod(a, b):
        ba, bb = by_id[a], by_id[b]
        if ba.hdeg == 0:
            return {b: aff_const(ONE)}
        if bb.hdeg == 0:
            return {a: aff_const(ONE)}
        sign = ONE
        if a > b:
            a, b = b, a
            sign = ONE * (-1) ** (ba.hdeg * bb.hdeg)
        if a == b and ba.hdeg % 2 == 1:
            return {}
        row = table[(a, b)]
        if sign == ONE:
            return row
        return {w: aff_scale(aff, sign) for w, aff in row.items()}

    rho = {}
    for h, d in complex_.diff_of(u).items():
        for w, aff in prod(h, v).items():
            rho[w] = aff_add(rho.get(w, {}), aff_scale(aff, d))
    s = ONE * (-1) ** by_id[u].hdeg
    for h, d in complex_.diff_of(v).items():
        for w, aff in prod(u, h).items():
            rho[w] = aff_add(rho.get(w, {}), aff_scale(aff, s * d))
    return {w: aff for w, aff in rho.items() if aff}


@dataclass
class MultiplicationSpace:
    """The affine space of all multiplications on a complex.

    entries: {pair: {target id: affine scalar}} over `dim` parameters.
    Every parameter choice yields a multiplication (unit, multigraded,
    commutative, Leibniz); associativity is a further condition that
    holds on none, some, or all of the space.
    """

    complex: object
    entries: dict
    dim: int

    def table_at(self, values):
        assert len(values) == self.dim
        table = {}
        for pair, row in self.entries.items():
            concrete = {w: aff_eval(aff, values) for w, aff in row.items()}
            concrete = {w: c for w, c in concrete.items() if c}
            if concrete:
                table[pair] = concrete
        return table

    def at(self, values):
        return Multiplication(self.complex, self.table_at(values))

    def particular(self):
        return self.at((Fraction(0),) * self.dim)

    def entry(self, u, v, w):
        assert u <= v
        return self.entries.get((u, v), {}).get(w, {})

    def locate(self, mult):
        """Parameter values realizing a given multiplication, or None
        when it does not lie in the space.  The values are unique since
        each parameter is visible in the pair that introduced it."""
        assert set(mult.complex.by_id) == set(self.complex.by_id)
        rows = []
        rhs = []
        for pair in canonical_pairs(self.complex):
            row = self.entries.get(pair, {})
            given = mult.table.get(pair, {})
            for w in sorted(set(row) | set(given)):
                aff = row.get(w, {})
                rows.append([aff.get(p, Fraction(0)) for p in range(self.dim)])
                rhs.append(given.get(w, Fraction(0)) - aff.get(CONST, Fraction(0)))
        sol = linalg.solve(rows, rhs) if rows else []
        return None if sol is None else tuple(sol)


def leibniz_solution_space(complex_):
    """All multiplications on an augmented resolution, as an affine
    space.  Raises ValueError when some Leibniz system is unsolvable
    (which cannot happen when the complex is a resolution: the right
    hand side is a cycle in an exact strand)."""
    entries = {}
    dim = 0
    for pair in canonical_pairs(complex_):
        u, v = pair
        rho = _rhs_affine(complex_, entries, u, v)
        degree, targets, below, mat = _strand_data(complex_, u, v)
        assert all(w in below for w in rho), "rhs escapes the strand"
        params = sorted({p for aff in rho.values() for p in aff if p != CONST})
        rhs_list = []
        for key in [CONST] + params:
            rhs_list.append([rho.get(h, {}).get(key, Fraction(0)) for h in below])
        sols = linalg.solve_many(mat, rhs_list)
        if any(s is None for s in sols):
            raise ValueError(f"Leibniz has no solution at pair {pair}")
        row = {}
        for key, sol in zip([CONST] + params, sols):
            for w, c in zip(targets, sol):
                if c:
                    row[w] = aff_add(row.get(w, {}), {key: c})
        for vec in linalg.nullspace(mat, n=len(targets)):
            for w, c in zip(targets, vec):
                if c:
                    row[w] = aff_add(row.get(w, {}), {dim: c})
            dim += 1
        entries[pair] = row
    return MultiplicationSpace(complex_, entries, dim)


@dataclass
class ForcedProducts:
    """Products pinned down by the Leibniz rule alone.

    values: {canonical pair: Element or None}; None marks a pair whose
    product is not forced (its strand has room, or it depends on an
    unforced lower pair).  Odd squares count as forced zero."""

    complex: object
    values: dict

    def get(self, u, v):
        by_id = self.complex.by_id
        bu, bv = by_id[u], by_id[v]
        if bu.hdeg == 0:
            return self.complex.basis_element(v)
        if bv.hdeg == 0:
            return self.complex.basis_element(u)
        sign = ONE
        if u > v:
            u, v = v, u
            sign = ONE * (-1) ** (bu.hdeg * bv.hdeg)
        if u == v and bu.hdeg % 2 == 1:
            return Element(2 * bu.hdeg, vec_add(bu.mdeg, bv.mdeg), {})
        val = self.values.get((u, v))
        return None if val is None else val.scale(sign)

    def forced_pairs(self):
        return sorted(p for p, v in self.values.items() if v is not None)

    def free_pairs(self):
        return sorted(p for p, v in self.values.items() if v is None)


def forced_products(complex_):
    """Which basis products does Leibniz force, and to what value?

    A pair is forced when every lower pair it draws on is forced and its
    strand system has a unique solution (trivial kernel)."""
    by_id = complex_.by_id
    values = {}
    for u in sorted(complex_.by_id):
        b = by_id[u]
        if b.hdeg >= 1 and b.hdeg % 2 == 1:
            values[(u, u)] = Element(2 * b.hdeg, vec_add(b.mdeg, b.mdeg), {})

    def prod(a, b):
        ba, bb = by_id[a], by_id[b]
        if ba.hdeg == 0:
            return complex_.basis_element(b)
        if bb.hdeg == 0:
            return complex_.basis_element(a)
        sign = ONE
        if a > b:
            a, b = b, a
            sign = ONE * (-1) ** (ba.hdeg * bb.hdeg)
        val = values.get((a, b))
        return None if val is None else val.scale(sign)

    for pair in canonical_pairs(complex_):
        u, v = pair
        degree, targets, below, mat = _strand_data(complex_, u, v)
        rho = Element(by_id[u].hdeg + by_id[v].hdeg - 1, degree, {})
        blocked = False
        for h, d in complex_.diff_of(u).items():
            p = prod(h, v)
            if p is None:
                blocked = True
                break
            rho = rho.add(Element(rho.hdeg, degree, {w: d * c for w, c in p.coeffs.items()}))
        if not blocked:
            s = ONE * (-1) ** by_id[u].hdeg
            for h, d in complex_.diff_of(v).items():
                p = prod(u, h)
                if p is None:
                    blocked = True
                    break
                rho = rho.add(
                    Element(rho.hdeg, degree, {w: s * d * c for w, c in p.coeffs.items()})
                )
        if blocked:
            values[pair] = None
            continue
        if linalg.nullspace(mat, n=len(targets)):
            values[pair] = None
            continue
        rhs = [rho.coeffs.get(h, Fraction(0)) for h in below]
        sol = linalg.solve(mat, rhs)
        if sol is None:
            raise ValueError(f"Leibniz has no solution at pair {pair}")
        values[pair] = Element(
            by_id[u].hdeg + by_id[v].hdeg,
            degree,
            {w: c for w, c in zip(targets, sol) if c},
        )
    return ForcedProducts(complex_, values)


def associativity_scan(space, samples=20, rng=None, bound=5):
    """Sample the space and test associativity on basis triples.

    Returns [(values, witness)] where witness is None for associative
    members and a triple (u, v, w) otherwise."""
    if rng is None:
        rng = random.Random(0)
    complex_ = space.complex
    ids = [
        b.bid
        for i, blist in sorted(complex_.bases.items())
        if i >= 1
        for b in blist
    ]
    results = []
    for _ in range(samples):
        values = tuple(Fraction(rng.randint(-bound, bound)) for _ in range(space.dim))
        mult = space.at(values)
        witness = None
        for u in ids:
            fu = complex_.basis_element(u)
            for v in ids:
                p_uv = mult.product(u, v)
                for w in ids:
                    p_vw = mult.product(v, w)
                    if p_uv.is_zero() and p_vw.is_zero():
                        continue
                    left = mult.multiply(p_uv, complex_.basis_element(w))
                    right = mult.multiply(fu, p_vw)
                    if left != right:
                        witness = (u, v, w)
                        break
                if witness:
                    break
            if witness:
                break
        results.append((values, witness))
    return results
