"""Monomial ideals and multidegree arithmetic.

A multidegree is a plain tuple of nonnegative ints (exponent vector); a
monomial ideal is a finite antichain of multidegrees in a fixed number
of variables.  Generator order is significant everywhere downstream:
signs in differentials and products depend on it.
"""

from dataclasses import dataclass


def join(a, b):
    """Componentwise max = lcm of monomials."""
    return tuple(x if x > y else y for x, y in zip(a, b))


def meet(a, b):
    """Componentwise min = gcd of monomials."""
    return tuple(x if x < y else y for x, y in zip(a, b))


def divides(a, b):
    """x^a | x^b."""
    return all(x <= y for x, y in zip(a, b))


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def total_degree(a):
    return sum(a)


def zero_degree(n):
    return (0,) * n


def is_squarefree(a):
    return all(x <= 1 for x in a)


def squarefree_cap(a):
    """a wedge (1,...,1)."""
    return tuple(1 if x >= 1 else 0 for x in a)


def join_all(degrees, n):
    out = zero_degree(n)
    for d in degrees:
        out = join(out, d)
    return out


@dataclass(frozen=True)
class MonomialIdeal:
    """An ordered minimal generating set of monomials.

    Invariants enforced at construction: nonempty, all exponents >= 0,
    no duplicates, no generator divides another.  Use
    minimal_generators() to build one from an arbitrary monomial list.
    """

    num_vars: int
    generators: tuple

    def __post_init__(self):
        if self.num_vars < 0:
            raise ValueError("num_vars must be >= 0")
        gens = self.generators
        if not gens:
            raise ValueError("a monomial ideal needs at least one generator")
        for g in gens:
            if len(g) != self.num_vars:
                raise ValueError(f"generator {g} has wrong length, expected {self.num_vars}")
            if any(e < 0 for e in g):
                raise ValueError(f"generator {g} has a negative exponent")
        for i, g in enumerate(gens):
            for j, h in enumerate(gens):
                if i != j and divides(g, h):
                    raise ValueError(
                        f"generator {g} divides generator {h}; not a minimal generating set"
                    )

    @property
    def k(self):
        return len(self.generators)

    def contains_monomial(self, a):
        """x^a in I?"""
        return any(divides(g, a) for g in self.generators)

    def lcm_of(self, subset):
        """lcm of the generators indexed by subset."""
        return join_all((self.generators[i] for i in subset), self.num_vars)

    def is_squarefree(self):
        return all(is_squarefree(g) for g in self.generators)

    def top_degree(self):
        """lcm of all generators."""
        return self.lcm_of(range(self.k))


def minimal_generators(monomials, num_vars):
    """Prune an arbitrary monomial list to a minimal generating set.

    Keeps the first occurrence of each surviving monomial, in input
    order.  Raises on an empty input.
    """
    if not monomials:
        raise ValueError("empty monomial list")
    mons = [tuple(m) for m in monomials]
    keep = []
    for i, m in enumerate(mons):
        dominated = False
        for j, other in enumerate(mons):
            if i == j:
                continue
            if divides(other, m):
                if other != m or j < i:
                    dominated = True
                    break
        if not dominated:
            keep.append(m)
    return MonomialIdeal(num_vars, tuple(keep))


@dataclass(frozen=True)
class Polarization:
    """Result of polarizing a monomial ideal.

    var_blocks[i] is the half-open range (start, stop) of polarized
    variable indices that came from original variable i; depolarize()
    maps any polarized multidegree back to the original variables by
    counting within blocks, and restricts to a lattice isomorphism
    lcm_lattice(ideal) -> lcm_lattice(original).
    """

    original: MonomialIdeal
    ideal: MonomialIdeal
    var_blocks: tuple

    def depolarize(self, a):
        out = []
        for start, stop in self.var_blocks:
            out.append(sum(1 for j in range(start, stop) if a[j] >= 1))
        return tuple(out)

    def lattice_iso(self, lattice):
        """{polarized lattice element -> original multidegree} mapping."""
        return {e: self.depolarize(e) for e in lattice.elements}


def polarize(ideal):
    """Standard polarization: x_i^e becomes x_{i,1} ... x_{i,e}.

    Each original variable i contributes max(1, max exponent of x_i)
    new variables, so squarefree ideals come back unchanged.  The lcm
    lattices of input and output are isomorphic via depolarize.
    """
    n = ideal.num_vars
    heights = [1] * n
    for g in ideal.generators:
        for i, e in enumerate(g):
            if e > heights[i]:
                heights[i] = e
    blocks = []
    start = 0
    for h in heights:
        blocks.append((start, start + h))
        start += h
    total = start
    new_gens = []
    for g in ideal.generators:
        vec = [0] * total
        for i, e in enumerate(g):
            s, _ = blocks[i]
            for j in range(e):
                vec[s + j] = 1
        new_gens.append(tuple(vec))
    pol = MonomialIdeal(total, tuple(new_gens))
    return Polarization(ideal, pol, tuple(blocks))


def is_strongly_generic(ideal):
    """No variable appears with the same nonzero exponent in two generators."""
    for v in range(ideal.num_vars):
        seen = set()
        for g in ideal.generators:
            e = g[v]
            if e == 0:
                continue
            if e in seen:
                return False
            seen.add(e)
    return True


def scale_ideal(ideal, s=None):
    """The ideal x^s * I.  Default s = lcm of the generators."""
    if s is None:
        s = ideal.top_degree()
    gens = tuple(vec_add(s, g) for g in ideal.generators)
    return MonomialIdeal(ideal.num_vars, gens)
