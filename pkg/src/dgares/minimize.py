"""Gaussian cancellation of unit differential entries, with transfer data.

Cancelling a pair (g, h) with an invertible entry (equal multidegrees,
nonzero scalar) produces a homotopy-equivalent complex on the remaining
basis.  The inclusion/projection/homotopy triple is accumulated across
steps so the final minimal complex comes with exact maps back and forth:

    proj ∘ incl = id,     incl ∘ proj - id = d∘H + H∘d.
"""

from dataclasses import dataclass
from fractions import Fraction

from .complexes import Element, FreeComplex

ONE = Fraction(1)


def _combo_sub(row, factor, other):
    out = dict(row)
    for k, v in other.items():
        out[k] = out.get(k, 0) - factor * v
        if not out[k]:
            del out[k]
    return out


class _Reduction:
    def __init__(self, complex_):
        self.base = complex_
        self.bases = {i: list(b) for i, b in complex_.bases.items()}
        self.by_id = dict(complex_.by_id)
        self.diff = {g: dict(row) for g, row in complex_.diff.items()}
        self.into = {}
        for g, row in self.diff.items():
            for h in row:
                self.into.setdefault(h, set()).add(g)
        ids = list(complex_.by_id)
        self.incl = {g: {g: ONE} for g in ids}
        self.proj = {g: {g: ONE} for g in ids}
        self.homotopy = {}

    def entry(self, g, h):
        return self.diff.get(g, {}).get(h, Fraction(0))

    def _set_entry(self, g, h, value):
        row = self.diff.setdefault(g, {})
        if value:
            if h not in row:
                self.into.setdefault(h, set()).add(g)
            row[h] = value
        else:
            if h in row:
                del row[h]
                self.into[h].discard(g)
            if not row:
                del self.diff[g]

    def cancel(self, g, h):
        """Cancel the invertible entry h-component of d(g)."""
        c = self.entry(g, h)
        assert c and self.by_id[g].mdeg == self.by_id[h].mdeg
        dg = dict(self.diff[g])
        gamma = {k: v for k, v in dg.items() if k != h}
        incl_g = self.incl[g]
        # homotopy: h |-> -(1/c) g, composed into the running totals
        for x, prow in self.proj.items():
            alpha = prow.get(h)
            if alpha:
                acc = self.homotopy.setdefault(x, {})
                for b, v in incl_g.items():
                    acc[b] = acc.get(b, 0) - alpha / c * v
                    if not acc[b]:
                        del acc[b]
                if not acc:
                    del self.homotopy[x]
        # projection: g |-> 0, h |-> -(1/c) gamma
        for x in list(self.proj):
            prow = self.proj[x]
            cg = prow.pop(g, None)
            ch = prow.pop(h, None)
            if ch:
                for t, v in gamma.items():
                    prow[t] = prow.get(t, 0) - ch / c * v
                    if not prow[t]:
                        del prow[t]
        # inclusion of the survivors picks up a correction along g
        for gp in list(self.into.get(h, ())):
            if gp == g:
                continue
            beta = self.entry(gp, h)
            self.incl[gp] = _combo_sub(self.incl[gp], beta / c, incl_g)
            self.diff[gp] = _combo_sub(self.diff[gp], beta / c, dg)
            if not self.diff[gp]:
                del self.diff[gp]
            self.into[h].discard(gp)
            for t in dg:
                if t != h and self.entry(gp, t):
                    self.into.setdefault(t, set()).add(gp)
                elif t != h:
                    self.into.get(t, set()).discard(gp)
        del self.incl[g], self.incl[h]
        # drop g from differentials of the level above
        for u in list(self.into.get(g, ())):
            self._set_entry(u, g, Fraction(0))
        # remove the pair
        for t in self.diff.pop(g, {}):
            self.into.get(t, set()).discard(g)
        for t in self.diff.pop(h, {}):
            self.into.get(t, set()).discard(h)
        self.into.pop(g, None)
        self.into.pop(h, None)
        for bid in (g, h):
            b = self.by_id.pop(bid)
            self.bases[b.hdeg].remove(b)
            if not self.bases[b.hdeg]:
                del self.bases[b.hdeg]

    def find_unit(self, order="forward"):
        reverse = order == "reversed"
        for i in sorted(self.bases, reverse=reverse):
            found = []
            for b in self.bases[i]:
                row = self.diff.get(b.bid)
                if not row:
                    continue
                for h, c in row.items():
                    if c and self.by_id[h].mdeg == b.mdeg:
                        found.append((b.bid, h))
            if found:
                found.sort(reverse=reverse)
                return found[0]
        return None

    def result(self):
        small = FreeComplex(
            self.base.num_vars, self.bases, self.diff, augmented=self.base.augmented
        )
        return small, TransferData(self.base, small, self.incl, self.proj, self.homotopy)


@dataclass
class TransferData:
    """Homotopy equivalence between a complex and its reduction.

    incl maps small basis ids to coefficient rows over the big basis;
    proj the other way; homotopy raises hdeg by one on the big complex.
    All rows are scalar coefficients with implied monomial factors.
    """

    big: FreeComplex
    small: FreeComplex
    incl: dict
    proj: dict
    homotopy: dict

    def incl_element(self, f):
        out = {}
        for g, c in f.coeffs.items():
            for b, v in self.incl[g].items():
                out[b] = out.get(b, 0) + c * v
        return Element(f.hdeg, f.mdeg, out)

    def proj_element(self, f):
        out = {}
        for g, c in f.coeffs.items():
            for b, v in self.proj.get(g, {}).items():
                out[b] = out.get(b, 0) + c * v
        return Element(f.hdeg, f.mdeg, out)

    def homotopy_element(self, f):
        out = {}
        for g, c in f.coeffs.items():
            for b, v in self.homotopy.get(g, {}).items():
                out[b] = out.get(b, 0) + c * v
        return Element(f.hdeg + 1, f.mdeg, out)

    def verify(self):
        """Exact check of proj∘incl = id and incl∘proj - id = dH + Hd."""
        for g in self.small.by_id:
            back = self.proj_element(self.incl_element(self.small.basis_element(g)))
            if back != self.small.basis_element(g):
                return False
        for g in self.big.by_id:
            f = self.big.basis_element(g)
            lhs = self.incl_element(self.proj_element(f)).sub(f)
            rhs = self.big.apply_diff(self.homotopy_element(f)).add(
                self.homotopy_element(self.big.apply_diff(f))
            )
            if lhs != rhs:
                return False
        # both transferred maps must be chain maps
        for g in self.small.by_id:
            f = self.small.basis_element(g)
            if self.big.apply_diff(self.incl_element(f)) != self.incl_element(
                self.small.apply_diff(f)
            ):
                return False
        for g in self.big.by_id:
            f = self.big.basis_element(g)
            if self.small.apply_diff(self.proj_element(f)) != self.proj_element(
                self.big.apply_diff(f)
            ):
                return False
        return True


def minimize(complex_, order="forward"):
    """Cancel unit entries until none remain.

    Pivot policy: scan homological degrees ascending and pick the
    lexicographically smallest (source id, target id); order="reversed"
    scans descending/largest, used to confirm rank independence.
    Returns (minimal complex, TransferData).
    """
    red = _Reduction(complex_)
    while True:
        pivot = red.find_unit(order)
        if pivot is None:
            break
        red.cancel(*pivot)
    return red.result()


def cancel_pairs(complex_, pairs):
    """Cancel exactly the given (lower, upper) pairs, in any order that
    keeps the pivots invertible.  Returns (small, transfer, leftover)
    where leftover lists pairs that never became cancellable."""
    red = _Reduction(complex_)
    remaining = sorted(pairs)
    while remaining:
        progress = []
        for lower, upper in remaining:
            c = red.entry(upper, lower)
            if c and red.by_id[upper].mdeg == red.by_id[lower].mdeg:
                red.cancel(upper, lower)
                progress.append((lower, upper))
        if not progress:
            break
        remaining = [p for p in remaining if p not in progress]
    small, transfer = red.result()
    return small, transfer, remaining


@dataclass
class MinimalResolution:
    taylor: FreeComplex
    complex: FreeComplex
    transfer: TransferData


def minimal_resolution(ideal, cap=16):
    """Taylor complex reduced to a minimal free resolution."""
    from .complexes import taylor_complex

    t = taylor_complex(ideal, cap=cap)
    small, transfer = minimize(t)
    return MinimalResolution(t, small, transfer)
