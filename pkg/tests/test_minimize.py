"""Gaussian cancellation to minimal resolutions, with transfer data."""

import random

import pytest

from dgares.complexes import is_minimal, is_resolution, scarf_complex, taylor_complex
from dgares.corpus import (
    cycle_ideal,
    random_monomial_ideal,
    strongly_generic_ideal,
    tagged_four_cycle_ideal,
)
from dgares.ideals import MonomialIdeal
from dgares.minimize import cancel_pairs, minimal_resolution, minimize
from dgares.simplicial import f_vector


def test_minimize_cycle_ideal():
    ideal = cycle_ideal(6)
    t = taylor_complex(ideal)
    small, transfer = minimize(t)
    assert small.ranks() == (1, 6, 9, 6, 2)
    assert is_resolution(small, ideal)
    assert is_minimal(small)
    assert transfer.verify()


def test_pivot_orders_agree_on_ranks():
    rng = random.Random(23)
    for _ in range(8):
        ideal = random_monomial_ideal(rng, max_gens=5, max_vars=5)
        t = taylor_complex(ideal)
        fwd, tf = minimize(t, order="forward")
        rev, tr = minimize(t, order="reversed")
        assert fwd.ranks() == rev.ranks()
        assert is_minimal(fwd) and is_minimal(rev)
        assert is_resolution(fwd, ideal) and is_resolution(rev, ideal)
        assert tf.verify() and tr.verify()


def test_scarf_ids_survive_minimization():
    rng = random.Random(31)
    for _ in range(6):
        ideal = random_monomial_ideal(rng, max_gens=5, max_vars=5)
        small, _ = minimize(taylor_complex(ideal))
        scarf_ids = {tuple(sorted(f)) for f in scarf_complex(ideal).faces}
        assert scarf_ids <= set(small.by_id)
        # hdeg-1 generators always survive: the resolution is of S/I
        assert {(i,) for i in range(ideal.k)} <= set(small.by_id)


def test_strongly_generic_minimal_equals_scarf():
    ideal = strongly_generic_ideal()
    small, _ = minimize(taylor_complex(ideal))
    assert small.ranks() == (1, 5, 8, 5, 1)
    assert small.ranks() == f_vector(scarf_complex(ideal))
    assert set(small.by_id) == {tuple(sorted(f)) for f in scarf_complex(ideal).faces}


def test_minimize_is_idempotent():
    ideal = tagged_four_cycle_ideal()
    small, _ = minimize(taylor_complex(ideal))
    again, transfer = minimize(small)
    assert again.ranks() == small.ranks()
    assert again.diff == small.diff
    # nothing was cancelled, so the transfer is the identity
    assert transfer.homotopy == {}
    assert all(row == {g: 1} for g, row in transfer.incl.items())


def test_minimal_resolution_wrapper():
    ideal = cycle_ideal(6)
    res = minimal_resolution(ideal)
    assert res.taylor.ranks() == taylor_complex(ideal).ranks()
    assert res.complex.ranks() == (1, 6, 9, 6, 2)
    assert res.transfer.big is res.taylor
    assert res.transfer.small is res.complex
    assert res.transfer.verify()


def test_transfer_identities_elementwise():
    ideal = tagged_four_cycle_ideal()
    t = taylor_complex(ideal)
    small, tr = minimize(t)
    for g in small.by_id:
        f = small.basis_element(g)
        # chain map through the inclusion
        assert t.apply_diff(tr.incl_element(f)) == tr.incl_element(small.apply_diff(f))
    for g in t.by_id:
        f = t.basis_element(g)
        lhs = tr.incl_element(tr.proj_element(f)).sub(f)
        rhs = t.apply_diff(tr.homotopy_element(f)).add(tr.homotopy_element(t.apply_diff(f)))
        assert lhs == rhs


def test_cancel_pairs_runs_requested_cancellations():
    # triangle ideal: the triple shares its lcm with every pair
    tri = MonomialIdeal(3, ((1, 1, 0), (0, 1, 1), (1, 0, 1)))
    t = taylor_complex(tri)
    small, transfer, leftover = cancel_pairs(t, [((0, 1), (0, 1, 2))])
    assert leftover == []
    assert (0, 1, 2) not in small.by_id and (0, 1) not in small.by_id
    assert transfer.verify()
    assert is_resolution(small, tri)


def test_cancel_pairs_reports_impossible_pairs():
    ideal = tagged_four_cycle_ideal()  # Taylor pair degrees here
    t = taylor_complex(ideal)
    # (0,) and (0,1) have different multidegrees: never cancellable
    small, _, leftover = cancel_pairs(t, [((0,), (0, 1))])
    assert leftover == [((0,), (0, 1))]
    assert small.ranks() == t.ranks()
