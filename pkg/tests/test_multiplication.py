"""Products on resolutions: Taylor shuffle, transfer, axiom checks."""

import random
from fractions import Fraction

import pytest

from dgares.complexes import Element, taylor_complex
from dgares.corpus import (
    cycle_ideal,
    random_monomial_ideal,
    tagged_four_cycle_ideal,
    taylor_equals_scarf_ideal,
)
from dgares.minimize import minimize
from dgares.multiplication import (
    Multiplication,
    associator,
    check_dga_axioms,
    gauge_equivalent,
    is_supportive,
    multiply,
    taylor_multiplication,
    transfer_multiplication,
)

F = Fraction


def test_taylor_product_signs():
    t = taylor_complex(taylor_equals_scarf_ideal())
    m = taylor_multiplication(t)
    assert m.product((0,), (1,)) == Element(2, (3, 1, 0), {(0, 1): F(1)})
    # swapped orientation picks up (-1)^(1*1)
    assert m.product((1,), (0,)) == Element(2, (3, 1, 0), {(0, 1): F(-1)})
    # one transposition: vertex 1 passes over vertex 2 in the merge
    assert m.product((0, 2), (1,)).coeffs == {(0, 1, 2): F(-1)}
    # swapping hdeg 1 against hdeg 2 costs (-1)^2, so the sign stays
    assert m.product((1,), (0, 2)).coeffs == {(0, 1, 2): F(-1)}
    assert m.product((0,), (1, 2)).coeffs == {(0, 1, 2): F(1)}
    # overlapping subsets multiply to zero
    assert m.product((0,), (0, 1)).is_zero()
    assert m.product((0,), (0,)).is_zero()


def test_unit_acts_trivially():
    t = taylor_complex(taylor_equals_scarf_ideal())
    m = taylor_multiplication(t)
    one = t.unit()
    g = t.basis_element((0, 1))
    assert m.multiply(one, g) == g
    assert m.multiply(g, one) == g
    assert m.product((), (0, 1)) == g


def test_taylor_multiplication_is_a_dga():
    for ideal in (taylor_equals_scarf_ideal(), tagged_four_cycle_ideal()):
        m = taylor_multiplication(taylor_complex(ideal))
        report = check_dga_axioms(m)
        assert report.is_dga, report.summary()
        assert report.summary().count("ok") == 5
    rng = random.Random(3)
    for _ in range(5):
        ideal = random_monomial_ideal(rng, max_gens=4, max_vars=5)
        report = check_dga_axioms(taylor_multiplication(taylor_complex(ideal)))
        assert report.is_dga


def test_multiply_is_bilinear_and_associator_vanishes():
    t = taylor_complex(taylor_equals_scarf_ideal())
    m = taylor_multiplication(t)
    f = Element(1, (2, 1, 0), {(0,): F(2), (1,): F(-3)})
    g = Element(1, (2, 1, 1), {(1,): F(1), (2,): F(5)})
    h = t.basis_element((2,))
    fg = multiply(m, f, g)
    assert fg.hdeg == 2 and fg.mdeg == (4, 2, 1)
    # bilinearity against a split of f
    f1 = Element(1, (2, 1, 0), {(0,): F(2)})
    f2 = Element(1, (2, 1, 0), {(1,): F(-3)})
    assert fg == multiply(m, f1, g).add(multiply(m, f2, g))
    assert associator(m, f, g, h).is_zero()


def test_table_normalization_and_validation():
    t = taylor_complex(taylor_equals_scarf_ideal())
    # swapped key folds in with the sign
    m = Multiplication(t, {((1,), (0,)): {(0, 1): F(-1)}})
    assert m.table == {((0,), (1,)): {(0, 1): F(1)}}
    with pytest.raises(ValueError, match="hdeg-0"):
        Multiplication(t, {((), (0,)): {(0,): F(1)}})
    with pytest.raises(ValueError, match="odd-degree"):
        Multiplication(t, {((0,), (0,)): {(0, 1): F(1)}})
    with pytest.raises(ValueError, match="wrong hdeg"):
        Multiplication(t, {((0,), (1,)): {(0, 1, 2): F(1)}})
    with pytest.raises(ValueError, match="negative exponent"):
        Multiplication(t, {((0,), (1,)): {(0, 2): F(1)}})
    # the same entry is fine in a Laurent table
    lau = Multiplication(t, {((0,), (1,)): {(0, 2): F(1)}}, laurent=True)
    assert lau.laurent


def test_axiom_report_catches_broken_tables():
    t = taylor_complex(taylor_equals_scarf_ideal())
    good = taylor_multiplication(t)
    table = {p: dict(r) for p, r in good.table.items()}
    table[((0,), (1,))] = {(0, 1): F(-1)}  # flipped sign
    report = check_dga_axioms(Multiplication(t, table))
    assert not report.leibniz
    assert report.leibniz_failures
    u, v, residual = report.leibniz_failures[0]
    assert not residual.is_zero()
    assert not report.is_dga


def test_axiom_check_without_associativity():
    t = taylor_complex(taylor_equals_scarf_ideal())
    report = check_dga_axioms(taylor_multiplication(t), associativity=False)
    assert report.is_multiplication
    assert report.associative_failures == []


def test_transfer_multiplication_cycle_ideal():
    ideal = cycle_ideal(6)
    t = taylor_complex(ideal)
    small, transfer = minimize(t)
    m = transfer_multiplication(taylor_multiplication(t), transfer)
    report = check_dga_axioms(m, associativity=False)
    assert report.is_multiplication, report.summary()


def test_is_supportive_on_taylor():
    for ideal in (taylor_equals_scarf_ideal(), cycle_ideal(6)):
        m = taylor_multiplication(taylor_complex(ideal))
        flag, witnesses = is_supportive(m)
        assert flag and witnesses == []


def test_is_supportive_rejects_overflowing_products():
    t = taylor_complex(taylor_equals_scarf_ideal())
    # send g_a * g_b to the triple: legal degreewise, but the target
    # does not divide the join of the factors
    table = {((0,), (1,)): {(0, 1): F(1)}}
    m = Multiplication(t, table, check=False)
    m.table[((0,), (1,))] = {(0, 1, 2): F(1)}
    flag, witnesses = is_supportive(m)
    assert not flag
    assert ((0,), (1,), (0, 1, 2)) in witnesses


def test_gauge_equivalent_finds_sign_patterns():
    t = taylor_complex(taylor_equals_scarf_ideal())
    m = taylor_multiplication(t)
    eps = gauge_equivalent(m, {p: dict(r) for p, r in m.table.items()})
    assert eps is not None
    assert all(e * e == F(1) for e in eps.values())
    # flip the top basis element in the reference; a matching gauge exists
    ref = {p: dict(r) for p, r in m.table.items()}
    for p, row in ref.items():
        for w in row:
            if w == (0, 1, 2):
                row[w] = -row[w]
    eps2 = gauge_equivalent(m, ref)
    assert eps2 is not None
    factors = {
        (u, v, w): eps2[u] * eps2[v] * eps2[w]
        for (u, v) in m.table
        for w in m.table[(u, v)]
    }
    for (u, v, w), factor in factors.items():
        want = F(-1) if w == (0, 1, 2) else F(1)
        assert factor == want


def test_gauge_equivalent_rejects_impossible_tables():
    t = taylor_complex(taylor_equals_scarf_ideal())
    m = taylor_multiplication(t)
    ref = {p: dict(r) for p, r in m.table.items()}
    ref[((0,), (1,))] = {(0, 1): F(2)}  # wrong magnitude, no sign fixes it
    assert gauge_equivalent(m, ref) is None


def test_gauge_equivalent_cap():
    ideal = cycle_ideal(6)
    m = taylor_multiplication(taylor_complex(ideal))
    with pytest.raises(AssertionError):
        gauge_equivalent(m, {})
