from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from quandlering.errors import DepthLimit, InvalidParam, NotDivisibleBy3, ZeroElement
from quandlering.corez import (
    CoreZElement,
    DyadicRational,
    cz_commutator,
    cz_commutator_identity,
    cz_extrema,
    cz_is_idempotent,
    cz_multiply,
    cz_order_probe,
    delta_squared_window_probe,
    dyadic_probe,
    extremal_sweep,
)

E = CoreZElement.basis

elements = st.dictionaries(st.integers(-15, 15), st.integers(-6, 6), max_size=5).map(CoreZElement)


def test_basis_products():
    assert cz_multiply(E(1), E(3)) == E(5)
    assert cz_multiply(E(-2), E(0)) == E(2)
    assert cz_multiply(E(4), E(4)) == E(4)


def test_commutator_example():
    assert cz_commutator(E(1), E(2)) == E(3) - E(0)
    for a in range(-30, 31, 3):
        assert cz_commutator_identity(a)
    with pytest.raises(NotDivisibleBy3):
        cz_commutator_identity(4)


def test_extrema():
    u = CoreZElement({-3: 2, 5: -1, 0: 7})
    assert cz_extrema(u) == ((-3, 2), (5, -1))
    with pytest.raises(ZeroElement):
        cz_extrema(CoreZElement())


def test_single_support_idempotents():
    assert cz_is_idempotent(E(7))[0]
    ok, cert = cz_is_idempotent(2 * E(7))
    assert not ok and cert["reason"] == "single-support"
    assert cz_is_idempotent(CoreZElement())[0]


def test_two_term_certificate():
    u = E(0) + E(1)
    ok, cert = cz_is_idempotent(u)
    assert not ok
    assert cert["chain_holds"]
    assert cert["min_u2"] == [-1, 1]
    assert cert["max_u2"] == [2, 1]


@given(elements, elements, elements)
@settings(max_examples=150, deadline=None)
def test_distributive(u, v, w):
    assert cz_multiply(u + v, w) == cz_multiply(u, w) + cz_multiply(v, w)
    assert cz_multiply(w, u + v) == cz_multiply(w, u) + cz_multiply(w, v)


@given(elements)
@settings(max_examples=200, deadline=None)
def test_only_idempotents_are_zero_and_basis(u):
    idem, cert = cz_is_idempotent(u)
    want = (not u) or (len(u.coeffs) == 1 and list(u.coeffs.values()) == [1])
    assert idem == want
    # independent check of the product through a plain double loop
    sq = {}
    for i, a in u.coeffs.items():
        for j, b in u.coeffs.items():
            sq[2 * j - i] = sq.get(2 * j - i, 0) + a * b
    assert (CoreZElement(sq) == u) == idem
    if len(u.coeffs) >= 2:
        assert cert["chain_holds"]
        assert cert["min_u2"] == cert["predicted_min_u2"]
        assert cert["max_u2"] == cert["predicted_max_u2"]


def test_order_probe():
    r = cz_order_probe(20)
    assert r["passed"] and r["failures"] == 0
    # 2 * (number of i < j) * (number of k)
    assert r["checks"] == 2 * (41 * 40 // 2) * 41
    with pytest.raises(InvalidParam):
        cz_order_probe(0)


def test_extremal_sweep():
    r = extremal_sweep(300, seed=5)
    assert r["passed"] and r["samples"] == 300


def test_delta_squared_window():
    r = delta_squared_window_probe(3)
    assert r["status"] == "evidence-only"
    assert not r["found"]


def test_dyadic_arithmetic():
    a, b = DyadicRational.of(Fraction(3, 4)), DyadicRational.of(1)
    assert a.star(b).to_fraction() == Fraction(7, 8)
    assert a.bar(b).to_fraction() == Fraction(1, 2)
    assert a.star(b).bar(b) == a
    with pytest.raises(InvalidParam):
        DyadicRational.of(Fraction(1, 3))
    with pytest.raises(InvalidParam):
        DyadicRational(2, 1)


def _fraction_closure(depth):
    cur = {Fraction(0), Fraction(1)}
    sizes = [2]
    for _ in range(depth):
        new = set(cur)
        for a in cur:
            for b in cur:
                new.add((a + b) / 2)
                new.add(2 * a - b)
        cur = new
        sizes.append(len(cur))
    return sizes


def test_dyadic_probe_sizes_match_fraction_closure():
    r = dyadic_probe(4)
    assert r["sizes"] == _fraction_closure(4) == [2, 5, 19, 113, 675]
    assert r["commutative"] and r["all_dyadic"]
    with pytest.raises(DepthLimit):
        dyadic_probe(13)
