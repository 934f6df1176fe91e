from itertools import permutations, product

import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_quandle_tables, is_quandle
from quandlering.errors import (
    AxiomViolation,
    CocycleViolation,
    InvalidParam,
    NotAutomorphism,
    SizeLimit,
)
from quandlering.groups import FiniteGroup, cyclic_group, direct_product
from quandlering.morphisms import (
    are_isomorphic,
    automorphisms,
    compose,
    enumerate_quandles,
    homomorphisms,
    invert,
    is_homomorphism,
)
from quandlering.quandle import (
    X6_CYCLES,
    alexander,
    alexander_cyclic,
    almost_latin_degree,
    commutative,
    conj,
    construct,
    core,
    dihedral,
    extension,
    format_table_text,
    from_columns,
    from_table,
    inner_group,
    parse_table_text,
    perm_from_cycles,
    product as qproduct,
    properties,
    trivial,
    x6,
)

X6_TABLE = (
    (0, 0, 4, 5, 2, 3),
    (1, 1, 5, 4, 3, 2),
    (4, 5, 2, 2, 0, 1),
    (5, 4, 3, 3, 1, 0),
    (2, 3, 0, 1, 4, 4),
    (3, 2, 1, 0, 5, 5),
)


def test_dihedral_3_table():
    assert construct("dihedral", 3).table == ((0, 2, 1), (2, 1, 0), (1, 0, 2))


def test_trivial_2_table():
    assert construct("trivial", 2).table == ((0, 0), (1, 1))


def test_commutative_5_entry():
    assert construct("commutative", 5).op(1, 2) == 4


def test_commutative_even_order_rejected():
    with pytest.raises(InvalidParam):
        commutative(4)


def test_core_z4_entry():
    assert construct("core", cyclic_group(4)).op(1, 0) == 3


def test_conj_of_abelian_group_is_trivial():
    q = conj(cyclic_group(5))
    assert q.table == trivial(5).table


def test_unknown_kind():
    with pytest.raises(InvalidParam):
        construct("nonsense", 3)


def test_x6_from_cycles():
    q = x6()
    assert q.table == X6_TABLE
    for y, cycles in enumerate(X6_CYCLES):
        assert q.column(y) == perm_from_cycles(6, cycles)


def test_column_not_a_permutation():
    with pytest.raises(AxiomViolation) as exc:
        from_table(2, [[0, 0], [0, 1]])
    assert exc.value.axiom == 2
    assert exc.value.witness[0] == 0


def test_idempotency_failure():
    with pytest.raises(AxiomViolation) as exc:
        from_table(2, [[1, 0], [0, 1]])
    assert exc.value.axiom == 1


def test_smallest_non_distributive_3x3():
    # candidates: idempotent diagonal, every column a permutation
    cols = [[p for p in permutations(range(3)) if p[y] == y] for y in range(3)]
    bad = []
    for choice in product(*cols):
        t = tuple(tuple(choice[y][x] for y in range(3)) for x in range(3))
        if not is_quandle(3, t):
            bad.append(t)
    smallest = min(bad)
    with pytest.raises(AxiomViolation) as exc:
        from_table(3, smallest)
    assert exc.value.axiom == 3
    x, y, z = exc.value.witness
    t = smallest
    assert t[t[x][y]][z] != t[t[x][z]][t[y][z]]


def test_out_of_range_entry():
    with pytest.raises(InvalidParam):
        from_table(2, [[0, 2], [1, 1]])


def test_from_columns_matches_table():
    q = dihedral(5)
    assert from_columns([q.column(y) for y in range(5)]).table == q.table


def test_table_text_round_trip():
    q = x6()
    again = parse_table_text(format_table_text(q))
    assert again.table == q.table


def test_table_text_rejects_garbage():
    with pytest.raises(InvalidParam):
        parse_table_text("2\n0 0\n")
    with pytest.raises(InvalidParam):
        parse_table_text("# nothing\n")


def test_right_divide():
    q = dihedral(7)
    for x in range(7):
        for y in range(7):
            assert q.op(q.right_divide(x, y), y) == x


# properties


def test_r3_properties():
    p = properties(dihedral(3))
    assert p.latin and p.connected and p.commutative
    assert p.almost_latin_degree == 1
    assert p.inn_order == 6


def test_x6_properties():
    p = properties(x6())
    assert p.connected and p.involutory
    assert p.almost_latin_degree == 2
    assert not p.latin


def test_r4_properties():
    p = properties(dihedral(4))
    assert not p.latin and not p.connected
    assert p.almost_latin_degree is None
    assert p.inn_order == 4


def test_trivial_inner_group():
    assert inner_group(trivial(4))[0] == 1


def test_semi_latin_equals_latin_on_finite():
    for q in (dihedral(3), dihedral(4), x6(), commutative(5), trivial(3)):
        p = properties(q)
        assert p.semi_latin == p.latin


def test_almost_latin_degree_r3_core():
    assert almost_latin_degree(dihedral(5)) == 1


@pytest.mark.parametrize(
    "group, expected",
    [
        (cyclic_group(3), True),
        (cyclic_group(9), False),
        (direct_product(cyclic_group(3), cyclic_group(3)), True),
        (cyclic_group(4), False),
    ],
)
def test_core_commutative_iff_exponent_three(group, expected):
    assert properties(core(group)).commutative is expected
    assert group.exponent_divides(3) is expected


def test_commutative_quandle_identities():
    for order in (3, 5, 7, 9):
        q = commutative(order)
        n = q.n
        t = q.table
        for x, y, z in product(range(n), repeat=3):
            a = t[t[x][y]][z]
            assert a == t[t[y][x]][z] == t[z][t[y][x]] == t[z][t[x][y]]
        for x, y in product(range(n), repeat=2):
            rx, ry = q.column(x), q.column(y)
            rx_inv, ry_inv = invert(rx), invert(ry)
            lhs = compose(rx, compose(ry, rx_inv))
            rhs = compose(ry, compose(rx, ry_inv))
            assert lhs == rhs


def _column_power_is_identity(q, y, k):
    x = list(range(q.n))
    col = q.column(y)
    for _ in range(k):
        x = [col[v] for v in x]
    return x == list(range(q.n))


@pytest.mark.parametrize("order", [3, 5, 7, 11, 13])
def test_commutative_prime_order_is_2n_quandle(order):
    q = commutative(order)
    assert all(_column_power_is_identity(q, y, order - 1) for y in range(order))


@pytest.mark.parametrize("order", [9, 15])
def test_commutative_composite_order_is_not_2n_quandle(order):
    # R_y is x -> y + (x - y)/2, so R_y^k = id iff 2^k = 1 mod order;
    # the multiplicative order of 2 is 6 mod 9 and 4 mod 15
    q = commutative(order)
    assert not _column_power_is_identity(q, 0, order - 1)


@pytest.mark.parametrize("order", [3, 5, 7, 9, 11])
def test_commutative_right_division(order):
    q = commutative(order)
    for x, y in product(range(order), repeat=2):
        assert q.right_divide(x, y) == (2 * x - y) % order


# constructions


def test_alexander_cyclic_matches_formula():
    q = alexander_cyclic(7, 3)
    for x, y in product(range(7), repeat=2):
        assert q.op(x, y) == (3 * x - 2 * y) % 7


def test_alexander_needs_unit():
    with pytest.raises(InvalidParam):
        alexander_cyclic(6, 2)


def test_alexander_rejects_non_automorphism():
    with pytest.raises(NotAutomorphism):
        alexander(cyclic_group(4), [0, 2, 0, 2])


def test_extension_trivial_cocycle_is_product():
    a = cyclic_group(2)
    ext = extension(dihedral(3), a, lambda i, j: 0)
    assert ext.table == qproduct(dihedral(3), trivial(2)).table


def test_extension_nontrivial_cocycle():
    # psi(x, y) = 1 when x != y on the trivial quandle of order 2
    a = cyclic_group(2)
    ext = extension(trivial(2), a, [[0, 1], [1, 0]])
    assert is_quandle(ext.n, ext.table)


def test_extension_rejects_bad_cocycle():
    with pytest.raises(CocycleViolation):
        extension(trivial(2), cyclic_group(2), [[1, 0], [0, 0]])
    with pytest.raises(CocycleViolation):
        extension(dihedral(3), cyclic_group(3), [[0, 1, 0], [0, 0, 0], [0, 0, 0]])


def test_group_validation():
    with pytest.raises(InvalidParam):
        FiniteGroup.from_cayley([[0, 1], [0, 1]])


@given(
    st.sampled_from([dihedral(3), dihedral(4), trivial(2), commutative(5), x6()]),
    st.sampled_from([dihedral(3), trivial(1), trivial(2), dihedral(4)]),
)
@settings(max_examples=20, deadline=None)
def test_products_are_quandles(a, b):
    q = qproduct(a, b)
    assert is_quandle(q.n, q.table)


@given(st.integers(2, 12), st.integers(1, 11))
@settings(max_examples=40, deadline=None)
def test_alexander_is_quandle(n, u):
    from math import gcd

    if gcd(u, n) != 1:
        return
    q = alexander_cyclic(n, u)
    assert is_quandle(n, q.table)


# morphisms


def test_aut_x6_has_24():
    assert len(automorphisms(x6())) == 24


def test_aut_trivial_2():
    assert sorted(automorphisms(trivial(2))) == [(0, 1), (1, 0)]


def test_aut_r3_matches_brute_force():
    q = dihedral(3)
    brute = [p for p in permutations(range(3)) if is_homomorphism(q, q, p)]
    assert sorted(automorphisms(q)) == sorted(brute)
    assert len(brute) == 6


def test_aut_closed_under_composition_and_inverse():
    for q in (x6(), dihedral(5), dihedral(4)):
        auts = set(automorphisms(q))
        for f in auts:
            assert invert(f) in auts
            for g in auts:
                assert compose(f, g) in auts
        for col in inner_group(q)[1]:
            assert tuple(col) in auts


def test_aut_cap():
    with pytest.raises(SizeLimit):
        automorphisms(trivial(9))


def test_hom_x6_to_r3_contains_block_map():
    homs = homomorphisms(x6(), dihedral(3))
    assert (0, 0, 1, 1, 2, 2) in homs


def test_hom_constants_included():
    homs = homomorphisms(dihedral(4), dihedral(3))
    for c in range(3):
        assert (c,) * 4 in homs


def test_hom_trivial_2():
    assert len(homomorphisms(trivial(2), trivial(2))) == 4


def test_hom_matches_brute_force():
    q, p = dihedral(3), dihedral(6)
    brute = sorted(f for f in product(range(6), repeat=3) if is_homomorphism(q, p, f))
    assert homomorphisms(q, p) == brute


def test_isomorphism():
    assert are_isomorphic(commutative(3), dihedral(3))
    assert not are_isomorphic(dihedral(4), trivial(4))
    assert are_isomorphic(alexander_cyclic(5, 3), commutative(5))
    assert not are_isomorphic(alexander_cyclic(5, 2), alexander_cyclic(5, 3))


# enumeration


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_enumeration_matches_brute_force(n):
    assert sorted(enumerate_quandles(n)) == brute_quandle_tables(n)


def test_enumeration_order_five_count():
    # regression value produced by the backtracking enumerator
    assert len(enumerate_quandles(5)) == 404


def test_enumeration_cap():
    with pytest.raises(SizeLimit):
        enumerate_quandles(6)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_commutative_implies_latin_and_odd(n):
    for t in enumerate_quandles(n):
        p = properties(from_table(n, t))
        if p.commutative:
            assert p.latin and n % 2 == 1


def test_no_commutative_order_two_or_four():
    for n in (2, 4):
        assert not any(properties(from_table(n, t)).commutative for t in enumerate_quandles(n))
