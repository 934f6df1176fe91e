import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import sympy_det
from quandlering.cli.claims import PHI, PSI
from quandlering.errors import DimensionMismatch, NotAutomorphism, NotBlockStructured
from quandlering.morphisms import automorphisms
from quandlering.quandle import trivial, x6
from quandlering.ringaut import (
    AutDecomposition,
    atq_block,
    atq_decode,
    decompose_x6_automorphism,
    determinant,
    identity_matrix,
    multiplicativity_failures,
    permutation_matrix,
    ring_automorphisms,
    verify_ring_morphism,
)


@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n)))
@settings(max_examples=150, deadline=None)
def test_determinant_matches_sympy(m):
    assert determinant(m) == sympy_det(m)


def test_identity_accepted():
    assert verify_ring_morphism(x6(), identity_matrix(6))


def test_stated_example_rejected():
    assert determinant(PSI) == 1
    assert multiplicativity_failures(x6(), PSI)
    assert not verify_ring_morphism(x6(), PSI)
    with pytest.raises(NotAutomorphism):
        decompose_x6_automorphism(PSI)


def test_swapping_two_points_is_not_a_morphism():
    assert not verify_ring_morphism(x6(), permutation_matrix([2, 1, 0, 3, 4, 5]))


def test_shape_check():
    with pytest.raises(DimensionMismatch):
        verify_ring_morphism(x6(), [[1, 0], [0, 1]])


def test_block_rotation_decomposes():
    dec = decompose_x6_automorphism(PHI)
    assert dec.block_permutation == (1, 2, 0)
    assert dec.params == ((1, -1),) * 3
    assert dec.reassemble() == PHI


def test_quandle_automorphisms_round_trip():
    for f in automorphisms(x6()):
        m = permutation_matrix(f)
        dec = decompose_x6_automorphism(m)
        assert dec.reassemble() == m
        assert set(dec.as_dict()) == {"block_permutation", "params"}


def test_atq_blocks():
    for alpha in range(-4, 5):
        for eps in (1, -1):
            blk = atq_block(alpha, eps)
            assert atq_decode(blk) == (alpha, eps)
            assert abs(determinant(blk)) == 1
            assert verify_ring_morphism(trivial(2), blk)
    with pytest.raises(NotBlockStructured):
        atq_block(0, 2)
    with pytest.raises(NotBlockStructured):
        atq_decode(((1, 1), (0, 0)))


def test_trivial2_automorphisms_are_atq_blocks():
    found = ring_automorphisms(trivial(2), 4)
    want = sorted(atq_block(a, e) for a in range(-8, 9) for e in (1, -1)
                  if all(-4 <= c <= 4 for c in atq_block(a, e)[1]))
    assert found == want
    assert len(found) == 16


def test_x6_automorphisms_in_small_box_are_permutations():
    found = ring_automorphisms(x6(), 1)
    perms = sorted(permutation_matrix(f) for f in automorphisms(x6()))
    assert found == perms


def test_reassemble_permutation_params_give_permutation_matrices():
    rng = random.Random(3)
    for _ in range(20):
        perm = rng.sample(range(3), 3)
        params = tuple((1, -1) if rng.random() < 0.5 else (0, 1) for _ in range(3))
        m = AutDecomposition(tuple(perm), params).reassemble()
        assert all(sorted(col) == [0, 0, 0, 0, 0, 1] for col in zip(*m))
