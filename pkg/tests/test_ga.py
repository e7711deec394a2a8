import random
from fractions import Fraction

import pytest

from wedkit.errors import InputError, NotNilpotent
from wedkit.ga import (
    GaRep,
    JordanType,
    category_radical,
    clebsch_gordan,
    clebsch_gordan_oracle,
    clebsch_gordan_set,
    direct_sum,
    hom_dim,
    hom_dim_oracle,
    intertwiner_basis,
    is_radical_morphism,
    jordan_block,
    jordan_type,
    radical_chain_vanishing,
    search_chain_counterexample,
    sl2_consistency,
    tensor_rep,
)
from wedkit.linalg import Matrix

F = Fraction


def test_nilpotency_checked():
    with pytest.raises(NotNilpotent):
        GaRep(Matrix.identity(2))


def test_jordan_type_zero_matrix():
    assert jordan_type(GaRep(Matrix.zeros(3, 3))).partition == (1, 1, 1)


def test_jordan_type_single_block():
    assert jordan_type(GaRep(jordan_block(3))).partition == (3,)


def test_jordan_type_mixed():
    r = GaRep.from_partition([2, 1])
    assert jordan_type(r).partition == (2, 1)


def test_jordan_type_conjugation_invariant():
    from wedkit.ga import _invert

    rng = random.Random(4)
    canon = GaRep.from_partition([3, 2, 2])
    d = canon.dim
    while True:
        p = Matrix(d, d, [F(rng.randint(-2, 2)) for _ in range(d * d)])
        try:
            pinv = _invert(p)
            break
        except InputError:
            continue
    rep = GaRep(p * canon.nilpotent * pinv)
    assert jordan_type(rep).partition == (3, 2, 2)


def test_partition_validation():
    with pytest.raises(InputError):
        JordanType((1, 2))
    with pytest.raises(InputError):
        JordanType((0,))


def test_hom_dim_values():
    assert hom_dim(0, 0) == 1
    assert hom_dim(1, 1) == 2
    assert hom_dim(2, 5) == 3


def test_hom_dim_against_oracle_grid():
    for m in range(6):
        for n in range(6):
            assert hom_dim(m, n) == hom_dim_oracle(m, n) == min(m, n) + 1


def test_clebsch_gordan_set():
    assert clebsch_gordan_set(1, 1) == [0, 2]
    assert clebsch_gordan_set(0, 7) == [7]
    assert clebsch_gordan_set(2, 3) == [1, 3, 5]


def test_clebsch_gordan_against_jordan_oracle():
    for m in range(5):
        for n in range(5):
            assert clebsch_gordan(m, n) == clebsch_gordan_oracle(m, n)


def test_tensor_rep_dimensions():
    a = GaRep.symmetric_power(2)
    b = GaRep.symmetric_power(3)
    t = tensor_rep(a, b)
    assert t.dim == 12
    assert sorted(p - 1 for p in jordan_type(t).partition) == [1, 3, 5]


def test_category_radical_end_of_block():
    s1 = GaRep.symmetric_power(1)
    rad = category_radical(s1, s1)
    assert rad.dim == 1
    assert rad.contains(jordan_block(2).entries)
    assert not rad.contains(Matrix.identity(2).entries)


def test_category_radical_between_distinct_blocks_is_full():
    s1 = GaRep.symmetric_power(1)
    s2 = GaRep.symmetric_power(2)
    assert category_radical(s1, s2).dim == hom_dim(1, 2)


def test_category_radical_trivial_rep():
    s0 = GaRep.symmetric_power(0)
    assert category_radical(s0, s0).is_zero()


def test_category_radical_respects_conjugation():
    from wedkit.ga import _invert

    rng = random.Random(8)
    canon = GaRep.from_partition([2, 2, 1])
    d = canon.dim
    while True:
        p = Matrix(d, d, [F(rng.randint(-2, 2)) for _ in range(d * d)])
        try:
            pinv = _invert(p)
            break
        except InputError:
            continue
    rep = GaRep(p * canon.nilpotent * pinv)
    rad_canon = category_radical(canon, canon)
    rad = category_radical(rep, rep)
    assert rad.dim == rad_canon.dim
    # conjugated radical elements stay radical
    for v in rad_canon.basis[:4]:
        f = Matrix(d, d, v)
        assert rad.contains((p * f * pinv).entries)


def test_category_radical_is_an_ideal():
    rng = random.Random(15)
    a = GaRep.from_partition([3, 1])
    b = GaRep.from_partition([2, 2])
    c = GaRep.from_partition([3, 2])
    rad_ab = category_radical(a, b)
    hom_bc = intertwiner_basis(b, c)
    hom_ca = intertwiner_basis(c, a)
    rad_ac = category_radical(a, c)
    rad_cb = category_radical(c, b)
    for v in rad_ab.basis:
        f = Matrix(b.dim, a.dim, v)
        for g in hom_bc:
            assert rad_ac.contains((g * f).entries)
    for v in rad_ab.basis:
        f = Matrix(b.dim, a.dim, v)
        for g in hom_ca:
            assert rad_cb.contains((f * g).entries)


def test_radical_morphism_check_rejects_non_intertwiner():
    s1 = GaRep.symmetric_power(1)
    bad = Matrix.from_rows([[1, 0], [0, 0]])
    with pytest.raises(InputError):
        is_radical_morphism(s1, s1, bad)


def test_chain_s0_s1_s0_composes_to_zero():
    s0 = GaRep.symmetric_power(0)
    s1 = GaRep.symmetric_power(1)
    up = intertwiner_basis(s0, s1)[0]
    down = intertwiner_basis(s1, s0)[0]
    assert radical_chain_vanishing(0, [s0, s1, s0], [up, down])


def test_chain_rejects_empty():
    s0 = GaRep.symmetric_power(0)
    with pytest.raises(InputError):
        radical_chain_vanishing(0, [s0], [])


def test_chain_rejects_non_radical_member():
    s1 = GaRep.symmetric_power(1)
    with pytest.raises(InputError):
        radical_chain_vanishing(1, [s1, s1], [Matrix.identity(2)])


def test_chain_counterexample_search_finds_none():
    for target in (0, 1, 2, 3):
        report = search_chain_counterexample(target, trials=15, seed=target)
        assert report["counterexamples"] == 0


def test_chain_bound_is_tight():
    report = search_chain_counterexample(3, trials=30, seed=1)
    assert report["shorter_chain_nonzero"]


def test_direct_sum_partition():
    r = direct_sum([GaRep.symmetric_power(2), GaRep.symmetric_power(0)])
    assert jordan_type(r).partition == (3, 1)


def test_sl2_consistency_m0():
    assert sl2_consistency(0).consistent


def test_sl2_consistency_m1():
    rep = sl2_consistency(1)
    assert rep.consistent
    assert rep.pairs_checked == 4


def test_sl2_consistency_m3_radical_equals_trace_kernel():
    rep = sl2_consistency(3)
    assert rep.consistent
    assert rep.radical_equals_trace_kernel
    # End(⊕ S^m) has dim sum of min(m,n)+1
    assert rep.end_dim == sum(min(m, n) + 1 for m in range(4) for n in range(4))
