from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperoct.partitions import bipartitions, cores_by_stripping, partitions
from hyperoct.perms import class_size, cycle_type, make_f
from hyperoct.repdata import (
    BlockLabel,
    ModelIndex,
    block_label,
    count_standard_tableaux,
    enumerate_standard_tableaux,
    hook_dim,
    model_constituents,
    model_dim,
    simple_labels,
    specht_dim,
)


def test_model_index_validation():
    assert ModelIndex(1, 2, 3).n == 7
    with pytest.raises(ValueError):
        ModelIndex(-1, 0, 0)
    assert len(ModelIndex.all_of_degree(3)) == 6


def test_hook_formula_matches_recursion():
    for n in range(11):
        for lam in partitions(n):
            assert hook_dim(lam) == count_standard_tableaux(lam)


def test_sum_of_squares_is_factorial():
    for n in range(9):
        assert sum(hook_dim(lam) ** 2 for lam in partitions(n)) == factorial(n)


def test_specht_dim_examples():
    assert specht_dim((1,), ()) == 1
    assert specht_dim((3,), (3, 1)) == 105 == len(enumerate_standard_tableaux((3,), (3, 1)))
    assert specht_dim((2, 1), (1,)) == 8 == len(enumerate_standard_tableaux((2, 1), (1,)))


def test_standard_tableaux_small():
    assert enumerate_standard_tableaux((1,), (1,)) == [(((1,),), ((2,),)), (((2,),), ((1,),))]
    assert enumerate_standard_tableaux((), ()) == [((), ())]
    assert enumerate_standard_tableaux((2,), ()) == [(((1, 2),), ())]


@pytest.mark.parametrize("n", range(0, 6))
def test_standard_tableaux_counts_and_standardness(n):
    for lam, mu in bipartitions(n):
        tabs = enumerate_standard_tableaux(lam, mu)
        assert len(tabs) == specht_dim(lam, mu)
        assert tabs == sorted(set(tabs))
        for tp, tm in tabs:
            for t in (tp, tm):
                for row in t:
                    assert list(row) == sorted(row)
                for i in range(1, len(t)):
                    for j in range(len(t[i])):
                        assert t[i - 1][j] < t[i][j]


def test_sum_specht_squares_is_group_order():
    for n in range(7):
        assert sum(specht_dim(l, m) ** 2 for l, m in bipartitions(n)) == 2**n * factorial(n)


def test_block_label_examples():
    assert block_label((2, 1), (1,), 3) == BlockLabel((), 1, (1,), 0)
    assert block_label((2,), (1, 1), 3) == BlockLabel((2,), 0, (1, 1), 0)
    assert block_label((3,), (1, 1, 1), 3) == BlockLabel((), 1, (), 1)
    assert next(iter(cores_by_stripping((2, 1), 3))) == ()


@given(st.integers(0, 9).flatmap(lambda n: st.sampled_from(bipartitions(n))), st.sampled_from([3, 5, 7]))
def test_block_label_size(pair, p):
    lam, mu = pair
    assert block_label(lam, mu, p).size(p) == sum(lam) + sum(mu)


def test_simple_labels_examples():
    assert simple_labels(1, 3) == [((1,), ()), ((), (1,))]
    labels = simple_labels(3, 3)
    assert len(labels) == len(bipartitions(3)) - 2
    assert ((1, 1, 1), ()) not in labels and ((), (1, 1, 1)) not in labels
    assert len(simple_labels(4, 5)) == len(bipartitions(4))


def test_model_constituents_examples():
    assert model_constituents(ModelIndex(0, 1, 0)) == [((1,), ())]
    assert model_constituents(ModelIndex(0, 0, 1)) == [((), (1,))]
    # (1,1) has two odd parts, so it cannot appear with b = c = 0
    assert set(model_constituents(ModelIndex(1, 0, 0))) == {((2,), ()), ((), (2,))}


def test_model_dim_examples():
    assert model_dim(ModelIndex(1, 0, 0)) == 2 == class_size(cycle_type(make_f(1, 2)))
    for k in range(1, 6):
        assert model_dim(ModelIndex(0, k, 0)) == 1 == model_dim(ModelIndex(0, 0, k))
    assert model_dim(ModelIndex(3, 0, 0)) == 120 == class_size(cycle_type(make_f(3, 6)))
    assert model_dim(ModelIndex(1, 1, 0)) == 6


@pytest.mark.parametrize("n", range(0, 9))
def test_character_identity(n):
    for idx in ModelIndex.all_of_degree(n):
        assert model_dim(idx) == sum(specht_dim(l, m) for l, m in model_constituents(idx))


@pytest.mark.parametrize("n", range(0, 9))
def test_involution_model_completeness(n):
    total = sum(model_dim(idx) for idx in ModelIndex.all_of_degree(n))
    assert total == sum(specht_dim(l, m) for l, m in bipartitions(n))


@pytest.mark.parametrize("n", range(0, 9))
def test_constituents_partition_all_bipartitions(n):
    seen = [x for idx in ModelIndex.all_of_degree(n) for x in model_constituents(idx)]
    assert sorted(seen) == sorted(bipartitions(n))


def test_model_dim_closed_form_big():
    idx = ModelIndex(20, 5, 7)
    n = idx.n
    expected = 2**n * factorial(n) // (4**20 * factorial(20) * 2**12 * factorial(12)) * comb(12, 5)
    assert model_dim(idx) == expected
