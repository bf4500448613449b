from itertools import product

import pytest
from hypothesis import given, strategies as st

from springerlab.errors import RankTooLarge, SizeMismatch, SpringerLabError
from springerlab.partitions import (
    GroupType,
    Partition,
    UnipotentClass,
    dominates,
    enumerate_classes,
    format_partition,
    join,
    parse_partition,
    partitions_of,
    sigma_prefix,
    valid_unipotent,
)

from oracles import dominance_brute, lr_table, multiplicity_criterion, partitions, valid_by_recipe

partition_st = st.lists(st.integers(0, 6), max_size=6).map(Partition)


def test_partition_storage_and_zero_stripping():
    assert Partition([1, 3, 2, 0, 0]) == Partition([3, 2, 1])
    assert Partition([3, 2, 1]).size == 6
    assert Partition([2, 2, 1]).transpose() == Partition([3, 2])


@pytest.mark.parametrize(
    "text, parts",
    [("[5,3,1]", [5, 3, 1]), ("[]", []), ("[1^5]", [1, 1, 1, 1, 1]), ("[3, 2^2, 1]", [3, 2, 2, 1])],
)
def test_parse_partition(text, parts):
    assert parse_partition(text) == Partition(parts)


def test_format_never_uses_exponents():
    assert format_partition(parse_partition("[2^3]")) == "[2,2,2]"
    assert format_partition(Partition()) == "[]"


def test_parse_rejects_garbage():
    with pytest.raises(SpringerLabError):
        parse_partition("[5,x]")


@pytest.mark.parametrize("lam, i, expected", [([3, 2, 2], 2, 5), ([5], 0, 0), ([4, 3, 1, 1], 10, 9)])
def test_sigma_prefix(lam, i, expected):
    assert sigma_prefix(lam, i) == expected


@pytest.mark.parametrize("lam, mu, expected", [([3, 1, 1], [2, 2, 1], True), ([2, 2, 1], [3, 1, 1], False), ([5], [5], True)])
def test_dominates_examples(lam, mu, expected):
    assert dominates(lam, mu) is expected


def test_dominates_size_mismatch():
    with pytest.raises(SizeMismatch):
        dominates([3], [2])


@pytest.mark.parametrize("lam, mu, expected", [([2, 1], [1, 1], [3, 2]), ([2], [2], [4]), ([], [3, 1], [3, 1])])
def test_join_examples(lam, mu, expected):
    assert join(lam, mu) == Partition(expected)


def test_dominance_is_partial_order_up_to_12():
    for n in range(13):
        ps = list(partitions_of(n))
        for a in ps:
            assert dominates(a, a)
        for a, b in product(ps, repeat=2):
            if a != b and dominates(a, b):
                assert not dominates(b, a)
        if n <= 9:
            for a, b, c in product(ps, repeat=3):
                if dominates(a, b) and dominates(b, c):
                    assert dominates(a, c)


def test_dominance_matches_brute_force():
    for n in range(11):
        ps = list(partitions(n))
        for a, b in product(ps, repeat=2):
            assert dominates(a, b) == dominance_brute(a, b)


def test_join_adds_prefix_sums():
    for n1 in range(9):
        for n2 in range(9 - n1):
            for a in partitions_of(n1):
                for b in partitions_of(n2):
                    j = join(a, b)
                    for i in range(len(j) + 2):
                        assert sigma_prefix(j, i) == sigma_prefix(a, i) + sigma_prefix(b, i)


def test_join_is_top_lr_constituent():
    """Every constituent of s_a * s_b is dominated by the join, which occurs once.

    Partwise comparison is too strong here: s_[1] * s_[1] contains [1,1].
    """
    for n1 in range(6):
        for n2 in range(7 - n1):
            for a in partitions_of(n1):
                for b in partitions_of(n2):
                    j = join(a, b)
                    table = lr_table(tuple(a), tuple(b))
                    assert table.get(tuple(j)) == 1
                    for nu in table:
                        assert dominates(j, nu), (a, b, nu)


@given(partition_st, partition_st)
def test_join_commutes(a, b):
    assert join(a, b) == join(b, a)


def test_group_type_bounds():
    assert GroupType("B", 3).N == 7 and GroupType("C", 3).N == 6 and GroupType("D", 3).N == 6
    GroupType("B", 1)
    GroupType("C", 1)
    with pytest.raises(SpringerLabError):
        GroupType("D", 1)
    with pytest.raises(SpringerLabError):
        GroupType("E", 6)
    assert GroupType.parse("B5") == GroupType("B", 5)


@pytest.mark.parametrize(
    "group, lam, expected",
    [(("B", 2), [3, 1, 1], True), (("C", 2), [2, 1, 1], True), (("B", 2), [2, 2, 1], True), (("B", 2), [4, 1], False)],
)
def test_valid_unipotent_examples(group, lam, expected):
    assert valid_unipotent(GroupType(*group), lam) is expected


def test_valid_unipotent_size_mismatch():
    with pytest.raises(SizeMismatch):
        valid_unipotent(GroupType("B", 2), [3, 1])


def test_multiplicity_criterion_agrees_with_recipe_up_to_13():
    for letter in "BCD":
        for N in range(1, 14):
            if (letter == "B") != (N % 2 == 1):
                continue
            if letter == "D" and N < 4:
                continue
            for lam in partitions(N):
                g = GroupType(letter, (N - 1) // 2 if letter == "B" else N // 2)
                assert valid_unipotent(g, lam) == valid_by_recipe(letter, lam) == multiplicity_criterion(letter, lam), (letter, lam)


def test_enumerate_classes_examples():
    b2 = [c.lam for c in enumerate_classes(GroupType("B", 2))]
    assert b2 == [Partition(p) for p in ([5], [3, 1, 1], [2, 2, 1], [1, 1, 1, 1, 1])]
    assert len(enumerate_classes(GroupType("C", 1))) == 2
    d2 = {c.lam for c in enumerate_classes(GroupType("D", 2))}
    assert Partition([3, 1]) in d2 and Partition([1, 1, 1, 1]) in d2


def test_enumeration_order_is_compatible_with_dominance():
    for letter in "BCD":
        classes = enumerate_classes(GroupType(letter, 5))
        for i, a in enumerate(classes):
            for b in classes[i + 1 :]:
                assert not (dominates(b.lam, a.lam) and a != b)


def test_enumerate_classes_guard(monkeypatch):
    monkeypatch.delenv("SPRINGERLAB_GUARD", raising=False)
    with pytest.raises(RankTooLarge):
        enumerate_classes(GroupType("B", 31))


def test_unipotent_class_validation():
    with pytest.raises(SpringerLabError):
        UnipotentClass(GroupType("B", 2), [4, 1])
    assert UnipotentClass(GroupType("D", 4), [4, 4]).is_very_even
