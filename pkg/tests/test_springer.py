from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from springerlab.errors import GroupMismatch, PadTooSmall, SpringerLabError
from springerlab.partitions import GroupType, Partition, UnipotentClass, dominates, enumerate_classes
from springerlab.springer import (
    Bipartition,
    a_value,
    b_value,
    cell_leq,
    cell_of,
    enumerate_bipartitions,
    families,
    is_special_class,
    is_special_rep,
    parse_bipartition,
    special_classes,
    special_closure,
    special_pieces,
    springer_class,
    springer_rep,
    symbol_of_bipartition,
    usymbol_of_bipartition,
)

from oracles import weyl_order, dim_bipartition

B2, B3, B4, B5, C3 = (GroupType(*g) for g in [("B", 2), ("B", 3), ("B", 4), ("B", 5), ("C", 3)])


def groups(max_rank, min_rank=1):
    for letter in "BCD":
        for n in range(max(min_rank, 2 if letter == "D" else 1), max_rank + 1):
            yield GroupType(letter, n)


def bip(alpha, beta, g):
    return Bipartition(Partition(alpha), Partition(beta), g)


def test_bipartition_size_and_type_d_orientation():
    with pytest.raises(SpringerLabError):
        bip([2], [1], B2)
    d = GroupType("D", 3)
    assert bip([1], [2], d) == bip([2], [1], d)
    assert bip([1], [1], GroupType("D", 2)).is_unsplit
    assert parse_bipartition("([3],[2])", B5) == bip([3], [2], B5)
    assert bip([3], [2], B5).to_json() == {"alpha": [3], "beta": [2]}


def test_enumeration_counts():
    assert len(enumerate_bipartitions(B3)) == 10
    # D4: 9 unordered pairs with distinct rows, plus ([2],[2]) and ([1,1],[1,1]) which each split in two
    d4 = enumerate_bipartitions(GroupType("D", 4))
    assert len(d4) == 11 and sum(e.is_unsplit for e in d4) == 2


def test_symbol_of_bipartition():
    s = symbol_of_bipartition(bip([3], [2], B5), 1)
    assert (s.top, s.bottom) == ((0, 4), (2,))
    s = symbol_of_bipartition(bip([], [1, 1], B2), 2)
    assert (s.top, s.bottom) == ((0, 1, 2), (1, 2))
    with pytest.raises(PadTooSmall):
        symbol_of_bipartition(bip([], [1, 1], B2), 1)


def test_springer_class_examples():
    assert springer_class(bip([3], [2], B5)).lam == Partition([7, 3, 1])
    assert springer_class(bip([2], [], B2)).lam == Partition([5])
    sign = springer_class(bip([], [1, 1], B2))
    assert dominates([5], sign.lam) and sign.lam == Partition([1] * 5)


def test_springer_map_of_b2():
    got = {str(e): springer_class(e).lam for e in enumerate_bipartitions(B2)}
    assert got == {
        "([2],[])": Partition([5]),
        "([1,1],[])": Partition([3, 1, 1]),
        "([1],[1])": Partition([3, 1, 1]),
        "([],[2])": Partition([2, 2, 1]),
        "([],[1,1])": Partition([1, 1, 1, 1, 1]),
    }


def test_trivial_rep_goes_to_the_regular_class():
    for g in groups(8):
        c = springer_class(bip([g.rank], [], g))
        assert all(dominates(c.lam, d.lam) for d in enumerate_classes(g))


def test_special_reps():
    assert is_special_rep(bip([3], [2], B5))
    assert is_special_rep(bip([2, 1], [1], B4))
    assert not is_special_rep(bip([], [2], B2))
    assert not is_special_rep(bip([1, 1], [], B2))


def test_special_classes():
    assert is_special_class(UnipotentClass(B2, Partition([5])))
    # the minimal class of SO(5) is not special: its Springer representation ([],[2]) is not
    assert not is_special_class(UnipotentClass(B2, Partition([2, 2, 1])))
    assert any(not is_special_class(c) for c in enumerate_classes(C3))


def test_special_class_iff_springer_rep_special():
    for g in groups(6):
        for c in enumerate_classes(g):
            if not c.is_very_even:
                assert is_special_class(c) == is_special_rep(springer_rep(c))


def test_springer_rep_roundtrip():
    for g in groups(7):
        for c in enumerate_classes(g):
            if not c.is_very_even:
                assert springer_class(springer_rep(c)) == c


def test_springer_map_is_injective():
    for g in groups(5):
        seen = {}
        for e in enumerate_bipartitions(g, include_unsplit=False):
            key = (springer_class(e), usymbol_of_bipartition(e, g.rank))
            assert key not in seen, (e, seen.get(key))
            seen[key] = e


def test_cells_partition_irreps():
    fam = families(B3)
    assert sum(len(v) for v in fam.values()) == 10
    for cell, members in fam.items():
        assert is_special_class(cell.special_class)
        assert sum(is_special_rep(e) for e in members) == 1
        assert all(cell_of(e) == cell for e in members)
        assert all(a_value(e) == a_value(cell.special_rep) for e in members)


def test_distinguished_fixed_point():
    for g in groups(5):
        for e in enumerate_bipartitions(g, include_unsplit=False):
            if is_special_rep(e):
                assert cell_of(e).special_class == springer_class(e)
                assert cell_of(e).special_rep == e


def test_cell_order_b3():
    trivial, sign = cell_of(bip([3], [], B3)), cell_of(bip([], [1, 1, 1], B3))
    assert cell_leq(sign, trivial) and not cell_leq(trivial, sign)
    cells = list(families(B3))
    for a, b in product(cells, repeat=2):
        assert cell_leq(a, a)
        if cell_leq(a, b) and cell_leq(b, a):
            assert a == b


def test_cell_leq_group_mismatch():
    with pytest.raises(GroupMismatch):
        cell_leq(cell_of(bip([2], [], B2)), cell_of(bip([3], [], B3)))


def test_special_closure_and_pieces():
    for c in special_classes(C3):
        assert special_closure(c) == c
    for c in enumerate_classes(C3):
        if not is_special_class(c):
            s = special_closure(c)
            assert s != c and dominates(s.lam, c.lam)
    pieces = special_pieces(C3)
    flat = [c for cs in pieces.values() for c in cs]
    assert sorted(flat, key=lambda c: c.lam) == sorted(enumerate_classes(C3), key=lambda c: c.lam)
    assert len(flat) == len(set(flat))


def test_special_closure_exists_rank_7():
    for g in groups(7):
        for c in enumerate_classes(g):
            assert dominates(special_closure(c).lam, c.lam)


def _comparable(e, f):
    """Orientations of ``e`` with ``alpha <= alpha'`` and ``beta <= beta'`` in dominance."""
    options = [(e.alpha, e.beta)]
    if e.group.letter == "D":
        options.append((e.beta, e.alpha))
    return any(a.size == f.alpha.size and dominates(f.alpha, a) and dominates(f.beta, b) for a, b in options)


@pytest.mark.parametrize("g", list(groups(5)), ids=str)
def test_rowwise_dominance_orders_classes_and_cells(g):
    reps = enumerate_bipartitions(g, include_unsplit=False)
    for e, f in product(reps, repeat=2):
        if not _comparable(e, f):
            continue
        c, c2 = springer_class(e).lam, springer_class(f).lam
        s, s2 = cell_of(e).special_class.lam, cell_of(f).special_class.lam
        assert dominates(c2, c) and dominates(s2, s)
        if e != f:
            assert c != c2 and s != s2


@pytest.mark.parametrize("g", list(groups(8, 2)), ids=str)
def test_balanced_sign_pair_is_largest(g):
    n = g.rank
    n1, n2 = (n + 1) // 2, n // 2
    base = bip([1] * n1, [1] * n2, g)
    for k in range(-n1, n2 + 1):
        e = bip([1] * (n1 + k), [1] * (n2 - k), g)
        assert dominates(springer_class(base).lam, springer_class(e).lam)
        assert cell_leq(cell_of(e), cell_of(base))


def test_dimensions_sum_of_squares():
    for g in groups(5):
        total = sum(dim_bipartition(e.alpha, e.beta, g.letter) ** 2 * (2 if e.is_unsplit else 1) for e in enumerate_bipartitions(g))
        assert total == weyl_order(g.letter, g.rank) == g.weyl_order


def test_b_value_examples():
    assert b_value(bip([2], [], B2)) == 0
    assert b_value(bip([], [1, 1], B2)) == 4
    assert b_value(bip([1], [1], B2)) == 1


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(list(groups(6))), st.data())
def test_a_value_bounded_by_b_value(g, data):
    e = data.draw(st.sampled_from(enumerate_bipartitions(g, include_unsplit=False)))
    assert 0 <= a_value(e) <= b_value(e)
    if is_special_rep(e):
        assert a_value(e) == b_value(e)
