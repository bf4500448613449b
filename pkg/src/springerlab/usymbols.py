"""Symbols and u-symbols attached to unipotent classes.

A *symbol* here is the usual two-row array of Lusztig: for B and C the top
row has one more entry than the bottom row, for D the rows have equal
length and are unordered.  The *u-symbol* of a class is obtained from its
symbol by adding a staircase (``i - 1`` on each row, plus one extra on the
bottom row in type C).  Two arrays that differ by the length shift of their
kind are regarded as the same object.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import MalformedRecipe, NoOrdinaryRepresentative, ShapeMismatch, SpringerLabError
from .partitions import GroupType, Partition, UnipotentClass, dominance_leq, valid_unipotent

Rows = tuple[int, ...]


def _strict(row: Sequence[int]) -> bool:
    return all(row[i] < row[i + 1] for i in range(len(row) - 1))


def _check_rows(top: Rows, bottom: Rows) -> None:
    if any(x < 0 for x in top + bottom):
        raise SpringerLabError(f"negative entry in {top} / {bottom}")
    if not (_strict(top) and _strict(bottom)):
        raise MalformedRecipe(f"rows {top} / {bottom} are not strictly increasing")


def _shift_offsets(kind: str, letter: str) -> tuple[int, int, int]:
    """(top base, bottom base, step) of one length shift."""
    if kind == "symbol":
        return 0, 0, 1
    return (0, 1, 2) if letter == "C" else (0, 0, 2)


def _shift_rows(kind: str, letter: str, top: Rows, bottom: Rows, times: int = 1) -> tuple[Rows, Rows]:
    t0, b0, step = _shift_offsets(kind, letter)
    for _ in range(times):
        top = (t0,) + tuple(x + step for x in top)
        bottom = (b0,) + tuple(x + step for x in bottom)
    return top, bottom


def _reduce_rows(kind: str, letter: str, top: Rows, bottom: Rows) -> tuple[Rows, Rows]:
    t0, b0, step = _shift_offsets(kind, letter)
    while top and bottom and top[0] == t0 and bottom[0] == b0:
        t, b = tuple(x - step for x in top[1:]), tuple(x - step for x in bottom[1:])
        if any(x < 0 for x in t + b):
            break
        top, bottom = t, b
    return top, bottom


class _TwoRow:
    kind = ""
    group: GroupType
    top: Rows
    bottom: Rows

    @property
    def defect(self) -> int:
        return len(self.top) - len(self.bottom)

    @property
    def length(self) -> int:
        return min(len(self.top), len(self.bottom))

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(sorted(self.top + self.bottom))

    def _key(self) -> tuple:
        top, bottom = _reduce_rows(self.kind, self.group.letter, self.top, self.bottom)
        if self.group.letter == "D" and len(top) == len(bottom):
            top, bottom = sorted((top, bottom))
        return (self.kind, self.group, top, bottom)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, _TwoRow) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def shifted(self, times: int = 1):
        top, bottom = _shift_rows(self.kind, self.group.letter, self.top, self.bottom, times)
        return type(self)(self.group, top, bottom)

    def __str__(self) -> str:
        return format_usymbol(self)


@dataclass(frozen=True, eq=False)
class Symbol(_TwoRow):
    """Symbol of a Weyl group representation or of a class (``xi`` over ``eta``)."""

    group: GroupType
    top: Rows
    bottom: Rows
    kind = "symbol"

    def __post_init__(self) -> None:
        object.__setattr__(self, "top", tuple(self.top))
        object.__setattr__(self, "bottom", tuple(self.bottom))
        _check_rows(self.top, self.bottom)
        if self.defect != (0 if self.group.letter == "D" else 1):
            raise ShapeMismatch(f"symbol rows {self.top} / {self.bottom} have the wrong shape for {self.group}")

    @property
    def xi(self) -> Rows:
        return self.top

    @property
    def eta(self) -> Rows:
        return self.bottom


@dataclass(frozen=True, eq=False)
class USymbol(_TwoRow):
    """u-symbol: an element of N_G when the defect is ordinary, else a
    generalized Springer datum in the same length-equivalence world."""

    group: GroupType
    top: Rows
    bottom: Rows
    kind = "usymbol"

    def __post_init__(self) -> None:
        object.__setattr__(self, "top", tuple(self.top))
        object.__setattr__(self, "bottom", tuple(self.bottom))
        _check_rows(self.top, self.bottom)

    @property
    def is_ordinary(self) -> bool:
        return self.defect == ordinary_defect(self.group.letter)

    def to_json(self) -> dict:
        return {"type": self.group.letter, "top": list(self.top), "bottom": list(self.bottom), "defect": self.defect}


AnyRows = Union[Symbol, USymbol, tuple]


def ordinary_defect(letter: str) -> int:
    return 0 if letter == "D" else 1


def format_usymbol(s: _TwoRow) -> str:
    top = " ".join(map(str, s.top))
    bottom = " ".join(map(str, s.bottom))
    return f"{s.group.letter}:({top} / {bottom})".replace("( /", "(/").replace("/ )", "/)")


def parse_usymbol(text: str, rank: int | None = None) -> USymbol:
    """Parse ``"B:(0 5 / 2)"``.  The rank is inferred from the entries when omitted."""
    try:
        letter, body = text.strip().split(":", 1)
        body = body.strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise ValueError
        top_s, bottom_s = body[1:-1].split("/")
        top = tuple(int(x) for x in top_s.split())
        bottom = tuple(int(x) for x in bottom_s.split())
    except ValueError:
        raise SpringerLabError(f"bad u-symbol text {text!r}") from None
    letter = letter.strip()
    if rank is None:
        rank = usymbol_rank(letter, top, bottom)
    return USymbol(GroupType(letter, rank), top, bottom)


def usymbol_rank(letter: str, top: Sequence[int], bottom: Sequence[int]) -> int:
    """Rank of the group carrying a u-symbol with these rows (any defect).

    Uses the fact that the ordinary twin of the entry multiset inverts to a
    partition of N.
    """
    lam = _partition_of_multiset(letter, list(top) + list(bottom))
    n = sum(lam)
    return (n - 1) // 2 if letter == "B" else n // 2


def usymbol_from_json(obj: dict, rank: int | None = None) -> USymbol:
    letter, top, bottom = obj["type"], tuple(obj["top"]), tuple(obj["bottom"])
    if rank is None:
        rank = usymbol_rank(letter, top, bottom)
    return USymbol(GroupType(letter, rank), top, bottom)


def staircase(letter: str, top: Sequence[int], bottom: Sequence[int]) -> tuple[Rows, Rows]:
    """Symbol rows to u-symbol rows."""
    extra = 1 if letter == "C" else 0
    return (
        tuple(x + i for i, x in enumerate(top)),
        tuple(x + i + extra for i, x in enumerate(bottom)),
    )


# -- the recipe from a class ---------------------------------------------------


def recipe_rows(cls: UnipotentClass) -> tuple[Rows, Rows, int]:
    """Raw rows ``(xi, eta, m)`` produced from the partition.

    Pad the increasing parts to ``2m+1`` (B) or ``2m`` (C, D) entries, add
    ``i - 1`` to the ``i``-th part, halve the even results to get ``eta``,
    and take ``(x - 1)/2`` over the odd results to get ``xi`` (in type C an
    extra ``1`` joins the odd list first, so ``xi`` may repeat its first
    entry).
    """
    letter = cls.group.letter
    k = len(cls.lam)
    if letter == "B":
        k += (k + 1) % 2
        m = (k - 1) // 2
    else:
        k += k % 2
        m = k // 2
    bar = [x + i for i, x in enumerate(cls.lam.ascending(k))]
    evens = [x // 2 for x in bar if x % 2 == 0]
    odds = [x for x in bar if x % 2 == 1]
    if len(evens) != m:
        raise MalformedRecipe(f"{cls.lam} gives {len(evens)} even entries, expected {m}")
    if letter == "C":
        odds = [1] + odds
    xi = tuple((x - 1) // 2 for x in odds)
    return xi, tuple(evens), m


def symbol_of_class(cls: UnipotentClass) -> Symbol:
    """Symbol of the Springer representation of ``(cls, 1)``.

    In type C the raw ``xi`` begins with a possibly repeated ``0``; the
    symbol keeps that ``0`` and raises the later entries by one.
    """
    xi, eta, _ = recipe_rows(cls)
    if cls.group.letter == "C":
        xi = (xi[0],) + tuple(x + 1 for x in xi[1:])
    return Symbol(cls.group, xi, eta)


def usymbol_of_class(cls: UnipotentClass) -> USymbol:
    s = symbol_of_class(cls)
    top, bottom = staircase(cls.group.letter, s.top, s.bottom)
    return USymbol(cls.group, top, bottom)


# -- inverse direction ----------------------------------------------------------


def distinguished_arrangement(letter: str, entries: Iterable[int], kind: str = "usymbol") -> tuple[Rows, Rows]:
    """Sort entries alternately into rows, shifted once so type C starts 0 over 1."""
    ms = sorted(entries)
    top0, bottom0, step = _shift_offsets(kind, letter)
    c = sorted([top0, bottom0] + [x + step for x in ms])
    top, bottom = tuple(c[0::2]), tuple(c[1::2])
    if not (_strict(top) and _strict(bottom)):
        raise NoOrdinaryRepresentative(f"entries {ms} admit no ordinary arrangement")
    return _reduce_rows(kind, letter, top, bottom)


def _partition_of_multiset(letter: str, entries: Iterable[int]) -> Partition:
    ms = sorted(entries)
    if len(ms) % 2 != (0 if letter == "D" else 1):
        raise NoOrdinaryRepresentative(f"{len(ms)} entries cannot form an ordinary {letter} u-symbol")
    base = [0, 1] if letter == "C" else [0, 0]
    c = sorted(base + [x + 2 for x in ms])
    top, bottom = c[0::2], c[1::2]
    if not (_strict(top) and _strict(bottom)):
        raise NoOrdinaryRepresentative(f"entries {ms} admit no ordinary arrangement")
    t = [x - i for i, x in enumerate(top)]
    if letter == "C":
        if t[0] != 0:
            raise NoOrdinaryRepresentative(f"entries {ms} do not begin a type C symbol")
        odd_part = [x - 1 for x in t[1:]]
        eta = [x - i - 1 for i, x in enumerate(bottom)]
    else:
        odd_part = t
        eta = [x - i for i, x in enumerate(bottom)]
    bar = sorted([2 * x + 1 for x in odd_part] + [2 * x for x in eta])
    lam = [x - i for i, x in enumerate(bar)]
    if lam and (lam[0] < 0 or any(lam[i] > lam[i + 1] for i in range(len(lam) - 1))):
        raise NoOrdinaryRepresentative(f"entries {ms} do not invert to a partition")
    return Partition(lam)


def class_of_multiset(group: GroupType, entries: Iterable[int]) -> UnipotentClass:
    lam = _partition_of_multiset(group.letter, entries)
    if lam.size != group.N:
        raise ShapeMismatch(f"entries invert to {lam}, not a partition of {group.N}")
    if not valid_unipotent(group, lam):
        raise NoOrdinaryRepresentative(f"entries invert to {lam}, which is not a class of {group}")
    return UnipotentClass(group, lam)


def class_of_usymbol(u: USymbol) -> UnipotentClass:
    """The class whose ``(O, 1)`` u-symbol is similar to ``u`` (any defect)."""
    return class_of_multiset(u.group, u.entries)


# -- comparisons -------------------------------------------------------------------


def _rows_of(s: AnyRows) -> tuple[Rows, Rows]:
    if isinstance(s, _TwoRow):
        return s.top, s.bottom
    top, bottom = s
    return tuple(top), tuple(bottom)


def is_distinguished(s: AnyRows) -> bool:
    """Interleaving ``a_1 <= b_1 <= a_2 <= ...`` (either row order for equal lengths)."""
    top, bottom = _rows_of(s)

    def interleaves(a: Rows, b: Rows) -> bool:
        merged = [None] * (len(a) + len(b))
        merged[0::2], merged[1::2] = a, b
        return all(merged[i] <= merged[i + 1] for i in range(len(merged) - 1))

    if len(top) == len(bottom) + 1:
        return interleaves(top, bottom)
    if len(top) == len(bottom):
        return interleaves(top, bottom) or interleaves(bottom, top)
    return False


def _aligned(a: _TwoRow, b: _TwoRow) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if a.kind != b.kind or a.group.letter != b.group.letter:
        raise ShapeMismatch(f"cannot compare {a} with {b}")
    ea, eb = a.entries, b.entries
    if (len(ea) - len(eb)) % 2:
        raise ShapeMismatch(f"entry counts of {a} and {b} have different parity")
    if len(ea) < len(eb):
        ea = a.shifted((len(eb) - len(ea)) // 2).entries
    elif len(eb) < len(ea):
        eb = b.shifted((len(ea) - len(eb)) // 2).entries
    return ea, eb


def entry_multiset(s: _TwoRow) -> Counter:
    return Counter(s.top + s.bottom)


def similar(a: _TwoRow, b: _TwoRow) -> bool:
    """Same entries with the same multiplicities, after equalizing lengths."""
    try:
        ea, eb = _aligned(a, b)
    except ShapeMismatch:
        return False
    return ea == eb


def normalize_length(s: _TwoRow, m_target: int):
    if m_target < s.length:
        raise ShapeMismatch(f"cannot shorten {s} to length {m_target}")
    return s.shifted(m_target - s.length)


def usymbol_leq(a: USymbol, b: USymbol) -> bool:
    """Dominance of entry multisets: ``a <= b``."""
    ea, eb = _aligned(a, b)
    return dominance_leq(ea, eb)
