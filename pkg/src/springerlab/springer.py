"""Irreducible representations of classical Weyl groups and the Springer map.

Representations are bipartitions.  Specialness, families (two-sided cells)
and a-values are all read off from symbols; nothing here touches Hecke
algebras.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import GroupMismatch, NonUniqueMinimum, PadTooSmall, SpringerLabError
from .partitions import (
    GroupType,
    Partition,
    UnipotentClass,
    dominates,
    enumerate_classes,
    format_partition,
    parse_partition,
    partitions_of,
)
from .usymbols import (
    Symbol,
    USymbol,
    class_of_usymbol,
    distinguished_arrangement,
    is_distinguished,
    staircase,
    symbol_of_class,
)


@dataclass(frozen=True)
class Bipartition:
    """The representation ``(alpha, beta)`` of W(B_n), W(C_n) or W(D_n).

    In type D the pair is unordered; it is stored with the lexicographically
    larger partition first.  A pair with equal rows stands for the two split
    representations together and is reported as ``is_unsplit``.
    """

    alpha: Partition
    beta: Partition
    group: GroupType

    def __post_init__(self) -> None:
        a, b = Partition(self.alpha), Partition(self.beta)
        if a.size + b.size != self.group.rank:
            raise SpringerLabError(f"({a},{b}) does not have size {self.group.rank}")
        if self.group.letter == "D" and tuple(b) > tuple(a):
            a, b = b, a
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)

    @property
    def is_unsplit(self) -> bool:
        return self.group.letter == "D" and self.alpha == self.beta

    @property
    def rows(self) -> tuple[Partition, Partition]:
        return self.alpha, self.beta

    def swapped(self) -> "Bipartition":
        return Bipartition(self.beta, self.alpha, self.group)

    def __str__(self) -> str:
        return format_bipartition(self.alpha, self.beta)

    def to_json(self) -> dict:
        return {"alpha": list(self.alpha), "beta": list(self.beta)}


def format_bipartition(alpha: Iterable[int], beta: Iterable[int]) -> str:
    return f"({format_partition(alpha)},{format_partition(beta)})"


_BIP = re.compile(r"^\s*\(\s*(\[[^\]]*\])\s*,\s*(\[[^\]]*\])\s*\)\s*$")


def parse_pair(text: str) -> tuple[Partition, Partition]:
    m = _BIP.match(text)
    if not m:
        raise SpringerLabError(f"bad bipartition text {text!r}")
    return parse_partition(m.group(1)), parse_partition(m.group(2))


def parse_bipartition(text: str, group: GroupType) -> Bipartition:
    a, b = parse_pair(text)
    return Bipartition(a, b, group)


def enumerate_bipartitions(group: GroupType, include_unsplit: bool = True) -> list[Bipartition]:
    """Irr(W) as bipartitions; in type D each unordered pair appears once."""
    out: list[Bipartition] = []
    seen: set[Bipartition] = set()
    n = group.rank
    for k in range(n, -1, -1):
        for a in partitions_of(k):
            for b in partitions_of(n - k):
                e = Bipartition(a, b, group)
                if e in seen or (e.is_unsplit and not include_unsplit):
                    continue
                seen.add(e)
                out.append(e)
    return out


# -- symbols -----------------------------------------------------------------------


def minimal_length(e: Bipartition) -> int:
    if e.group.letter == "D":
        return max(len(e.alpha), len(e.beta))
    return max(len(e.alpha) - 1, len(e.beta), 0)


def symbol_of_bipartition(e: Bipartition, m: int | None = None) -> Symbol:
    """Rows ``alpha`` and ``beta`` written increasingly, padded, plus ``i - 1``."""
    if m is None:
        m = minimal_length(e)
    if m < minimal_length(e):
        raise PadTooSmall(f"length {m} is too small for {e}")
    top_len = m if e.group.letter == "D" else m + 1
    top = tuple(x + i for i, x in enumerate(e.alpha.ascending(top_len)))
    bottom = tuple(x + i for i, x in enumerate(e.beta.ascending(m)))
    return Symbol(e.group, top, bottom)


def usymbol_of_bipartition(e: Bipartition, m: int | None = None) -> USymbol:
    s = symbol_of_bipartition(e, m)
    return USymbol(e.group, *staircase(e.group.letter, s.top, s.bottom))


springer_usymbol = usymbol_of_bipartition


def bipartition_of_symbol(s: Symbol) -> Bipartition:
    alpha = [x - i for i, x in enumerate(s.top)]
    beta = [x - i for i, x in enumerate(s.bottom)]
    return Bipartition(alpha, beta, s.group)


def springer_class(e: Bipartition) -> UnipotentClass:
    """The class of ``nu(e)``, the Springer pair attached to ``e``."""
    return class_of_usymbol(usymbol_of_bipartition(e))


def springer_rep(cls: UnipotentClass) -> Bipartition:
    """The representation attached to ``(cls, 1)``."""
    return bipartition_of_symbol(symbol_of_class(cls))


def is_springer_rep_of_class(e: Bipartition) -> bool:
    """Whether ``nu(e)`` carries the trivial local system."""
    return is_distinguished(usymbol_of_bipartition(e))


def is_special_rep(e: Bipartition) -> bool:
    return is_distinguished(symbol_of_bipartition(e))


def is_special_class(cls: UnipotentClass) -> bool:
    return is_distinguished(symbol_of_class(cls))


# -- a-values -----------------------------------------------------------------------


def _pair_min_sum(entries: Iterable[int]) -> int:
    es = sorted(entries)
    last = len(es) - 1
    return sum(x * (last - i) for i, x in enumerate(es))


def a_value(e: Bipartition) -> int:
    """Lusztig's a-function, computed from the symbol."""
    s = symbol_of_bipartition(e)
    m = len(s.bottom)
    zero = list(range(len(s.top))) + list(range(m))
    return _pair_min_sum(s.top + s.bottom) - _pair_min_sum(zero)


def a_value_type_a(sigma: Iterable[int]) -> int:
    """a-value (equal to the b-value) of ``sigma`` as a representation of S_n."""
    return sum(i * p for i, p in enumerate(Partition(sigma)))


def b_value(e: Bipartition) -> int:
    """Lowest degree of the fake degree, by the closed formula for types B, C, D."""
    n_alpha, n_beta = a_value_type_a(e.alpha), a_value_type_a(e.beta)
    if e.group.letter == "D":
        return 2 * n_alpha + 2 * n_beta + min(e.alpha.size, e.beta.size)
    return 2 * n_alpha + 2 * n_beta + e.beta.size


# -- families and cells ---------------------------------------------------------------


def _family_multiset(e: Bipartition) -> tuple[int, ...]:
    return symbol_of_bipartition(e, max(e.group.rank, 1)).entries


@dataclass(frozen=True)
class CellHandle:
    """A two-sided cell, identified by its symbol entries at length ``rank``."""

    group: GroupType
    special_class: UnipotentClass
    multiset: tuple[int, ...]

    @property
    def special_rep(self) -> Bipartition:
        top, bottom = distinguished_arrangement(self.group.letter, self.multiset, kind="symbol")
        return bipartition_of_symbol(Symbol(self.group, top, bottom))

    def __str__(self) -> str:
        return f"cell<{self.group}:{self.special_class}>"


@lru_cache(maxsize=None)
def cell_of(e: Bipartition) -> CellHandle:
    ms = _family_multiset(e)
    top, bottom = distinguished_arrangement(e.group.letter, ms, kind="symbol")
    special = bipartition_of_symbol(Symbol(e.group, top, bottom))
    return CellHandle(e.group, springer_class(special), ms)


def special_rep_in_cell(e: Bipartition) -> Bipartition:
    return cell_of(e).special_rep


def cell_leq(a: CellHandle, b: CellHandle) -> bool:
    """``a <= b``: compare the special classes by dominance."""
    if a.group != b.group:
        raise GroupMismatch(f"cells of {a.group} and {b.group}")
    return dominates(b.special_class.lam, a.special_class.lam)


def families(group: GroupType) -> dict[CellHandle, list[Bipartition]]:
    out: dict[CellHandle, list[Bipartition]] = {}
    for e in enumerate_bipartitions(group):
        out.setdefault(cell_of(e), []).append(e)
    return out


@lru_cache(maxsize=None)
def special_classes(group: GroupType) -> tuple[UnipotentClass, ...]:
    return tuple(c for c in enumerate_classes(group) if is_special_class(c))


def special_closure(cls: UnipotentClass) -> UnipotentClass:
    """Smallest special class whose closure contains ``cls``."""
    above = [s for s in special_classes(cls.group) if dominates(s.lam, cls.lam)]
    minimal = [s for s in above if not any(t != s and dominates(s.lam, t.lam) for t in above)]
    if len(minimal) != 1 or not all(dominates(s.lam, minimal[0].lam) for s in above):
        raise NonUniqueMinimum(f"special classes above {cls}: minimal ones {[str(s) for s in minimal]}")
    return minimal[0]


def special_pieces(group: GroupType) -> dict[UnipotentClass, list[UnipotentClass]]:
    pieces: dict[UnipotentClass, list[UnipotentClass]] = {s: [] for s in special_classes(group)}
    for c in enumerate_classes(group):
        pieces[special_closure(c)].append(c)
    return pieces
