"""Partitions, dominance, joins and unipotent classes of classical groups.

Partitions are stored weakly decreasing with zeros stripped.  Formulas that
index parts in increasing order are translated where they are used.
"""

from __future__ import annotations

import os
import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import RankTooLarge, SizeMismatch, SpringerLabError

GUARD_ENV = "SPRINGERLAB_GUARD"


def rank_guard(default: int) -> int:
    """Return the rank limit, raised (never lowered) by ``SPRINGERLAB_GUARD``."""
    raw = os.environ.get(GUARD_ENV)
    if raw:
        try:
            return max(default, int(raw))
        except ValueError:
            pass
    return default


class Partition(tuple):
    """An integer partition, stored weakly decreasing without zeros.

    Any iterable of nonnegative integers is accepted and sorted, so
    ``Partition([1, 3, 0])`` equals ``Partition([3, 1])``.
    """

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        values = [int(p) for p in parts]
        if any(p < 0 for p in values):
            raise SpringerLabError(f"negative part in {values}")
        return super().__new__(cls, sorted((p for p in values if p), reverse=True))

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def ascending(self, k: int | None = None) -> tuple[int, ...]:
        """Parts in increasing order, left-padded with zeros to ``k`` entries."""
        k = len(self) if k is None else k
        if k < len(self):
            raise SpringerLabError(f"cannot pad {self} to {k} parts")
        return (0,) * (k - len(self)) + tuple(reversed(self))

    def padded(self, k: int) -> tuple[int, ...]:
        """Parts in decreasing order, right-padded with zeros."""
        return tuple(self) + (0,) * max(0, k - len(self))

    def transpose(self) -> "Partition":
        return Partition(sum(1 for p in self if p > i) for i in range(self[0] if self else 0))

    def multiplicities(self) -> Counter:
        return Counter(self)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        return format_partition(self)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        return parse_partition(text)


_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_partition(text: str) -> Partition:
    """Parse ``"[5,3,1]"``, ``"[]"`` or the exponent shorthand ``"[3,1^4]"``."""
    s = text.strip()
    if s.startswith("[") and s.endswith("]"):
        s = s[1:-1]
    s = s.strip()
    if not s:
        return Partition()
    parts: list[int] = []
    for tok in s.split(","):
        m = _TOKEN.match(tok.strip())
        if not m:
            raise SpringerLabError(f"bad partition token {tok!r} in {text!r}")
        parts.extend([int(m.group(1))] * int(m.group(2) or 1))
    return Partition(parts)


def format_partition(lam: Iterable[int]) -> str:
    return "[" + ",".join(str(p) for p in lam) + "]"


def sigma_prefix(lam: Iterable[int], i: int) -> int:
    """Sum of the ``i`` largest parts."""
    return sum(sorted(lam, reverse=True)[: max(i, 0)])


def dominance_leq(x: Iterable[int], y: Iterable[int]) -> bool:
    """``x <= y`` in dominance, for arbitrary finite multisets of integers.

    Both are sorted decreasingly and compared through prefix sums; sizes are
    not required to agree (the tail prefix sums then decide).
    """
    xs = sorted(x, reverse=True)
    ys = sorted(y, reverse=True)
    sx = sy = 0
    for i in range(max(len(xs), len(ys))):
        sx += xs[i] if i < len(xs) else 0
        sy += ys[i] if i < len(ys) else 0
        if sx > sy:
            return False
    return True


def dominates(lam: Iterable[int], mu: Iterable[int]) -> bool:
    """True iff ``lam >= mu`` in dominance order.  Sizes must agree."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise SizeMismatch(f"{lam} and {mu} have sizes {lam.size} and {mu.size}")
    return dominance_leq(mu, lam)


def join(lam: Iterable[int], mu: Iterable[int]) -> Partition:
    """Partwise sum, largest part with largest part."""
    a, b = Partition(lam), Partition(mu)
    k = max(len(a), len(b))
    return Partition(x + y for x, y in zip(a.padded(k), b.padded(k)))


def join_all(parts: Iterable[Iterable[int]]) -> Partition:
    out = Partition()
    for p in parts:
        out = join(out, p)
    return out


@lru_cache(maxsize=None)
def _partitions(n: int, maxpart: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for p in range(min(n, maxpart), 0, -1):
        out.extend((p,) + rest for rest in _partitions(n - p, p))
    return tuple(out)


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of ``n`` in decreasing lexicographic order."""
    for p in _partitions(n, n):
        yield Partition(p)


@dataclass(frozen=True, order=True)
class GroupType:
    """A classical type ``B``, ``C`` or ``D`` of rank ``n``.

    Rank 0 is tolerated for B and C (the trivial Weyl group), which
    appears as the relative Weyl group of cuspidal data.
    """

    letter: str
    rank: int

    def __post_init__(self) -> None:
        if self.letter not in ("B", "C", "D"):
            raise SpringerLabError(f"unknown type letter {self.letter!r}")
        lowest = 2 if self.letter == "D" else 0
        if not isinstance(self.rank, int) or self.rank < lowest:
            raise SpringerLabError(f"rank {self.rank} not allowed for type {self.letter}")

    @property
    def N(self) -> int:
        return 2 * self.rank + 1 if self.letter == "B" else 2 * self.rank

    @property
    def weyl_order(self) -> int:
        from math import factorial

        order = 2**self.rank * factorial(self.rank)
        return order // 2 if self.letter == "D" else order

    def __str__(self) -> str:
        return f"{self.letter}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "GroupType":
        m = re.fullmatch(r"\s*([BCD])_?(\d+)\s*", text)
        if not m:
            raise SpringerLabError(f"bad group type {text!r}")
        return cls(m.group(1), int(m.group(2)))


def valid_unipotent(group: GroupType, lam: Iterable[int]) -> bool:
    """Multiplicity criterion for partitions of ``N`` labelling unipotent classes."""
    lam = Partition(lam)
    if lam.size != group.N:
        raise SizeMismatch(f"{lam} is not a partition of {group.N}")
    bad_parity = 0 if group.letter in "BD" else 1
    return all(mult % 2 == 0 for part, mult in lam.multiplicities().items() if part % 2 == bad_parity)


@dataclass(frozen=True)
class UnipotentClass:
    group: GroupType
    lam: Partition

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam", Partition(self.lam))
        if not valid_unipotent(self.group, self.lam):
            raise SpringerLabError(f"{self.lam} is not a unipotent class of {self.group}")

    @property
    def is_very_even(self) -> bool:
        """Type D partition with only even parts (two classes share it)."""
        return self.group.letter == "D" and bool(self.lam) and all(p % 2 == 0 for p in self.lam)

    def __str__(self) -> str:
        return format_partition(self.lam)


def enumerate_classes(group: GroupType) -> list[UnipotentClass]:
    """All unipotent classes, listed so that larger classes come first."""
    if group.rank > rank_guard(30):
        raise RankTooLarge(f"rank {group.rank} exceeds guard; set {GUARD_ENV}")
    return [UnipotentClass(group, lam) for lam in partitions_of(group.N) if valid_unipotent(group, lam)]
