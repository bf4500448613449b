"""Marked partitions and the order on conjugacy classes of the Lusztig quotient.

In classical types the quotient is elementary abelian of exponent 2.  A
class is written as the partition of the unipotent class together with a
strictly increasing list of markable part values; which parts are markable
is supplied by the caller.

The module also gives the bijection between irreducible representations and
conjugacy classes of a product of symmetric groups that goes through
subsets of simple reflections.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Sequence

from .errors import InvalidMarking
from .induction import lr_product
from .partitions import GroupType, Partition, parse_partition, partitions_of
from .springer import a_value_type_a

Marking = tuple[int, ...]


@dataclass(frozen=True)
class MarkableContext:
    group: GroupType
    lam: Partition
    markable: tuple[int, ...]

    def __post_init__(self) -> None:
        lam = Partition(self.lam)
        marks = tuple(self.markable)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "markable", marks)
        if any(marks[i] >= marks[i + 1] for i in range(len(marks) - 1)):
            raise InvalidMarking(f"markable values {list(marks)} are not strictly increasing")
        if not set(marks) <= set(lam):
            raise InvalidMarking(f"markable values {list(marks)} are not all parts of {lam}")

    def padded(self, nu: Iterable[int]) -> Marking:
        """Validate ``nu`` and bring it to even length (a leading 0 in type C)."""
        nu = tuple(sorted(nu))
        if len(set(nu)) != len(nu):
            raise InvalidMarking(f"marking {list(nu)} repeats a value")
        if not set(nu) <= set(self.markable):
            raise InvalidMarking(f"marking {list(nu)} uses values that are not markable in {self.lam}")
        if len(nu) % 2:
            if self.group.letter != "C":
                raise InvalidMarking(f"marking {list(nu)} has odd length in type {self.group.letter}")
            nu = (0,) + nu
        return nu

    def markings(self) -> list[Marking]:
        """All admissible markings, unpadded."""
        out = []
        for r in range(len(self.markable) + 1):
            if r % 2 and self.group.letter != "C":
                continue
            out.extend(combinations(self.markable, r))
        return out


@dataclass(frozen=True)
class MarkedPartition:
    ctx: MarkableContext
    nu: Marking

    def __post_init__(self) -> None:
        self.ctx.padded(self.nu)
        object.__setattr__(self, "nu", tuple(sorted(self.nu)))

    def __str__(self) -> str:
        return f"{self.ctx.lam} marked [{','.join(map(str, self.nu))}]"

    def to_json(self) -> dict:
        return {"lambda": list(self.ctx.lam), "marking": list(self.nu)}


def _pairs(nu: Marking) -> list[tuple[int, int]]:
    return [(nu[i], nu[i + 1]) for i in range(0, len(nu), 2)]


def marking_leq(ctx: MarkableContext, nu: Iterable[int], nu_prime: Iterable[int]) -> bool:
    """Whether ``(lam, nu') <= (lam, nu)``: each block ``c < d`` of ``nu'`` sits
    inside some block ``a <= c < d <= b`` of ``nu``."""
    big, small = _pairs(ctx.padded(nu)), _pairs(ctx.padded(nu_prime))
    return all(any(a <= c and d <= b for a, b in big) for c, d in small)


def superminimal_markings(ctx: MarkableContext) -> list[MarkedPartition]:
    marks = ctx.markable
    out = [MarkedPartition(ctx, (marks[i], marks[i + 1])) for i in range(len(marks) - 1)]
    if ctx.group.letter == "C" and marks:
        out.insert(0, MarkedPartition(ctx, (marks[0],)))
    return out


def is_superminimal(ctx: MarkableContext, nu: Iterable[int]) -> bool:
    nu = tuple(sorted(nu))
    if not nu:
        return False
    below = [m for m in ctx.markings() if m != nu and marking_leq(ctx, nu, m)]
    return all(not m for m in below)


def marking_vector(ctx: MarkableContext, nu: Iterable[int]) -> int:
    """The marking as a vector over GF(2), one bit per markable value."""
    bits = 0
    for x in nu:
        bits ^= 1 << ctx.markable.index(x)
    return bits


def gf2_rank(vectors: Iterable[int]) -> int:
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


@dataclass(frozen=True)
class CoxeterGenerators:
    generators: tuple[MarkedPartition, ...]
    rank: int

    @property
    def independent(self) -> bool:
        return self.rank == len(self.generators)

    def to_json(self) -> dict:
        return {"generators": [list(g.nu) for g in self.generators], "rank": self.rank, "order": 2**self.rank}


def coxeter_generators(ctx: MarkableContext) -> CoxeterGenerators:
    """The superminimal classes as simple reflections of an elementary abelian 2-group."""
    gens = tuple(superminimal_markings(ctx))
    return CoxeterGenerators(gens, gf2_rank(marking_vector(ctx, g.nu) for g in gens))


def parse_marking(text: str) -> Marking:
    return tuple(sorted(parse_partition(text))) if text.strip() not in ("", "[]") else ()


def parse_markable(text: str) -> tuple[int, ...]:
    vals = [int(x) for x in re.findall(r"\d+", text)]
    return tuple(sorted(set(vals)))


# -- representations and classes of products of symmetric groups ----------------------------


def _sign_truncated(mu: Partition) -> Partition:
    """``eps (x) j_{S_mu}^{S_n} eps``, computed from the LR expansion."""
    prod: dict[Partition, int] = {Partition(): 1}
    for part in mu:
        nxt: dict[Partition, int] = {}
        for lam, c in prod.items():
            for nu, d in lr_product(lam, [1] * part).items():
                nxt[nu] = nxt.get(nu, 0) + c * d
        prod = nxt
    target = sum(a_value_type_a([1] * p) for p in mu)
    low = [lam for lam in prod if a_value_type_a(lam) == target]
    if len(low) != 1 or prod[low[0]] != 1:
        raise InvalidMarking(f"truncated induction of the sign from S_{list(mu)} is not irreducible")
    return low[0].transpose()


def _cycle_type(n: int, reflections: Sequence[int]) -> Partition:
    """Cycle type of the product of the simple transpositions ``(i, i+1)``."""
    perm = list(range(n))
    for i in reflections:
        perm = [perm[i + 1] if x == i else perm[i] if x == i + 1 else perm[x] for x in range(n)]
    seen, cycles = set(), []
    for start in range(n):
        if start in seen:
            continue
        length, x = 0, start
        while x not in seen:
            seen.add(x)
            x = perm[x]
            length += 1
        cycles.append(length)
    return Partition(cycles)


def _subset_of_blocks(mu: Partition) -> list[int]:
    """Simple reflections generating the Young subgroup with blocks ``mu``."""
    out, pos = [], 0
    for part in mu:
        out.extend(range(pos, pos + part - 1))
        pos += part
    return out


@dataclass(frozen=True)
class BijectionEntry:
    subset: tuple[tuple[int, ...], ...]
    irreducible: tuple[Partition, ...]
    conjugacy_class: tuple[Partition, ...]

    def to_json(self) -> dict:
        return {
            "subset": [list(s) for s in self.subset],
            "irreducible": [list(p) for p in self.irreducible],
            "class": [list(p) for p in self.conjugacy_class],
        }


def irr_class_bijection(factors: Sequence[int]) -> list[BijectionEntry]:
    """For ``H = S_{n_1} x ... x S_{n_r}``: one entry per subset of simple
    reflections up to conjugacy, with its representation and class."""
    per_factor = []
    for n in factors:
        rows = []
        for mu in partitions_of(n):
            refl = _subset_of_blocks(mu)
            rows.append((tuple(refl), _sign_truncated(mu), _cycle_type(n, refl)))
        per_factor.append(rows)
    entries = [
        BijectionEntry(tuple(r[0] for r in combo), tuple(r[1] for r in combo), tuple(r[2] for r in combo))
        for combo in product(*per_factor)
    ]
    irreps = {e.irreducible for e in entries}
    classes = {e.conjugacy_class for e in entries}
    expected = 1
    for n in factors:
        expected *= sum(1 for _ in partitions_of(n))
    if not (len(irreps) == len(classes) == len(entries) == expected):
        raise InvalidMarking("the subset correspondence is not a bijection")
    return entries
