"""Littlewood-Richardson coefficients and induction from reflection subgroups.

Subgroups are products of factors ``(letter, rank)``.  An ``A`` factor of
rank ``r`` is the symmetric group S_{r+1}; classical factors are Weyl groups
of type B, C or D.  Induction goes through the hyperoctahedral group: every
factor is first induced to W(B_k) of its own rank, then products are
combined with the wreath-product branching rule
``mult(alpha, beta) = c^alpha_{alpha1 alpha2} * c^beta_{beta1 beta2}``.
For a type D ambient group the result is folded back at the end.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import DegenerateDType, SpecMismatch, SpringerLabError, UnsupportedJInduction
from .partitions import GroupType, Partition, UnipotentClass, join, partitions_of
from .springer import (
    Bipartition,
    a_value_type_a,
    b_value,
    format_bipartition,
    is_special_rep,
    parse_pair,
    springer_class,
    springer_rep,
)
from .partitions import parse_partition

Pair = tuple[Partition, Partition]
FactorRep = Union[Partition, Bipartition, tuple]


# -- Littlewood-Richardson ---------------------------------------------------------


@lru_cache(maxsize=None)
def _lr_product(mu: tuple[int, ...], nu: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Expand s_mu * s_nu by adding the letters of nu row by row.

    For letter ``j`` the new boxes form a horizontal strip, and across rows
    the count of ``j`` in rows ``<= r`` may not exceed the count of ``j - 1``
    in rows ``< r`` (the lattice condition for the reverse reading word).
    """
    results: Counter = Counter()
    k = len(mu) + len(nu)

    def place(j: int, shape: tuple[int, ...], prev: tuple[int, ...]) -> None:
        if j == len(nu):
            results[Partition(shape)] += 1
            return
        need = nu[j]
        rows = len(shape)

        def fill(r: int, left: int, cur: list[int], counts: list[int], acc_prev: int, acc_cur: int) -> None:
            if r == rows:
                if left == 0:
                    place(j + 1, tuple(cur), tuple(counts))
                return
            cap = left if r == 0 else min(left, shape[r - 1] - shape[r])
            if j > 0:
                cap = min(cap, acc_prev - acc_cur)
            for c in range(cap, -1, -1):
                cur[r] = shape[r] + c
                counts[r] = c
                fill(r + 1, left - c, cur, counts, acc_prev + (prev[r] if j > 0 else 0), acc_cur + c)
            cur[r] = shape[r]
            counts[r] = 0

        fill(0, need, list(shape), [0] * rows, 0, 0)

    place(0, tuple(mu) + (0,) * (k - len(mu)), (0,) * k)
    return tuple(sorted(results.items(), reverse=True))


def lr_product(mu: Iterable[int], nu: Iterable[int]) -> dict[Partition, int]:
    """``s_mu * s_nu`` as a dictionary ``gamma -> c^gamma_{mu nu}``."""
    return dict(_lr_product(tuple(Partition(mu)), tuple(Partition(nu))))


def lr_coefficient(alpha: Iterable[int], beta: Iterable[int], gamma: Iterable[int]) -> int:
    alpha, beta, gamma = Partition(alpha), Partition(beta), Partition(gamma)
    if alpha.size + beta.size != gamma.size:
        return 0
    return lr_product(alpha, beta).get(gamma, 0)


# -- subgroup specifications ---------------------------------------------------------

LEVI_A = "LeviA"
SAME_LETTER = "SameLetterPseudo"
D_IN_B = "DInBPseudo"
D_IN_D = "DInDPseudo"
COMPOSITE = "Composite"


def _factor_size(letter: str, rank: int) -> int:
    return rank + 1 if letter == "A" else rank


@dataclass(frozen=True)
class SubgroupSpec:
    """A product of Weyl groups inside the Weyl group of ``ambient``.

    The letters of the classical factors follow the dual group, so in type B
    the natural factors are C and in type C they are D and B.  Since
    W(B_k) = W(C_k), the two letters are interchangeable below a B or C
    ambient group; they are normalized to the dual letter.
    """

    ambient: GroupType
    factors: tuple[tuple[str, int], ...]
    embedding: str = field(init=False)

    def __post_init__(self) -> None:
        amb = self.ambient.letter
        dual = {"B": "C", "C": "B", "D": "D"}[amb]
        norm = []
        for letter, rank in self.factors:
            rank = int(rank)
            if letter in "BC" and amb in "BC":
                letter = dual
            if letter not in "ABCD":
                raise SpecMismatch(f"unknown factor letter {letter!r}")
            if letter == "D" and rank < 2 or letter != "A" and rank < 1 or rank < 0:
                raise SpecMismatch(f"factor {letter}{rank} is not allowed")
            norm.append((letter, rank))
        if sum(_factor_size(l, r) for l, r in norm) != self.ambient.rank:
            raise SpecMismatch(f"factors {norm} do not have total rank {self.ambient.rank}")
        object.__setattr__(self, "factors", tuple(norm))
        object.__setattr__(self, "embedding", self._classify())

    def _classify(self) -> str:
        letters = [l for l, _ in self.factors]
        amb = self.ambient.letter
        if "A" in letters:
            return LEVI_A
        if amb == "D" and set(letters) <= {"D"}:
            return D_IN_D
        if amb == "C" and "D" in letters:
            return D_IN_B
        if amb == "B" and set(letters) <= {"C"}:
            return SAME_LETTER
        if amb == "C" and set(letters) <= {"B"}:
            return SAME_LETTER
        return COMPOSITE

    @property
    def is_levi(self) -> bool:
        return self.embedding == LEVI_A

    @property
    def is_reflection_subgroup(self) -> bool:
        """Whether the factors embed as a reflection subgroup (needed by ``induce``)."""
        return self.ambient.letter != "D" or all(l in "AD" for l, _ in self.factors)

    def factor_group(self, i: int) -> GroupType | None:
        letter, rank = self.factors[i]
        return None if letter == "A" else GroupType(letter, rank)

    @property
    def index(self) -> int:
        """``[W : W']`` as a reflection subgroup."""
        from math import factorial

        order = 1
        for letter, rank in self.factors:
            order *= factorial(rank + 1) if letter == "A" else GroupType(letter, rank).weyl_order
        return self.ambient.weyl_order // order

    def __str__(self) -> str:
        return f"{self.ambient} <= " + "x".join(f"{l}{r}" for l, r in self.factors)

    @classmethod
    def parse(cls, text: str) -> "SubgroupSpec":
        m = re.fullmatch(r"\s*([BCD]\d+)\s*<=\s*(.+?)\s*", text)
        if not m:
            raise SpringerLabError(f"bad subgroup text {text!r}")
        facs = []
        for tok in re.split(r"\s*[x×*]\s*", m.group(2)):
            fm = re.fullmatch(r"([ABCD])_?(\d+)", tok)
            if not fm:
                raise SpringerLabError(f"bad factor {tok!r} in {text!r}")
            facs.append((fm.group(1), int(fm.group(2))))
        return cls(GroupType.parse(m.group(1)), tuple(facs))

    def to_json(self) -> dict:
        return {
            "ambient": str(self.ambient),
            "factors": [[l, r] for l, r in self.factors],
            "embedding": self.embedding,
        }


def identity_spec(group: GroupType) -> SubgroupSpec:
    return SubgroupSpec(group, ((group.letter if group.letter == "D" else {"B": "C", "C": "B"}[group.letter], group.rank),))


def enumerate_dual_pseudo_levis(group: GroupType) -> list[SubgroupSpec]:
    """Maximal Levi and pseudo-Levi subgroups of the dual group, as Weyl groups."""
    n, letter = group.rank, group.letter
    out: list[SubgroupSpec] = []

    def add(*facs: tuple[str, int]) -> None:
        out.append(SubgroupSpec(group, tuple(f for f in facs if f[1] > 0 or f[0] == "A")))

    classical = {"B": "C", "C": "B", "D": "D"}[letter]
    for k in range(1, n + 1):
        rest = n - k
        if letter == "D" and rest == 1:
            continue
        if rest == 0:
            add(("A", k - 1))
        else:
            add(("A", k - 1), (classical, rest))
    if letter == "B":
        for k in range(1, n // 2 + 1):
            add(("C", k), ("C", n - k))
    elif letter == "C":
        for k in range(2, n + 1):
            add(("D", k), ("B", n - k)) if k < n else add(("D", n))
    else:
        for k in range(2, n // 2 + 1):
            if n - k >= 2:
                add(("D", k), ("D", n - k))
    return out


# -- virtual representations --------------------------------------------------------


class VirtualRep:
    """A finite sum of irreducible representations with positive multiplicities."""

    def __init__(self, ambient: GroupType, terms: Mapping[Bipartition, int] | None = None):
        self.ambient = ambient
        self.terms: dict[Bipartition, int] = {}
        for e, m in (terms or {}).items():
            if m < 0:
                raise SpringerLabError(f"negative multiplicity {m} for {e}")
            if e.group != ambient:
                raise SpringerLabError(f"{e} does not belong to {ambient}")
            if m:
                self.terms[e] = self.terms.get(e, 0) + m

    @classmethod
    def single(cls, e: Bipartition) -> "VirtualRep":
        return cls(e.group, {e: 1})

    def __iter__(self) -> Iterator[Bipartition]:
        return iter(sorted(self.terms, key=_bip_sort_key))

    def items(self) -> list[tuple[Bipartition, int]]:
        return [(e, self.terms[e]) for e in self]

    def __getitem__(self, e: Bipartition) -> int:
        return self.terms.get(e, 0)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, VirtualRep) and self.ambient == other.ambient and self.terms == other.terms

    def __add__(self, other: "VirtualRep") -> "VirtualRep":
        if other.ambient != self.ambient:
            raise SpringerLabError("cannot add representations of different groups")
        out = VirtualRep(self.ambient, self.terms)
        for e, m in other.terms.items():
            out.terms[e] = out.terms.get(e, 0) + m
        return out

    @property
    def has_unsplit(self) -> bool:
        return any(e.is_unsplit for e in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{m}*{e}" if m > 1 else str(e) for e, m in self.items())

    def to_json(self) -> list[dict]:
        return [dict(e.to_json(), multiplicity=m, unsplit=e.is_unsplit) for e, m in self.items()]


def _bip_sort_key(e: Bipartition) -> tuple:
    return (-e.alpha.size, tuple(-x for x in e.alpha), tuple(-x for x in e.beta))


# -- induction -------------------------------------------------------------------------


def _as_pair(letter: str, rank: int, rep: FactorRep) -> Pair:
    if isinstance(rep, Bipartition):
        a, b = rep.alpha, rep.beta
    elif isinstance(rep, str):
        a, b = parse_pair(rep)
    else:
        a, b = rep
    a, b = Partition(a), Partition(b)
    if a.size + b.size != rank:
        raise SpecMismatch(f"({a},{b}) is not a representation of {letter}{rank}")
    return a, b


def _as_partition(rank: int, rep: FactorRep) -> Partition:
    sigma = parse_partition(rep) if isinstance(rep, str) else Partition(rep)
    if sigma.size != rank + 1:
        raise SpecMismatch(f"{sigma} is not a representation of S_{rank + 1}")
    return sigma


def normalize_reps(sub: SubgroupSpec, reps: Sequence[FactorRep]) -> list:
    if len(reps) != len(sub.factors):
        raise SpecMismatch(f"{len(reps)} representations given for {len(sub.factors)} factors")
    out = []
    for (letter, rank), rep in zip(sub.factors, reps):
        out.append(_as_partition(rank, rep) if letter == "A" else _as_pair(letter, rank, rep))
    return out


def _factor_to_b(letter: str, rank: int, rep) -> Counter:
    """Induce one factor representation to W(B_k) of the same rank."""
    if letter == "A":
        out: Counter = Counter()
        n = rank + 1
        for k in range(n + 1):
            for a in partitions_of(k):
                for b in partitions_of(n - k):
                    c = lr_coefficient(a, b, rep)
                    if c:
                        out[(a, b)] += c
        return out
    a, b = rep
    if letter == "D":
        if a == b:
            raise DegenerateDType(f"({a},{b}) of D{rank} is not split into its two halves")
        return Counter({(a, b): 1, (b, a): 1})
    return Counter({(a, b): 1})


def _product(x: Counter, y: Counter) -> Counter:
    out: Counter = Counter()
    for (a1, b1), m1 in x.items():
        for (a2, b2), m2 in y.items():
            left = lr_product(a1, a2)
            right = lr_product(b1, b2)
            for a, ca in left.items():
                for b, cb in right.items():
                    out[(a, b)] += m1 * m2 * ca * cb
    return out


def induce_pairs(sub: SubgroupSpec, reps: Sequence[FactorRep]) -> Counter:
    """Induction to W(B_n) of the ambient rank, as ordered pairs."""
    norm = normalize_reps(sub, reps)
    total: Counter = Counter({(Partition(), Partition()): 1})
    for (letter, rank), rep in zip(sub.factors, norm):
        total = _product(total, _factor_to_b(letter, rank, rep))
    return total


def induce(sub: SubgroupSpec, reps: Sequence[FactorRep]) -> VirtualRep:
    """Full decomposition of the induced representation.

    For a type D ambient group the hyperoctahedral result is symmetric under
    swapping rows and is folded: an unordered pair with distinct rows gets
    the common multiplicity, and an unordered pair with equal rows is kept as
    an unsplit key whose multiplicity counts both halves together.
    """
    if not sub.is_reflection_subgroup:
        raise SpecMismatch(f"{sub} is not a reflection subgroup; induction is undefined")
    pairs = induce_pairs(sub, reps)
    group = sub.ambient
    if group.letter != "D":
        return VirtualRep(group, {Bipartition(a, b, group): m for (a, b), m in pairs.items()})
    folded: dict[Bipartition, int] = {}
    for (a, b), m in pairs.items():
        if pairs.get((b, a), 0) != m:
            raise SpringerLabError(f"induced multiplicities of ({a},{b}) and its swap differ")
        e = Bipartition(a, b, group)
        folded[e] = m
    return VirtualRep(group, folded)


# -- truncated induction ------------------------------------------------------------------


def factor_b_value(letter: str, rank: int, rep) -> int:
    if letter == "A":
        return a_value_type_a(rep)
    if letter == "D" and rep[0] == rep[1]:
        raise DegenerateDType(f"({rep[0]},{rep[1]}) of D{rank} is not split into its two halves")
    return b_value(Bipartition(rep[0], rep[1], GroupType(letter, rank)))


def truncated_induce(sub: SubgroupSpec, reps: Sequence[FactorRep]) -> VirtualRep:
    """Components of the induced representation whose b-value equals that of the input.

    This is the truncated induction of Macdonald, Lusztig and Spaltenstein;
    it is irreducible on special inputs.
    """
    norm = normalize_reps(sub, reps)
    target = sum(factor_b_value(l, r, rep) for (l, r), rep in zip(sub.factors, norm))
    full = induce(sub, norm)
    return VirtualRep(full.ambient, {e: m for e, m in full.terms.items() if b_value(e) == target})


def balanced_sign(j: int) -> Pair:
    """j-induction of the sign of S_j to the hyperoctahedral group."""
    return Partition([1] * ((j + 1) // 2)), Partition([1] * (j // 2))


def _d_orientation(rank: int, pair: Pair) -> Pair:
    a, b = pair
    if a == b:
        raise DegenerateDType(f"({a},{b}) of D{rank} is not split into its two halves")
    target = b_value(Bipartition(a, b, GroupType("D", rank)))
    bg = GroupType("B", rank)
    hits = [p for p in ((a, b), (b, a)) if b_value(Bipartition(p[0], p[1], bg)) == target]
    if len(hits) != 1:
        raise UnsupportedJInduction(f"no unique orientation of ({a},{b}) from D{rank} to B{rank}")
    return hits[0]


def j_induce(sub: SubgroupSpec, special_reps: Sequence[FactorRep]) -> Bipartition:
    """Truncated induction of special representations, by joining rows.

    A factors accept only the sign representation, which contributes the
    balanced pair of columns.  A type D factor is oriented as the B
    representation with the same b-value.  The joined pair is the result.
    """
    norm = normalize_reps(sub, special_reps)
    alpha, beta = Partition(), Partition()
    for (letter, rank), rep in zip(sub.factors, norm):
        if letter == "A":
            if rep != Partition([1] * (rank + 1)):
                raise UnsupportedJInduction(f"j-induction from S_{rank + 1} is only supported for the sign, got {rep}")
            a, b = balanced_sign(rank + 1)
        else:
            if not is_special_rep(Bipartition(rep[0], rep[1], GroupType(letter, rank))):
                raise UnsupportedJInduction(f"{format_bipartition(*rep)} is not special in {letter}{rank}")
            a, b = _d_orientation(rank, rep) if letter == "D" else rep
        alpha, beta = join(alpha, a), join(beta, b)
    return Bipartition(alpha, beta, sub.ambient)


def j_induce_any(sub: SubgroupSpec, reps: Sequence[FactorRep]) -> Bipartition:
    """``j_induce`` when supported, else the single component of ``truncated_induce``."""
    try:
        return j_induce(sub, reps)
    except UnsupportedJInduction:
        pass
    trunc = truncated_induce(sub, reps)
    if len(trunc) != 1 or next(iter(trunc.terms.values())) != 1:
        raise UnsupportedJInduction(f"truncated induction along {sub} is not irreducible: {trunc}")
    return next(iter(trunc))


def induced_class(sub: SubgroupSpec, cls_per_factor: Sequence) -> UnipotentClass:
    """Induce classes through the Springer representations of the factors.

    A factors take partitions (classes of GL, whose Springer representation
    carries the same label); classical factors take ``UnipotentClass``
    objects of the factor type.
    """
    reps: list = []
    for (letter, rank), c in zip(sub.factors, cls_per_factor):
        if letter == "A":
            reps.append(Partition(c.lam if isinstance(c, UnipotentClass) else c))
        else:
            if not isinstance(c, UnipotentClass):
                c = UnipotentClass(GroupType(letter, rank), c)
            reps.append(springer_rep(c).rows)
    return springer_class(j_induce_any(sub, reps))


def product_reps(sub: SubgroupSpec, special_only: bool = False) -> Iterator[list]:
    """All tuples of irreducible factor representations (type D: unordered)."""
    choices = []
    for letter, rank in sub.factors:
        if letter == "A":
            choices.append(list(partitions_of(rank + 1)))
            continue
        from .springer import enumerate_bipartitions

        g = GroupType(letter, rank)
        reps = [e for e in enumerate_bipartitions(g) if not special_only or is_special_rep(e)]
        choices.append([e.rows for e in reps])
    for combo in product(*choices):
        yield list(combo)
