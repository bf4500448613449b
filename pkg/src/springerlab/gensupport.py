"""Unipotent supports of character sheaves in classical groups.

A character sheaf is described here by combinatorial data only: a cuspidal
datum (which fixes the relative Weyl group ``W_L^G`` and the defect of the
u-symbols it reaches), a subgroup ``W_{L,s}`` of ``W_L^G`` given as a
:class:`SubgroupSpec`, and an irreducible representation ``e1`` of it.
Components of the induced representation are sent to ``N_G`` by the Springer
map of ``W_L^G`` followed by the map ``gamma`` below.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import DegenerateDType, NoMaximum, SpringerLabError
from .induction import (
    LEVI_A,
    SAME_LETTER,
    SubgroupSpec,
    enumerate_dual_pseudo_levis,
    identity_spec,
    induce,
    j_induce,
    j_induce_any,
    normalize_reps,
    product_reps,
)
from .partitions import GroupType, Partition, UnipotentClass, dominance_leq, dominates, format_partition, join, rank_guard
from .springer import (
    Bipartition,
    bipartition_of_symbol,
    format_bipartition,
    special_rep_in_cell,
    springer_class,
    usymbol_of_bipartition,
)
from .usymbols import Symbol, USymbol, class_of_usymbol, distinguished_arrangement, format_usymbol, similar

Rows = tuple[int, ...]


def staircase_partition(t: int) -> Partition:
    """``[1 < 2 < ... < t]``, a partition of ``t(t+1)/2``."""
    return Partition(range(t, 0, -1))


@dataclass(frozen=True)
class CuspidalDatum:
    """Shape data of a cuspidal pair ``(L, A_0)`` of a classical group.

    ``t = 0`` is the torus case, where ``W_L^G = W`` and ``gamma`` is the
    identity.  In type C the sign chooses between defects ``1 + 4t`` and
    ``1 - 4t``.
    """

    ambient: GroupType
    t: int = 0
    defect_sign: int = 1
    relative: GroupType = field(init=False)
    defect: int = field(init=False)

    def __post_init__(self) -> None:
        n, t, letter = self.ambient.rank, self.t, self.ambient.letter
        if t < 0:
            raise SpringerLabError("t must be nonnegative")
        if self.defect_sign not in (1, -1):
            raise SpringerLabError("defect sign must be +1 or -1")
        sign = self.defect_sign if letter == "C" and t > 0 else 1
        object.__setattr__(self, "defect_sign", sign)
        if t == 0:
            rel, d = self.ambient, (0 if letter == "D" else 1)
        elif letter == "B":
            rel, d = GroupType("B", n - 2 * t * t - 2 * t), 1 + 2 * t
        elif letter == "C":
            rel, d = GroupType("C", n - (8 * t * t + 2 * sign * t)), 1 + 4 * sign * t
        else:
            rel, d = GroupType("B", n - 8 * t * t), 4 * t
        object.__setattr__(self, "relative", rel)
        object.__setattr__(self, "defect", d)

    @classmethod
    def valid(cls, ambient: GroupType, t: int, defect_sign: int = 1) -> bool:
        try:
            cls(ambient, t, defect_sign)
        except SpringerLabError:
            return False
        return True

    @property
    def cuspidal_subgroup(self) -> SubgroupSpec | None:
        """``W^L_{T,s}`` inside ``W^L_T``, or None when ``L = T``."""
        t, letter = self.t, self.ambient.letter
        if t == 0:
            return None
        if letter == "B":
            r = t * t + t
            return SubgroupSpec(GroupType("B", 2 * r), (("C", r), ("C", r)))
        if letter == "C":
            r = 4 * t * t + 2 * self.defect_sign * t
            return SubgroupSpec(GroupType("C", 4 * t * t + r), (("D", 4 * t * t), ("B", r)))
        r = 4 * t * t
        return SubgroupSpec(GroupType("D", 2 * r), (("D", r), ("D", r)))

    @property
    def cuspidal_special(self) -> list[tuple[Partition, Partition]]:
        """The special representation ``E_{c_0}`` of the cuspidal cell, per factor."""
        t, letter = self.t, self.ambient.letter
        if t == 0:
            return []
        if letter == "B":
            a = staircase_partition(t)
            return [(a, a), (a, a)]
        a, b = staircase_partition(2 * t), staircase_partition(2 * t - 1)
        if letter == "C":
            return [(a, b), (a, a) if self.defect_sign > 0 else (b, b)]
        return [(a, b), (a, b)]

    @property
    def cuspidal_defects(self) -> tuple[int, int]:
        """Defects of the symbols labelling the two factors of ``W_s``."""
        t, letter = self.t, self.ambient.letter
        if letter == "B":
            return 2 * t + 1, 2 * t + 1
        if letter == "C":
            return 4 * t, 4 * t + self.defect_sign
        return 4 * t, 4 * t

    def cuspidal_rows(self) -> tuple[Partition, Partition]:
        """Truncated induction of ``E_{c_0}`` to ``W^L_T``."""
        sub = self.cuspidal_subgroup
        if sub is None:
            return Partition(), Partition()
        return j_induce(sub, self.cuspidal_special).rows

    def __str__(self) -> str:
        sign = "" if self.ambient.letter != "C" or self.t == 0 else ("+" if self.defect_sign > 0 else "-")
        return f"{self.ambient} t={self.t}{sign}"

    def to_json(self) -> dict:
        return {
            "ambient": str(self.ambient),
            "t": self.t,
            "defect_sign": self.defect_sign,
            "relative": str(self.relative),
            "defect": self.defect,
        }


def enumerate_data(group: GroupType) -> list[CuspidalDatum]:
    out = [CuspidalDatum(group, 0)]
    signs = (1, -1) if group.letter == "C" else (1,)
    for t in range(1, group.rank + 1):
        out += [CuspidalDatum(group, t, s) for s in signs if CuspidalDatum.valid(group, t, s)]
    return out


@dataclass(frozen=True)
class GenPair:
    usymbol: USymbol
    cls: UnipotentClass
    datum: CuspidalDatum

    def __str__(self) -> str:
        return f"{format_usymbol(self.usymbol)} ~ {self.cls}"

    def to_json(self) -> dict:
        return {"usymbol": format_usymbol(self.usymbol), "defect": self.usymbol.defect, "class": list(self.cls.lam)}


def gamma(datum: CuspidalDatum, u_l: USymbol) -> GenPair:
    """Image of an ordinary u-symbol of ``W_L^G`` in ``N_G``.

    With rows ``a`` (top) and ``b`` (bottom) of ``u_l``:

    * B: ``0 2 ... 4t-2, a+4t`` over ``b``
    * C, positive defect: ``0 2 ... 8t-2, a+8t`` over ``b``
    * C, negative defect: ``b-1`` over ``1 3 ... 8t-5, a+8t-3``
    * D: ``0 2 ... 8t-4, a+8t-2`` over ``b`` (``u_l`` of type B)

    The class is recovered from the entry multiset.
    """
    if u_l.group != datum.relative:
        raise SpringerLabError(f"{format_usymbol(u_l)} is not a u-symbol of {datum.relative}")
    t, letter, a, b = datum.t, datum.ambient.letter, u_l.top, u_l.bottom
    if t == 0:
        top, bottom = a, b
    elif letter == "B":
        top, bottom = tuple(range(0, 4 * t - 1, 2)) + tuple(x + 4 * t for x in a), b
    elif letter == "C" and datum.defect_sign > 0:
        top, bottom = tuple(range(0, 8 * t - 1, 2)) + tuple(x + 8 * t for x in a), b
    elif letter == "C":
        # moving b to the top row drops the extra bottom staircase step
        top = tuple(x - 1 for x in b)
        bottom = tuple(range(1, 8 * t - 4, 2)) + tuple(x + 8 * t - 3 for x in a)
    else:
        top, bottom = tuple(range(0, 8 * t - 3, 2)) + tuple(x + 8 * t - 2 for x in a), b
    u = USymbol(datum.ambient, top, bottom)
    return GenPair(u, class_of_usymbol(u), datum)


def gamma_of_rep(datum: CuspidalDatum, e: Bipartition) -> GenPair:
    return gamma(datum, usymbol_of_bipartition(e))


def trivial_rep(group: GroupType) -> Bipartition:
    return Bipartition([group.rank] if group.rank else [], [], group)


# -- O_{s,c} ---------------------------------------------------------------------------


def o_sc(ws_spec: SubgroupSpec, cell: Sequence) -> UnipotentClass:
    """Class attached to a cell of ``W_s``: Springer class of the truncated
    induction of its special representation (given per factor)."""
    return springer_class(j_induce(ws_spec, cell))


def _special_of_cell(letter: str, rank: int, rep):
    if letter == "A":
        return rep
    return special_rep_in_cell(Bipartition(rep[0], rep[1], GroupType(letter, rank))).rows


def family_of_shifted_symbol(group: GroupType, alpha, beta, d: int) -> Bipartition:
    """Special representation of the family of ``group`` containing the
    defect ``d`` symbol of ``(alpha, beta)``: ``alpha`` on the row with ``d``
    extra entries, both rows with the usual staircase."""
    alpha, beta = Partition(alpha), Partition(beta)
    m = max(len(beta), len(alpha) - d, 0)
    top = [x + i for i, x in enumerate(alpha.ascending(m + d))]
    bottom = [x + i for i, x in enumerate(beta.ascending(m))]
    t, b = distinguished_arrangement(group.letter, top + bottom, kind="symbol")
    return bipartition_of_symbol(Symbol(group, t, b))


def _default_attach(wls: SubgroupSpec | None) -> tuple[int, ...]:
    if wls is None:
        return ()
    return tuple(range(sum(1 for l, _ in wls.factors if l != "A")))


def sheaf_cell(datum: CuspidalDatum, wls: SubgroupSpec | None, e1: Sequence = (), attach: Sequence[int] | None = None):
    """``W_s`` as a subgroup of ``W`` and the special representation of the cell ``c``.

    For ``L = T`` this is the cell of ``e1`` itself.  Otherwise the
    classical factors of ``W_{L,s}`` are attached to the cuspidal factors
    (``attach[i]`` names the cuspidal factor of the ``i``-th classical
    factor); each cuspidal factor, enlarged by what is attached to it, gets
    the family of the defect-shifted symbol of the attached representation.
    """
    norm = normalize_reps(wls, e1) if wls is not None else []
    if datum.t == 0:
        if wls is None:
            raise SpringerLabError("L = T needs a subgroup of W")
        return wls, [_special_of_cell(l, r, rep) for (l, r), rep in zip(wls.factors, norm)]
    attach = tuple(_default_attach(wls) if attach is None else attach)
    cusp = datum.cuspidal_subgroup.factors
    defects = datum.cuspidal_defects
    if len(attach) != len(_default_attach(wls)) or len(set(attach)) != len(attach) or not set(attach) <= {0, 1}:
        raise SpringerLabError(f"bad attachment {attach} for {wls}")
    added = {0: ((), (), 0), 1: ((), (), 0)}
    factors, reps = [], []
    classical = iter(attach)
    for (letter, rank), rep in zip(wls.factors if wls else (), norm):
        if letter == "A":
            factors.append((letter, rank))
            reps.append(rep)
        else:
            added[next(classical)] = (rep[0], rep[1], rank)
    for i, (letter, rank) in enumerate(cusp):
        a, b, x = added[i]
        g = GroupType(letter, rank + x)
        factors.append((letter, rank + x))
        reps.append(family_of_shifted_symbol(g, a, b, defects[i]).rows)
    return SubgroupSpec(datum.ambient, tuple(factors)), reps


def o_sc_of_datum(datum: CuspidalDatum, wls: SubgroupSpec | None, e1: Sequence = (), attach: Sequence[int] | None = None) -> UnipotentClass:
    """``O_{s,c}`` for the sheaf ``A^s_{e1}``: the class induced from the
    special representation of its cell in ``W_s``."""
    ws, reps = sheaf_cell(datum, wls, e1, attach)
    return springer_class(j_induce_any(ws, reps))


def o_sc_table(datum: CuspidalDatum) -> Bipartition:
    """The closed form of ``j_{W^L_{T,s}}^W E_{c_0}`` for the trivial representation of ``W_L^G``."""
    t, letter, k = datum.t, datum.ambient.letter, datum.relative.rank
    col = [k] if k else []
    if t == 0:
        return trivial_rep(datum.ambient)
    if letter == "B":
        a2 = join(staircase_partition(t), staircase_partition(t))
        return Bipartition(join(a2, col), a2, datum.ambient)
    a, b = staircase_partition(2 * t), staircase_partition(2 * t - 1)
    if letter == "C" and datum.defect_sign > 0:
        return Bipartition(join(join(a, a), col), join(a, b), datum.ambient)
    if letter == "C":
        return Bipartition(join(join(a, b), col), join(b, b), datum.ambient)
    return Bipartition(join(join(a, a), col), join(b, b), datum.ambient)


# -- restriction to the unipotent variety ---------------------------------------------------


def restriction_multiplicities(datum: CuspidalDatum, wls: SubgroupSpec | None, e1: Sequence = ()) -> dict[GenPair, int]:
    """``m_{A, iota}`` for ``A = A^s_{e1}``: the multiplicity of ``E'`` in the
    induced representation, placed at ``gamma(nu(E'))``.  Pairs outside the
    image are absent.  ``wls=None`` stands for the trivial group (``W_L^G``
    of rank 0)."""
    if wls is None:
        if datum.relative.rank:
            raise SpringerLabError("the trivial subgroup is only allowed when W_L^G is trivial")
        return {gamma_of_rep(datum, trivial_rep(datum.relative)): 1}
    if wls.ambient != datum.relative:
        raise SpringerLabError(f"{wls} does not lie in W_L^G = {datum.relative}")
    out: dict[GenPair, int] = {}
    for e, m in induce(wls, e1).items():
        g = gamma_of_rep(datum, e)
        out[g] = out.get(g, 0) + m
    return out


def unipotent_support_A(datum: CuspidalDatum, wls: SubgroupSpec | None, e1: Sequence = ()) -> UnipotentClass:
    pairs = restriction_multiplicities(datum, wls, e1)
    classes = {g.cls for g in pairs}
    tops = [c for c in classes if all(dominates(c.lam, d.lam) for d in classes)]
    if len(tops) != 1:
        raise NoMaximum(f"support {sorted(str(c) for c in classes)} has no largest class")
    return tops[0]


def ng_A(datum: CuspidalDatum, wls: SubgroupSpec | None, e1: Sequence, o_sc_class: UnipotentClass) -> set[GenPair]:
    return {g for g in restriction_multiplicities(datum, wls, e1) if g.cls == o_sc_class}


# -- sweeps ----------------------------------------------------------------------------------


def relative_subgroups(datum: CuspidalDatum) -> list[tuple[SubgroupSpec | None, tuple[int, ...]]]:
    """Subgroups ``W_{L,s}`` of ``W_L^G`` with the attachment of their classical
    factors to the cuspidal factors of ``W_s``.

    For ``L = T`` these are ``W`` and its maximal Levi subgroups, together
    with the pseudo-Levi subgroups ``C_k x C_{n-k}`` in type B.  In types C
    and D the centralizer of an isolated non-central element of the dual
    group is disconnected, and its component group changes ``W_s``; such
    elements are left out.  Otherwise they are ``W_L^G``, its maximal Levi subgroups and
    the products of two classical factors, one on each cuspidal factor.  In
    type C the two cuspidal factors differ, so both attachments occur.
    """
    rel, letter, t = datum.relative, datum.ambient.letter, datum.t
    if t == 0:
        # an isolated s has a connected centralizer only when G* = Sp_2n
        keep = (LEVI_A, SAME_LETTER) if letter == "B" else (LEVI_A,)
        subs = [identity_spec(rel)] + [s for s in enumerate_dual_pseudo_levis(rel) if s.embedding in keep]
        return [(s, ()) for s in subs]
    if rel.rank == 0:
        return [(None, ())]
    sides = (0, 1) if letter == "C" else (0,)
    cl = "B" if rel.letter == "C" else "C"
    out: list[tuple[SubgroupSpec | None, tuple[int, ...]]] = []
    for side in sides:
        out.append((identity_spec(rel), (side,)))
    k = rel.rank
    for j in range(1, k + 1):
        for side in sides:
            if j == k:
                out.append((SubgroupSpec(rel, (("A", k - 1),)), ()))
                break
            out.append((SubgroupSpec(rel, (("A", j - 1), (cl, k - j))), (side,)))
    for x in range(1, k):
        if letter != "C" and x > k - x:
            break
        out.append((SubgroupSpec(rel, ((cl, x), (cl, k - x))), (0, 1)))
    return out


def enumerate_sheaf_inputs(group: GroupType) -> Iterator[tuple[CuspidalDatum, SubgroupSpec | None, list, tuple[int, ...]]]:
    for datum in enumerate_data(group):
        for wls, attach in relative_subgroups(datum):
            if wls is None:
                yield datum, None, [], attach
                continue
            for e1 in product_reps(wls):
                yield datum, wls, e1, attach


@dataclass
class CorollaryReport:
    group: GroupType
    checked: int = 0
    skipped_degenerate: int = 0
    empty_ng: list[dict] = field(default_factory=list)
    violations: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "group": str(self.group),
            "checked": self.checked,
            "skipped_degenerate": self.skipped_degenerate,
            "empty_ng": self.empty_ng,
            "violations": self.violations,
            "passed": self.passed,
        }


def _rep_label(rep) -> str:
    if isinstance(rep, tuple) and len(rep) == 2 and not isinstance(rep[0], int):
        return format_bipartition(*rep)
    return format_partition(rep)


def _describe(datum, wls, e1) -> dict:
    return {"datum": str(datum), "subgroup": str(wls) if wls else "1", "e1": [_rep_label(x) for x in e1]}


def verify_corollary(group: GroupType) -> CorollaryReport:
    """For every sheaf input: O_A lies in the closure of O_{s,c}, and N_G(A)
    is nonempty exactly when O_A = O_{s,c}.  Inputs where N_G(A) is empty are
    recorded (they are the analogues of a cuspidal-free exceptional example)."""
    if group.rank > rank_guard(8):
        from .errors import RankTooLarge

        raise RankTooLarge(f"rank {group.rank} exceeds the guard")
    report = CorollaryReport(group)
    for datum, wls, e1, attach in enumerate_sheaf_inputs(group):
        try:
            oa = unipotent_support_A(datum, wls, e1)
            osc = o_sc_of_datum(datum, wls, e1, attach)
        except DegenerateDType:
            report.skipped_degenerate += 1
            continue
        report.checked += 1
        ng = ng_A(datum, wls, e1, osc)
        info = _describe(datum, wls, e1) | {"attach": list(attach)} | {"o_A": list(oa.lam), "o_sc": list(osc.lam)}
        if not dominates(osc.lam, oa.lam):
            report.violations.append(info | {"problem": "O_A is not in the closure of O_sc"})
        if bool(ng) != (oa == osc):
            report.violations.append(info | {"problem": "N_G(A) nonempty does not match O_A = O_sc"})
        if not ng:
            report.empty_ng.append(info)
    return report


def incl_supp_step1(datum: CuspidalDatum) -> bool:
    """``gamma`` of the trivial representation is similar to the u-symbol of the
    Springer class of the closed-form O_{s,c} representation."""
    g = gamma_of_rep(datum, trivial_rep(datum.relative))
    return similar(g.usymbol, usymbol_of_bipartition(o_sc_table(datum))) and g.cls == springer_class(o_sc_table(datum))


def incl_supp_step2(datum: CuspidalDatum) -> list[str]:
    """Every gamma-image multiset is dominated by the padded image of the
    trivial representation, and its class lies below O_0.  Returns failures."""
    from .springer import enumerate_bipartitions

    rel = datum.relative
    g0 = gamma_of_rep(datum, trivial_rep(rel))
    failures = []
    for e in enumerate_bipartitions(rel):
        g = gamma_of_rep(datum, e)
        mu0 = g0.usymbol
        mu = g.usymbol
        if len(mu0.entries) < len(mu.entries):
            mu0 = mu0.shifted((len(mu.entries) - len(mu0.entries)) // 2)
        elif len(mu.entries) < len(mu0.entries):
            mu = mu.shifted((len(mu0.entries) - len(mu.entries)) // 2)
        if not dominance_leq(mu.entries, mu0.entries):
            failures.append(f"{e}: {format_usymbol(mu)} is not dominated by {format_usymbol(mu0)}")
        elif not dominates(g0.cls.lam, g.cls.lam):
            failures.append(f"{e}: class {g.cls} is not below {g0.cls}")
    return failures
