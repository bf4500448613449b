"""Well-supported representations and exhaustive sweeps over induced ones.

A representation E of W is well supported when its support has a largest
class O_0 whose ``(O_0, 1)`` Springer representation E_0 occurs in E, and
every component's cell lies below the cell of E_0.  It is specially well
supported when moreover O_0 is special.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CounterexampleFound, DegenerateDType, RankTooLarge
from .induction import (
    SubgroupSpec,
    VirtualRep,
    enumerate_dual_pseudo_levis,
    induce,
    j_induce_any,
    normalize_reps,
    product_reps,
)
from .partitions import GroupType, UnipotentClass, dominates, format_partition, rank_guard
from .springer import (
    Bipartition,
    cell_leq,
    cell_of,
    is_special_class,
    is_special_rep,
    is_springer_rep_of_class,
    special_rep_in_cell,
    springer_class,
    springer_rep,
)


def support(rep: VirtualRep) -> set[UnipotentClass]:
    return {springer_class(e) for e in rep.terms}


@dataclass
class SupportReport:
    support: set[UnipotentClass]
    o0: UnipotentClass | None
    well_supported: bool
    specially: bool
    failures: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "support": sorted((list(c.lam) for c in self.support), reverse=True),
            "o0": list(self.o0.lam) if self.o0 else None,
            "well_supported": self.well_supported,
            "specially": self.specially,
            "failures": list(self.failures),
        }


def check_well_supported(rep: VirtualRep) -> SupportReport:
    """Check both conditions.

    Condition (1) asks for a class O_0 whose Springer representation occurs
    in E and whose closure contains the whole support; such a class is then
    the unique maximum of the support, so it is unique when it exists.
    Springer representations of smaller classes may occur as well.
    """
    supp = support(rep)
    failures: list[str] = []
    with_springer = {springer_class(e) for e in rep.terms if is_springer_rep_of_class(e)}
    bounding = [c for c in with_springer if all(dominates(c.lam, d.lam) for d in supp)]
    o0 = bounding[0] if len(bounding) == 1 else None
    if o0 is None:
        maximal = sorted(
            (c for c in supp if not any(d != c and dominates(d.lam, c.lam) for d in supp)), key=lambda c: c.lam
        )
        if len(maximal) > 1:
            failures.append("the support has several maximal classes: " + ", ".join(str(c) for c in maximal))
        else:
            failures.append(f"the Springer representation of the maximal class {maximal[0]} does not occur")
    else:
        top_cell = cell_of(springer_rep(o0))
        for e in rep:
            if not cell_leq(cell_of(e), top_cell):
                failures.append(f"cell of {e} is not below the cell of {springer_rep(o0)}")
    ok = not failures
    return SupportReport(supp, o0, ok, ok and is_special_class(o0), failures)


# -- sweeps --------------------------------------------------------------------------


@dataclass
class HarnessReport:
    name: str
    group: GroupType
    checked: int = 0
    skipped_degenerate: int = 0
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "check": self.name,
            "group": str(self.group),
            "checked": self.checked,
            "skipped_degenerate": self.skipped_degenerate,
            "passed": self.passed,
            "counterexamples": self.counterexamples,
        }


def _rep_text(sub: SubgroupSpec, reps) -> list[str]:
    out = []
    for (letter, _), rep in zip(sub.factors, reps):
        out.append(format_partition(rep) if letter == "A" else f"({format_partition(rep[0])},{format_partition(rep[1])})")
    return out


def _guard(group: GroupType, default: int = 6) -> None:
    if group.rank > rank_guard(default):
        raise RankTooLarge(f"rank {group.rank} exceeds the sweep guard")


def _special_inputs(sub: SubgroupSpec):
    for reps in product_reps(sub):
        ok = True
        for (letter, rank), rep in zip(sub.factors, reps):
            if letter != "A" and not is_special_rep(Bipartition(rep[0], rep[1], GroupType(letter, rank))):
                ok = False
                break
        if ok:
            yield reps


def _finish(report: HarnessReport, raise_on_failure: bool) -> HarnessReport:
    if raise_on_failure and report.counterexamples:
        raise CounterexampleFound(f"{report.name} fails on {report.group}", report.counterexamples[0])
    return report


def verify_theorem_bs(group: GroupType, raise_on_failure: bool = True) -> HarnessReport:
    """Induce every specially well-supported irreducible input from every maximal
    (pseudo-)Levi and check that the result is well supported, and specially so
    for Levi subgroups."""
    _guard(group)
    report = HarnessReport("induction preserves well-supportedness", group)
    for sub in enumerate_dual_pseudo_levis(group):
        for reps in _special_inputs(sub):
            try:
                rep = induce(sub, reps)
            except DegenerateDType:
                report.skipped_degenerate += 1
                continue
            if rep.has_unsplit:
                report.skipped_degenerate += 1
                continue
            report.checked += 1
            result = check_well_supported(rep)
            problems = list(result.failures)
            if result.well_supported and sub.is_levi and not result.specially:
                problems.append(f"O_0 = {result.o0} is not special although the subgroup is a Levi")
            if problems:
                report.counterexamples.append({"subgroup": str(sub), "input": _rep_text(sub, reps), "problems": problems})
    return _finish(report, raise_on_failure)


def induced_cell_data(sub: SubgroupSpec, reps) -> tuple[Bipartition, UnipotentClass]:
    """Special representation of the induced cell, and its class.

    The special representation of each factor's cell is truncated-induced.
    """
    norm = normalize_reps(sub, reps)
    specials = []
    for (letter, rank), rep in zip(sub.factors, norm):
        if letter == "A":
            specials.append(rep)
        else:
            specials.append(special_rep_in_cell(Bipartition(rep[0], rep[1], GroupType(letter, rank))).rows)
    e = j_induce_any(sub, specials)
    return e, springer_class(e)


def verify_prop_ind_supp(group: GroupType, raise_on_failure: bool = True) -> HarnessReport:
    """For every irreducible input (special or not): the support of the induced
    representation lies in the closure of the class induced from the input's
    cell, and every component's cell lies below the induced cell."""
    _guard(group)
    report = HarnessReport("support and cells of induced representations", group)
    for sub in enumerate_dual_pseudo_levis(group):
        for reps in product_reps(sub):
            try:
                rep = induce(sub, reps)
                top, o = induced_cell_data(sub, reps)
            except DegenerateDType:
                report.skipped_degenerate += 1
                continue
            if rep.has_unsplit or top.is_unsplit:
                report.skipped_degenerate += 1
                continue
            report.checked += 1
            problems = []
            top_cell = cell_of(top)
            for e in rep:
                if not dominates(o.lam, springer_class(e).lam):
                    problems.append(f"{e} has class {springer_class(e)} outside the closure of {o}")
                if not cell_leq(cell_of(e), top_cell):
                    problems.append(f"cell of {e} is not below the cell of {top}")
            if problems:
                report.counterexamples.append({"subgroup": str(sub), "input": _rep_text(sub, reps), "problems": problems})
    return _finish(report, raise_on_failure)


def top_piece_in_top_cell(rep: VirtualRep) -> bool:
    """For a well-supported E: components whose class is in the special piece of
    O_0 lie in the cell of E_0.  Only meaningful when O_0 is special."""
    from .springer import special_closure

    result = check_well_supported(rep)
    if not result.well_supported:
        return False
    top = cell_of(springer_rep(result.o0))
    for e in rep.terms:
        c = springer_class(e)
        if special_closure(c) == special_closure(result.o0) and cell_of(e) != top:
            return False
    return True
