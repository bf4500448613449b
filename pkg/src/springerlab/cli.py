"""Command-line front end.

Every verb prints plain text by default and a JSON document with ``--json``.
Exit status is 0 on success, 1 on a domain error or a failed verification,
and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable, Sequence

from . import __version__
from .errors import SpringerLabError
from .gensupport import (
    CuspidalDatum,
    gamma_of_rep,
    incl_supp_step1,
    incl_supp_step2,
    enumerate_data,
    ng_A,
    o_sc_of_datum,
    o_sc_table,
    restriction_multiplicities,
    trivial_rep,
    unipotent_support_A,
    verify_corollary,
)
from .hasse import render_hasse
from .induction import SubgroupSpec, identity_spec, induce, j_induce_any, normalize_reps
from .marked import (
    MarkableContext,
    coxeter_generators,
    irr_class_bijection,
    marking_leq,
    parse_markable,
    parse_marking,
    superminimal_markings,
)
from .partitions import GroupType, UnipotentClass, dominates, enumerate_classes, format_partition, parse_partition
from .springer import (
    a_value,
    b_value,
    cell_of,
    is_special_class,
    is_special_rep,
    is_springer_rep_of_class,
    parse_bipartition,
    springer_class,
    springer_rep,
    symbol_of_bipartition,
    usymbol_of_bipartition,
)
from .usymbols import class_of_usymbol, format_usymbol, symbol_of_class, usymbol_of_class
from .wellsupport import check_well_supported, verify_prop_ind_supp, verify_theorem_bs

SCHEMA_VERSION = 1


class UsageError(Exception):
    """Raised by a verb whose flags do not fit together (exit status 2)."""


class Failed(Exception):
    """A verification verb found counterexamples; the report is still printed."""

    def __init__(self, payload: Any):
        super().__init__("verification failed")
        self.payload = payload


# -- argument helpers -------------------------------------------------------------------


def _group(args: argparse.Namespace) -> GroupType:
    return GroupType(args.type, args.rank)


def _subgroup(args: argparse.Namespace, group: GroupType) -> SubgroupSpec:
    if not args.sub:
        return identity_spec(group)
    text = args.sub if "<=" in args.sub else f"{group} <= {args.sub}"
    sub = SubgroupSpec.parse(text)
    if sub.ambient != group:
        raise SpringerLabError(f"{sub} is not a subgroup of {group}")
    return sub


def _trivial_factor(letter: str, rank: int):
    return [rank + 1] if letter == "A" else ([rank], [])


def _sign_factor(letter: str, rank: int):
    return [1] * (rank + 1) if letter == "A" else ([], [1] * rank)


def parse_e1(text: str | None, sub: SubgroupSpec) -> list:
    """Factor representations separated by ``;``.  ``trivial`` and ``sign``
    work for the whole product or for a single factor."""
    n = len(sub.factors)
    tokens = [t.strip() for t in (text or "trivial").split(";")]
    if len(tokens) == 1 and tokens[0] in ("trivial", "sign") and n != 1:
        tokens = tokens * n
    if len(tokens) != n:
        raise SpringerLabError(f"{len(tokens)} representations given for {n} factors of {sub}")
    reps = []
    for (letter, rank), tok in zip(sub.factors, tokens):
        if tok == "trivial":
            reps.append(_trivial_factor(letter, rank))
        elif tok == "sign":
            reps.append(_sign_factor(letter, rank))
        else:
            reps.append(parse_partition(tok) if letter == "A" else tok)
    return normalize_reps(sub, reps)


def _rep_json(sub: SubgroupSpec, reps: Sequence) -> list:
    out = []
    for (letter, _), rep in zip(sub.factors, reps):
        out.append(list(rep) if letter == "A" else {"alpha": list(rep[0]), "beta": list(rep[1])})
    return out


def _rep_text(sub: SubgroupSpec, reps: Sequence) -> str:
    parts = []
    for (letter, _), rep in zip(sub.factors, reps):
        parts.append(format_partition(rep) if letter == "A" else f"({format_partition(rep[0])},{format_partition(rep[1])})")
    return " x ".join(parts)


def _datum(args: argparse.Namespace) -> CuspidalDatum:
    return CuspidalDatum(_group(args), args.t, args.defect_sign)


def _relative_sub(args: argparse.Namespace, datum: CuspidalDatum) -> SubgroupSpec | None:
    if datum.relative.rank == 0:
        if args.sub:
            raise SpringerLabError("W_L^G is trivial; no subgroup can be given")
        return None
    return _subgroup(args, datum.relative)


def _attach(args: argparse.Namespace) -> tuple[int, ...] | None:
    if args.attach is None:
        return None
    return tuple(int(x) for x in args.attach.replace(" ", "").split(",") if x)


def _class_json(c: UnipotentClass) -> list[int]:
    return list(c.lam)


# -- verbs ----------------------------------------------------------------------------------


def cmd_classes(args):
    group = _group(args)
    classes = enumerate_classes(group)
    if args.dot:
        dot = render_hasse(
            classes,
            lambda x, y: dominates(y.lam, x.lam),
            label=str,
            name=f"classes {group}",
            attrs=lambda c: {"shape": "box" if is_special_class(c) else "ellipse"},
        )
        return dot, None
    rows = [{"partition": list(c.lam), "special": is_special_class(c), "usymbol": format_usymbol(usymbol_of_class(c))} for c in classes]
    text = "\n".join(f"{format_partition(r['partition']):<20} {'special' if r['special'] else '-':<8} {r['usymbol']}" for r in rows)
    return text, {"group": str(group), "count": len(rows), "classes": rows}


def cmd_usymbol(args):
    group = _group(args)
    c = UnipotentClass(group, parse_partition(args.partition))
    u = usymbol_of_class(c)
    s = symbol_of_class(c)
    back = class_of_usymbol(u)
    data = {
        "group": str(group),
        "partition": list(c.lam),
        "usymbol": u.to_json() | {"text": format_usymbol(u)},
        "symbol": format_usymbol(s),
        "special": is_special_class(c),
        "roundtrip": back == c,
    }
    return f"{c}: {format_usymbol(u)}  symbol {format_usymbol(s)}", data


def cmd_springer(args):
    group = _group(args)
    if args.partition:
        c = UnipotentClass(group, parse_partition(args.partition))
        e = springer_rep(c)
        return f"{c} -> {e}", {"group": str(group), "partition": list(c.lam), "bipartition": e.to_json()}
    if not args.bipartition:
        raise UsageError("springer needs --bipartition or --partition")
    e = parse_bipartition(args.bipartition, group)
    u = usymbol_of_bipartition(e)
    c = springer_class(e)
    data = {
        "group": str(group),
        "bipartition": e.to_json(),
        "class": _class_json(c),
        "usymbol": format_usymbol(u),
        "symbol": format_usymbol(symbol_of_bipartition(e)),
        "trivial_local_system": is_springer_rep_of_class(e),
        "special": is_special_rep(e),
        "a_value": a_value(e),
        "b_value": b_value(e),
        "cell_special_class": _class_json(cell_of(e).special_class),
    }
    return f"{e} -> {c}  u-symbol {format_usymbol(u)}", data


def cmd_induce(args):
    group = _group(args)
    sub = _subgroup(args, group)
    reps = parse_e1(args.e1, sub)
    rep = induce(sub, reps)
    data = {"subgroup": sub.to_json(), "e1": _rep_json(sub, reps), "components": rep.to_json(), "index": sub.index}
    return f"Ind({_rep_text(sub, reps)}) = {rep}", data


def cmd_j_induce(args):
    group = _group(args)
    sub = _subgroup(args, group)
    reps = parse_e1(args.e1, sub)
    e = j_induce_any(sub, reps)
    c = springer_class(e)
    return f"j({_rep_text(sub, reps)}) = {e} -> {c}", {
        "subgroup": sub.to_json(),
        "e1": _rep_json(sub, reps),
        "result": e.to_json(),
        "class": _class_json(c),
    }


def cmd_check_ws(args):
    group = _group(args)
    if args.bipartition:
        sub, reps = identity_spec(group), [parse_bipartition(args.bipartition, group).rows]
    else:
        sub = _subgroup(args, group)
        reps = parse_e1(args.e1, sub)
    rep = induce(sub, reps)
    report = check_well_supported(rep)
    data = {"subgroup": sub.to_json(), "e1": _rep_json(sub, reps), "representation": rep.to_json()} | report.to_json()
    verdict = "specially well supported" if report.specially else "well supported" if report.well_supported else "not well supported"
    lines = [f"{rep}", f"O_0 = {report.o0}: {verdict}"] + report.failures
    return "\n".join(lines), data


def _harness(fn: Callable, args):
    report = fn(_group(args), raise_on_failure=False)
    data = report.to_json()
    text = f"{report.name} on {report.group}: checked {report.checked}, skipped {report.skipped_degenerate}, counterexamples {len(report.counterexamples)}"
    if not report.passed:
        text += "\n" + "\n".join(json.dumps(c) for c in report.counterexamples)
        raise Failed((text, data))
    return text, data


def cmd_verify_bs(args):
    return _harness(verify_theorem_bs, args)


def cmd_verify_indsupp(args):
    return _harness(verify_prop_ind_supp, args)


def cmd_gamma(args):
    datum = _datum(args)
    e = parse_bipartition(args.bipartition, datum.relative) if args.bipartition else trivial_rep(datum.relative)
    g = gamma_of_rep(datum, e)
    data = {"datum": datum.to_json(), "bipartition": e.to_json(), "u_L": format_usymbol(usymbol_of_bipartition(e))} | g.to_json()
    return f"gamma({e}) = {g}", data


def cmd_charsheaf_support(args):
    datum = _datum(args)
    wls = _relative_sub(args, datum)
    e1 = parse_e1(args.e1, wls) if wls is not None else []
    mults = restriction_multiplicities(datum, wls, e1)
    oa = unipotent_support_A(datum, wls, e1)
    osc = o_sc_of_datum(datum, wls, e1, _attach(args))
    ng = ng_A(datum, wls, e1, osc)
    data = {
        "datum": datum.to_json(),
        "subgroup": wls.to_json() if wls else None,
        "e1": _rep_json(wls, e1) if wls else [],
        "o_A": _class_json(oa),
        "o_sc": _class_json(osc),
        "equals_osc": oa == osc,
        "multiplicities": [g.to_json() | {"multiplicity": m} for g, m in sorted(mults.items(), key=lambda kv: str(kv[0]))],
        "ng_A": sorted(format_usymbol(g.usymbol) for g in ng),
    }
    return f"O_A = {oa}, O_sc = {osc}, N_G(A) has {len(ng)} pair(s)", data


def cmd_osc(args):
    datum = _datum(args)
    wls = _relative_sub(args, datum)
    if wls is None or (not args.sub and not args.e1):
        e = o_sc_table(datum)
        c = springer_class(e)
        return f"O_sc({datum}) = {c} from {e}", {"datum": datum.to_json(), "representation": e.to_json(), "o_sc": _class_json(c)}
    e1 = parse_e1(args.e1, wls)
    c = o_sc_of_datum(datum, wls, e1, _attach(args))
    return f"O_sc = {c}", {"datum": datum.to_json(), "subgroup": wls.to_json(), "e1": _rep_json(wls, e1), "o_sc": _class_json(c)}


def _mark_context(args) -> MarkableContext:
    lam = parse_partition(args.partition)
    rank = args.rank
    if rank is None:
        rank = (lam.size - 1) // 2 if args.type == "B" else lam.size // 2
    return MarkableContext(GroupType(args.type, rank), lam, parse_markable(args.markable))


def cmd_mark_order(args):
    ctx = _mark_context(args)
    marks = [parse_marking(m) for m in args.marking or []]
    if len(marks) == 2:
        nu, nu_prime = marks
        geq = marking_leq(ctx, nu, nu_prime)
        leq = marking_leq(ctx, nu_prime, nu)
        text = f"[{','.join(map(str, nu))}] {'>=' if geq else 'not >='} [{','.join(map(str, nu_prime))}]"
        return text, {"lambda": list(ctx.lam), "nu": list(nu), "nu_prime": list(nu_prime), "geq": geq, "leq": leq}
    if marks:
        raise UsageError("mark-order takes either no --marking or exactly two")
    nodes = ctx.markings()
    if args.dot:
        return render_hasse(nodes, lambda x, y: marking_leq(ctx, y, x), label=lambda m: f"[{','.join(map(str, m))}]", name=f"markings {ctx.lam}"), None
    pairs = [[list(a), list(b)] for a in nodes for b in nodes if a != b and marking_leq(ctx, a, b)]
    text = "\n".join(f"{a} > {b}" for a, b in pairs)
    return text, {"lambda": list(ctx.lam), "markable": list(ctx.markable), "markings": [list(m) for m in nodes], "greater": pairs}


def cmd_superminimal(args):
    ctx = _mark_context(args)
    sm = superminimal_markings(ctx)
    gens = coxeter_generators(ctx)
    text = "\n".join(str(m) for m in sm) + f"\nrank {gens.rank}"
    return text, {"lambda": list(ctx.lam), "markable": list(ctx.markable), "superminimal": [list(m.nu) for m in sm]} | gens.to_json()


def _suite(max_rank: int, seed: int) -> tuple[list[dict], bool]:
    """The exhaustive checks, up to ``max_rank``.  ``seed`` is recorded only;
    every check enumerates its inputs completely."""
    results = []

    def record(name: str, group: str, ok: bool, detail: Any = None):
        results.append({"check": name, "group": group, "passed": ok, "detail": detail})

    for letter in "BCD":
        for n in range(2, max_rank + 1):
            g = GroupType(letter, n)
            bad = [str(c) for c in enumerate_classes(g) if class_of_usymbol(usymbol_of_class(c)) != c]
            record("roundtrip", str(g), not bad, bad or None)
            for fn in (verify_theorem_bs, verify_prop_ind_supp):
                rep = fn(g, raise_on_failure=False)
                record(rep.name, str(g), rep.passed, {"checked": rep.checked, "counterexamples": len(rep.counterexamples)})
            cor = verify_corollary(g)
            record("unipotent support of character sheaves", str(g), cor.passed, {"checked": cor.checked, "violations": len(cor.violations)})
            for d in enumerate_data(g):
                if d.t:
                    fails = incl_supp_step2(d)
                    record("gamma images", str(d), incl_supp_step1(d) and not fails, fails or None)
    for factors in ([2], [2, 2], [3, 2], [5]):
        try:
            irr_class_bijection(factors)
            record("irr-class bijection", "x".join(f"S{k}" for k in factors), True)
        except SpringerLabError as exc:
            record("irr-class bijection", "x".join(f"S{k}" for k in factors), False, str(exc))
    return results, all(r["passed"] for r in results)


def cmd_verify_all(args):
    max_rank = args.rank if args.rank is not None else 4
    results, ok = _suite(max_rank, args.seed)
    text = "\n".join(f"{'PASS' if r['passed'] else 'FAIL'}  {r['check']} [{r['group']}]" for r in results)
    data = {"max_rank": max_rank, "seed": args.seed, "passed": ok, "results": results}
    if not ok:
        raise Failed((text, data))
    return text, data


# -- parser ---------------------------------------------------------------------------------


def _common(require_group: bool, rank_required: bool = True) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--type", choices="BCD", required=require_group, help="group type")
    p.add_argument("--rank", type=int, required=require_group and rank_required, help="rank n")
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--out", help="write the output to this file (UTF-8)")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled sweeps (default 0)")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="springerlab", description="Springer correspondence combinatorics for classical groups.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    verbs = parser.add_subparsers(dest="verb", required=True, metavar="VERB")
    grp = _common(True)
    loose = _common(False)
    mark = _common(True, rank_required=False)

    def add(name: str, fn, helptext: str, parent=grp):
        p = verbs.add_parser(name, parents=[parent], help=helptext, description=helptext)
        p.set_defaults(func=fn, subparser=p)
        return p

    p = add("classes", cmd_classes, "list unipotent classes, marking the special ones")
    p.add_argument("--dot", action="store_true", help="emit the Hasse diagram of the closure order")
    p = add("usymbol", cmd_usymbol, "u-symbol of a unipotent class")
    p.add_argument("--partition", required=True)
    p = add("springer", cmd_springer, "Springer class of a representation, or the representation of (class, 1)")
    p.add_argument("--bipartition")
    p.add_argument("--partition")
    for name, fn, h in (("induce", cmd_induce, "induce a representation of a subgroup"), ("j-induce", cmd_j_induce, "truncated induction")):
        p = add(name, fn, h)
        p.add_argument("--sub", help='subgroup, e.g. "C2xC3" or "B5 <= C2xC3"')
        p.add_argument("--e1", help='factor representations separated by ";", or "trivial" / "sign"')
    p = add("check-ws", cmd_check_ws, "check well-supportedness of an induced representation")
    p.add_argument("--sub")
    p.add_argument("--e1")
    p.add_argument("--bipartition", help="check a single irreducible representation instead")
    add("verify-bs", cmd_verify_bs, "sweep: induction from maximal (pseudo-)Levis preserves well-supportedness")
    add("verify-indsupp", cmd_verify_indsupp, "sweep: supports and cells of induced representations")
    for name, fn, h in (
        ("gamma", cmd_gamma, "gamma-image of a representation of the relative Weyl group"),
        ("charsheaf-support", cmd_charsheaf_support, "unipotent support of a character sheaf"),
        ("osc", cmd_osc, "the class O_sc of a cuspidal datum"),
    ):
        p = add(name, fn, h)
        p.add_argument("--t", type=int, default=0, help="cuspidal parameter t (default 0)")
        p.add_argument("--defect-sign", type=int, choices=(1, -1), default=1)
        if name == "gamma":
            p.add_argument("--bipartition", help="representation of W_L^G (default trivial)")
        else:
            p.add_argument("--sub", help="subgroup W_{L,s} of W_L^G (default W_L^G)")
            p.add_argument("--e1", help="representation of W_{L,s} (default trivial)")
            p.add_argument("--attach", help="cuspidal factor of each classical factor, e.g. 0,1")
    for name, fn, h in (("mark-order", cmd_mark_order, "compare markings"), ("superminimal", cmd_superminimal, "superminimal markings")):
        p = add(name, fn, h, parent=mark)
        p.add_argument("--partition", required=True, help="the partition lambda")
        p.add_argument("--markable", required=True, help='markable part values, e.g. "[1,3,5]"')
        if name == "mark-order":
            p.add_argument("--marking", action="append", help="a marking; give it twice to compare nu >= nu'")
            p.add_argument("--dot", action="store_true", help="emit the Hasse diagram of all markings")
    add("verify-all", cmd_verify_all, "run every exhaustive check up to --rank (default 4)", parent=loose)
    return parser


def _emit(args, text: str, data: Any) -> None:
    if args.json and data is not None:
        out = json.dumps({"schema": SCHEMA_VERSION, "verb": args.verb} | data, indent=2) + "\n"
    else:
        out = text if text.endswith("\n") else text + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, data = args.func(args)
    except UsageError as exc:
        args.subparser.error(str(exc))
    except Failed as exc:
        text, data = exc.payload
        _emit(args, text, data)
        return 1
    except SpringerLabError as exc:
        print(f"springerlab {args.verb}: error: {exc}", file=sys.stderr)
        return 1
    _emit(args, text, data)
    return 0


if __name__ == "__main__":
    sys.exit(main())
