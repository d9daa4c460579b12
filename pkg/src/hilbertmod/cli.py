"""Command line front end: every pipeline stage with machine-readable output.

Subcommands
    field N                    integral basis, elliptic trace census, orders
    ranks [N] --q LIST         rank K_q(Z[G]) - rank H_q(BG; K(Z)) per q
    whitehead [N] --mode M     Whitehead group expressions
    reps N                     representation counts of Z_N
    classnum D                 class number of an imaginary discriminant
    chains --poset P --m M --p P   chain census of the orbit poset

Exact values are printed as exact strings; decimal approximations appear
only behind ``--approx`` and are labeled as such.  ``--json`` switches to a
canonical JSON envelope (schema_version "1") whose serialization is
byte-stable under re-parsing.  Every numeric result carries a provenance
tag: "paper-table" for values taken from the built-in published tables,
"computed" for everything derived here.

Exit codes: 0 success, 2 invalid input, 3 missing class data,
4 missing abelianization, 1 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .abgroups import AbGroupExpr
from .assembler import (
    ClassCounts,
    GroupData,
    MissingAbelianizationError,
    MissingClassDataError,
    Mode,
    PERFECT_FIELDS,
    class_counts_for_field,
    rank_diff,
    whitehead_psl,
    whitehead_sl,
)
from .cyclicreps import rep_counts
from .classnumbers import class_number, reduced_forms
from .finitek import rank_case
from .pchain import enumerate_pchains, psl_poset, sl_poset
from .quadfield import FieldSpec, elliptic_trace_candidates, allowed_orders, embed

__all__ = ["main", "canonical_json"]

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INVALID_INPUT = 2
EXIT_MISSING_CLASS_DATA = 3
EXIT_MISSING_ABELIANIZATION = 4


def canonical_json(payload) -> str:
    """Canonical serialization: reparsing and re-rendering is byte-identical."""
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=True)


def _envelope(command: str, inputs: dict, result: dict, provenance: dict) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "result": result,
        "provenance": provenance,
    }


def _emit(args, envelope: dict, lines: list[str]) -> int:
    if args.json:
        print(canonical_json(envelope))
    else:
        print("\n".join(lines))
    return EXIT_OK


def _parse_q_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise ValueError(f"bad degree list {text!r}: {exc}") from exc


def _group_inputs(args) -> tuple[ClassCounts, FieldSpec | str, str]:
    """Resolve d / --classes into class counts; returns provenance tag too."""
    if args.d is None and args.classes is None:
        raise ValueError("pass a field discriminant d or --classes order:count,...")
    if args.d is not None:
        field = FieldSpec(args.d)
        if args.classes is not None:
            return ClassCounts.parse(args.classes), field, "computed"
        return class_counts_for_field(field), field, "paper-table"
    return ClassCounts.parse(args.classes), "generic", "computed"


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def _cmd_field(args) -> int:
    field = FieldSpec(args.d)
    candidates = elliptic_trace_candidates(field)
    orders = allowed_orders(field)
    cand_payload = []
    lines = [
        f"field Q(sqrt({field.d}))",
        f"integral basis: 1, {field.omega_str()}",
        f"trace candidates ({len(candidates)}):",
    ]
    for cand in candidates:
        entry = {"trace": str(cand.trace), "psl_order": cand.psl_order}
        line = f"  {cand.trace}  order {cand.psl_order}"
        if args.approx:
            entry["approx_embeddings"] = [
                embed(cand.trace, 1).approx(),
                embed(cand.trace, 2).approx(),
            ]
            line += (f"  ~ ({embed(cand.trace, 1).approx():.6f}, "
                     f"{embed(cand.trace, 2).approx():.6f})")
        cand_payload.append(entry)
        lines.append(line)
    lines.append("allowed orders: " + ", ".join(str(n) for n in orders))
    envelope = _envelope(
        "field",
        {"d": args.d, "approx": bool(args.approx)},
        {
            "d": field.d,
            "omega": field.omega_str(),
            "integral_basis": ["1", field.omega_str()],
            "trace_candidates": cand_payload,
            "allowed_orders": list(orders),
        },
        {"trace_candidates": "computed", "allowed_orders": "computed"},
    )
    return _emit(args, envelope, lines)


def _cmd_ranks(args) -> int:
    counts, source, counts_tag = _group_inputs(args)
    g = GroupData(source=source, class_counts=counts, mode=Mode.PSL)
    qs = _parse_q_list(args.q)
    rows = []
    label = g.label()
    lines = [
        f"{label}: m = {counts.m} conjugacy classes "
        f"({', '.join(f'{n}:{c}' for n, c in counts.entries)})"
    ]
    for q in qs:
        value = rank_diff(g, q)
        case = rank_case(q).value
        rows.append({"q": q, "value": value, "case": case})
        lines.append(f"q={q:<4d} {value:<6d} ({case})")
    envelope = _envelope(
        "ranks",
        {"d": args.d, "classes": args.classes, "q": qs},
        {
            "group": label,
            "class_counts": {str(n): c for n, c in counts.entries},
            "m": counts.m,
            "rows": rows,
        },
        {"class_counts": counts_tag, "m": counts_tag, "rows": "computed"},
    )
    return _emit(args, envelope, lines)


def _cmd_whitehead(args) -> int:
    counts, source, counts_tag = _group_inputs(args)
    mode = Mode(args.mode)
    ab = None
    ab_tag = "computed"
    if args.ab is not None:
        ab = AbGroupExpr.parse(args.ab)
    elif isinstance(source, FieldSpec) and source.d in PERFECT_FIELDS:
        ab = AbGroupExpr.zero()  # the projective group is known perfect
        ab_tag = "paper-table"
    g = GroupData(source=source, class_counts=counts, mode=mode, abelianization=ab)
    if mode is Mode.PSL:
        expr = whitehead_psl(g, args.q)
    else:
        expr = whitehead_sl(g, args.q)
    label = g.label()
    lines = [f"Wh_{args.q} of {mode.value.upper()}2(O_k), k = {label}: {expr.render()}"]
    envelope = _envelope(
        "whitehead",
        {"d": args.d, "classes": args.classes, "mode": mode.value,
         "q": args.q, "ab": args.ab},
        {
            "group": label,
            "mode": mode.value,
            "q": args.q,
            "whitehead": expr.to_json(),
            "abelianization": ab.to_json() if ab is not None else None,
        },
        {"whitehead": "computed", "class_counts": counts_tag,
         "abelianization": ab_tag},
    )
    return _emit(args, envelope, lines)


def _cmd_reps(args) -> int:
    rc = rep_counts(args.n)
    lines = [f"Z_{rc.n}: r={rc.r} c={rc.c} q={rc.q}"]
    for p, kp, rp in rc.local:
        lines.append(f"  p={p}: k_p={kp} r_p={rp}")
    envelope = _envelope(
        "reps",
        {"n": args.n},
        {
            "n": rc.n,
            "r": rc.r,
            "c": rc.c,
            "q": rc.q,
            "local": {str(p): {"k_p": kp, "r_p": rp} for p, kp, rp in rc.local},
        },
        {"r": "computed", "c": "computed", "q": "computed", "local": "computed"},
    )
    return _emit(args, envelope, lines)


def _cmd_classnum(args) -> int:
    forms = reduced_forms(args.D)
    h = class_number(args.D)
    lines = [
        f"h({args.D}) = {h}",
        "reduced forms: " + ", ".join(str(f) for f in forms),
    ]
    envelope = _envelope(
        "classnum",
        {"D": args.D},
        {"D": args.D, "class_number": h, "reduced_forms": [list(f) for f in forms]},
        {"class_number": "computed", "reduced_forms": "computed"},
    )
    return _emit(args, envelope, lines)


def _cmd_chains(args) -> int:
    factory = psl_poset if args.poset == "psl" else sl_poset
    poset = factory(args.m)
    chains = enumerate_pchains(poset, args.p)
    lines = [f"{args.poset} poset with m={args.m}: {len(chains)} chains at p={args.p}"]
    for chain in chains:
        lines.append("  " + " < ".join(chain.nodes))
    envelope = _envelope(
        "chains",
        {"poset": args.poset, "m": args.m, "p": args.p},
        {"count": len(chains), "chains": [list(c.nodes) for c in chains]},
        {"count": "computed", "chains": "computed"},
    )
    return _emit(args, envelope, lines)


# ---------------------------------------------------------------------------
# Parser and entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hilbertmod",
        description="Exact Whitehead-group and K-theory rank calculator "
                    "for Hilbert modular groups over real quadratic fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_field = sub.add_parser("field", help="elliptic trace census of Q(sqrt(d))")
    p_field.add_argument("d", type=int, help="square-free integer >= 2")
    p_field.add_argument("--approx", action="store_true",
                         help="also print decimal approximations (approximate!)")
    p_field.add_argument("--json", action="store_true")
    p_field.set_defaults(func=_cmd_field)

    p_ranks = sub.add_parser("ranks", help="rank differences per degree q")
    p_ranks.add_argument("d", type=int, nargs="?", default=None)
    p_ranks.add_argument("--classes", help="order:count pairs, e.g. 2:2,3:2,5:2")
    p_ranks.add_argument("--q", required=True, help="comma-separated degrees")
    p_ranks.add_argument("--json", action="store_true")
    p_ranks.set_defaults(func=_cmd_ranks)

    p_wh = sub.add_parser("whitehead", help="Whitehead group expression")
    p_wh.add_argument("d", type=int, nargs="?", default=None)
    p_wh.add_argument("--classes", help="order:count pairs, e.g. 2:1,3:1")
    p_wh.add_argument("--mode", choices=["psl", "sl"], default="psl")
    p_wh.add_argument("--q", type=int, required=True)
    p_wh.add_argument("--ab", help='abelianization of the projective group, e.g. "Z/6" or "0"')
    p_wh.add_argument("--json", action="store_true")
    p_wh.set_defaults(func=_cmd_whitehead)

    p_reps = sub.add_parser("reps", help="representation counts of Z_n")
    p_reps.add_argument("n", type=int)
    p_reps.add_argument("--json", action="store_true")
    p_reps.set_defaults(func=_cmd_reps)

    p_cn = sub.add_parser("classnum", help="class number of a discriminant D < 0")
    p_cn.add_argument("D", type=int)
    p_cn.add_argument("--json", action="store_true")
    p_cn.set_defaults(func=_cmd_classnum)

    p_ch = sub.add_parser("chains", help="chain census of an orbit poset")
    p_ch.add_argument("--poset", choices=["psl", "sl"], required=True)
    p_ch.add_argument("--m", type=int, required=True,
                      help="number of maximal conjugacy classes")
    p_ch.add_argument("--p", type=int, required=True, help="chain length index")
    p_ch.add_argument("--json", action="store_true")
    p_ch.set_defaults(func=_cmd_chains)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MissingClassDataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISSING_CLASS_DATA
    except MissingAbelianizationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISSING_ABELIANIZATION
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
