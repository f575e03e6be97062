"""Command-line interface: census, graph export, neighbourhoods,
atlas verification, and structural validation.

Exit status is 0 exactly when every requested check passes.  Identical
invocations produce byte-identical output; RICHELOT_SEED only affects
the random parameter sampling of generic atlas cases, never the graph
content.
"""

from __future__ import annotations

import argparse
import json
import sys

from .atlas import (ALL_CASES, JACOBIAN_CASES, AtlasError, normal_form,
                    verify_case)
from .census import CensusError, compare, expected_counts
from .elliptic import curve_from_j, j_invariant
from .field import FieldError, make_field
from .genus2 import Genus2Curve, clebsch_invariants, ra_type_from_clebsch
from .gluing import ProductSurface, ra_type_product_vertex
from .graph import build_graph, export, neighbourhood, validate
from .poly import Poly

DEFAULT_MAX_PRIME = 300


def _add_common(sub):
    sub.add_argument("-p", type=int, required=True, help="prime > 5")
    sub.add_argument("--max-prime", type=int, default=DEFAULT_MAX_PRIME,
                     help="guard rail for the exhaustive subroutines "
                          f"(default {DEFAULT_MAX_PRIME})")
    sub.add_argument("--threads", type=int, default=1,
                     help="worker count; output is identical for any value")


def _field_for(args):
    if args.p > args.max_prime:
        raise FieldError(
            f"p = {args.p} exceeds the cap {args.max_prime}; "
            "raise --max-prime to override")
    if args.p > DEFAULT_MAX_PRIME:
        print(f"warning: p = {args.p} is beyond the desk-scale default; "
              "expect long runtimes", file=sys.stderr)
    if args.threads < 1:
        raise FieldError("--threads must be positive")
    return make_field(args.p)


def _cmd_census(args) -> int:
    ctx = _field_for(args)
    g = build_graph(ctx)
    report = compare(g, expected_counts(args.p))
    if args.json:
        print(json.dumps(report.as_json_dict(), indent=2, sort_keys=True))
    else:
        print(report.as_table())
    return 0 if report.ok else 1


def _cmd_graph(args) -> int:
    ctx = _field_for(args)
    g = build_graph(ctx)
    text = export(g, args.format)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        print(text, end="")
    return 0


def _cmd_validate(args) -> int:
    ctx = _field_for(args)
    g = build_graph(ctx)
    report = validate(g)
    print(report.summary())
    return 0 if report.ok else 1


def _cmd_verify_atlas(args) -> int:
    ctx = _field_for(args)
    cases = [args.case] if args.case else list(ALL_CASES)
    ok = True
    for case in cases:
        if case not in ALL_CASES:
            raise AtlasError(f"unknown case {case!r}; choose from "
                             f"{', '.join(ALL_CASES)}")
        try:
            rep = verify_case(case, ctx)
        except AtlasError as exc:
            print(f"[SKIP] case {case} at p={args.p}: {exc}")
            continue
        print(rep.summary())
        ok = ok and rep.ok
    return 0 if ok else 1


def _parse_field_elems(ctx, text):
    out = []
    for part in text.split(","):
        part = part.strip()
        if "+" in part and part.endswith("i"):
            a, b = part[:-1].split("+")
            out.append(ctx.element(int(a), int(b)))
        else:
            out.append(ctx.from_int(int(part)))
    return out


def _cmd_neighbourhood(args) -> int:
    ctx = _field_for(args)
    given = [x for x in (args.sextic, args.product, args.atlas)
             if x is not None]
    if len(given) != 1:
        raise AtlasError("choose exactly one of --sextic/--product/--atlas")
    if args.sextic:
        coeffs = _parse_field_elems(ctx, args.sextic)
        rep = Genus2Curve(Poly(ctx, coeffs))
    elif args.product:
        j1, j2 = _parse_field_elems(ctx, args.product)
        E1, E2 = curve_from_j(ctx, j1), curve_from_j(ctx, j2)
        if E1 is None or E2 is None:
            raise AtlasError("no split-torsion model for a j-invariant")
        rep = ProductSurface(E1, E2)
    else:
        params = _parse_field_elems(ctx, args.params) if args.params \
            else None
        rep = normal_form(args.atlas, ctx, params=params)
        if args.atlas in JACOBIAN_CASES:
            rep = rep[0]
    if isinstance(rep, Genus2Curve):
        own = ra_type_from_clebsch(clebsch_invariants(rep))
    else:
        own = ra_type_product_vertex(j_invariant(rep.E1),
                                     j_invariant(rep.E2))
    edges = neighbourhood(rep)
    rows = []
    for e in edges:
        label = "loop" if e.is_loop else e.target.as_string()
        rows.append({"weight": e.weight, "target": label,
                     "loop": e.is_loop})
    doc = {"p": args.p, "vertex_type": own,
           "out_weight": sum(e.weight for e in edges), "edges": rows}
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(f"vertex type {own}, out-weight {doc['out_weight']}")
        for r in rows:
            print(f"  weight {r['weight']:>2} -> {r['target']}")
    return 0


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="richelot",
        description="(2,2)-isogeny graphs of superspecial abelian "
                    "surfaces over GF(p^2)")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("census",
                       help="enumerate the superspecial graph and compare "
                            "per-type vertex counts with the formulas")
    _add_common(c)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=_cmd_census)

    c = sub.add_parser("graph", help="export the superspecial graph")
    _add_common(c)
    c.add_argument("--format", choices=("dot", "json"), required=True)
    c.add_argument("-o", "--output", default=None)
    c.set_defaults(func=_cmd_graph)

    c = sub.add_parser("neighbourhood",
                       help="orbit edges out of one vertex")
    _add_common(c)
    c.add_argument("--sextic", default=None,
                   help="comma-separated coefficients c0,...,c6 (or c5)")
    c.add_argument("--product", default=None,
                   help="two j-invariants j1,j2")
    c.add_argument("--atlas", default=None,
                   help=f"one of {', '.join(ALL_CASES)}")
    c.add_argument("--params", default=None,
                   help="normal-form parameters (with --atlas)")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=_cmd_neighbourhood)

    c = sub.add_parser("verify-atlas",
                       help="check the reference edge tables for one case "
                            "or all cases at this prime")
    _add_common(c)
    c.add_argument("--case", default=None)
    c.set_defaults(func=_cmd_verify_atlas)

    c = sub.add_parser("validate",
                       help="15-regularity, ratio principle, duals, "
                            "classifier agreement")
    _add_common(c)
    c.set_defaults(func=_cmd_validate)
    return ap


def run(argv=None) -> int:
    ap = make_parser()
    try:
        args = ap.parse_args(argv)
        return args.func(args)
    except (FieldError, CensusError, AtlasError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():  # console entry point
    raise SystemExit(run())


if __name__ == "__main__":
    main()
