"""Command-line interface.

Subcommands: info, essential, extend, hol, verify. Group specs follow the
grammar documented in `socle.spec_lang` (and the README); multi-word specs
like "C2 x S3" may be passed unquoted.
"""

from __future__ import annotations

import argparse
import sys

from .autgrp import AUT_CAP, holomorph, is_complete
from .errors import OrderBoundExceeded, SocleError
from .essential import (
    abelian_essential_extension,
    abelian_primary_decomposition,
    essential_core,
    essential_subgroups,
    has_proper_essential,
    socle,
)
from .group import MAX_ORDER, center
from .lattice import normal_subgroups
from .spec_lang import build, perm_literal
from .suites import SuiteOptions, run_suite, suite_names


def _add_spec_argument(p: argparse.ArgumentParser):
    p.add_argument("spec", nargs="+", help="group spec, e.g. S4, 'C2 x S3', sdp(5,4,2)")


def _add_bounds(p: argparse.ArgumentParser, max_order_default: int = MAX_ORDER):
    p.add_argument("--max-order", type=int, default=max_order_default,
                   help=f"construction size cap (default {max_order_default})")
    p.add_argument("--aut-cap", type=int, default=AUT_CAP,
                   help=f"automorphism search cap (default {AUT_CAP})")


def _build(args):
    return build(" ".join(args.spec), max_order=args.max_order, aut_cap=args.aut_cap)


def _cmd_info(args) -> int:
    G = _build(args)
    lat = normal_subgroups(G)
    soc = socle(G)
    core = essential_core(G)
    ess = essential_subgroups(G)
    print(f"spec:                    {' '.join(args.spec)}")
    print(f"order:                   {G.order}")
    print(f"degree:                  {G.degree}")
    print(f"center order:            {center(G).order}")
    print(f"normal subgroups:        {len(lat)}")
    print(f"socle order:             {soc.order}")
    print(f"socle spec:              {perm_literal(soc)}")
    print(f"essential core e(G):     order {core.order}")
    print(f"essential subgroups:     {len(ess)}")
    print(f"has proper essential:    {'yes' if has_proper_essential(G) else 'no'}")
    try:
        print(f"complete:                {'yes' if is_complete(G, aut_cap=args.aut_cap) else 'no'}")
    except OrderBoundExceeded:
        print("complete:                unknown (aut-cap)")
    return 0


def _cmd_essential(args) -> int:
    G = _build(args)
    ess = essential_subgroups(G)
    print(f"{len(ess)} essential subgroup(s) of a group of order {G.order}")
    if args.list:
        for E in ess:
            tag = " (whole group)" if E.is_whole else ""
            print(f"  order {E.order:>5}{tag}: {perm_literal(E)}")
    return 0


def _cmd_extend(args) -> int:
    G = _build(args)
    if G.is_abelian() and G.order > 1:
        dec = abelian_primary_decomposition(G)
        ext, emb = abelian_essential_extension(G, max_order=args.max_order)
        ext_spec = " x ".join(f"C{f.prime ** (f.exponent + 1)}" for f in dec.factors)
        print(f"proper essential extension: {ext_spec} (order {ext.order})")
        print(f"image order {emb.image_handle().order}, index {ext.order // G.order}")
        return 0
    try:
        complete = is_complete(G, aut_cap=args.aut_cap)
    except OrderBoundExceeded:
        print("cannot decide: group exceeds the automorphism search cap")
        return 1
    if complete:
        print("complete — none exists")
        return 0
    print(
        "a proper essential extension exists (the group is not complete), "
        "but the constructive route is implemented for abelian groups only"
    )
    return 0


def _cmd_hol(args) -> int:
    G = _build(args)
    h = holomorph(G, aut_cap=args.aut_cap, max_order=args.max_order)
    print(f"holomorph order:         {h.group.order}")
    print(f"automorphism group:      order {h.group.order // G.order}")
    print(f"base image normal:       {'yes' if h.base_image.is_normal() else 'no'}")
    print(f"base/aut intersection:   {len(h.base_image.member_set & h.aut_image.member_set)} element(s)")
    try:
        print(f"holomorph complete:      {'yes' if is_complete(h.group, aut_cap=args.aut_cap) else 'no'}")
    except OrderBoundExceeded:
        print("holomorph complete:      unknown (aut-cap)")
    return 0


def _cmd_verify(args) -> int:
    opts = SuiteOptions(
        max_order=args.max_order, aut_cap=args.aut_cap, slow=args.slow
    )
    report = run_suite(args.suite, opts)
    if args.json:
        print(report.to_json())
    else:
        print(report.text_table())
    return 0 if report.ok else 1


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="socle",
        description="finite group computations: essential subgroups, socles, "
        "holomorphs, and a theorem-verification harness",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="order, center, socle, essential structure of a group")
    _add_spec_argument(p)
    _add_bounds(p)
    p.set_defaults(fn=_cmd_info)

    p = sub.add_parser("essential", help="list the essential subgroups of a group")
    _add_spec_argument(p)
    _add_bounds(p)
    p.add_argument("--list", action="store_true", help="print each essential subgroup")
    p.set_defaults(fn=_cmd_essential)

    p = sub.add_parser("extend", help="construct a proper essential extension (abelian input)")
    _add_spec_argument(p)
    _add_bounds(p)
    p.set_defaults(fn=_cmd_extend)

    p = sub.add_parser("hol", help="build the holomorph and report its structure")
    _add_spec_argument(p)
    _add_bounds(p)
    p.set_defaults(fn=_cmd_hol)

    p = sub.add_parser("verify", help="run a theorem-verification suite")
    p.add_argument("--suite", required=True, choices=suite_names() + ["nkb"],
                   metavar="SUITE", help=f"one of: {', '.join(suite_names())}")
    p.add_argument("--max-order", type=int, default=200)
    p.add_argument("--aut-cap", type=int, default=AUT_CAP)
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    p.add_argument("--slow", action="store_true", help="include the slow cases")
    p.set_defaults(fn=_cmd_verify)

    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SocleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
