"""Command line front end.

    sasakijoin brieskorn 2 3 5 --format json
    sasakijoin link --poly "z0^12+z1^6+z2^4+z3^2*z0"
    sasakijoin join 2,3,7 5,11,13
    sasakijoin join 2,3,5 --n-summary s3.json --k 1 --l 2
    sasakijoin search eta --bound 13
    sasakijoin verify-paper

Exit status: 0 success, 1 computation error, 2 usage error (including
malformed polynomial text or out-of-range parameters).  Only the
report goes to stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from typing import Sequence

from .brieskorn import build_link
from .errors import InvalidInput, SasakiJoinError
from .join import (
    JoinSpec,
    LinkSummary,
    SasakiType,
    eta_einstein_plan,
    join_report,
    sasaki_einstein_plan,
    sphere_summary,
    summarize_brieskorn,
    summarize_hypersurface,
)
from .report import render_json, render_report, to_record
from .search import (
    SearchConfig,
    enum_pairwise_coprime,
    gomez_series,
    scan_eta_einstein,
    scan_joins,
    sporadic_fixtures,
)
from .verify import FAIL, all_passed, run_checks
from .whlink import WeightedPoly, analyze_poly, parse_poly

log = logging.getLogger("sasakijoin")


def manifold_from_text(text: str) -> LinkSummary:
    """``2,3,7`` (Brieskorn), ``S5`` / ``S^5`` (round sphere) or a polynomial."""
    t = text.strip()
    m = re.fullmatch(r"S\^?(\d+)", t)
    if m:
        return sphere_summary(int(m.group(1)))
    if re.fullmatch(r"\d+(\s*,\s*\d+)+", t):
        return summarize_brieskorn(tuple(int(x) for x in t.split(",")))
    if "z" in t:
        return summarize_hypersurface(analyze_poly(t.removeprefix("poly:")))
    raise InvalidInput(f"cannot interpret manifold {text!r}")


def _second_factor(args) -> LinkSummary:
    if args.n_summary:
        return LinkSummary.load(args.n_summary)
    if args.m2:
        return manifold_from_text(args.m2)
    raise InvalidInput("second factor missing: give M2 or --n-summary")


def cmd_brieskorn(args):
    return build_link(args.a)


def cmd_link(args):
    if args.fixture is not None:
        rows = sporadic_fixtures()
        if not 1 <= args.fixture <= len(rows):
            raise InvalidInput(f"fixture must be 1..{len(rows)}")
        return rows[args.fixture - 1]
    if args.poly:
        p = parse_poly(args.poly)
    elif args.json:
        with open(args.json) as fh:
            p = WeightedPoly.from_json(json.load(fh))
    else:
        raise InvalidInput("give --poly, --json or --fixture")
    rep = analyze_poly(p)
    if args.strata:
        rec = to_record(rep)
        rec["strata"] = [
            {"J": list(s.subset), "present": s.present, "isotropy": s.isotropy} for s in rep.strata
        ]
        return rec
    return rep


def cmd_join(args):
    m1 = manifold_from_text(args.m1)
    m2 = _second_factor(args)
    if (args.k is None) != (args.l is None):
        raise InvalidInput("give both --k and --l, or neither")
    if args.k is not None:
        return join_report(JoinSpec(m1, m2, args.k, args.l))
    if m1.type is m2.type is SasakiType.NEGATIVE:
        plan = eta_einstein_plan(m1, m2)
    elif m1.is_poincare and m2.type is SasakiType.POSITIVE:
        plan = sasaki_einstein_plan(m2)
    else:
        plan = None
    if plan is None:
        raise SasakiJoinError(f"no Einstein-type plan for {m1.name} * {m2.name}; give --k and --l")
    log.info("using plan (k, l) = (%d, %d)", plan.k, plan.l)
    return join_report(plan)


def cmd_search(args):
    cfg = SearchConfig(n=args.n, bound=args.bound, kl_bound=args.kl_bound, budget=args.budget)
    if args.kind == "coprime":
        out = []
        for a in enum_pairwise_coprime(cfg):
            out.append(list(a))
            if len(out) >= cfg.budget:
                break
        return out
    if args.kind == "eta":
        return scan_eta_einstein(cfg)
    if args.kind == "joins":
        if not args.m1:
            raise InvalidInput("search joins needs M1")
        pairs = scan_joins(manifold_from_text(args.m1), _second_factor(args), cfg.kl_bound, cfg.budget)
        return [{"k": k, "l": l} for k, l in pairs]
    if args.kind == "series":
        if args.series is None or args.k is None:
            raise InvalidInput("search series needs --series and --k")
        m = gomez_series(args.series, args.k)
        rec = to_record(analyze_poly(m.poly))
        rec.update(expected_b2=m.expected_b2, expected_index=m.expected_index,
                   stated_upsilon=m.stated_upsilon)
        if rec["upsilon"] != m.stated_upsilon:
            rec["warning"] = (f"computed order {rec['upsilon']} differs from stated "
                              f"{m.stated_upsilon}")
        return rec
    raise InvalidInput(f"unknown search kind {args.kind}")


def cmd_verify(args):
    return run_checks()


def _verify_text(checks) -> str:
    width = max(len(c.name) for c in checks)
    lines = [f"{c.status:<4}  [{c.criterion}] {c.name:<{width}}  {c.detail}".rstrip() for c in checks]
    n_fail = sum(c.status == FAIL for c in checks)
    n_warn = sum(c.status == "WARN" for c in checks)
    lines.append(f"{len(checks)} checks: {len(checks) - n_fail - n_warn} pass, "
                 f"{n_warn} warn, {n_fail} fail")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="sasakijoin", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("brieskorn", parents=[common], help="invariants of L(a_0,...,a_n)")
    p.add_argument("a", type=int, nargs="+")
    p.set_defaults(func=cmd_brieskorn)

    p = sub.add_parser("link", parents=[common], help="weighted homogeneous hypersurface link")
    p.add_argument("--poly", help='polynomial text, e.g. "z0^5+z1^3+z2^2"')
    p.add_argument("--json", metavar="PATH", help='exponent matrix {"nvars": n, "monomials": [...]}')
    p.add_argument("--fixture", type=int, metavar="ROW", help="row of the sporadic table (1-5)")
    p.add_argument("--strata", action="store_true", help="list isotropy strata")
    p.set_defaults(func=cmd_link)

    p = sub.add_parser("join", parents=[common], help="report on M1 *_{k,l} M2")
    p.add_argument("m1", metavar="M1")
    p.add_argument("m2", metavar="M2", nargs="?")
    p.add_argument("--n-summary", metavar="PATH", help="JSON link summary for the second factor")
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.set_defaults(func=cmd_join)

    p = sub.add_parser("search", parents=[common], help="enumerate examples")
    p.add_argument("kind", choices=("coprime", "eta", "joins", "series"))
    p.add_argument("m1", metavar="M1", nargs="?")
    p.add_argument("m2", metavar="M2", nargs="?")
    p.add_argument("--n", type=int, default=2, help="tuple length minus one")
    p.add_argument("--bound", type=int, default=13)
    p.add_argument("--kl-bound", type=int, default=10)
    p.add_argument("--budget", type=int, default=1000)
    p.add_argument("--n-summary", metavar="PATH")
    p.add_argument("--series", type=int, choices=(1, 2))
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify-paper", parents=[common], help="reproduce the published tables")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s: %(message)s")
    try:
        result = args.func(args)
    except InvalidInput as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except SasakiJoinError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    status = 0
    if args.command == "verify-paper":
        status = 0 if all_passed(result) else 1
        text = render_json(to_record(result)) if args.format == "json" else _verify_text(result)
    else:
        text = render_report(result, args.format)

    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


def main() -> None:
    sys.exit(run())
