"""Command-line front end: every invariant, corpus ingestion, and reports.

All numeric output is printed as exact fractions, so reports are diffable
and byte-identical across runs.  Exit codes: 0 success, 1 computation
error (for sweep, also a nonzero inconclusive count on nontrivial
records), 2 usage error.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from .dedekind import LensSpace, dedekind_sum, lens_lambda, lens_tau_cg
from .hfcone import cone_rank_oracle, rank_formula
from .knots import sigma_total
from .obstruction import distinguish, full_invariants, load_knots, sweep
from .surgery import Slope, casson_gordon_surgered, casson_walker_surgered


def _slope_arg(text: str) -> Slope:
    try:
        return Slope.parse(text)
    except (ValueError, TypeError) as e:
        raise argparse.ArgumentTypeError(f"bad slope {text!r}: {e}")


def _load_record(args):
    records = load_knots(args.knot)
    for record in records:
        if record.name == args.name:
            return record
    known = ", ".join(r.name for r in records)
    raise ValueError(f"no knot named {args.name!r} in {args.knot} (have: {known})")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dehnsurg",
        description="Exact surgery invariants and the cosmetic-surgery obstruction.",
    )
    # Let negative slopes like -1/2 through the option tokenizer; none of
    # our option names starts with a digit.
    slope_like = re.compile(r"^-\d+(/\d+)?$")
    parser._negative_number_matcher = slope_like
    sub = parser.add_subparsers(dest="command", required=True)

    def new_command(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p._negative_number_matcher = slope_like
        return p

    p = new_command("dedekind", "Dedekind sum s(q,p)")
    p.add_argument("q", type=int)
    p.add_argument("p", type=int)

    p = new_command("lens", "Casson-Walker and Casson-Gordon values of L(p,q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)

    def knot_args(p, slope=False):
        p.add_argument("--knot", required=True, help="JSON corpus file")
        p.add_argument("--name", required=True, help="record name")
        if slope:
            p.add_argument("--slope", required=True, type=_slope_arg, help="p/q or inf")

    p = new_command("alexander", "normalized Alexander polynomial")
    knot_args(p)

    p = new_command("casson-walker", "Casson-Walker invariant of the surgery")
    knot_args(p, slope=True)

    p = new_command("casson-gordon", "total Casson-Gordon invariant of the surgery")
    knot_args(p, slope=True)
    p.add_argument("--verbose", action="store_true")

    p = new_command("signature", "total Tristram-Levine signature sum sigma(K,m)")
    knot_args(p)
    p.add_argument("--m", required=True, type=int)

    p = new_command("hf-rank", "hat-homology rank of the surgered manifold")
    knot_args(p, slope=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--oracle", action="store_true", help="brute-force cone rank only")
    mode.add_argument("--formula", action="store_true", help="closed formula only")
    mode.add_argument("--both", action="store_true", help="both, and insist they agree")

    p = new_command("distinguish", "which invariant separates two surgeries")
    knot_args(p)
    p.add_argument("--slopes", required=True, nargs=2, type=_slope_arg, metavar=("S1", "S2"))
    p.add_argument("--verbose", action="store_true")

    p = new_command("sweep", "distinguish all same-sign slope pairs, write CSV")
    p.add_argument("--knot", required=True)
    p.add_argument("--name", help="restrict to one record")
    p.add_argument("--pmax", required=True, type=int)
    p.add_argument("--qmax", required=True, type=int)
    p.add_argument("--out", required=True, help="CSV output path")
    return parser


def _cmd_dedekind(args) -> int:
    print(dedekind_sum(args.q, args.p))
    return 0


def _cmd_lens(args) -> int:
    lens = LensSpace(args.p, args.q)
    print(f"lambda={lens_lambda(lens)} tau_cg={lens_tau_cg(lens)}")
    return 0


def _cmd_alexander(args) -> int:
    record = _load_record(args)
    print(record.alexander)
    return 0


def _cmd_casson_walker(args) -> int:
    record = _load_record(args)
    print(casson_walker_surgered(record.ambient, record.delta2, args.slope))
    return 0


def _cmd_casson_gordon(args) -> int:
    record = _load_record(args)
    if record.seifert is None:
        raise ValueError(f"{record.name}: Casson-Gordon needs a Seifert matrix")
    slope = args.slope
    sigma = sigma_total(record.seifert, abs(slope.p))
    if args.verbose:
        print(f"s({slope.q},{slope.p})={dedekind_sum(slope.q, slope.p)}")
        print(f"sigma(K,{abs(slope.p)})={sigma}")
    print(casson_gordon_surgered(sigma, slope))
    return 0


def _cmd_signature(args) -> int:
    record = _load_record(args)
    if record.seifert is None:
        raise ValueError(f"{record.name}: signatures need a Seifert matrix")
    print(sigma_total(record.seifert, args.m))
    return 0


def _cmd_hf_rank(args) -> int:
    record = _load_record(args)
    if record.hf is None:
        raise ValueError(f"{record.name}: no knot Floer data on file")
    if args.slope.is_infinite:
        raise ValueError("the cone needs a finite slope (the infinite surgery has rank 1)")
    parts = []
    want_oracle = args.oracle or args.both or not (args.oracle or args.formula or args.both)
    want_formula = args.formula or args.both or not (args.oracle or args.formula or args.both)
    oracle = formula = None
    if want_oracle:
        oracle = cone_rank_oracle(record.hf, args.slope)
        parts.append(f"oracle={oracle}")
    if want_formula:
        formula = rank_formula(record.hf, args.slope)
        parts.append(f"formula={formula}")
    print(" ".join(parts))
    if oracle is not None and formula is not None and oracle != formula:
        raise ArithmeticError(f"oracle {oracle} != formula {formula}")
    return 0


def _cmd_distinguish(args) -> int:
    record = _load_record(args)
    s1, s2 = args.slopes
    verdict = distinguish(record, s1, s2)
    if args.verbose:
        for s in (s1, s2):
            if not s.is_infinite:
                print(f"s({s.q},{s.p})={dedekind_sum(s.q, s.p)}")
        if record.seifert is not None and not (s1.is_infinite or s2.is_infinite):
            if abs(s1.p) == abs(s2.p):
                print(f"sigma(K,{abs(s1.p)})={sigma_total(record.seifert, abs(s1.p))}")
        for label, s in (("invariants1", s1), ("invariants2", s2)):
            lam, tau, rank = full_invariants(record, s)
            print(f"{label}: lambda={lam} tau_cg={tau} hf_rank={rank}")
    out = f"tag={verdict.tag}"
    if verdict.value1 is not None or verdict.value2 is not None:
        out += f" value1={verdict.value1} value2={verdict.value2}"
    print(out)
    return 0


def _cmd_sweep(args) -> int:
    records = load_knots(args.knot)
    if args.name is not None:
        records = [r for r in records if r.name == args.name]
        if not records:
            raise ValueError(f"no knot named {args.name!r} in {args.knot}")
    report = sweep(records, args.pmax, args.qmax)
    Path(args.out).write_text("\n".join(report.csv_lines()) + "\n")
    print(f"rows={len(report.rows)}")
    for tag in sorted(report.counts):
        print(f"{tag}={report.counts[tag]}")
    if report.nontrivial_inconclusive:
        print(f"inconclusive on nontrivial records: {report.nontrivial_inconclusive}", file=sys.stderr)
        return 1
    return 0


_COMMANDS = {
    "dedekind": _cmd_dedekind,
    "lens": _cmd_lens,
    "alexander": _cmd_alexander,
    "casson-walker": _cmd_casson_walker,
    "casson-gordon": _cmd_casson_gordon,
    "signature": _cmd_signature,
    "hf-rank": _cmd_hf_rank,
    "distinguish": _cmd_distinguish,
    "sweep": _cmd_sweep,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, ArithmeticError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
