"""Command-line interface: ``stanleydepth <subcommand> ...``.

Exit status is 0 on success, 1 when a property is violated or a
decomposition fails verification, and 2 on usage, parse or budget errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import kernels
from .constructions import STRATEGIES, ConstructionError, decompose
from .decomposition import format_slab, parse_decomposition, verify
from .harness import (
    PROPERTIES,
    CampaignSpec,
    SamplingError,
    Skip,
    random_ideal,
    replay,
    run_campaign,
)
from .monomial import ParseError, gcd_part, parse_ideal
from .oracles import BudgetExceeded, depth_exact, partition_to_decomposition, sdepth_exact

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _ideal_arg(text: str):
    try:
        return parse_ideal(text)
    except ParseError as exc:
        raise UsageError(f"cannot parse ideal: {exc}") from None


def _range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI or N, got {text!r}") from None
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return a, b


def _write(out, text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        out.write(text)


def cmd_parse(args, out) -> int:
    out.write(_ideal_arg(args.ideal).to_text() + "\n")
    return EXIT_OK


def cmd_reduce(args, out) -> int:
    ideal = _ideal_arg(args.ideal)
    if ideal.is_zero():
        raise UsageError("the zero ideal has no gcd part")
    v, rest = gcd_part(ideal)
    out.write(f"v={v}\nI'=({rest})\n")
    return EXIT_OK


def cmd_decompose(args, out) -> int:
    ideal = _ideal_arg(args.ideal)
    try:
        trace = decompose(ideal, args.target, args.strategy)
    except (ConstructionError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    d = trace.result
    report = verify(d)
    if args.trace:
        out.write(trace.to_text())
    _write(out, d.to_text(), args.output)
    if args.output:
        out.write(f"wrote {len(d.slabs)} slabs to {args.output}\n")
    out.write(f"sdepth: {report.sdepth}\n")
    out.write(f"verified: {'yes' if report.valid else 'no (' + report.reason + ')'}\n")
    return EXIT_OK if report.valid else EXIT_FAIL


def cmd_verify(args, out) -> int:
    try:
        text = Path(args.file).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
    try:
        d = parse_decomposition(text)
    except ParseError as exc:
        raise UsageError(f"{args.file}: {exc}") from None
    report = verify(d, all_violations=args.all)
    if report.valid:
        out.write(f"valid; sdepth {report.sdepth}; {len(d.slabs)} slabs\n")
        return EXIT_OK
    out.write(f"invalid: {report.reason}\n")
    shown = report.violations if args.all else (report.violation,)
    for v in shown:
        if isinstance(v, tuple) and len(v) == 2 and not isinstance(v[0], int):
            out.write(f"  overlap: {format_slab(v[0])}  /  {format_slab(v[1])}\n")
        else:
            out.write(f"  witness: {v}\n")
    return EXIT_FAIL


def cmd_sdepth(args, out) -> int:
    ideal = _ideal_arg(args.ideal)
    cap = None
    if args.cap:
        cap = [int(c) for c in args.cap.split(",")]
    try:
        res = sdepth_exact(args.target, ideal, cap=cap, budget=args.poset_budget)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(f"{res.value}\n")
    if args.witness:
        for a, b in res.witness.intervals:
            out.write(f"  [{','.join(map(str, a))}] .. [{','.join(map(str, b))}]\n")
        d = partition_to_decomposition(args.target, ideal, res.witness)
        out.write(d.to_text())
    return EXIT_OK


def cmd_depth(args, out) -> int:
    ideal = _ideal_arg(args.ideal)
    try:
        out.write(f"{depth_exact(ideal, budget=args.betti_budget)}\n")
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return EXIT_OK


def cmd_check(args, out) -> int:
    if args.ideal is not None:
        try:
            bad = replay(args.property, args.ideal)
        except (ParseError, ValueError) as exc:
            raise UsageError(f"cannot parse instance: {exc}") from None
        except Skip as exc:
            raise UsageError(f"instance out of scope: {exc}") from None
        if bad is None:
            out.write("ok\n")
            return EXIT_OK
        out.write(json.dumps(bad, sort_keys=True) + "\n")
        return EXIT_FAIL
    ranges = {}
    if args.n:
        ranges["n"] = args.n
    if args.g:
        ranges["g"] = args.g
    if args.max_degree is not None:
        ranges["max_degree"] = args.max_degree
    spec = CampaignSpec(args.property, args.samples, args.seed, ranges)
    try:
        report = run_campaign(spec, jobs=args.jobs)
    except SamplingError as exc:
        raise UsageError(str(exc)) from None
    text = report.to_json(include_timing=not args.no_timing)
    _write(out, text, args.output)
    if args.output:
        out.write(f"{report.property}: {report.checked} checked, {report.skipped} skipped, "
                  f"{len(report.violations)} violations\n")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_random(args, out) -> int:
    try:
        ideal = random_ideal(args.seed, args.n, args.max_degree, args.g)
    except (ValueError, SamplingError) as exc:
        raise UsageError(str(exc)) from None
    out.write(ideal.to_text() + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="stanleydepth", description="Stanley decompositions of monomial ideals.")
    p.add_argument("--version", action="version", version=f"%(prog)s (kernels: {kernels.BACKEND})")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("parse", help="echo an ideal in canonical form")
    s.add_argument("ideal", help='e.g. "n=3; x1^3, x2^2*x3^2"')
    s.set_defaults(func=cmd_parse)

    s = sub.add_parser("reduce", help="split off the gcd: I = v * I'")
    s.add_argument("ideal")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("decompose", help="build and verify a Stanley decomposition")
    s.add_argument("ideal")
    s.add_argument("--target", choices=("ideal", "quotient"), default="ideal")
    s.add_argument("--strategy", choices=STRATEGIES, default="auto")
    s.add_argument("--trace", action="store_true", help="print the construction steps")
    s.add_argument("-o", "--output", help="write the decomposition file here")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("verify", help="check a decomposition file")
    s.add_argument("file")
    s.add_argument("--all", action="store_true", help="list every violation, not just the first")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("sdepth", help="exact Stanley depth by interval partitions")
    s.add_argument("ideal")
    s.add_argument("--target", choices=("ideal", "quotient"), default="ideal")
    s.add_argument("--cap", help="comma-separated box cap, default: generator degrees")
    s.add_argument("--witness", action="store_true", help="print an optimal partition")
    s.add_argument("--poset-budget", type=int, default=None)
    s.set_defaults(func=cmd_sdepth)

    s = sub.add_parser("depth", help="depth(S/I) from multigraded Betti numbers")
    s.add_argument("ideal")
    s.add_argument("--betti-budget", type=int, default=None)
    s.set_defaults(func=cmd_depth)

    s = sub.add_parser("check", help="run a seeded property campaign")
    s.add_argument("--property", required=True, choices=PROPERTIES)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--samples", type=int, default=100)
    s.add_argument("--n", type=_range, help="LO:HI")
    s.add_argument("--g", type=_range, help="LO:HI")
    s.add_argument("--max-degree", type=int)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--ideal", help="replay a single instance instead of sampling")
    s.add_argument("-o", "--output", help="write the JSON report here")
    s.add_argument("--no-timing", action="store_true", help="zero elapsed_ms for byte-stable reports")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("random", help="print a seeded random ideal")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--n", type=int, default=3)
    s.add_argument("--max-degree", type=int, default=3)
    s.add_argument("--g", type=int, default=3)
    s.set_defaults(func=cmd_random)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except BudgetExceeded as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
