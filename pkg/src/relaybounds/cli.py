"""Command-line front end: ``relaybounds <command> ...``.

Exit status is 0 on success, 1 on a usage or input error and 2 when a
verification suite fails.
"""

import argparse
import io
import json
import sys
from dataclasses import dataclass

from relaybounds import bounds, channels, reproduce, verify
from relaybounds.info import DomainError

MAX_POINTS = 1_000_000
BOUNDS_HEADER = ("r0",) + bounds.BOUND_NAMES
COVER_HEADER = ("p", "hf_upper", "cutset_lower", "thm1_lower", "thm2_lower", "thm3_lower")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


@dataclass
class SweepConfig:
    variable: str
    lo: float
    hi: float
    step: float
    channel: dict
    out: str | None = None
    fmt: str = "csv"

    def __post_init__(self):
        if self.variable not in ("r0", "p"):
            raise UsageError(f"unknown sweep variable {self.variable!r}")
        if not (self.lo <= self.hi):
            raise UsageError("range needs lo <= hi")
        if not (self.step > 0):
            raise UsageError("range needs step > 0")
        if (self.hi - self.lo) / self.step > MAX_POINTS:
            raise UsageError(f"range has more than {MAX_POINTS} points")
        if self.fmt not in ("csv", "json"):
            raise UsageError("format must be csv or json")

    def points(self):
        return reproduce.grid(self.lo, self.hi, self.step)


def parse_range(text):
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"range {text!r} must look like lo:hi:step")
    try:
        return tuple(float(v) for v in parts)
    except ValueError as exc:
        raise UsageError(f"range {text!r}: {exc}") from None


def fmt_number(v):
    return format(float(v), ".9g")


def write_csv(header, rows):
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(fmt_number(v) for v in row) + "\n")
    return buf.getvalue()


def write_json_rows(header, rows):
    return json.dumps([dict(zip(header, map(float, r))) for r in rows], indent=2) + "\n"


def _emit(text, out):
    if out:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _channel(args, require=True):
    if getattr(args, "spec", None):
        return channels.load_spec(args.spec)
    r0 = args.r0 if args.r0 is not None else 0.0
    if args.bsc is not None:
        return channels.make_bsc(args.bsc, r0)
    if args.bac is not None:
        return channels.make_bac(args.bac[0], args.bac[1], r0)
    if require:
        raise UsageError("give a channel: a spec file, --bsc p or --bac p1 p2")
    return None


def _add_channel_flags(p):
    p.add_argument("spec", nargs="?", help="channel spec JSON file")
    p.add_argument("--bsc", type=float, metavar="P")
    p.add_argument("--bac", type=float, nargs=2, metavar=("P1", "P2"))
    p.add_argument("--r0", type=float)


def _bound_record(b):
    return {
        "value": b.value,
        "witness_px": [float(v) for v in b.witness_px],
        "witness_a": b.witness_a,
        "active_constraint": b.active_constraint,
        "method": b.method,
        "constraints": {k: float(v) for k, v in b.constraints.items()},
    }


def cmd_bounds(args):
    spec = _channel(args)
    if args.r0 is not None:
        spec = spec.with_r0(args.r0)
    res = bounds.all_bounds(spec)
    if args.format == "json":
        doc = {"channel": spec.to_dict(),
               "bounds": {n: _bound_record(res[n]) for n in bounds.BOUND_NAMES}}
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
        return 0
    lines = [f"{'bound':<8} {'value':>12}  {'active':<17} {'a':>12}  px"]
    for n in bounds.BOUND_NAMES:
        b = res[n]
        a = "-" if b.witness_a is None else fmt_number(b.witness_a)
        px = " ".join(fmt_number(v) for v in b.witness_px)
        lines.append(f"{n:<8} {fmt_number(b.value):>12}  {b.active_constraint:<17} {a:>12}  {px}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


GNUPLOT_BOUNDS = """set datafile separator ','
set key bottom right
set xlabel 'R_0'
set ylabel 'upper bound on C(R_0)'
plot '{data}' using 1:2 with lines title 'cut-set', \\
     '' using 1:3 with lines title 'Xue', \\
     '' using 1:4 with lines title 'thm1', \\
     '' using 1:5 with lines title 'thm2'
pause -1
"""


GNUPLOT_COVER = """set datafile separator ','
set key top left
set xlabel 'p'
set ylabel 'bounds on R_0^*'
plot '{data}' using 1:2 with lines title 'hash-and-forward', \\
     '' using 1:3 with lines title 'cut-set', \\
     '' using 1:4 with lines title 'thm1', \\
     '' using 1:5 with lines title 'thm2', \\
     '' using 1:6 with lines title 'thm3'
pause -1
"""


def _finish_sweep(cfg, header, rows, gnuplot, template):
    text = write_csv(header, rows) if cfg.fmt == "csv" else write_json_rows(header, rows)
    _emit(text, cfg.out)
    if gnuplot:
        data = cfg.out if (cfg.out and cfg.fmt == "csv") else "data.csv"
        with open(gnuplot, "w", newline="\n") as fh:
            fh.write(template.format(data=data))
    return 0


def cmd_sweep_bounds(args):
    if args.r0_range is None:
        raise UsageError("--r0-range lo:hi:step is required")
    spec = _channel(args)
    cfg = SweepConfig("r0", *parse_range(args.r0_range), channel=spec.to_dict(),
                      out=args.out, fmt=args.format or "csv")
    rows = []
    for r0 in cfg.points():
        if r0 < 0:
            raise UsageError("relay rates must be nonnegative")
        res = bounds.all_bounds(spec.with_r0(float(r0)))
        rows.append((float(r0),) + tuple(res[n].value for n in bounds.BOUND_NAMES))
    return _finish_sweep(cfg, BOUNDS_HEADER, rows, args.emit_gnuplot, GNUPLOT_BOUNDS)


def cmd_sweep_cover(args):
    if args.p_range is None:
        raise UsageError("--p-range lo:hi:step is required")
    cfg = SweepConfig("p", *parse_range(args.p_range), channel={}, out=args.out,
                      fmt=args.format or "csv")
    ps = [float(p) for p in cfg.points()] + list(args.extra_p or [])
    if any(not (0 < p < 0.5) for p in ps):
        raise UsageError("crossover probabilities must lie in (0, 0.5)")
    rows = reproduce.cover_sweep(ps)
    return _finish_sweep(cfg, COVER_HEADER, rows, args.emit_gnuplot, GNUPLOT_COVER)


def cmd_example_bac(args):
    rows = reproduce.bac_example()
    if args.format == "json":
        doc = [{"quantity": r.name, "computed": r.computed, "reference": r.reference,
                "deviation": r.deviation, "tolerance": r.tolerance, "within": r.ok}
               for r in rows]
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
        return 0
    lines = [f"{'quantity':<10} {'computed':>12} {'reference':>10} {'deviation':>10}  within"]
    for r in rows:
        lines.append(f"{r.name:<10} {fmt_number(r.computed):>12} {r.reference:>10} "
                     f"{r.deviation:>10.2e}  {'yes' if r.ok else 'NO'}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_verify(args):
    try:
        results = verify.run(args.suite, quick=not args.full)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    for name, checks in results.items():
        ok = all(c.ok for c in checks)
        print(f"[{'PASS' if ok else 'FAIL'}] {name}")
        for c in checks:
            if not c.ok or args.verbose:
                print(f"    {'ok  ' if c.ok else 'FAIL'} {c.name} {c.detail}".rstrip())
    return 0 if verify.passed(results) else 2


def build_parser():
    parser = _Parser(prog="relaybounds",
                     description="Capacity upper bounds for symmetric primitive relay channels.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("bounds", help="all four upper bounds for one channel")
    _add_channel_flags(p)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("sweep-bounds", help="bounds over a grid of relay rates")
    _add_channel_flags(p)
    p.add_argument("--r0-range", metavar="LO:HI:STEP")
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--emit-gnuplot", metavar="PATH")
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep_bounds)

    p = sub.add_parser("sweep-cover", help="bounds on the critical relay rate for BSC links")
    p.add_argument("--p-range", metavar="LO:HI:STEP")
    p.add_argument("--extra-p", type=float, action="append", metavar="P",
                   help="additional crossover probability appended after the grid")
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--emit-gnuplot", metavar="PATH")
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep_cover)

    p = sub.add_parser("example-bac", help="BAC(0.01, 0.3) numbers against reference values")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--out")
    p.set_defaults(func=cmd_example_bac)

    p = sub.add_parser("verify", help="run the self-check suites")
    p.add_argument("--suite", action="append", choices=sorted(verify.SUITES))
    p.add_argument("--full", action="store_true", help="use the larger test grids")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except channels.SpecError as exc:
        print(f"relaybounds: invalid channel spec: {exc}", file=sys.stderr)
    except (UsageError, DomainError, ValueError, OSError) as exc:
        print(f"relaybounds: error: {exc}", file=sys.stderr)
    return 1


if __name__ == "__main__":
    sys.exit(main())
