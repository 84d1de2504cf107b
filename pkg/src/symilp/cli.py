"""Command line front end: generate, detect, reduce, solve, bench.

Exit codes: 0 optimal, 2 infeasible, 3 unbounded relaxation, 4 precondition
refusal, 1 I/O or parse error.
"""

import argparse
import csv
import sys
import time
from fractions import Fraction

from . import corepoint, instances, layers, lpcore, model, reduction, symdetect, symmetry
from .errors import (
    BadParams,
    BoxTooLarge,
    NotASymmetry,
    ObjectiveNotOnes,
    SearchBudgetExceeded,
    SymilpError,
    TransitivityNotEstablished,
    UnboundedRelaxation,
)

EXIT_OPTIMAL = 0
EXIT_ERROR = 1
EXIT_INFEASIBLE = 2
EXIT_UNBOUNDED = 3
EXIT_REFUSED = 4

POINT_ELIDE_N = 20

REPORT_FIELDS = (
    "instance",
    "method",
    "status",
    "value",
    "m",
    "n",
    "lp_s",
    "ip_s",
    "layers_scanned",
    "feasibility_checks",
)


class RunReport:
    __slots__ = ("instance", "method", "status", "value", "point", "m", "n",
                 "lp_s", "ip_s", "layers_scanned", "feasibility_checks")

    def __init__(self, instance, method, status, value=None, point=None, m=0, n=0,
                 lp_s=0.0, ip_s=0.0, layers_scanned=0, feasibility_checks=0):
        self.instance = instance
        self.method = method
        self.status = status
        self.value = value
        self.point = point
        self.m = m
        self.n = n
        self.lp_s = lp_s
        self.ip_s = ip_s
        self.layers_scanned = layers_scanned
        self.feasibility_checks = feasibility_checks

    def row(self):
        return [
            self.instance,
            self.method,
            self.status,
            "" if self.value is None else str(self.value),
            self.m,
            self.n,
            f"{self.lp_s:.3f}",
            f"{self.ip_s:.3f}",
            self.layers_scanned,
            self.feasibility_checks,
        ]


def _emit_reports(reports, output, stream=None):
    stream = stream or sys.stdout
    rows = [list(REPORT_FIELDS)] + [r.row() for r in reports]
    if output == "csv":
        writer = csv.writer(stream)
        writer.writerows(rows)
        return
    widths = [max(len(str(row[i])) for row in rows) for i in range(len(rows[0]))]
    for row in rows:
        stream.write("  ".join(str(v).rjust(w) for v, w in zip(row, widths)) + "\n")


def _print_point(point, stream=None):
    stream = stream or sys.stdout
    stream.write("point " + " ".join(str(v) for v in point) + "\n")


def _parse_box(text, n):
    parts = text.split(",")
    pairs = []
    for part in parts:
        lo, _, hi = part.partition(":")
        pairs.append((int(lo), int(hi)))
    if len(pairs) == 1:
        pairs = pairs * n
    if len(pairs) != n:
        raise ValueError(f"box needs 1 or {n} lo:hi pairs")
    return pairs


def _status_exit(status):
    if status == model.OPTIMAL:
        return EXIT_OPTIMAL
    if status == model.INFEASIBLE:
        return EXIT_INFEASIBLE
    return EXIT_UNBOUNDED


def cmd_generate(args) -> int:
    if args.family == "htc":
        lam = Fraction(args.lam)
        r = args.r if args.r is not None else instances.htc_r(args.n)
        inst = instances.gen_hypertruncated_cube(instances.HtcParams(args.n, r, lam))
    else:
        inst = instances.gen_wild(args.d)
    model.write_instance(inst, args.outfile)
    print(f"wrote {inst.name}: m={inst.m} n={inst.n} -> {args.outfile}")
    return EXIT_OPTIMAL


def cmd_lp(args) -> int:
    inst = model.read_instance(args.file)
    out = lpcore.solve_lp(inst)
    print(f"status {out.status}")
    if out.status == model.OPTIMAL:
        print(f"value {out.value}")
        _print_point(out.point)
    return _status_exit(out.status)


def cmd_detect(args) -> int:
    inst = model.read_instance(args.file)
    det = symdetect.detect(inst, args.graph)
    print(f"graph {args.graph}: {det.graph.n_nodes} nodes, {det.graph.n_edges} edges")
    print(f"group order {det.order}")
    for g in det.group.generators:
        print("gen " + " ".join(str(v) for v in g.image))
    if args.emit_generators:
        symmetry.write_generators(det.group, args.emit_generators)
    return EXIT_OPTIMAL


def cmd_reduce(args) -> int:
    inst = model.read_instance(args.file)
    G = symmetry.read_generators(args.group)
    rp = reduction.build_reduced(inst, G)
    red = reduction.reduced_instance(rp)
    model.write_instance(red, args.outfile)
    print(
        f"reduced {inst.name}: {inst.m} rows -> {len(rp.summed_rows)} orbit sums "
        f"+ {len(rp.fixing)} equations -> {args.outfile}"
    )
    return EXIT_OPTIMAL


def cmd_solve(args) -> int:
    inst = model.read_instance(args.file)
    stats = {}
    t0 = time.perf_counter()
    if args.method == "corepoint":
        out = corepoint.solve_core_point(
            inst, assume_transitive=args.assume_transitivity, stats=stats
        )
    elif args.method == "layers":
        out = layers.solve_by_layers(
            inst, assume_transitive=args.assume_transitivity, stats=stats
        )
    else:
        box = _parse_box(args.box, inst.n) if args.box else None
        out = model.brute_force_ilp(inst, box=box)
    elapsed = time.perf_counter() - t0
    if out.status == model.OPTIMAL and not inst.is_feasible(out.point):
        raise AssertionError("solver returned an infeasible point")
    report = RunReport(
        inst.name, args.method, out.status, value=out.value,
        point=out.point, m=inst.m, n=inst.n, ip_s=elapsed,
        layers_scanned=stats.get("layers_scanned", 0),
        feasibility_checks=stats.get("feasibility_checks", 0),
    )
    _emit_reports([report], args.output)
    if out.status == model.OPTIMAL and inst.n <= POINT_ELIDE_N:
        _print_point(out.point)
    return _status_exit(out.status)


def _parse_range(text):
    parts = [int(t) for t in text.split(":")]
    if len(parts) == 2:
        lo, hi = parts
        step = 1
    elif len(parts) == 3:
        lo, hi, step = parts
    else:
        raise ValueError("range must be lo:hi or lo:hi:step")
    return list(range(lo, hi + 1, step))


def bench_rows(family, sizes, assume_transitivity=False):
    """Generate-and-solve loop; LP-on-line and IP times reported apart."""
    reports = []
    for size in sizes:
        if family == "htc":
            p = instances.HtcParams(size, instances.htc_r(size), Fraction(1, 2))
            inst = instances.gen_hypertruncated_cube(p)
        else:
            inst = instances.gen_wild(size)
        t0 = time.perf_counter()
        status, zeta = lpcore.solve_lp_on_line(inst)
        lp_s = time.perf_counter() - t0
        stats = {}
        t0 = time.perf_counter()
        if status == model.OPTIMAL:
            out = corepoint.solve_core_point(
                inst, assume_transitive=assume_transitivity, stats=stats, _zeta=zeta
            )
        elif status == model.INFEASIBLE:
            out = model.ILPOutcome(model.INFEASIBLE)
        else:
            raise UnboundedRelaxation(inst.name)
        ip_s = time.perf_counter() - t0
        if out.status == model.OPTIMAL:
            assert inst.is_feasible(out.point)
        reports.append(
            RunReport(
                inst.name, "corepoint", out.status, value=out.value,
                point=out.point, m=inst.m, n=inst.n, lp_s=lp_s, ip_s=ip_s,
                feasibility_checks=stats.get("feasibility_checks", 0),
            )
        )
    return reports


def cmd_bench(args) -> int:
    sizes = _parse_range(args.range)
    reports = bench_rows(args.family, sizes, args.assume_transitivity)
    _emit_reports(reports, args.output)
    return EXIT_OPTIMAL


def build_parser() -> argparse.ArgumentParser:
    # the global flags are accepted both before and after the subcommand;
    # SUPPRESS keeps a late subparser from clobbering an early value
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="seed for randomized corpora")
    common.add_argument("--output", choices=("text", "csv"),
                        default=argparse.SUPPRESS)
    common.add_argument("--assume-transitivity", action="store_true",
                        default=argparse.SUPPRESS,
                        help="skip the transitivity certificate checks")

    ap = argparse.ArgumentParser(prog="symilp", parents=[common])
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a benchmark instance file")
    gsub = g.add_subparsers(dest="family", required=True)
    ghtc = gsub.add_parser("htc", parents=[common])
    ghtc.add_argument("--n", type=int, required=True)
    ghtc.add_argument("--r", type=int, default=None, help="default floor(n/e)")
    ghtc.add_argument("--lambda", dest="lam", default="1/2")
    ghtc.add_argument("-o", "--output-file", dest="outfile", required=True)
    gwild = gsub.add_parser("wild", parents=[common])
    gwild.add_argument("--d", type=int, required=True)
    gwild.add_argument("-o", "--output-file", dest="outfile", required=True)

    s = sub.add_parser("solve", help="solve an integer program", parents=[common])
    s.add_argument("file")
    s.add_argument("--method", choices=("corepoint", "layers", "brute"),
                   default="corepoint")
    s.add_argument("--box", default=None, help="lo:hi[,lo:hi...] for --method brute")

    lp = sub.add_parser("lp", help="solve the LP relaxation exactly",
                        parents=[common])
    lp.add_argument("file")

    d = sub.add_parser("detect", help="find symmetries via the ILP graph",
                       parents=[common])
    d.add_argument("file")
    d.add_argument("--graph", choices=("reduced", "full"), default="full")
    d.add_argument("--emit-generators", default=None)

    r = sub.add_parser("reduce", help="write the orbit-summed reduced program",
                       parents=[common])
    r.add_argument("file")
    r.add_argument("--group", required=True)
    r.add_argument("-o", "--output-file", dest="outfile", required=True)

    b = sub.add_parser("bench", help="generate-and-solve timing table",
                       parents=[common])
    b.add_argument("family", choices=("htc", "wild"))
    b.add_argument("--range", required=True, help="lo:hi[:step]")
    return ap


_COMMANDS = {
    "generate": cmd_generate,
    "solve": cmd_solve,
    "lp": cmd_lp,
    "detect": cmd_detect,
    "reduce": cmd_reduce,
    "bench": cmd_bench,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    # global flags default here, not in the parser: argparse would push a
    # parser-level default through the shared parent action and let the
    # subparser pass clobber values given before the subcommand
    for dest, default in (
        ("seed", 0),
        ("output", "text"),
        ("assume_transitivity", False),
    ):
        if not hasattr(args, dest):
            setattr(args, dest, default)
    try:
        return _COMMANDS[args.command](args)
    except UnboundedRelaxation as exc:
        print(f"unbounded relaxation: {exc}", file=sys.stderr)
        return EXIT_UNBOUNDED
    except (
        TransitivityNotEstablished,
        ObjectiveNotOnes,
        BadParams,
        NotASymmetry,
        BoxTooLarge,
        SearchBudgetExceeded,
    ) as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except (OSError, ValueError, SymilpError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
