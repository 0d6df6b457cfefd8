"""Command-line front end: generate, solve, verify, and batch-benchmark.

Exit codes: 0 all certificates pass, 1 usage or I/O error, 2 certificate
failure, 3 exact oracle unavailable or inconclusive when --exact was given.

Structured records are line-delimited JSON with sorted keys and no wall-clock
fields, so a given (instance, flags) pair always produces identical bytes;
timings appear only in the human table view.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from time import perf_counter

from minpower.exact import ExactResult, SearchLimits, exact_optimum
from minpower.graph import Instance, InstanceError, bidirect, minimum_spanning_tree, power_of
from minpower.greedy import certify, greedy_solve
from minpower.instances import (
    GeneratorSpec,
    read_assignment,
    read_instance,
    write_assignment,
    write_instance,
)
from minpower.lpbound import FractionalSolution, LpError, lp_lower_bound

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CERT = 2
EXIT_INCONCLUSIVE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunReport:
    instance: str
    n: int
    m: int
    meta: str | None
    c_mst: float
    mst_power: float
    greedy_power: float
    greedy_iterations: int
    star_power: float
    certificates_ok: bool
    certificate_failures: list[str]
    exact_status: str | None = None
    exact_opt: float | None = None
    lp_value: float | None = None
    lp_rounds: int | None = None
    ratios: dict[str, float] = field(default_factory=dict)
    timings: dict[str, float] = field(default_factory=dict)

    def record(self) -> str:
        payload = {
            "instance": self.instance,
            "meta": self.meta,
            "n": self.n,
            "m": self.m,
            "c_mst": self.c_mst,
            "mst_power": self.mst_power,
            "greedy_power": self.greedy_power,
            "greedy_iterations": self.greedy_iterations,
            "star_power": self.star_power,
            "certificates_ok": self.certificates_ok,
            "certificate_failures": self.certificate_failures,
            "exact_status": self.exact_status,
            "exact_opt": self.exact_opt,
            "lp_value": self.lp_value,
            "lp_rounds": self.lp_rounds,
            "ratios": self.ratios,
        }
        return json.dumps(payload, sort_keys=True)

    def table(self) -> str:
        lines = [
            f"instance        {self.instance}" + (f"  ({self.meta})" if self.meta else ""),
            f"size            n={self.n} m={self.m}",
            f"c(MST)          {self.c_mst:.6f}",
            f"MST power       {self.mst_power:.6f}",
            f"greedy power    {self.greedy_power:.6f}  "
            f"({self.greedy_iterations} iterations, star power {self.star_power:.6f})",
            f"certificates    {'ok' if self.certificates_ok else 'FAILED: ' + ', '.join(self.certificate_failures)}",
        ]
        if self.exact_status is not None:
            shown = f"{self.exact_opt:.6f} ({self.exact_status})" if self.exact_opt is not None else self.exact_status
            lines.append(f"exact optimum   {shown}")
        if self.lp_value is not None:
            lines.append(f"lp bound        {self.lp_value:.6f}  ({self.lp_rounds} rounds)")
        for name, value in sorted(self.ratios.items()):
            lines.append(f"ratio {name:<16s} {value:.6f}")
        for phase, secs in sorted(self.timings.items()):
            lines.append(f"time {phase:<15s} {secs:.3f}s")
        return "\n".join(lines)


def _solve_instance(
    inst: Instance,
    label: str,
    meta: str | None,
    want_exact: bool,
    want_lp: bool,
    max_exact_n: int,
    tol: float,
) -> tuple[RunReport, int]:
    timings: dict[str, float] = {}

    t0 = perf_counter()
    tree = minimum_spanning_tree(inst)
    mst_power = power_of(inst, bidirect(tree)).total
    timings["mst"] = perf_counter() - t0

    t0 = perf_counter()
    solution = greedy_solve(inst)
    cert = certify(solution)
    timings["greedy"] = perf_counter() - t0

    report = RunReport(
        instance=label,
        n=inst.n,
        m=inst.m,
        meta=meta,
        c_mst=tree.total_cost,
        mst_power=mst_power,
        greedy_power=solution.total_power,
        greedy_iterations=solution.iterations,
        star_power=solution.star_power,
        certificates_ok=cert.all_passed,
        certificate_failures=cert.failures(),
        timings=timings,
    )

    code = EXIT_OK if cert.all_passed else EXIT_CERT
    exact: ExactResult | None = None
    if want_exact:
        if inst.n > max_exact_n:
            report.exact_status = "skipped: instance too large"
            if code == EXIT_OK:
                code = EXIT_INCONCLUSIVE
        else:
            t0 = perf_counter()
            exact = exact_optimum(inst, SearchLimits(max_vertices=max_exact_n))
            timings["exact"] = perf_counter() - t0
            report.exact_status = exact.status
            report.exact_opt = exact.opt
            if not exact.optimal and code == EXIT_OK:
                code = EXIT_INCONCLUSIVE

    lp: FractionalSolution | None = None
    if want_lp:
        t0 = perf_counter()
        try:
            lp = lp_lower_bound(inst, tol)
        except LpError as exc:
            print(f"lp bound failed: {exc}", file=sys.stderr)
            if code == EXIT_OK:
                code = EXIT_CERT
        timings["lp"] = perf_counter() - t0
        if lp is not None:
            report.lp_value = round(lp.value, 6)
            report.lp_rounds = lp.rounds

    if exact is not None and exact.optimal and exact.opt > 0:
        report.ratios["greedy_vs_exact"] = round(solution.total_power / exact.opt, 6)
        report.ratios["mst_vs_exact"] = round(mst_power / exact.opt, 6)
    if lp is not None and lp.value > 0:
        report.ratios["greedy_vs_lp"] = round(solution.total_power / lp.value, 6)
    return report, code


def _read_generator_comment(path: str) -> str | None:
    try:
        with open(path) as fh:
            for raw in fh:
                line = raw.strip()
                if not line:
                    continue
                if line.startswith("#"):
                    body = line.lstrip("#").strip()
                    if body.startswith("generator:"):
                        return body.partition(":")[2].strip()
                    continue
                break
    except OSError:
        return None
    return None


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        spec = GeneratorSpec.parse(args.spec)
        if args.seed is not None:
            spec = GeneratorSpec(
                spec.family, spec.n, spec.epsilon, spec.kappa, args.seed, spec.complete
            )
        inst, witness = spec.build()
    except (ValueError, InstanceError) as exc:
        print(f"gen: {exc}", file=sys.stderr)
        return EXIT_USAGE
    write_instance(inst, args.out, comments=(f"generator: {spec.canonical()}",))
    if witness is not None:
        write_assignment(witness, args.out + ".witness")
        print(f"wrote {args.out} and {args.out}.witness")
    else:
        print(f"wrote {args.out}")
    return EXIT_OK


def _emit(report: RunReport, fmt: str, out_path: str | None, out_lines: list[str]) -> None:
    if fmt == "table":
        print(report.table())
        print()
    else:
        print(report.record())
    if out_path is not None:
        out_lines.append(report.record())


def cmd_solve(args: argparse.Namespace) -> int:
    try:
        inst = read_instance(args.instance)
    except (OSError, InstanceError) as exc:
        print(f"solve: {exc}", file=sys.stderr)
        return EXIT_USAGE
    meta = _read_generator_comment(args.instance)
    report, code = _solve_instance(
        inst, args.instance, meta, args.exact, args.lp, args.max_exact_n, args.tol
    )
    out_lines: list[str] = []
    _emit(report, args.format, args.out, out_lines)
    if args.out is not None:
        with open(args.out, "w") as fh:
            fh.write("\n".join(out_lines) + "\n")
    return code


def cmd_verify(args: argparse.Namespace) -> int:
    from minpower.exact import verify_assignment

    try:
        inst = read_instance(args.instance)
        assignment = read_assignment(args.assignment, inst.n)
    except (OSError, InstanceError) as exc:
        print(f"verify: {exc}", file=sys.stderr)
        return EXIT_USAGE
    ok = verify_assignment(inst, assignment)
    print(f"total power {assignment.total:.17g}")
    print("strongly connected: pass" if ok else "strongly connected: FAIL")
    return EXIT_OK if ok else EXIT_CERT


def _parse_seeds(text: str) -> list[int]:
    text = text.strip()
    if ":" in text:
        lo, _, hi = text.partition(":")
        return list(range(int(lo), int(hi)))
    return [int(part) for part in text.split(",") if part.strip()]


def cmd_bench(args: argparse.Namespace) -> int:
    try:
        specs = [GeneratorSpec.parse(s) for s in args.spec]
        seeds = _parse_seeds(args.seeds)
    except ValueError as exc:
        print(f"bench: {exc}", file=sys.stderr)
        return EXIT_USAGE

    out_lines: list[str] = []
    worst: dict[str, float] = {}
    cert_failures = 0
    inconclusive = 0
    code = EXIT_OK
    for spec in specs:
        run_seeds = seeds if spec.family == "random-geometric" else [spec.seed]
        for seed in run_seeds:
            spec_i = GeneratorSpec(
                spec.family, spec.n, spec.epsilon, spec.kappa, seed, spec.complete
            )
            try:
                inst, _ = spec_i.build()
            except (ValueError, InstanceError) as exc:
                print(f"bench: {spec_i.canonical()}: {exc}", file=sys.stderr)
                return EXIT_USAGE
            report, run_code = _solve_instance(
                inst,
                spec_i.canonical(),
                spec_i.canonical(),
                args.exact,
                args.lp,
                args.max_exact_n,
                args.tol,
            )
            _emit(report, args.format, args.out, out_lines)
            for name, value in report.ratios.items():
                worst[name] = max(worst.get(name, 0.0), value)
            if not report.certificates_ok:
                cert_failures += 1
            if report.exact_status not in (None, "optimal"):
                inconclusive += 1
            if run_code == EXIT_CERT:
                code = EXIT_CERT
            elif run_code == EXIT_INCONCLUSIVE and code == EXIT_OK:
                code = EXIT_INCONCLUSIVE

    summary = {
        "summary": {
            "instances": sum(
                len(seeds) if s.family == "random-geometric" else 1 for s in specs
            ),
            "certificate_failures": cert_failures,
            "exact_not_optimal": inconclusive,
            "worst_ratios": {k: worst[k] for k in sorted(worst)},
        }
    }
    summary_line = json.dumps(summary, sort_keys=True)
    print(summary_line)
    if args.out is not None:
        out_lines.append(summary_line)
        with open(args.out, "w") as fh:
            fh.write("\n".join(out_lines) + "\n")
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="minpower", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate an instance file from a spec string")
    p_gen.add_argument("spec", help="e.g. family=line,n=20,eps=0.01")
    p_gen.add_argument("--out", required=True, help="instance file to write")
    p_gen.add_argument("--seed", type=int, default=None, help="override the spec's seed")
    p_gen.set_defaults(func=cmd_gen)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--exact", action="store_true", help="also run the exact oracle")
    common.add_argument("--lp", action="store_true", help="also compute the LP lower bound")
    common.add_argument("--max-exact-n", type=int, default=9, metavar="K")
    common.add_argument("--tol", type=float, default=1e-7)
    common.add_argument("--out", default=None, help="write structured records to this file")
    common.add_argument("--format", choices=("table", "records"), default="records")

    p_solve = sub.add_parser("solve", parents=[common], help="solve one instance file")
    p_solve.add_argument("instance")
    p_solve.set_defaults(func=cmd_solve)

    p_verify = sub.add_parser("verify", help="check an assignment file against an instance")
    p_verify.add_argument("instance")
    p_verify.add_argument("assignment")
    p_verify.set_defaults(func=cmd_verify)

    p_bench = sub.add_parser("bench", parents=[common], help="sweep generator specs and seeds")
    p_bench.add_argument("--spec", action="append", required=True, help="repeatable generator spec")
    p_bench.add_argument("--seeds", default="0:10", help="seed range lo:hi or comma list")
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
