"""``matchsat`` command line.

Exit codes: 0 success, 1 invalid input or unreadable graph file, 2 usage
error, 3 the computation finished but two routes disagree (theorem versus
oracle, or a constructed candidate that fails the saturation predicate).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import math
import sys
from pathlib import Path

from . import bounds, construct, formula, oracle
from .graph import EdgeListError, SimpleGraph, matching_number
from .saturation import is_saturated, structure_report

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_DISAGREE = 3


class CLIError(Exception):
    pass


def _instance(n: int, p: int) -> formula.Instance:
    try:
        return formula.Instance(n, p)
    except ValueError as exc:
        raise CLIError(str(exc)) from None


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _dump(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


# -- report builders (also used by tests) -----------------------------------------


def sat_report(inst: formula.Instance) -> dict:
    theorem = formula.sat_theorem(inst)
    exhaustive = formula.z_star_exhaustive(inst)
    cands = construct.extremal_candidates(inst)
    zd = formula.z_dagger(inst)
    return {
        "command": "sat",
        "n": inst.n,
        "p": inst.p,
        "k": inst.k,
        "case": formula.classify_case(inst).to_dict(),
        "z_dagger": zd,
        "z_dagger_rounded": formula.format_z_dagger(zd),
        "candidates": list(theorem.candidates),
        "z_star": exhaustive.z_star,
        "minimizers": list(exhaustive.minimizers),
        "edges": theorem.E,
        "theorem_edges": theorem.E,
        "exhaustive_edges": exhaustive.E_min,
        "agree": theorem.E == exhaustive.E_min,
        "construction": [
            {"z": c.z, "parts": list(c.profile.parts), "edges": c.edges, **c.verdict.to_dict()}
            for c in cands
        ],
        "anomaly": any(not c.verdict.is_saturated for c in cands),
    }


def profile_rows(inst: formula.Instance) -> list[dict]:
    rows = []
    for z in range(inst.z_max + 1):
        s = formula.objective_D(inst, z)
        rows.append({"z": z, "b": s.b, "D": s.D, "E": s.E, "g": f"{s.g:.6f}", "R": str(s.R)})
    return rows


def table_rows(n_max: int) -> list[dict]:
    rows = []
    for inst in formula.iter_instances(4, n_max, k_max=math.isqrt):
        rows.append(
            {
                "n": inst.n,
                "k": inst.k,
                "z_star": formula.z_star_exhaustive(inst).z_star,
                "z_dagger": formula.format_z_dagger(formula.z_dagger(inst)),
            }
        )
    return rows


def format_table(rows: list[dict]) -> str:
    lines = ["n k z_star z_dagger"] + [f"{r['n']} {r['k']} {r['z_star']} {r['z_dagger']}" for r in rows]
    return "\n".join(lines) + "\n"


def construct_report(inst: formula.Instance, z: int | None) -> tuple[dict, SimpleGraph]:
    if z is None:
        z = formula.z_star_exhaustive(inst).z_star
    try:
        profile = construct.CliqueProfile.balanced(inst, z)
    except ValueError as exc:
        raise CLIError(str(exc)) from None
    g = construct.build_candidate(profile)
    nu = matching_number(g).size
    verdict = is_saturated(g, inst.p)
    report = {
        "command": "construct",
        "n": inst.n,
        "p": inst.p,
        "k": inst.k,
        "z": z,
        "parts": list(profile.parts),
        "edges": g.m,
        "D_half": formula.objective_D(inst, z).E,
        "matching_number": nu,
        "verdict": verdict.to_dict(),
        "structure": structure_report(g, nu).to_dict(),
        "anomaly": not verdict.is_saturated,
    }
    return report, g


def check_report(g: SimpleGraph, p: int) -> dict:
    nu = matching_number(g).size
    return {
        "command": "check",
        "n": g.n,
        "edges": g.m,
        "p": p,
        "matching_number": nu,
        "verdict": is_saturated(g, p).to_dict(),
        "structure": structure_report(g, nu).to_dict(),
    }


def oracle_report(n: int, p: int, max_n: int, parallel: int) -> dict:
    r = oracle.brute_force_sat(n, p, max_n=max_n, parallel=parallel)
    return {
        "command": "oracle",
        "n": n,
        "p": p,
        "min_edges": r.min_edges,
        "witness_count": r.witness_count,
        "witnesses": [w.to_edge_list() for w in r.witnesses],
    }


def compare_report(inst: formula.Instance, max_n: int, parallel: int) -> dict:
    r = oracle.compare(inst, max_n=max_n, parallel=parallel)
    return {
        "command": "compare",
        "n": r.n,
        "p": r.p,
        "k": r.k,
        **{f"{name}_edges": value for name, value in r.values().items()},
        "agree": r.agree,
        "status": "AGREE" if r.agree else "MISMATCH",
        "mismatches": [list(pair) for pair in r.mismatches],
        "witnesses": [w.to_edge_list() for w in r.witnesses[:8]],
        "structured_profiles": [pr.to_dict() for pr in r.structured_profiles],
    }


def bounds_report(inst: formula.Instance) -> dict:
    zly = bounds.zly_value(inst)
    return {
        "command": "bounds",
        "n": inst.n,
        "p": inst.p,
        "k": inst.k,
        "kt_value": bounds.kt_value(inst),
        "zly_value": zly.to_dict() if zly else None,
        "eg_upper_bound": bounds.eg_upper_bound(inst.n, inst.k),
        "kt_threshold": bounds.kt_threshold(inst.n),
    }


# -- argument handling ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="matchsat", description="Saturation numbers for matchings.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def np_command(name: str, help: str) -> argparse.ArgumentParser:
        cmd = sub.add_parser(name, help=help)
        cmd.add_argument("n", type=int)
        cmd.add_argument("p", type=int)
        cmd.add_argument("--out", metavar="FILE")
        return cmd

    np_command("sat", "closed-form value with exhaustive cross-check")
    np_command("profile", "CSV of D, E, g, R over every feasible z").add_argument("--json", action="store_true")
    np_command("bounds", "classical values and the upper bound")
    cmd = np_command("construct", "write the balanced candidate graph as an edge list")
    cmd.add_argument("--z", type=int)
    for name, help in (("oracle", "exhaustive search on small n"), ("compare", "theorem versus both oracles")):
        cmd = np_command(name, help)
        cmd.add_argument("--max-n", type=int, default=oracle.DEFAULT_MAX_N)
        cmd.add_argument("--parallel", type=int, default=1)

    cmd = sub.add_parser("table", help="z* and z-dagger for every (n, k) with k <= sqrt(n)")
    cmd.add_argument("n_max", type=int, nargs="?", default=18)
    cmd.add_argument("--json", action="store_true")
    cmd.add_argument("--out", metavar="FILE")

    cmd = sub.add_parser("check", help="saturation verdict for an edge-list file")
    cmd.add_argument("file")
    cmd.add_argument("p", type=int)
    cmd.add_argument("--out", metavar="FILE")
    return parser


def _run(args: argparse.Namespace) -> int:
    cmd = args.command
    if cmd == "sat":
        report = sat_report(_instance(args.n, args.p))
        _emit(_dump(report), args.out)
        return EXIT_OK if report["agree"] and not report["anomaly"] else EXIT_DISAGREE
    if cmd == "profile":
        rows = profile_rows(_instance(args.n, args.p))
        if args.json:
            _emit(_dump({"command": "profile", "n": args.n, "p": args.p, "rows": rows}), args.out)
        else:
            buf = io.StringIO()
            writer = csv.DictWriter(buf, fieldnames=["z", "b", "D", "E", "g", "R"], lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
            _emit(buf.getvalue(), args.out)
        return EXIT_OK
    if cmd == "table":
        if not 4 <= args.n_max <= 120:
            raise CLIError(f"n_max must be in [4, 120], got {args.n_max}")
        rows = table_rows(args.n_max)
        text = _dump({"command": "table", "n_max": args.n_max, "rows": rows}) if args.json else format_table(rows)
        _emit(text, args.out)
        return EXIT_OK
    if cmd == "construct":
        report, g = construct_report(_instance(args.n, args.p), args.z)
        if args.out:
            Path(args.out).write_text(g.to_edge_list(), encoding="utf-8")
            report["file"] = args.out
        else:
            report["edge_list"] = g.to_edge_list()
        sys.stdout.write(_dump(report))
        return EXIT_DISAGREE if report["anomaly"] else EXIT_OK
    if cmd == "check":
        if args.p < 1:
            raise CLIError(f"p must be >= 1, got {args.p}")
        try:
            g = SimpleGraph.from_edge_list(Path(args.file).read_text(encoding="utf-8"))
        except OSError as exc:
            raise CLIError(f"cannot read {args.file}: {exc.strerror}") from None
        except EdgeListError as exc:
            raise CLIError(f"{args.file}: {exc}") from None
        _emit(_dump(check_report(g, args.p)), args.out)
        return EXIT_OK
    if cmd == "oracle":
        _instance(args.n, args.p)
        try:
            report = oracle_report(args.n, args.p, args.max_n, args.parallel)
        except ValueError as exc:
            raise CLIError(str(exc)) from None
        _emit(_dump(report), args.out)
        return EXIT_OK
    if cmd == "compare":
        inst = _instance(args.n, args.p)
        if args.max_n > oracle.HARD_MAX_N:
            raise CLIError(f"--max-n is capped at {oracle.HARD_MAX_N}")
        report = compare_report(inst, args.max_n, args.parallel)
        _emit(_dump(report), args.out)
        return EXIT_OK if report["agree"] else EXIT_DISAGREE
    if cmd == "bounds":
        _emit(_dump(bounds_report(_instance(args.n, args.p))), args.out)
        return EXIT_OK
    raise AssertionError(cmd)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return _run(args)
    except CLIError as exc:
        print(f"matchsat: error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
