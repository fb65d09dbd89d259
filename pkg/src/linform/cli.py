"""Command-line interface: one subcommand per library operation family.

Exit codes: 0 for success or a true verdict, 1 for a false verdict or an
unsatisfiable instance, 2 for usage errors, malformed input, overflow, or
refused/over-budget computations. Formatting flags never change exit codes.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .cyclotomy import check_condition
from .errors import InconsistentWindowError, LinformError, ProblemFormatError
from .forms import diameter_report, image_repfn, modular_repfn
from .periodic import check_t_complementing
from .problems import ProblemFile, parse_problem
from .recursion import DEFAULT_MAX_GAP, Window, build_context, detect_period, extend
from .solver import (
    DEFAULT_NODE_BUDGET,
    SolveStatus,
    TargetFunction,
    candidate_bound,
    solve_window,
    stabilize,
)

COMMANDS = (
    "image",
    "repfn",
    "modrep",
    "cyclotomy",
    "check",
    "extend",
    "period",
    "solve",
    "stabilize",
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linform",
        description="Exact representation-function tools for integer linear forms.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub = subparsers.add_parser(name)
        sub.add_argument("--input", required=True, help="problem file (JSON)")
        sub.add_argument("-m", type=int, default=None, help="modulus")
        sub.add_argument("-t", type=int, default=None, help="target count (overrides the file)")
        sub.add_argument("-N", type=int, default=None, help="window radius / radius cap")
        sub.add_argument("--seed", default=None, help="window seed as START:BITS, e.g. -1:101")
        sub.add_argument("--from", dest="lo", type=int, default=None, help="extension lower end")
        sub.add_argument("--to", dest="hi", type=int, default=None, help="extension upper end")
        sub.add_argument("--format", choices=("json", "tsv"), default="json")
        sub.add_argument("--max-nodes", type=int, default=DEFAULT_NODE_BUDGET)
        sub.add_argument("--max-d", dest="max_gap", type=int, default=DEFAULT_MAX_GAP)
    return parser


class _UsageError(Exception):
    pass


def _parse_seed(text: str) -> Window:
    head, sep, tail = text.partition(":")
    if not sep or not tail or set(tail) - {"0", "1"}:
        raise _UsageError(f'seed must look like "START:BITS" with BITS over 0/1, got "{text}"')
    try:
        start = int(head, 10)
    except ValueError:
        raise _UsageError(f'seed start "{head}" is not an integer') from None
    return Window(start, tuple(int(c) for c in tail))


def _need(value, flag: str):
    if value is None:
        raise _UsageError(f"this command requires {flag}")
    return value


def _target_count(args, problem: ProblemFile) -> int:
    t = args.t if args.t is not None else problem.t
    if t is None:
        raise _UsageError('this command requires a target count: pass -t or put "t" in the file')
    if t < 0:
        raise _UsageError("t must be a nonnegative integer")
    return t


def _normalized(problem: ProblemFile):
    form, reflected = problem.augmented_form().normalized()
    return form, reflected


def _cmd_image(args, problem):
    report = diameter_report(problem.linear_form(), problem.set_tuple())
    image = sorted(image_repfn(problem.linear_form(), problem.set_tuple()).counts)
    out = {
        "g_min": report.g_min,
        "g_max": report.g_max,
        "diameter": report.diameter,
        "count_min": report.count_min,
        "count_max": report.count_max,
        "image": image,
    }
    return out, 0, f"image of {len(image)} values, diameter {report.diameter}"


def _cmd_repfn(args, problem):
    rep = image_repfn(problem.linear_form(), problem.set_tuple())
    out = {"total": rep.total(), "support": [[n, c] for n, c in rep.support()]}
    return out, 0, f"{rep.total()} tuples over {len(rep.counts)} values"


def _cmd_modrep(args, problem):
    m = _need(args.m, "-m")
    counts = modular_repfn(problem.linear_form(), problem.set_tuple(), m)
    return {"m": m, "counts": counts}, 0, f"residue counts mod {m}"


def _cmd_cyclotomy(args, problem):
    m = _need(args.m, "-m")
    t = _target_count(args, problem)
    holds, shift, reduced = check_condition(problem.linear_form(), problem.set_tuple(), m, t)
    out = {
        "verdict": holds,
        "m": m,
        "t": t,
        "L": shift,
        "coefficients": list(reduced.coeffs),
    }
    note = "condition holds" if holds else "condition fails"
    return out, 0 if holds else 1, f"{note} mod {m} at t = {t}"


def _cmd_check(args, problem):
    form, reflected = _normalized(problem)
    if problem.periodic is None:
        raise _UsageError('this command needs field "B" in the problem file')
    t = _target_count(args, problem)
    cert = check_t_complementing(form, problem.set_tuple(), problem.periodic, t)
    out = {
        "verdict": cert.verdict,
        "t": t,
        "period_checked": cert.period_checked,
        "reflected": reflected,
    }
    if cert.verdict:
        return out, 0, f"t-complementing over period {cert.period_checked}"
    violation = cert.first_violation
    n = -violation.n if reflected else violation.n
    out["violations"] = [{"n": n, "observed": violation.observed, "expected": violation.expected}]
    return out, 1, f"not t-complementing: count at {n} is {violation.observed}, expected {t}"


def _cmd_extend(args, problem):
    form, reflected = _normalized(problem)
    t = _target_count(args, problem)
    seed = _parse_seed(_need(args.seed, "--seed"))
    lo = _need(args.lo, "--from")
    hi = _need(args.hi, "--to")
    ctx = build_context(form, problem.set_tuple(), t)
    try:
        window = extend(ctx, seed, lo, hi)
    except InconsistentWindowError as exc:
        out = {"verdict": False, "inconsistent_at": exc.index, "reflected": reflected}
        return out, 1, f"no consistent bit at {exc.index}"
    bits = "".join(str(b) for b in window.bits)
    out = {"verdict": True, "start": window.start, "bits": bits, "reflected": reflected}
    return out, 0, f"extended to [{lo}, {hi}]"


def _cmd_period(args, problem):
    form, reflected = _normalized(problem)
    t = _target_count(args, problem)
    seed = _parse_seed(_need(args.seed, "--seed"))
    ctx = build_context(form, problem.set_tuple(), t)
    try:
        report = detect_period(ctx, seed, max_gap=args.max_gap)
    except InconsistentWindowError as exc:
        out = {"verdict": False, "inconsistent_at": exc.index, "reflected": reflected}
        return out, 1, f"no consistent bit at {exc.index}"
    cert = check_t_complementing(form, problem.set_tuple(), report.periodic_set, t)
    out = {
        "verdict": cert.verdict,
        "period": report.period,
        "bound": report.bound,
        "periodic_set": report.periodic_set.to_dict(),
        "preperiod_checked": report.preperiod_checked,
        "reflected": reflected,
    }
    if cert.verdict:
        return out, 0, f"verified complement of period {report.period}"
    violation = cert.first_violation
    n = -violation.n if reflected else violation.n
    out["violations"] = [{"n": n, "observed": violation.observed, "expected": violation.expected}]
    return out, 1, f"period {report.period} candidate fails at {n}"


def _cmd_solve(args, problem):
    form, reflected = _normalized(problem)
    radius = _need(args.N, "-N")
    if radius < 0:
        raise _UsageError("-N must be nonnegative")
    if problem.target is not None:
        target = problem.target
        if args.t is not None:
            raise _UsageError('pass either -t or field "f", not both')
    else:
        target = TargetFunction.constant(_target_count(args, problem))
    if reflected:
        target = TargetFunction(target.default, {-n: c for n, c in target.overrides.items()})
    from dataclasses import replace

    problem_window = replace(candidate_bound(form, problem.set_tuple(), radius), target=target)
    result = solve_window(problem_window, max_nodes=args.max_nodes)
    out = {
        "status": result.status.value,
        "nodes": result.nodes_explored,
        "N": radius,
        "candidate_lo": problem_window.candidate_lo,
        "candidate_hi": problem_window.candidate_hi,
        "reflected": reflected,
    }
    if result.status is SolveStatus.SOLVED:
        out["witness"] = list(result.witness)
        return out, 0, f"solved with {len(result.witness)} elements in {result.nodes_explored} nodes"
    if result.status is SolveStatus.UNSAT:
        return out, 1, f"unsatisfiable at N = {radius} ({result.nodes_explored} nodes)"
    return out, 2, f"node budget {args.max_nodes} exhausted"


def _cmd_stabilize(args, problem):
    form, reflected = _normalized(problem)
    t = _target_count(args, problem)
    max_n = args.N if args.N is not None else 8
    if max_n < 1:
        raise _UsageError("-N must be at least 1")
    result = stabilize(
        form, problem.set_tuple(), t, max_n, max_nodes=args.max_nodes, max_gap=args.max_gap
    )
    attempts = [{"N": a.N, "status": a.status, "detail": a.detail} for a in result.attempts]
    out: dict = {"verdict": result.found}
    if result.found:
        out["period"] = result.report.period
        out["bound"] = result.report.bound
        out["periodic_set"] = result.periodic_set.to_dict()
    out["attempts"] = attempts
    out["reflected"] = reflected
    if result.found:
        return out, 0, f"stabilized at period {result.report.period}"
    return out, 1, f"no verified complement within N <= {max_n}"


_HANDLERS = {
    "image": _cmd_image,
    "repfn": _cmd_repfn,
    "modrep": _cmd_modrep,
    "cyclotomy": _cmd_cyclotomy,
    "check": _cmd_check,
    "extend": _cmd_extend,
    "period": _cmd_period,
    "solve": _cmd_solve,
    "stabilize": _cmd_stabilize,
}


def _emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
        return
    lines = []
    for key, value in report.items():
        if isinstance(value, bool):
            rendered = "true" if value else "false"
        elif isinstance(value, str):
            rendered = value
        elif isinstance(value, int):
            rendered = str(value)
        else:
            rendered = json.dumps(value, separators=(",", ":"))
        lines.append(f"{key}\t{rendered}")
    sys.stdout.write("\n".join(lines) + "\n")


def dispatch(args) -> int:
    try:
        text = Path(args.input).read_text()
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
        return 2
    try:
        problem = parse_problem(text)
        report, code, note = _HANDLERS[args.command](args, problem)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ProblemFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (LinformError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(report, args.format)
    if note:
        print(note, file=sys.stderr)
    return code


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return dispatch(args)


def console_entry() -> None:
    sys.exit(main())
