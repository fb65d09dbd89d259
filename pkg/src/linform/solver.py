"""Finite-window inverse problems: which sets B realize prescribed counts.

Given a normalized augmented form, a set tuple, and a target function f, the
window problem at radius N asks for a finite set B whose augmented count
equals f(n) for every |n| <= N. Any element b of a solution contributes at
least one representation with |psi(a) + v*b| <= N + g_star where g_star
bounds |psi| on the tuple, so all solutions live inside the candidate
interval [-(N + g_star)/v, (N + g_star)/v] rounded toward zero.

solve_window runs a canonical depth-first search over candidate membership:
candidates ascend, the include branch is tried before the exclude branch,
a running count above a finite f(n) prunes immediately, and once every
undecided candidate lies too high to reach a position n, the count at n is
forced and checked exactly. Candidates that cannot reach the window at all
are excluded outright, so reported witnesses carry no idle elements. The
search is exhaustive: Unsat is a proof, never a timeout; running out of the
node budget reports ResourceLimit instead. Every witness is re-verified by
direct finite counting before being returned.

stabilize chains the pieces: it solves growing windows with the constant-t
target, feeds each witness's central bits to the period detector, and
accepts the first candidate set that passes full verification.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

from .checked import checked_add, checked_mul, checked_sub
from .errors import InconsistentWindowError
from .forms import AugmentedForm, SetTuple, augmented_repfn_finite, diameter_report, image_repfn, modular_repfn
from .periodic import PeriodicSet, check_t_complementing
from .recursion import DEFAULT_MAX_GAP, PeriodReport, Window, build_context, detect_period

DEFAULT_NODE_BUDGET = 10_000_000


@dataclass(frozen=True)
class TargetFunction:
    """Required count per integer: overrides win, otherwise the default.

    A value of None means unconstrained there; finite values must be met
    exactly inside the window.
    """

    default: int | None
    overrides: dict[int, int]

    def __post_init__(self) -> None:
        if self.default is not None and self.default < 0:
            raise ValueError("default target must be a nonnegative integer")
        for n, value in self.overrides.items():
            if value < 0:
                raise ValueError(f"target override at {n} must be a nonnegative integer")

    @classmethod
    def constant(cls, t: int) -> TargetFunction:
        return cls(default=t, overrides={})

    def at(self, n: int) -> int | None:
        return self.overrides.get(n, self.default)


@dataclass(frozen=True)
class WindowProblem:
    form: AugmentedForm
    sets: SetTuple
    target: TargetFunction | None
    N: int
    g_star: int
    candidate_lo: int
    candidate_hi: int


class SolveStatus(enum.Enum):
    SOLVED = "solved"
    UNSAT = "unsat"
    RESOURCE_LIMIT = "resource_limit"


@dataclass(frozen=True)
class SolveResult:
    status: SolveStatus
    witness: tuple[int, ...] | None
    nodes_explored: int


@dataclass(frozen=True)
class StabilizeAttempt:
    N: int
    status: str
    detail: str = ""


@dataclass(frozen=True)
class StabilizeResult:
    """Either a verified periodic complement or the per-N record of why not."""

    periodic_set: PeriodicSet | None
    report: PeriodReport | None
    attempts: tuple[StabilizeAttempt, ...]

    @property
    def found(self) -> bool:
        return self.periodic_set is not None


def candidate_bound(form: AugmentedForm, sets: SetTuple, N: int) -> WindowProblem:
    """Problem skeleton with the candidate interval for radius N; target left unset."""
    if not form.is_normalized:
        raise ValueError("window problems require a normalized form (v >= 1)")
    if N < 0:
        raise ValueError("window radius N must be nonnegative")
    report = diameter_report(form.base, sets)
    g_star = max(abs(report.g_min), abs(report.g_max))
    radius = checked_add(N, g_star) // form.v
    return WindowProblem(
        form=form,
        sets=sets,
        target=None,
        N=N,
        g_star=g_star,
        candidate_lo=-radius,
        candidate_hi=radius,
    )


class _BudgetExhausted(Exception):
    pass


def solve_window(problem: WindowProblem, max_nodes: int = DEFAULT_NODE_BUDGET) -> SolveResult:
    """Canonical DFS for a finite set matching the target on [-N, N]."""
    if problem.target is None:
        raise ValueError("the problem has no target function; attach one first")
    if max_nodes < 1:
        raise ValueError("node budget must be positive")
    form, sets, target, N = problem.form, problem.sets, problem.target, problem.N
    v = form.v
    support = image_repfn(form.base, sets).support()
    g_min, g_max = support[0][0], support[-1][0]

    # Only candidates with a representation landing inside the window matter;
    # the rest of the candidate interval is canonically excluded.
    contrib_lo = max(problem.candidate_lo, -((N + g_max) // v))
    contrib_hi = min(problem.candidate_hi, (N - g_min) // v)

    required = [target.at(n) for n in range(-N, N + 1)]
    counts = [0] * (2 * N + 1)
    nodes = 0

    def advance(frontier: int, limit: int) -> int | None:
        # Verify every newly finalized position; None signals a violation.
        stop = min(limit, N)
        while frontier < stop:
            frontier += 1
            need = required[frontier + N]
            if need is not None and counts[frontier + N] != need:
                return None
        return frontier

    if contrib_lo > contrib_hi:
        frontier = advance(-N - 1, N)
        if frontier is None:
            return SolveResult(SolveStatus.UNSAT, None, 0)
        return SolveResult(SolveStatus.SOLVED, (), 0)

    candidates = list(range(contrib_lo, contrib_hi + 1))
    contributions: list[list[tuple[int, int]]] = []
    for b in candidates:
        shifted = []
        vb = checked_mul(v, b)
        for value, mult in support:
            n = checked_add(value, vb)
            if -N <= n <= N:
                shifted.append((n + N, mult))
        contributions.append(shifted)

    chosen: list[int] = []
    witness: list[int] | None = None

    def dfs(i: int, frontier: int) -> bool:
        nonlocal nodes, witness
        if i == len(candidates):
            final = advance(frontier, N)
            if final is None:
                return False
            witness = list(chosen)
            return True
        threshold = g_min + v * candidates[i] + v - 1 if i + 1 < len(candidates) else N

        nodes += 1
        if nodes > max_nodes:
            raise _BudgetExhausted
        placed = 0
        feasible = True
        for index, mult in contributions[i]:
            counts[index] += mult
            placed += 1
            need = required[index]
            if need is not None and counts[index] > need:
                feasible = False
                break
        if feasible:
            after = advance(frontier, threshold)
            if after is not None:
                chosen.append(candidates[i])
                if dfs(i + 1, after):
                    return True
                chosen.pop()
        for index, mult in contributions[i][:placed]:
            counts[index] -= mult

        nodes += 1
        if nodes > max_nodes:
            raise _BudgetExhausted
        after = advance(frontier, threshold)
        if after is not None and dfs(i + 1, after):
            return True
        return False

    try:
        solved = dfs(0, -N - 1)
    except _BudgetExhausted:
        return SolveResult(SolveStatus.RESOURCE_LIMIT, None, nodes)
    if not solved:
        return SolveResult(SolveStatus.UNSAT, None, nodes)
    assert witness is not None
    for n in range(-N, N + 1):
        need = target.at(n)
        if need is not None and augmented_repfn_finite(form, sets, witness, n) != need:
            raise AssertionError(f"witness failed re-verification at {n}")
    return SolveResult(SolveStatus.SOLVED, tuple(witness), nodes)


def recenter(form: AugmentedForm, members: tuple[int, ...], c: int) -> tuple[int, ...]:
    """Translate a finite witness by -c; only meaningful when v = 1.

    For v = 1 shifting B by -c shifts the count function by -c as well, so
    recentered window solutions stay solutions of the recentered target. No
    such clean translation exists for v > 1, hence the rejection.
    """
    if form.v != 1:
        raise ValueError("recentering is only defined for v = 1")
    return tuple(sorted(checked_sub(b, c) for b in members))


def _degenerate_complement(form: AugmentedForm, sets: SetTuple, t: int) -> PeriodicSet | None:
    # Gap zero forces a constant membership bit: the only infinite candidate
    # is B = Z, which works exactly when every residue class mod v carries
    # t representations.
    if t >= 1 and all(c == t for c in modular_repfn(form.base, sets, form.v)):
        return PeriodicSet(1, (0,))
    return None


def stabilize(
    form: AugmentedForm,
    sets: SetTuple,
    t: int,
    max_n: int,
    max_nodes: int = DEFAULT_NODE_BUDGET,
    max_gap: int = DEFAULT_MAX_GAP,
) -> StabilizeResult:
    """Search radii N = 1..max_n for a window witness that settles into a verified period."""
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    ctx = build_context(form, sets, t)
    if ctx.gap == 0:
        candidate = _degenerate_complement(form, sets, t)
        if candidate is not None:
            cert = check_t_complementing(form, sets, candidate, t)
            if cert.verdict:
                report = PeriodReport(
                    period=1, bound=1, periodic_set=candidate, preperiod_checked=False
                )
                attempt = StabilizeAttempt(0, "degenerate", "constant membership, B = Z verified")
                return StabilizeResult(candidate, report, (attempt,))
        attempt = StabilizeAttempt(0, "degenerate", "constant membership admits no infinite B")
        return StabilizeResult(None, None, (attempt,))

    attempts: list[StabilizeAttempt] = []
    for radius in range(1, max_n + 1):
        problem = replace(
            candidate_bound(form, sets, radius), target=TargetFunction.constant(t)
        )
        result = solve_window(problem, max_nodes=max_nodes)
        if result.status is SolveStatus.UNSAT:
            # Window constraints only grow with N, so no larger radius can succeed.
            attempts.append(StabilizeAttempt(radius, "unsat", "no finite witness; larger N cannot help"))
            break
        if result.status is SolveStatus.RESOURCE_LIMIT:
            attempts.append(StabilizeAttempt(radius, "resource_limit", f"budget of {max_nodes} nodes exhausted"))
            break
        assert result.witness is not None
        members = frozenset(result.witness)
        start = -(ctx.gap // 2)
        seed = Window(start, tuple(1 if start + i in members else 0 for i in range(ctx.gap)))
        try:
            report = detect_period(ctx, seed, max_gap=max_gap)
        except InconsistentWindowError as exc:
            attempts.append(StabilizeAttempt(radius, "inconsistent", str(exc)))
            continue
        cert = check_t_complementing(form, sets, report.periodic_set, t)
        if cert.verdict:
            attempts.append(StabilizeAttempt(radius, "verified", f"period {report.period}"))
            return StabilizeResult(report.periodic_set, report, tuple(attempts))
        assert cert.first_violation is not None
        attempts.append(
            StabilizeAttempt(
                radius,
                "rejected",
                f"candidate period {report.period} fails at n = {cert.first_violation.n}",
            )
        )
    return StabilizeResult(None, None, tuple(attempts))
