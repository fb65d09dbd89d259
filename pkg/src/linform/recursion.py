"""Window recursion reconstructing the membership sequence of a complement.

For a normalized augmented form (v >= 1) write g_min, g_max for the extreme
values of the finite image of the base form, count_min / count_max for how
many tuples achieve them, and gap = floor((g_max - g_min) / v). If B is any
set whose augmented count is identically t, sampling that count along the
progressions v*n + g_min and v*n + g_max yields two identities for the
membership bit of B:

    count_min * bit(n) = t - sum over forward offsets k of bit(n - k)
    count_max * bit(n) = t - sum over backward offsets k of bit(n + k)

The offsets are the integer quotients (value - g_min)/v, respectively
(g_max - value)/v, over non-extremal image values, each counted with the
multiplicity of the value; non-integer quotients contribute nothing since
the membership bit vanishes off the integers. Every offset lies in
[1, gap], so any gap consecutive bits determine the whole two-sided
sequence, and because only 2^gap distinct gap-bit states exist, the forward
orbit revisits a state within 2^gap + 1 steps. That repeat distance bounds
the period: any complement membership sequence is purely periodic with
period at most 2^gap.

Extension alone is not verification. The two identities only express that
the count equals t along the residues g_min and g_max mod v; for v > 1 the
remaining residues are unconstrained, so every candidate produced here must
still pass check_t_complementing before being called a complement.

Everything operates on immutable windows and contexts, so separate
extensions never share state.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateGapError, GapTooLargeError, InconsistentWindowError
from .forms import AugmentedForm, SetTuple, image_repfn
from .periodic import PeriodicSet

DEFAULT_MAX_GAP = 24


@dataclass(frozen=True)
class Window:
    """Consecutive membership bits: bits[i] is the bit of start + i."""

    start: int
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "bits", tuple(self.bits))
        if not self.bits:
            raise ValueError("a window holds at least one bit")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("window bits must be 0 or 1")

    @property
    def end(self) -> int:
        return self.start + len(self.bits) - 1

    def bit(self, n: int) -> int:
        if not self.start <= n <= self.end:
            raise ValueError(f"index {n} outside window [{self.start}, {self.end}]")
        return self.bits[n - self.start]


@dataclass(frozen=True)
class RecursionContext:
    """Everything the two step identities need, precomputed from (form, sets, t)."""

    form: AugmentedForm
    sets: SetTuple
    t: int
    g_min: int
    g_max: int
    count_min: int
    count_max: int
    gap: int
    forward_offsets: tuple[tuple[int, int], ...]
    backward_offsets: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class PeriodReport:
    period: int
    bound: int
    periodic_set: PeriodicSet
    preperiod_checked: bool


def build_context(form: AugmentedForm, sets: SetTuple, t: int) -> RecursionContext:
    """Precompute extremes, gap, and offset multisets for the step identities."""
    if not form.is_normalized:
        raise ValueError("the recursion requires a normalized form (v >= 1)")
    if t < 0:
        raise ValueError("t must be a nonnegative integer")
    rep = image_repfn(form.base, sets)
    g_min = min(rep.counts)
    g_max = max(rep.counts)
    v = form.v
    gap = (g_max - g_min) // v
    forward: dict[int, int] = {}
    backward: dict[int, int] = {}
    for value, mult in rep.counts.items():
        if value != g_min and (value - g_min) % v == 0:
            offset = (value - g_min) // v
            forward[offset] = forward.get(offset, 0) + mult
        if value != g_max and (g_max - value) % v == 0:
            offset = (g_max - value) // v
            backward[offset] = backward.get(offset, 0) + mult
    return RecursionContext(
        form=form,
        sets=sets,
        t=t,
        g_min=g_min,
        g_max=g_max,
        count_min=rep.counts[g_min],
        count_max=rep.counts[g_max],
        gap=gap,
        forward_offsets=tuple(sorted(forward.items())),
        backward_offsets=tuple(sorted(backward.items())),
    )


def _as_bit(rhs: int, count: int, index: int) -> int:
    # count * bit must equal rhs with bit in {0, 1}; anything else is a dead end
    if rhs == 0:
        return 0
    if rhs == count:
        return 1
    raise InconsistentWindowError(index)


def forward_step(ctx: RecursionContext, window: Window) -> int:
    """Bit at window.end + 1 from the g_min identity; needs the last gap bits."""
    if ctx.gap == 0:
        raise DegenerateGapError("gap is zero: the window recursion has no steps")
    if len(window.bits) < ctx.gap:
        raise ValueError(f"window holds {len(window.bits)} bits, recursion needs {ctx.gap}")
    n = window.end + 1
    rhs = ctx.t
    for offset, mult in ctx.forward_offsets:
        rhs -= mult * window.bit(n - offset)
    return _as_bit(rhs, ctx.count_min, n)


def backward_step(ctx: RecursionContext, window: Window) -> int:
    """Bit at window.start - 1 from the g_max identity; needs the first gap bits."""
    if ctx.gap == 0:
        raise DegenerateGapError("gap is zero: the window recursion has no steps")
    if len(window.bits) < ctx.gap:
        raise ValueError(f"window holds {len(window.bits)} bits, recursion needs {ctx.gap}")
    n = window.start - 1
    rhs = ctx.t
    for offset, mult in ctx.backward_offsets:
        rhs -= mult * window.bit(n + offset)
    return _as_bit(rhs, ctx.count_max, n)


def extend(ctx: RecursionContext, seed: Window, lo: int, hi: int) -> Window:
    """Deterministically extend the seed to cover [lo, hi].

    [lo, hi] must contain the seed range. Raises InconsistentWindowError at
    the first index where no bit satisfies the relevant identity.
    """
    if ctx.gap == 0:
        raise DegenerateGapError("gap is zero: the window recursion has no steps")
    if len(seed.bits) < ctx.gap:
        raise ValueError(f"seed holds {len(seed.bits)} bits, recursion needs {ctx.gap}")
    if lo > seed.start or hi < seed.end:
        raise ValueError("[lo, hi] must contain the seed range")
    base = seed.start
    bits = list(seed.bits)
    for n in range(seed.end + 1, hi + 1):
        rhs = ctx.t
        for offset, mult in ctx.forward_offsets:
            rhs -= mult * bits[n - offset - base]
        bits.append(_as_bit(rhs, ctx.count_min, n))

    below: list[int] = []  # below[i] is the bit of base - 1 - i

    def bit_at(x: int) -> int:
        return bits[x - base] if x >= base else below[base - 1 - x]

    for n in range(base - 1, lo - 1, -1):
        rhs = ctx.t
        for offset, mult in ctx.backward_offsets:
            rhs -= mult * bit_at(n + offset)
        below.append(_as_bit(rhs, ctx.count_max, n))
    full = list(reversed(below)) + bits
    return Window(lo, tuple(full[: hi - lo + 1]))


def detect_period(
    ctx: RecursionContext, seed: Window, max_gap: int = DEFAULT_MAX_GAP
) -> PeriodReport:
    """Extend forward until a gap-bit state repeats, then confirm pure periodicity.

    The repeat distance p satisfies p <= 2^gap by pigeonhole. The window is
    then extended p positions backward and every computed index n must agree
    with its translate n + p; a disagreement means the orbit is only
    eventually periodic, which no t-complementing set allows, so it raises
    InconsistentWindowError at the offending index. The returned set is
    normalized and its minimal period divides p.
    """
    gap = ctx.gap
    if gap == 0:
        raise DegenerateGapError("gap is zero: the window recursion has no steps")
    if gap > max_gap:
        raise GapTooLargeError(f"gap {gap} exceeds the configured limit {max_gap}")
    if len(seed.bits) < gap:
        raise ValueError(f"seed holds {len(seed.bits)} bits, recursion needs {gap}")

    base = seed.start
    bits = list(seed.bits)
    forward = ctx.forward_offsets
    t = ctx.t
    count_min = ctx.count_min

    # Encode the state at j, the bits of [j, j + gap), as an integer with
    # bit i of the integer holding the membership bit of j + i.
    state = 0
    for i in range(gap):
        state |= bits[i] << i
    seen = {state: base}
    j = base
    while True:
        needed = j + gap  # rolling to the state at j + 1 consumes this index
        while needed - base >= len(bits):
            n = base + len(bits)
            rhs = t
            for offset, mult in forward:
                rhs -= mult * bits[n - offset - base]
            bits.append(_as_bit(rhs, count_min, n))
        state = (state >> 1) | (bits[needed - base] << (gap - 1))
        j += 1
        if state in seen:
            first, repeat = seen[state], j
            break
        seen[state] = j
    period_len = repeat - first

    below: list[int] = []

    def bit_at(x: int) -> int:
        return bits[x - base] if x >= base else below[base - 1 - x]

    for n in range(base - 1, base - period_len - 1, -1):
        rhs = t
        for offset, mult in ctx.backward_offsets:
            rhs -= mult * bit_at(n + offset)
        below.append(_as_bit(rhs, ctx.count_max, n))

    top = base + len(bits) - 1
    for n in range(base - period_len, top - period_len + 1):
        if bit_at(n) != bit_at(n + period_len):
            raise InconsistentWindowError(
                n, f"eventually periodic but not purely periodic: bit({n}) != bit({n + period_len})"
            )

    residues = sorted({(base + i) % period_len for i in range(period_len) if bits[i]})
    pset = PeriodicSet(period_len, tuple(residues)).normalize()
    return PeriodReport(
        period=pset.modulus, bound=1 << gap, periodic_set=pset, preperiod_checked=True
    )
