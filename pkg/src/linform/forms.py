"""Linear forms over integer set tuples and their representation functions.

A form u1*x1 + ... + uh*xh with nonzero integer coefficients, applied
coordinatewise to a tuple of finite integer sets, has a finite image. The
representation function records how many coordinate tuples land on each
value; everything here is exact enumeration over the Cartesian product.

The augmented variants append a term v*y whose variable ranges over a
further set of integers, periodic or finite, and count representations
n = u1*a1 + ... + uh*ah + v*b. They require v >= 1; a form with v < 0 is
normalized by negating every coefficient, which reflects the count,
R(n) -> R(-n), and callers surface that reflection rather than hide it.

All arithmetic is checked signed 64-bit: a computation that leaves the
range raises IntegerOverflowError, never wraps.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable, Iterable, Iterator, Sequence

from .checked import checked_add, checked_mul, checked_neg, checked_sub, ensure_int64

if TYPE_CHECKING:
    from .periodic import PeriodicSet


@dataclass(frozen=True)
class LinearForm:
    """Coefficient vector of a form u1*x1 + ... + uh*xh; every ui is a nonzero integer."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not self.coeffs:
            raise ValueError("a linear form needs at least one coefficient")
        for i, u in enumerate(self.coeffs):
            ensure_int64(u, f"coefficient u[{i}]")
            if u == 0:
                raise ValueError(f"zero coefficient u[{i}]")

    @property
    def h(self) -> int:
        return len(self.coeffs)

    def negate(self) -> LinearForm:
        return LinearForm(tuple(checked_neg(u) for u in self.coeffs))


@dataclass(frozen=True)
class AugmentedForm:
    """A linear form extended by one more term v*y with v != 0."""

    base: LinearForm
    v: int

    def __post_init__(self) -> None:
        ensure_int64(self.v, "coefficient v")
        if self.v == 0:
            raise ValueError("zero coefficient v")

    @property
    def is_normalized(self) -> bool:
        return self.v >= 1

    def normalized(self) -> tuple[AugmentedForm, bool]:
        """Return an equivalent form with v >= 1 and whether a reflection happened.

        Negating every coefficient turns counts of n into counts of -n, so a
        True second component means results must be read through n -> -n.
        """
        if self.v >= 1:
            return self, False
        return AugmentedForm(self.base.negate(), checked_neg(self.v)), True


@dataclass(frozen=True)
class SetTuple:
    """One finite, nonempty, duplicate-free integer set per form coordinate."""

    sets: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        canonical = []
        for i, raw in enumerate(self.sets):
            elements = sorted(raw)
            if not elements:
                raise ValueError(f"set A[{i}] must be nonempty")
            for x in elements:
                ensure_int64(x, f"element of A[{i}]")
            for a, b in zip(elements, elements[1:]):
                if a == b:
                    raise ValueError(f"duplicate element in A[{i}]")
            canonical.append(tuple(elements))
        if not canonical:
            raise ValueError("a set tuple needs at least one set")
        object.__setattr__(self, "sets", tuple(canonical))

    def __len__(self) -> int:
        return len(self.sets)

    def product_size(self) -> int:
        return math.prod(len(s) for s in self.sets)

    def iter_tuples(self) -> Iterator[tuple[int, ...]]:
        return itertools.product(*self.sets)


@dataclass(frozen=True)
class RepFunction:
    """Finitely supported count function: value -> number of representing tuples."""

    counts: dict[int, int]

    def __post_init__(self) -> None:
        for value, count in self.counts.items():
            if count < 1:
                raise ValueError(f"representation count for {value} must be positive")

    def __getitem__(self, n: int) -> int:
        return self.counts.get(n, 0)

    def support(self) -> list[tuple[int, int]]:
        return sorted(self.counts.items())

    def total(self) -> int:
        return sum(self.counts.values())


@dataclass(frozen=True)
class DiameterReport:
    """Extremes of a finite image and how many tuples achieve them."""

    g_min: int
    g_max: int
    diameter: int
    count_min: int
    count_max: int

    def __post_init__(self) -> None:
        if self.diameter != self.g_max - self.g_min or self.diameter < 0:
            raise ValueError("diameter must equal g_max - g_min and be nonnegative")
        if self.count_min < 1 or self.count_max < 1:
            raise ValueError("extreme values are achieved by at least one tuple")


def eval_form(form: LinearForm, values: Sequence[int]) -> int:
    """Evaluate u1*x1 + ... + uh*xh exactly, rejecting overflow."""
    if len(values) != form.h:
        raise ValueError(f"form has {form.h} coordinates, got {len(values)} values")
    total = 0
    for u, x in zip(form.coeffs, values):
        total = checked_add(total, checked_mul(u, ensure_int64(x, "argument")))
    return total


def image_repfn(form: LinearForm, sets: SetTuple) -> RepFunction:
    """Representation function of the form over the full Cartesian product."""
    if len(sets) != form.h:
        raise ValueError(f"form has {form.h} coordinates, got {len(sets)} sets")
    counts: dict[int, int] = {}
    for combo in sets.iter_tuples():
        value = eval_form(form, combo)
        counts[value] = counts.get(value, 0) + 1
    return RepFunction(counts)


def diameter_report(form: LinearForm, sets: SetTuple) -> DiameterReport:
    rep = image_repfn(form, sets)
    g_min = min(rep.counts)
    g_max = max(rep.counts)
    return DiameterReport(
        g_min=g_min,
        g_max=g_max,
        diameter=checked_sub(g_max, g_min),
        count_min=rep.counts[g_min],
        count_max=rep.counts[g_max],
    )


def modular_repfn(form: LinearForm, sets: SetTuple, m: int) -> list[int]:
    """Fold the representation function into residue classes mod m."""
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ValueError("modulus m must be a positive integer")
    folded = [0] * m
    for value, count in image_repfn(form, sets).counts.items():
        folded[value % m] += count
    return folded


def _augmented_count(
    support: Iterable[tuple[int, int]], v: int, member: Callable[[int], bool], n: int
) -> int:
    """Count tuples a with v | n - psi(a) and (n - psi(a)) / v a member.

    Works for any nonzero v: Python's floor division is exact whenever the
    remainder test passes, regardless of sign.
    """
    total = 0
    for value, mult in support:
        delta = checked_sub(n, value)
        if delta % v == 0 and member(delta // v):
            total += mult
    return total


def augmented_repfn(form: AugmentedForm, sets: SetTuple, periodic: "PeriodicSet", n: int) -> int:
    """Count representations n = psi(a) + v*b with b in a periodic set.

    Requires a normalized form (v >= 1); normalize first and read counts
    through the reflection if v was negative.
    """
    if not form.is_normalized:
        raise ValueError("augmented counting requires a normalized form (v >= 1)")
    ensure_int64(n, "n")
    support = image_repfn(form.base, sets).counts.items()
    return _augmented_count(support, form.v, periodic.member, n)


def augmented_repfn_finite(
    form: AugmentedForm, sets: SetTuple, members: Iterable[int], n: int
) -> int:
    """Count representations n = psi(a) + v*b with b in a finite set; any v != 0."""
    ensure_int64(n, "n")
    finite = frozenset(members)
    support = image_repfn(form.base, sets).counts.items()
    return _augmented_count(support, form.v, finite.__contains__, n)
