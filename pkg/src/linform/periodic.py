"""Periodic integer sets as residue classes, and complement verification.

A periodic set is stored as a modulus m >= 1 together with the sorted
residues it occupies in [0, m). The same set has one representation per
multiple of its minimal period; normalize() returns the minimal one.

check_t_complementing decides whether a pair (sets, B) represents every
integer exactly t times under an augmented form. The augmented count is
periodic with period v*m (shifting n by v*m shifts the required b by m,
which membership in B cannot see), so scanning one full window of length
v*m decides the whole line. The window is scanned outward from zero so a
failure is reported at the violating n of least absolute value.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple

from .checked import checked_mul, ensure_int64
from .forms import AugmentedForm, SetTuple, _augmented_count, image_repfn


@dataclass(frozen=True)
class PeriodicSet:
    """The set {r + k*m : r in residues, k in Z}; empty residues mean the empty set."""

    modulus: int
    residues: tuple[int, ...]

    def __post_init__(self) -> None:
        ensure_int64(self.modulus, "modulus")
        if self.modulus < 1:
            raise ValueError("modulus must be a positive integer")
        ordered = sorted(self.residues)
        for r in ordered:
            ensure_int64(r, "residue")
            if not 0 <= r < self.modulus:
                raise ValueError(f"residue out of range: {r} not in [0, {self.modulus})")
        for a, b in zip(ordered, ordered[1:]):
            if a == b:
                raise ValueError(f"duplicate residue {a}")
        object.__setattr__(self, "residues", tuple(ordered))

    @cached_property
    def _residue_set(self) -> frozenset[int]:
        return frozenset(self.residues)

    def member(self, n: int) -> bool:
        return n % self.modulus in self._residue_set

    def normalize(self) -> PeriodicSet:
        """Smallest-modulus representation of the same set.

        A divisor m' of m works exactly when the residue set is invariant
        under adding m' mod m; divisors are tried in ascending order.
        """
        m = self.modulus
        for candidate in range(1, m + 1):
            if m % candidate != 0:
                continue
            if all((r + candidate) % m in self._residue_set for r in self.residues):
                folded = sorted({r % candidate for r in self.residues})
                return PeriodicSet(candidate, tuple(folded))
        raise AssertionError("unreachable: m itself always folds")

    def to_dict(self) -> dict:
        return {"modulus": self.modulus, "residues": list(self.residues)}

    @classmethod
    def from_dict(cls, data: dict) -> PeriodicSet:
        return cls(data["modulus"], tuple(data["residues"]))


class Violation(NamedTuple):
    n: int
    observed: int
    expected: int


@dataclass(frozen=True)
class ComplementCertificate:
    verdict: bool
    period_checked: int
    first_violation: Violation | None

    def __post_init__(self) -> None:
        if self.period_checked < 1:
            raise ValueError("period_checked must be positive")
        if self.verdict == (self.first_violation is not None):
            raise ValueError("verdict must be true exactly when no violation was found")


def _outward_from_zero() -> Iterator[int]:
    yield 0
    k = 1
    while True:
        yield k
        yield -k
        k += 1


def check_t_complementing(
    form: AugmentedForm, sets: SetTuple, periodic: PeriodicSet, t: int
) -> ComplementCertificate:
    """Decide whether every integer has exactly t representations psi(a) + v*b, b in B."""
    if not form.is_normalized:
        raise ValueError("verification requires a normalized form (v >= 1)")
    if t < 0:
        raise ValueError("t must be a nonnegative integer")
    period = checked_mul(form.v, periodic.modulus)
    support = image_repfn(form.base, sets).support()
    seen: set[int] = set()
    for n in _outward_from_zero():
        residue = n % period
        if residue in seen:
            continue
        seen.add(residue)
        observed = _augmented_count(support, form.v, periodic.member, n)
        if observed != t:
            return ComplementCertificate(False, period, Violation(n, observed, t))
        if len(seen) == period:
            return ComplementCertificate(True, period, None)
    raise AssertionError("unreachable")
