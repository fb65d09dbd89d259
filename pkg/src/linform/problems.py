"""Strict problem-file schema with positional error reporting.

A problem document is a single JSON object with fields u (coefficients),
and A (one set per coefficient), plus optional v, B (periodic set), t, and
f (target function). Unknown fields, wrong shapes, zero coefficients,
duplicates, and out-of-range integers are all rejected with messages that
name the offending position. Parsing and printing round-trip exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .checked import INT64_MAX, INT64_MIN
from .errors import ProblemFormatError
from .forms import AugmentedForm, LinearForm, SetTuple
from .periodic import PeriodicSet
from .solver import TargetFunction

_ALLOWED_KEYS = {"u", "v", "A", "B", "t", "f"}


def _as_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ProblemFormatError(f"{what} must be an integer")
    if not INT64_MIN <= value <= INT64_MAX:
        raise ProblemFormatError(f"{what} is outside the signed 64-bit range")
    return value


@dataclass(frozen=True)
class ProblemFile:
    u: tuple[int, ...]
    sets: tuple[tuple[int, ...], ...]
    v: int | None = None
    periodic: PeriodicSet | None = None
    t: int | None = None
    target: TargetFunction | None = None

    def linear_form(self) -> LinearForm:
        return LinearForm(self.u)

    def set_tuple(self) -> SetTuple:
        return SetTuple(self.sets)

    def augmented_form(self) -> AugmentedForm:
        if self.v is None:
            raise ProblemFormatError('this command needs field "v" in the problem file')
        return AugmentedForm(self.linear_form(), self.v)


def parse_problem(text: str) -> ProblemFile:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemFormatError(f"malformed JSON: {exc}") from exc
    return parse_problem_dict(document)


def parse_problem_dict(document) -> ProblemFile:
    if not isinstance(document, dict):
        raise ProblemFormatError("the problem document must be a JSON object")
    unknown = set(document) - _ALLOWED_KEYS
    if unknown:
        raise ProblemFormatError(f'unknown field "{sorted(unknown)[0]}"')

    raw_u = document.get("u")
    if not isinstance(raw_u, list) or not raw_u:
        raise ProblemFormatError('"u" must be a nonempty array of integers')
    u = []
    for i, value in enumerate(raw_u):
        coeff = _as_int(value, f"u[{i}]")
        if coeff == 0:
            raise ProblemFormatError(f"zero coefficient u[{i}]")
        u.append(coeff)

    raw_sets = document.get("A")
    if not isinstance(raw_sets, list) or not raw_sets:
        raise ProblemFormatError('"A" must be a nonempty array of integer arrays')
    if len(raw_sets) != len(u):
        raise ProblemFormatError(
            f'"A" holds {len(raw_sets)} sets but "u" has {len(u)} coefficients'
        )
    sets = []
    for i, raw in enumerate(raw_sets):
        if not isinstance(raw, list) or not raw:
            raise ProblemFormatError(f"A[{i}] must be a nonempty array of integers")
        elements = [_as_int(x, f"element of A[{i}]") for x in raw]
        if len(set(elements)) != len(elements):
            raise ProblemFormatError(f"duplicate element in A[{i}]")
        sets.append(tuple(sorted(elements)))

    v = None
    if "v" in document:
        v = _as_int(document["v"], "v")
        if v == 0:
            raise ProblemFormatError("zero coefficient v")

    periodic = None
    if "B" in document:
        raw_b = document["B"]
        if not isinstance(raw_b, dict) or set(raw_b) != {"modulus", "residues"}:
            raise ProblemFormatError('"B" must be an object with fields "modulus" and "residues"')
        modulus = _as_int(raw_b["modulus"], "B.modulus")
        if modulus < 1:
            raise ProblemFormatError("B.modulus must be a positive integer")
        if not isinstance(raw_b["residues"], list):
            raise ProblemFormatError("B.residues must be an array of integers")
        residues = [_as_int(r, "residue of B") for r in raw_b["residues"]]
        for r in residues:
            if not 0 <= r < modulus:
                raise ProblemFormatError(f"residue out of range in B: {r}")
        if len(set(residues)) != len(residues):
            raise ProblemFormatError("duplicate residue in B")
        periodic = PeriodicSet(modulus, tuple(sorted(residues)))

    t = None
    if "t" in document:
        t = _as_int(document["t"], "t")
        if t < 0:
            raise ProblemFormatError("t must be a nonnegative integer")

    target = None
    if "f" in document:
        raw_f = document["f"]
        if not isinstance(raw_f, dict) or not set(raw_f) <= {"default", "overrides"}:
            raise ProblemFormatError(
                '"f" must be an object with fields "default" and optionally "overrides"'
            )
        if "default" not in raw_f:
            raise ProblemFormatError('"f" needs a "default" value')
        raw_default = raw_f["default"]
        if raw_default is None or raw_default == "inf":
            default = None
        else:
            default = _as_int(raw_default, "f.default")
            if default < 0:
                raise ProblemFormatError("f.default must be nonnegative")
        overrides: dict[int, int] = {}
        raw_overrides = raw_f.get("overrides", {})
        if not isinstance(raw_overrides, dict):
            raise ProblemFormatError("f.overrides must be an object")
        for key, value in raw_overrides.items():
            try:
                n = int(key, 10)
            except (TypeError, ValueError):
                raise ProblemFormatError(f'f.overrides key "{key}" must spell an integer') from None
            _as_int(n, "f.overrides key")
            count = _as_int(value, f"f.overrides[{key}]")
            if count < 0:
                raise ProblemFormatError(f"f.overrides[{key}] must be nonnegative")
            overrides[n] = count
        if default is None and not overrides:
            raise ProblemFormatError('f with default "inf" must override at least one value')
        target = TargetFunction(default=default, overrides=overrides)

    return ProblemFile(u=tuple(u), sets=tuple(sets), v=v, periodic=periodic, t=t, target=target)


def problem_to_dict(problem: ProblemFile) -> dict:
    document: dict = {"u": list(problem.u), "A": [list(s) for s in problem.sets]}
    if problem.v is not None:
        document["v"] = problem.v
    if problem.periodic is not None:
        document["B"] = problem.periodic.to_dict()
    if problem.t is not None:
        document["t"] = problem.t
    if problem.target is not None:
        default = "inf" if problem.target.default is None else problem.target.default
        document["f"] = {
            "default": default,
            "overrides": {str(n): c for n, c in sorted(problem.target.overrides.items())},
        }
    return document
