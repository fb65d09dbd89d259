"""Checked signed 64-bit integer arithmetic.

Python integers never overflow on their own, so staying inside a fixed
machine range is a policy: every integer entering the library is validated
once, and compound operations (sums of products, exponent shifts) go through
the helpers below, which raise IntegerOverflowError instead of silently
producing an out-of-range value.
"""

from __future__ import annotations

from .errors import IntegerOverflowError

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1


def ensure_int64(value: int, what: str = "value") -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{what} must be an integer, got {type(value).__name__}")
    if not INT64_MIN <= value <= INT64_MAX:
        raise IntegerOverflowError(f"{what} {value} is outside the signed 64-bit range")
    return value


def checked_add(a: int, b: int) -> int:
    result = a + b
    if not INT64_MIN <= result <= INT64_MAX:
        raise IntegerOverflowError(f"{a} + {b} overflows the signed 64-bit range")
    return result


def checked_sub(a: int, b: int) -> int:
    result = a - b
    if not INT64_MIN <= result <= INT64_MAX:
        raise IntegerOverflowError(f"{a} - {b} overflows the signed 64-bit range")
    return result


def checked_mul(a: int, b: int) -> int:
    result = a * b
    if not INT64_MIN <= result <= INT64_MAX:
        raise IntegerOverflowError(f"{a} * {b} overflows the signed 64-bit range")
    return result


def checked_neg(a: int) -> int:
    if a == INT64_MIN:
        raise IntegerOverflowError(f"-({a}) overflows the signed 64-bit range")
    return -a
