"""Fixed-width sign-magnitude decimal numbers.

A :class:`DecimalValue` is what one store variable (or one mill axis) holds:
a sign flag plus exactly ``width`` decimal digits, most significant first.
Arithmetic is done digit by digit on the magnitudes, the way a column of
figure wheels would do it, and only the final result is checked against the
width.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Literal

from .config import DEFAULT_CONFIG, MachineConfig
from .errors import DivisionByZero, InexactDivision, MalformedLiteral, Overflow

OpName = Literal["add", "sub", "mul", "div"]

_LITERAL = re.compile(r"([+\-−]?)([0-9]+)")

# Magnitudes below are little-endian digit lists with no leading zeros;
# zero is the empty list.


def _trim(ds: list[int]) -> list[int]:
    while ds and ds[-1] == 0:
        ds.pop()
    return ds


def _cmp(a: list[int], b: list[int]) -> int:
    if len(a) != len(b):
        return -1 if len(a) < len(b) else 1
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return -1 if x < y else 1
    return 0


def _add(a: list[int], b: list[int]) -> list[int]:
    out = []
    carry = 0
    for i in range(max(len(a), len(b))):
        s = carry + (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
        out.append(s % 10)
        carry = s // 10
    if carry:
        out.append(carry)
    return out


def _sub(a: list[int], b: list[int]) -> list[int]:
    # requires a >= b
    out = []
    borrow = 0
    for i in range(len(a)):
        d = a[i] - borrow - (b[i] if i < len(b) else 0)
        borrow = 1 if d < 0 else 0
        out.append(d + 10 * borrow)
    return _trim(out)


def _mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b))
    for i, x in enumerate(a):
        carry = 0
        for j, y in enumerate(b):
            t = out[i + j] + x * y + carry
            out[i + j] = t % 10
            carry = t // 10
        k = i + len(b)
        while carry:
            t = out[k] + carry
            out[k] = t % 10
            carry = t // 10
            k += 1
    return _trim(out)


def _divmod(a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    """Long division by repeated subtraction, one quotient digit at a time."""
    quotient = []
    rem: list[int] = []
    for d in reversed(a):
        rem = _trim([d] + rem)
        q = 0
        while _cmp(rem, b) >= 0:
            rem = _sub(rem, b)
            q += 1
        quotient.append(q)
    quotient.reverse()
    return _trim(quotient), rem


@dataclass(frozen=True)
class DecimalValue:
    negative: bool
    digits: tuple[int, ...]

    def __post_init__(self):
        if not self.digits:
            raise ValueError("a DecimalValue needs at least one digit")
        if any(not (0 <= d <= 9) for d in self.digits):
            raise ValueError(f"digits out of range: {self.digits}")
        if self.negative and not any(self.digits):
            object.__setattr__(self, "negative", False)

    @classmethod
    def zero(cls, width: int = DEFAULT_CONFIG.digit_width) -> DecimalValue:
        return cls(False, (0,) * width)

    @classmethod
    def from_int(cls, n: int, width: int = DEFAULT_CONFIG.digit_width) -> DecimalValue:
        text = str(abs(n))
        if len(text) > width:
            raise Overflow(f"{n} does not fit in {width} digits")
        return cls(n < 0, tuple(int(c) for c in text.rjust(width, "0")))

    @classmethod
    def _from_magnitude(cls, negative: bool, mag: list[int], width: int) -> DecimalValue:
        if len(mag) > width:
            sign = "-" if negative else ""
            shown = "".join(map(str, reversed(mag)))
            raise Overflow(f"result {sign}{shown} does not fit in {width} digits")
        return cls(negative, tuple(reversed(mag + [0] * (width - len(mag)))))

    @property
    def width(self) -> int:
        return len(self.digits)

    @property
    def sign(self) -> str:
        return "-" if self.negative else "+"

    def is_zero(self) -> bool:
        return not any(self.digits)

    def _magnitude(self) -> list[int]:
        return _trim(list(reversed(self.digits)))

    def __int__(self) -> int:
        n = int("".join(map(str, self.digits)))
        return -n if self.negative else n

    def __neg__(self) -> DecimalValue:
        return DecimalValue(not self.negative, self.digits)

    def __str__(self) -> str:
        return str(int(self))

    def __repr__(self) -> str:
        return f"DecimalValue({self})"

    def widened(self, width: int) -> DecimalValue:
        if width < self.width:
            raise ValueError("cannot narrow a value")
        return DecimalValue(self.negative, (0,) * (width - self.width) + self.digits)


def from_literal(text: str, config: MachineConfig = DEFAULT_CONFIG) -> DecimalValue:
    """Parse ``[-]digits`` into a value of the configured width.

    The Unicode minus sign is accepted alongside the ASCII hyphen.
    """
    m = _LITERAL.fullmatch(text.strip())
    if m is None:
        raise MalformedLiteral(f"malformed decimal literal {text!r}")
    sign, body = m.groups()
    body = body.lstrip("0") or "0"
    if len(body) > config.digit_width:
        raise Overflow(f"{text!r} does not fit in {config.digit_width} digits")
    value = DecimalValue.from_int(int(body), config.digit_width)
    return -value if sign in ("-", "−") else value


def digitwise_complement(v: DecimalValue) -> DecimalValue:
    """Map every digit d to (10 - d) mod 10, keeping the sign: +345 -> +765."""
    return DecimalValue(v.negative, tuple((10 - d) % 10 for d in v.digits))


def arithmetic(
    op: OpName, a: DecimalValue, b: DecimalValue, config: MachineConfig = DEFAULT_CONFIG
) -> DecimalValue:
    width = config.digit_width
    ma, mb = a._magnitude(), b._magnitude()
    if op == "sub":
        op, b = "add", -b
    if op == "add":
        if a.negative == b.negative:
            return DecimalValue._from_magnitude(a.negative, _add(ma, mb), width)
        c = _cmp(ma, mb)
        if c >= 0:
            return DecimalValue._from_magnitude(a.negative, _sub(ma, mb), width)
        return DecimalValue._from_magnitude(b.negative, _sub(mb, ma), width)
    negative = a.negative != b.negative
    if op == "mul":
        return DecimalValue._from_magnitude(negative, _mul(ma, mb), width)
    if op == "div":
        if not mb:
            raise DivisionByZero("division by zero")
        q, r = _divmod(ma, mb)
        if r and config.division_mode == "exact":
            raise InexactDivision(f"{a} is not an exact multiple of {b}")
        return DecimalValue._from_magnitude(negative, q, width)
    raise ValueError(f"unknown operation {op!r}")
