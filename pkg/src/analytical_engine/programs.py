"""Babbage's two 1837 programs for a 2x2 linear system, plus a closed-form solver.

The system is::

    a x  + b y  + c  = 0
    a'x  + b'y  + c' = 0

with the coefficients initially in v1..v6 in the order a, b, c, a', b', c'.
:func:`solve_closed_form` uses :class:`fractions.Fraction` only, so it shares
no code with the decimal machinery it is used to check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .config import DEFAULT_CONFIG, MachineConfig
from .decimal_value import DecimalValue
from .engine import OpCard, Program, ReceiveCard, RetainCard, SupplyCard, TransferCard
from .errors import DegenerateB, Overflow, SingularSystem
from .mill import Operation

MUL, SUB, DIV = Operation.MUL, Operation.SUB, Operation.DIV

COEFFICIENT_NAMES = {1: "a", 2: "b", 3: "c", 4: "a'", 5: "b'", 6: "c'"}


@dataclass(frozen=True)
class Coefficients:
    a: int
    b: int
    c: int
    a_p: int
    b_p: int
    c_p: int

    def as_tuple(self) -> tuple[int, ...]:
        return (self.a, self.b, self.c, self.a_p, self.b_p, self.c_p)

    def inits(self, config: MachineConfig = DEFAULT_CONFIG) -> dict[int, DecimalValue]:
        try:
            return {
                k: DecimalValue.from_int(v, config.digit_width)
                for k, v in enumerate(self.as_tuple(), start=1)
            }
        except Overflow as e:
            raise Overflow(f"coefficient too wide for the machine: {e}") from None


@dataclass(frozen=True)
class Solution:
    x: Fraction
    y: Fraction


def solve_closed_form(co: Coefficients) -> Solution:
    a, b, c, a_p, b_p, c_p = map(Fraction, co.as_tuple())
    den = b_p * a - b * a_p
    if den == 0:
        raise SingularSystem("b'a - ba' is zero; the system has no unique solution")
    if b == 0:
        raise DegenerateB("b is zero; y cannot be recovered from the first equation")
    x = (b * c_p - b_p * c) / den
    y = (-c - a * x) / b
    assert y == (-a * x - c) / b
    return Solution(x, y)


def _cycle(op, arg1, arg2, dest):
    return OpCard(op), (arg1, arg2, ReceiveCard(dest))


def _assemble(cycles_and_transfers, co, config) -> Program:
    ops, cards = [], []
    for item in cycles_and_transfers:
        if isinstance(item, TransferCard):
            cards.append(item)
        else:
            op, group = item
            ops.append(op)
            cards.extend(group)
    inits = co.inits(config) if co is not None else {}
    return Program(tuple(ops), tuple(cards), inits, config, dict(COEFFICIENT_NAMES))


def build_program_x(co: Coefficients | None, config: MachineConfig = DEFAULT_CONFIG) -> Program:
    """Table 1: seven operations leaving x in v3."""
    S, R = SupplyCard, RetainCard
    steps = [
        _cycle(MUL, S(1, 5), S(2, 1), 7),  # v7 = b'a
        _cycle(MUL, R(1), S(2, 3), 1),  # v1' = b'c, b' retained
        _cycle(MUL, S(1, 2), S(2, 4), 3),  # v3' = ba'
        _cycle(MUL, R(1), S(2, 6), 2),  # v2' = bc', b retained
        _cycle(SUB, S(1, 2), S(2, 1), 4),  # v4' = bc' - b'c
        _cycle(SUB, S(1, 7), S(2, 3), 1),  # v1'' = b'a - ba'
        _cycle(DIV, S(1, 4), S(2, 1), 3),  # v3'' = x
    ]
    return _assemble(steps, co, config)


def build_program_xy(co: Coefficients | None, config: MachineConfig = DEFAULT_CONFIG) -> Program:
    """Table 2: x into v4, restore a, b, c from their complements, then y into v5."""
    S, R = SupplyCard, RetainCard
    steps = [
        _cycle(MUL, S(1, 5), S(2, 1, save_to=8), 7),  # v7 = b'a, Ca -> v8
        _cycle(MUL, R(1), S(2, 3, save_to=5), 1),  # v1' = b'c, Cc -> v5
        _cycle(MUL, S(1, 2, save_to=9), S(2, 4), 3),  # v3' = ba', Cb -> v9
        _cycle(MUL, R(1), S(2, 6), 2),  # v2' = bc'
        _cycle(SUB, S(1, 2), S(2, 1), 6),  # v6' = bc' - b'c
        _cycle(SUB, S(1, 7), S(2, 3), 2),  # v2'' = b'a - ba'
        _cycle(DIV, S(1, 6), S(2, 2), 4),  # v4' = x
        TransferCard(1, 8),  # v1'' = a
        TransferCard(2, 9),  # v2''' = b
        TransferCard(3, 5),  # v3'' = c
        _cycle(MUL, S(1, 1), S(2, 4), 5),  # v5'' = ax
        _cycle(SUB, S(1, 3, negate=True), S(2, 5), 1),  # v1''' = -c - ax
        _cycle(DIV, S(1, 1), S(2, 2), 5),  # v5''' = y
    ]
    return _assemble(steps, co, config)
