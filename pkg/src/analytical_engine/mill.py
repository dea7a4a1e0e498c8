"""The mill: a four-operation processor with two ingress axes.

The mill keeps the last value loaded onto axis 1 in ``held`` so the next
operation can reuse it without reading the store again.
"""

from __future__ import annotations

from enum import Enum

from .config import DEFAULT_CONFIG, MachineConfig
from .decimal_value import DecimalValue, arithmetic
from .errors import AxisOccupied, MillNotReady, NothingHeld


class Operation(Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"

    @property
    def glyph(self) -> str:
        return _GLYPHS[self]

    @classmethod
    def from_glyph(cls, text: str) -> Operation:
        try:
            return _FROM_GLYPH[text]
        except KeyError:
            raise ValueError(f"unknown operation glyph {text!r}") from None


_GLYPHS = {Operation.ADD: "+", Operation.SUB: "−", Operation.MUL: "×", Operation.DIV: "÷"}
_FROM_GLYPH = {
    "+": Operation.ADD,
    "-": Operation.SUB,
    "−": Operation.SUB,
    "*": Operation.MUL,
    "×": Operation.MUL,
    "/": Operation.DIV,
    "÷": Operation.DIV,
}


class Mill:
    def __init__(self, config: MachineConfig = DEFAULT_CONFIG):
        self.config = config
        self.current_op: Operation | None = None
        self.axes: dict[int, DecimalValue | None] = {1: None, 2: None}
        self.held: DecimalValue | None = None

    def set_operation(self, op: Operation):
        self.current_op = op
        self.axes = {1: None, 2: None}

    def _load(self, axis: int, value: DecimalValue):
        if axis not in self.axes:
            raise ValueError(f"the mill has axes 1 and 2, not {axis}")
        if self.axes[axis] is not None:
            raise AxisOccupied(f"mill axis {axis} is already loaded")
        self.axes[axis] = value

    def ingress(self, axis: int, value: DecimalValue, negate: bool = False):
        self._load(axis, -value if negate else value)
        if axis == 1:
            self.held = value

    def retain(self, axis: int):
        if self.held is None:
            raise NothingHeld("no argument is retained in the mill")
        self._load(axis, self.held)

    def execute(self) -> DecimalValue:
        if self.current_op is None or None in self.axes.values():
            raise MillNotReady("the mill needs an operation and both axes loaded")
        a, b = self.axes[1], self.axes[2]
        self.axes = {1: None, 2: None}
        return arithmetic(self.current_op.value, a, b, self.config)
