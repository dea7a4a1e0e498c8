"""Exception hierarchy shared by every part of the emulator."""


class MachineError(Exception):
    """Base class for faults raised while building or running a program.

    The engine stamps ``step`` onto the exception when the fault happens
    inside a program step, so the message reads ``step 7: division by zero``.
    """

    def __init__(self, message: str, step: int | None = None):
        super().__init__(message)
        self.message = message
        self.step = step

    def __str__(self) -> str:
        if self.step is None:
            return self.message
        return f"step {self.step}: {self.message}"


class MalformedLiteral(MachineError, ValueError):
    pass


class Overflow(MachineError, ArithmeticError):
    pass


class DivisionByZero(MachineError, ZeroDivisionError):
    pass


class InexactDivision(MachineError, ArithmeticError):
    pass


class InvalidAddress(MachineError, IndexError):
    pass


class SaveToSelf(MachineError):
    pass


class AxisOccupied(MachineError):
    pass


class NothingHeld(MachineError):
    pass


class MillNotReady(MachineError):
    pass


class Halted(MachineError):
    pass


class InvalidProgram(MachineError):
    pass


class SingularSystem(MachineError):
    pass


class DegenerateB(MachineError):
    pass


class AsmError(Exception):
    """A source-level problem, reported with its 1-based line and column."""

    def __init__(self, line: int, message: str, column: int = 1):
        super().__init__(f"line {line}, col {column}: {message}")
        self.line = line
        self.column = column
        self.message = message


class AsmSyntaxError(AsmError):
    pass


class SemanticError(AsmError):
    pass
