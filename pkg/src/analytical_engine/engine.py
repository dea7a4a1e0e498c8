"""Cards, programs and the engine that runs them.

A program is two card streams. The processor stream holds only operation
cards; the memory stream holds everything else. The engine is driven by the
memory stream: whenever it meets an argument card it starts a mill cycle and
pulls the next operation card, so the two streams advance in lockstep.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, NamedTuple, Union

from .config import DEFAULT_CONFIG, MachineConfig
from .decimal_value import DecimalValue
from .errors import Halted, InvalidProgram, MachineError
from .mill import Mill, Operation
from .store import Store, StoreSnapshot


@dataclass(frozen=True)
class OpCard:
    op: Operation


@dataclass(frozen=True)
class SupplyCard:
    axis: int
    addr: int
    save_to: int | None = None
    negate: bool = False


@dataclass(frozen=True)
class RetainCard:
    axis: int


@dataclass(frozen=True)
class ReceiveCard:
    addr: int


@dataclass(frozen=True)
class TransferCard:
    target: int
    aux: int


@dataclass(frozen=True)
class HaltCard:
    pass


ArgCard = Union[SupplyCard, RetainCard]
VarCard = Union[SupplyCard, RetainCard, ReceiveCard, TransferCard, HaltCard]


@dataclass(frozen=True)
class Program:
    op_cards: tuple[OpCard, ...] = ()
    var_cards: tuple[VarCard, ...] = ()
    inits: Mapping[int, DecimalValue] = field(default_factory=dict)
    config: MachineConfig = DEFAULT_CONFIG
    # symbolic names for initial variables ("a", "b'", ...), used in comments only
    names: Mapping[int, str] = field(default_factory=dict, compare=False)

    def with_inits(self, inits: Mapping[int, DecimalValue]) -> Program:
        merged = {**self.inits, **inits}
        return Program(self.op_cards, self.var_cards, dict(sorted(merged.items())), self.config, self.names)


class Write(NamedTuple):
    addr: int
    value: DecimalValue
    prime: int


@dataclass(frozen=True)
class TraceRow:
    n: int
    nature: Operation | None
    reads: tuple[int, ...]
    saves: tuple[tuple[int, DecimalValue], ...]
    write: Write | None
    comment: str
    result: bool = False

    @property
    def zeroed(self) -> tuple[int, ...]:
        """Addresses this row read and left at zero."""
        written = {a for a, _ in self.saves}
        if self.write is not None:
            written.add(self.write.addr)
        return tuple(a for a in self.reads if a not in written)


@dataclass(frozen=True)
class Trace:
    rows: tuple[TraceRow, ...]
    final_store: StoreSnapshot

    def row(self, n: int) -> TraceRow:
        return self.rows[n - 1]

    def results(self) -> list[Write]:
        """The writes of rows marked as results, in program order."""
        return [r.write for r in self.rows if r.result]


def _arity_error(msg: str) -> InvalidProgram:
    return InvalidProgram(f"inconsistent card streams: {msg}")


def validate(program: Program):
    """Check stream structure and addresses; raise InvalidProgram on any fault."""
    size = program.config.store_size

    def addr_ok(a, what):
        if a is None:
            return
        if not (isinstance(a, int) and 0 <= a < size):
            raise InvalidProgram(f"{what} address v{a} outside store of size {size}")

    for a, v in program.inits.items():
        addr_ok(a, "INIT")
        if v.width != program.config.digit_width:
            raise InvalidProgram(f"INIT v{a} has width {v.width}, machine width is {program.config.digit_width}")
    for c in program.op_cards:
        if not isinstance(c, OpCard):
            raise _arity_error(f"{c!r} in the processor stream")

    cycles = 0
    cards = program.var_cards
    i = 0
    while i < len(cards):
        c = cards[i]
        if isinstance(c, (HaltCard, TransferCard)):
            if isinstance(c, TransferCard):
                addr_ok(c.target, "transfer target")
                addr_ok(c.aux, "transfer source")
                if c.target == c.aux:
                    raise InvalidProgram(f"transfer v{c.target} from itself")
            i += 1
            continue
        group = cards[i:i + 3]
        if (
            len(group) < 3
            or not all(isinstance(g, (SupplyCard, RetainCard)) for g in group[:2])
            or not isinstance(group[2], ReceiveCard)
        ):
            raise _arity_error(f"card {i} does not start an (argument, argument, receive) group")
        if {group[0].axis, group[1].axis} != {1, 2}:
            raise _arity_error(f"cards {i}, {i + 1} must supply axes 1 and 2")
        for g in group[:2]:
            if isinstance(g, SupplyCard):
                addr_ok(g.addr, "supply")
                addr_ok(g.save_to, "save")
                if g.save_to == g.addr:
                    raise InvalidProgram(f"supply v{g.addr} saves its complement into itself")
        addr_ok(group[2].addr, "receive")
        cycles += 1
        i += 3
    if cycles != len(program.op_cards):
        raise _arity_error(f"{cycles} mill cycles on the memory stream, {len(program.op_cards)} operation cards")


class Engine:
    """One run of one program; owns its store and mill."""

    def __init__(self, program: Program):
        validate(program)
        self.program = program
        self.store = Store(program.config)
        self.mill = Mill(program.config)
        for addr, value in sorted(program.inits.items()):
            self.store.initialize(addr, value)
        self._var_i = 0
        self._op_i = 0
        self._steps = 0
        self._held_label: str | None = None

    @property
    def halted(self) -> bool:
        cards = self.program.var_cards
        return self._var_i >= len(cards) or isinstance(cards[self._var_i], HaltCard)

    def _name(self, addr: int) -> str:
        name = self.program.names.get(addr)
        return f" = {name}" if name else ""

    def step(self) -> TraceRow:
        if self.halted:
            raise Halted("the engine has halted")
        self._steps += 1
        try:
            return self._step(self._steps)
        except MachineError as e:
            e.step = self._steps
            raise

    def _step(self, n: int) -> TraceRow:
        store = self.store
        card = self.program.var_cards[self._var_i]
        if isinstance(card, TransferCard):
            self._var_i += 1
            store.restore(card.target, card.aux)
            w = Write(card.target, store.peek(card.target), store.prime(card.target))
            comment = f"{store.label(card.target)} = v{card.target}{self._name(card.target)}"
            return TraceRow(n, None, (card.aux,), (), w, comment)

        arg1, arg2, recv = self.program.var_cards[self._var_i:self._var_i + 3]
        op = self.program.op_cards[self._op_i].op
        self._var_i += 3
        self._op_i += 1

        mill = self.mill
        mill.set_operation(op)
        reads, saves, labels = [], [], {}
        for arg in (arg1, arg2):
            if isinstance(arg, RetainCard):
                mill.retain(arg.axis)
                labels[arg.axis] = self._held_label
                continue
            label = store.label(arg.addr)
            value = store.give_off(arg.addr, arg.save_to)
            reads.append(arg.addr)
            if arg.save_to is not None:
                saves.append((arg.save_to, store.peek(arg.save_to)))
            mill.ingress(arg.axis, value, arg.negate)
            if arg.axis == 1:
                self._held_label = label
            labels[arg.axis] = ("−" if arg.negate else "") + label
        result = mill.execute()
        store.receive(recv.addr, result)
        w = Write(recv.addr, result, store.prime(recv.addr))
        comment = f"{store.label(recv.addr)} = {labels[1]} {op.glyph} {labels[2]}"
        return TraceRow(n, op, tuple(reads), tuple(saves), w, comment, result=op is Operation.DIV)

    def run(self) -> Trace:
        rows = []
        while not self.halted:
            rows.append(self.step())
        return Trace(tuple(rows), self.store.snapshot())


def load(program: Program) -> Engine:
    return Engine(program)


def run(program: Program) -> Trace:
    return Engine(program).run()
