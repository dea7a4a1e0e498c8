"""Line-oriented assembly for the engine, and the two-stream card deck.

Source format (one statement per line, ``;`` or ``#`` starts a comment,
keywords are case-insensitive)::

    INIT v5 = -1
    OP ×
      SUPPLY 1 v5
      SUPPLY 2 v1 SAVE v8
      RECEIVE v7
    OP ×
      RETAIN 1
      SUPPLY 2 v3 NEG
      RECEIVE v1
    XFER v1 FROM v8
    HALT

Each ``OP`` line must be followed by its two argument lines and one
``RECEIVE``. ``*``, ``-`` and ``/`` are accepted for ``×``, ``−``, ``÷``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .config import DEFAULT_CONFIG, MachineConfig
from .decimal_value import DecimalValue, from_literal
from .engine import (
    HaltCard,
    OpCard,
    Program,
    ReceiveCard,
    RetainCard,
    SupplyCard,
    TransferCard,
    VarCard,
    validate,
)
from .errors import AsmSyntaxError, InvalidProgram, MachineError, MalformedLiteral, SemanticError
from .mill import Operation

_ADDR = r"v(\d+)"
_STATEMENTS = {
    "init": re.compile(rf"INIT\s+{_ADDR}\s*=\s*(\S+)", re.I),
    "op": re.compile(r"OP\s+(\S+)", re.I),
    "supply": re.compile(rf"SUPPLY\s+([12])\s+{_ADDR}(?:\s+SAVE\s+{_ADDR})?(\s+NEG)?", re.I),
    "retain": re.compile(r"RETAIN\s+([12])", re.I),
    "receive": re.compile(rf"RECEIVE\s+{_ADDR}", re.I),
    "xfer": re.compile(rf"XFER\s+{_ADDR}\s+FROM\s+{_ADDR}", re.I),
    "halt": re.compile(r"HALT", re.I),
}
_COMMENT = re.compile(r"[;#].*")


@dataclass(frozen=True)
class CardDeck:
    processor: tuple[OpCard, ...] = ()
    memory: tuple[VarCard, ...] = ()

    def to_json(self) -> str:
        return json.dumps(
            {
                "processor": [{"op": c.op.value} for c in self.processor],
                "memory": [_card_record(c) for c in self.memory],
            },
            indent=2,
            ensure_ascii=False,
        ) + "\n"

    @classmethod
    def from_json(cls, text: str) -> CardDeck:
        data = json.loads(text)
        try:
            processor = tuple(OpCard(Operation(r["op"])) for r in data["processor"])
            memory = tuple(_card_from_record(r) for r in data["memory"])
        except (KeyError, ValueError, TypeError) as e:
            raise InvalidProgram(f"malformed card deck: {e}") from None
        return cls(processor, memory)


def _card_record(c: VarCard) -> dict:
    if isinstance(c, SupplyCard):
        return {"kind": "supply", "axis": c.axis, "addr": c.addr, "save": c.save_to, "neg": c.negate}
    if isinstance(c, RetainCard):
        return {"kind": "retain", "axis": c.axis}
    if isinstance(c, ReceiveCard):
        return {"kind": "receive", "addr": c.addr}
    if isinstance(c, TransferCard):
        return {"kind": "xfer", "target": c.target, "aux": c.aux}
    return {"kind": "halt"}


def _card_from_record(r: dict) -> VarCard:
    kind = r["kind"]
    if kind == "supply":
        return SupplyCard(r["axis"], r["addr"], r.get("save"), bool(r.get("neg", False)))
    if kind == "retain":
        return RetainCard(r["axis"])
    if kind == "receive":
        return ReceiveCard(r["addr"])
    if kind == "xfer":
        return TransferCard(r["target"], r["aux"])
    if kind == "halt":
        return HaltCard()
    raise ValueError(f"unknown card kind {kind!r}")


def to_card_deck(p: Program) -> CardDeck:
    return CardDeck(tuple(p.op_cards), tuple(p.var_cards))


def from_card_deck(
    d: CardDeck, inits: dict[int, DecimalValue] | None = None, config: MachineConfig = DEFAULT_CONFIG
) -> Program:
    p = Program(tuple(d.processor), tuple(d.memory), dict(sorted((inits or {}).items())), config)
    validate(p)
    return p


def parse(text: str, config: MachineConfig = DEFAULT_CONFIG) -> Program:
    inits: dict[int, DecimalValue] = {}
    ops: list[OpCard] = []
    cards: list[VarCard] = []
    # cards still owed by the current OP block: "arg", "arg", "receive"
    pending: list[str] = []
    axis1_supplied = False
    op_line = 0

    def addr(lineno, col, text):
        a = int(text)
        if a >= config.store_size:
            raise SemanticError(lineno, f"address v{a} outside store of size {config.store_size}", col)
        return a

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _COMMENT.sub("", raw).strip()
        if not line:
            continue
        col = len(raw) - len(raw.lstrip()) + 1
        kind, m = next(
            ((k, m) for k, rx in _STATEMENTS.items() if (m := rx.fullmatch(line))),
            (None, None),
        )
        if kind is None:
            raise AsmSyntaxError(lineno, f"unrecognised statement {line!r}", col)

        expected = pending[0] if pending else None
        is_arg = kind in ("supply", "retain")
        if expected == "arg" and not is_arg:
            raise SemanticError(lineno, f"OP on line {op_line} needs two argument lines, got {kind.upper()}", col)
        if expected == "receive" and kind != "receive":
            raise SemanticError(lineno, f"OP on line {op_line} needs a RECEIVE, got {kind.upper()}", col)
        if expected is None and (is_arg or kind == "receive"):
            raise SemanticError(lineno, f"{kind.upper()} outside an OP block", col)
        if pending:
            pending.pop(0)

        if kind == "init":
            a = addr(lineno, col, m.group(1))
            if a in inits:
                raise SemanticError(lineno, f"v{a} initialised twice", col)
            try:
                inits[a] = from_literal(m.group(2), config)
            except MalformedLiteral as e:
                raise AsmSyntaxError(lineno, str(e), col) from None
            except MachineError as e:
                raise SemanticError(lineno, str(e), col) from None
        elif kind == "op":
            try:
                op = Operation.from_glyph(m.group(1))
            except ValueError:
                raise AsmSyntaxError(lineno, f"unknown operation {m.group(1)!r}", col) from None
            ops.append(OpCard(op))
            pending = ["arg", "arg", "receive"]
            op_line = lineno
        elif kind == "supply":
            axis = int(m.group(1))
            save = addr(lineno, col, m.group(3)) if m.group(3) else None
            a = addr(lineno, col, m.group(2))
            if save == a:
                raise SemanticError(lineno, f"SAVE target equals the supplied variable v{a}", col)
            cards.append(SupplyCard(axis, a, save, bool(m.group(4))))
            axis1_supplied |= axis == 1
        elif kind == "retain":
            if not axis1_supplied:
                raise SemanticError(lineno, "RETAIN before any SUPPLY on axis 1; nothing can be held", col)
            cards.append(RetainCard(int(m.group(1))))
        elif kind == "receive":
            cards.append(ReceiveCard(addr(lineno, col, m.group(1))))
        elif kind == "xfer":
            target, aux = addr(lineno, col, m.group(1)), addr(lineno, col, m.group(2))
            if target == aux:
                raise SemanticError(lineno, f"XFER v{target} from itself", col)
            cards.append(TransferCard(target, aux))
        else:
            cards.append(HaltCard())

        if kind == "supply" or kind == "retain":
            if len(pending) == 1:
                axes = [c.axis for c in cards[-2:]]
                if sorted(axes) != [1, 2]:
                    raise SemanticError(lineno, f"OP on line {op_line} must load axes 1 and 2", col)

    if pending:
        raise SemanticError(op_line, "OP block is incomplete at end of file")
    return Program(tuple(ops), tuple(cards), dict(sorted(inits.items())), config)


def to_text(p: Program) -> str:
    """Canonical source form: INITs by address, then the cards in stream order."""
    lines = [f"INIT v{a} = {v}" for a, v in sorted(p.inits.items())]
    ops = iter(p.op_cards)
    in_block = 0
    for c in p.var_cards:
        if isinstance(c, (SupplyCard, RetainCard)) and not in_block:
            lines.append(f"OP {next(ops).op.glyph}")
            in_block = 3
        if isinstance(c, SupplyCard):
            text = f"  SUPPLY {c.axis} v{c.addr}"
            if c.save_to is not None:
                text += f" SAVE v{c.save_to}"
            if c.negate:
                text += " NEG"
            lines.append(text)
        elif isinstance(c, RetainCard):
            lines.append(f"  RETAIN {c.axis}")
        elif isinstance(c, ReceiveCard):
            lines.append(f"  RECEIVE v{c.addr}")
        elif isinstance(c, TransferCard):
            lines.append(f"XFER v{c.target} FROM v{c.aux}")
        else:
            lines.append("HALT")
        in_block = max(in_block - 1, 0)
    return "".join(line + "\n" for line in lines)
