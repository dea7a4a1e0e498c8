"""An emulator of the Analytical Engine as used in Babbage's 1837 program No. 1.

The store holds fixed-width signed decimal variables that are zeroed when
read; the mill performs one of four operations on two axes and can retain
its first argument; programs are two card streams, one for the mill and one
for the store.
"""

from .asm import CardDeck, from_card_deck, parse, to_card_deck, to_text
from .config import MachineConfig
from .decimal_value import DecimalValue, arithmetic, digitwise_complement, from_literal
from .engine import (
    Engine,
    HaltCard,
    OpCard,
    Program,
    ReceiveCard,
    RetainCard,
    SupplyCard,
    Trace,
    TraceRow,
    TransferCard,
    load,
    run,
)
from .mill import Mill, Operation
from .programs import Coefficients, Solution, build_program_x, build_program_xy, solve_closed_form
from .store import Store, StoreSnapshot

__all__ = [
    "CardDeck", "Coefficients", "DecimalValue", "Engine", "HaltCard", "MachineConfig", "Mill",
    "OpCard", "Operation", "Program", "ReceiveCard", "RetainCard", "Solution", "Store",
    "StoreSnapshot", "SupplyCard", "Trace", "TraceRow", "TransferCard", "arithmetic",
    "build_program_x", "build_program_xy", "digitwise_complement", "from_card_deck",
    "from_literal", "load", "parse", "run", "solve_closed_form", "to_card_deck", "to_text",
]
