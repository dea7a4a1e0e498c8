"""The store: numbered variables with destructive reads and complement saves."""

from __future__ import annotations

from dataclasses import dataclass, field

from .config import DEFAULT_CONFIG, MachineConfig
from .decimal_value import DecimalValue, digitwise_complement, from_literal
from .errors import InvalidAddress, SaveToSelf


@dataclass(frozen=True)
class StoreSnapshot:
    """Sparse copy of a store: only nonzero cells and nonzero prime counts."""

    values: dict[int, DecimalValue] = field(default_factory=dict)
    primes: dict[int, int] = field(default_factory=dict)
    digit_width: int = DEFAULT_CONFIG.digit_width

    def value(self, addr: int) -> DecimalValue:
        return self.values.get(addr, DecimalValue.zero(self.digit_width))

    def prime(self, addr: int) -> int:
        return self.primes.get(addr, 0)

    def to_dict(self) -> dict:
        addrs = sorted(set(self.values) | set(self.primes))
        return {str(a): {"value": str(self.value(a)), "prime": self.prime(a)} for a in addrs}

    @classmethod
    def from_dict(cls, data: dict, digit_width: int) -> StoreSnapshot:
        config = MachineConfig(digit_width=digit_width)
        values, primes = {}, {}
        for key, cell in data.items():
            v = from_literal(cell["value"], config)
            if not v.is_zero():
                values[int(key)] = v
            if cell["prime"]:
                primes[int(key)] = cell["prime"]
        return cls(dict(sorted(values.items())), dict(sorted(primes.items())), digit_width)


class Store:
    """Addressable variables ``v0 .. v{size-1}``.

    ``primes[k]`` counts every write to ``k`` (egress, complement save,
    restore) since reset; initial values do not count. ``initialized`` records
    which addresses started out holding a given value, which decides how the
    prime marks in code comments are written (see :meth:`label`).
    """

    def __init__(self, config: MachineConfig = DEFAULT_CONFIG):
        self.config = config
        self._zero = DecimalValue.zero(config.digit_width)
        self.cells = [self._zero] * config.store_size
        self.primes = [0] * config.store_size
        self.initialized: set[int] = set()

    def _check(self, addr: int):
        if not (isinstance(addr, int) and 0 <= addr < self.config.store_size):
            raise InvalidAddress(f"no such variable v{addr} (store size {self.config.store_size})")

    def initialize(self, addr: int, value: DecimalValue):
        self._check(addr)
        self.cells[addr] = value
        self.initialized.add(addr)

    def peek(self, addr: int) -> DecimalValue:
        self._check(addr)
        return self.cells[addr]

    def prime(self, addr: int) -> int:
        self._check(addr)
        return self.primes[addr]

    def receive(self, addr: int, value: DecimalValue):
        self._check(addr)
        self.cells[addr] = value
        self.primes[addr] += 1

    def give_off(self, addr: int, save_to: int | None = None) -> DecimalValue:
        self._check(addr)
        if save_to is not None:
            self._check(save_to)
            if save_to == addr:
                raise SaveToSelf(f"cannot save the complement of v{addr} into itself")
        value = self.cells[addr]
        self.cells[addr] = self._zero
        if save_to is not None:
            self.receive(save_to, digitwise_complement(value))
        return value

    def restore(self, target: int, aux: int):
        """Move the complement parked in ``aux`` back into ``target``, complementing again."""
        self._check(target)
        self._check(aux)
        if target == aux:
            raise SaveToSelf(f"cannot restore v{target} from itself")
        self.receive(target, digitwise_complement(self.give_off(aux)))

    def marks(self, addr: int) -> int:
        # A cell that started empty is unprimed on its first write (v7 = ...),
        # a cell holding an initial value is primed on its first overwrite.
        n = self.prime(addr)
        return n if addr in self.initialized else max(n - 1, 0)

    def label(self, addr: int) -> str:
        return f"v{addr}" + "'" * self.marks(addr)

    def snapshot(self) -> StoreSnapshot:
        return StoreSnapshot(
            {a: v for a, v in enumerate(self.cells) if not v.is_zero()},
            {a: p for a, p in enumerate(self.primes) if p},
            self.config.digit_width,
        )
