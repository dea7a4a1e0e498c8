from dataclasses import dataclass
from typing import Literal

DivisionMode = Literal["exact", "truncate"]


@dataclass(frozen=True)
class MachineConfig:
    """Machine-wide parameters: digits per variable, store size, division rule."""

    digit_width: int = 40
    store_size: int = 100
    division_mode: DivisionMode = "exact"

    def __post_init__(self):
        if self.digit_width < 1:
            raise ValueError(f"digit_width must be >= 1, got {self.digit_width}")
        if self.store_size < 1:
            raise ValueError(f"store_size must be >= 1, got {self.store_size}")
        if self.division_mode not in ("exact", "truncate"):
            raise ValueError(f"unknown division mode {self.division_mode!r}")


DEFAULT_CONFIG = MachineConfig()
