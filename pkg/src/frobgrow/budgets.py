"""Computation budgets.

Exceeding a budget raises BudgetExceeded (or flags PARTIAL where the spec
of the operation says so) and is always distinguishable from a wrong
answer.  FROBGROW_BUDGET_SCALE multiplies every limit.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

from .errors import InputError


@dataclass(frozen=True)
class Budgets:
    gb_pairs: int = 200_000  # S-pair reductions per basis computation
    gb_basis: int = 20_000  # intermediate basis size
    minor_subsets: int = 250_000  # square submatrices examined per M_d
    oracle_dim: int = 20_000  # max rows/columns of the membership system
    saturation_steps: int = 256  # colon iterations in a saturation
    power_products: int = 5_000_000  # products examined by power_containment
    wall_seconds: float = 600.0

    def __post_init__(self):
        for name in (
            "gb_pairs",
            "gb_basis",
            "minor_subsets",
            "oracle_dim",
            "saturation_steps",
            "power_products",
        ):
            if getattr(self, name) <= 0:
                raise InputError(f"budget {name} must be positive")
        if self.wall_seconds <= 0:
            raise InputError("budget wall_seconds must be positive")

    def scaled(self, factor: float) -> "Budgets":
        if factor <= 0:
            raise InputError("budget scale must be positive")
        return Budgets(
            gb_pairs=max(1, int(self.gb_pairs * factor)),
            gb_basis=max(1, int(self.gb_basis * factor)),
            minor_subsets=max(1, int(self.minor_subsets * factor)),
            oracle_dim=max(1, int(self.oracle_dim * factor)),
            saturation_steps=max(1, int(self.saturation_steps * factor)),
            power_products=max(1, int(self.power_products * factor)),
            wall_seconds=self.wall_seconds * factor,
        )

    def override(self, **kwargs) -> "Budgets":
        return replace(self, **kwargs)


def from_environment(base: Budgets | None = None) -> Budgets:
    """Apply the FROBGROW_BUDGET_SCALE multiplier, if set."""
    base = base or Budgets()
    raw = os.environ.get("FROBGROW_BUDGET_SCALE")
    if raw is None:
        return base
    try:
        factor = float(raw)
    except ValueError:
        raise InputError(f"FROBGROW_BUDGET_SCALE must be numeric, got {raw!r}") from None
    return base.scaled(factor)


DEFAULT = Budgets()
