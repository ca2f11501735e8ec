"""Recurrence tables attached to a unit.

G_0 = 0, G_1 = 1 and G_{n+2} = m*G_{n+1} + G_n (family a) or
G_{n+2} = m*G_{n+1} - G_n (family b).  The entries are exactly the
integers that turn powers of beta into linear coordinates, so the
table doubles as the coefficient store for every closed form in the
package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .units import Family, QuadraticUnit, ZBeta, beta_pow

DEFAULT_LENGTH = 64


@dataclass(frozen=True)
class GFib:
    """Immutable table G_0..G_N for one unit."""

    unit: QuadraticUnit
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) < 2 or self.values[0] != 0 or self.values[1] != 1:
            raise ValueError("table must start with G_0=0, G_1=1")
        m = self.unit.m
        sign = 1 if self.unit.family is Family.PLUS else -1
        for n in range(len(self.values) - 2):
            if self.values[n + 2] != m * self.values[n + 1] + sign * self.values[n]:
                raise ValueError(f"table breaks the recurrence at index {n + 2}")

    @classmethod
    def build(cls, unit: QuadraticUnit, n: int = DEFAULT_LENGTH) -> "GFib":
        """Table G_0..G_n of the unit's recurrence."""
        if n < 1:
            raise ValueError(f"table needs at least G_0..G_1, got n={n}")
        vals = [0, 1]
        m = unit.m
        if unit.family is Family.PLUS:
            for _ in range(n - 1):
                vals.append(m * vals[-1] + vals[-2])
        else:
            for _ in range(n - 1):
                vals.append(m * vals[-1] - vals[-2])
        return cls(unit, tuple(vals))

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)


def verify_power_identity(unit: QuadraticUnit, table: GFib, i: int) -> bool:
    """Self-test: the table's closed form for beta**i must agree with an
    i-fold ring product of beta itself."""
    closed = beta_pow(unit, table, i)
    folded = ZBeta(0, 1, unit) ** i
    return folded == closed
