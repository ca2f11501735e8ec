"""Exact arithmetic for quadratic Pisot units in (0, 1).

A unit beta is the root in (0, 1) of x^2 + m*x = 1 (family "a", m >= 1,
conjugate root below -1) or of x^2 - m*x = -1 (family "b", m >= 3,
conjugate root above 1).  Ring elements a + b*beta carry plain integer
coordinates, and every floor, ceiling, sign and comparison is decided
through integer square roots.  Floating point exists only in the
clearly named display accessors and never feeds a decision.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence, Union


class Family(enum.Enum):
    """Defining equation of a unit, keyed by its command-line letter."""

    PLUS = "a"   # x^2 + m*x = 1
    MINUS = "b"  # x^2 - m*x = -1


class DomainError(ValueError):
    """Unit parameter outside the admissible range of its family."""


class UnitMismatch(ValueError):
    """Arithmetic attempted between values bound to different units."""


def _radical_sign(half: int, c: int, disc: int) -> int:
    """Exact sign of half + c*sqrt(disc), disc a positive non-square."""
    if c == 0:
        return (half > 0) - (half < 0)
    if half == 0:
        return 1 if c > 0 else -1
    if half > 0:
        if c > 0:
            return 1
        # half > 0 > c: compare half against |c|*sqrt(disc); never equal
        return 1 if half * half > c * c * disc else -1
    if c < 0:
        return -1
    return 1 if half * half < c * c * disc else -1


@dataclass(frozen=True)
class QuadraticUnit:
    """The unit beta of one family, identified by the parameter m.

    ``D`` is the discriminant m^2 + 4 (family a) or m^2 - 4 (family b);
    use :func:`make_unit` rather than filling it in by hand.
    """

    family: Family
    m: int
    D: int

    def __post_init__(self) -> None:
        if self.family is Family.PLUS:
            if self.m < 1:
                raise DomainError(f"family a requires m >= 1, got m={self.m}")
            expected = self.m * self.m + 4
        else:
            if self.m < 3:
                raise DomainError(f"family b requires m >= 3, got m={self.m}")
            expected = self.m * self.m - 4
        if self.D != expected:
            raise DomainError(f"discriminant for m={self.m} must be {expected}, got {self.D}")
        r = math.isqrt(self.D)
        if r * r == self.D:
            raise DomainError(f"discriminant {self.D} is a perfect square")
        # product of the two roots is -1 (family a) or +1 (family b)
        assert self.m * self.m - self.D == (-4 if self.family is Family.PLUS else 4)

    def half_coords(self, j: int) -> tuple[int, int]:
        """Integers (half, c) with j*beta == (half + c*sqrt(D)) / 2."""
        if self.family is Family.PLUS:
            return -j * self.m, j
        return j * self.m, -j

    def floor_mul(self, j: int) -> int:
        """Exact floor of j*beta for any integer j."""
        half, c = self.half_coords(j)
        if c >= 0:
            rad = math.isqrt(c * c * self.D)
        else:
            # c*sqrt(D) is irrational whenever c != 0, so its floor sits
            # strictly below the reflected positive root
            rad = -math.isqrt(c * c * self.D) - 1
        # floor((half + x)/2) == floor((half + floor(x))/2) for integer half
        return (half + rad) // 2

    def pair_sign(self, a: int, b: int) -> int:
        """Exact sign of a + b*beta."""
        half, c = self.half_coords(b)
        return _radical_sign(2 * a + half, c, self.D)

    def element(self, a: int, b: int) -> "ZBeta":
        return ZBeta(a, b, self)

    def beta_approx(self) -> float:
        """Float approximation of beta.

        Display and plotting only; exact decisions must never read it.
        """
        if self.family is Family.PLUS:
            return (math.sqrt(self.D) - self.m) / 2.0
        return (self.m - math.sqrt(self.D)) / 2.0

    def __str__(self) -> str:
        return f"beta[{self.family.value},m={self.m}]"


def make_unit(family: Union[Family, str], m: int) -> QuadraticUnit:
    """Validated constructor; accepts the enum or its letter "a"/"b"."""
    fam = family if isinstance(family, Family) else Family(family)
    disc = m * m + 4 if fam is Family.PLUS else m * m - 4
    return QuadraticUnit(fam, m, disc)


@dataclass(frozen=True, eq=False)
class ZBeta:
    """Ring element a + b*beta with exact integer coordinates."""

    a: int
    b: int
    unit: QuadraticUnit

    def _check_unit(self, other: "ZBeta") -> None:
        if other.unit != self.unit:
            raise UnitMismatch(f"cannot mix {self.unit} with {other.unit}")

    def __add__(self, other: Union[int, "ZBeta"]) -> "ZBeta":
        if isinstance(other, int):
            return ZBeta(self.a + other, self.b, self.unit)
        if not isinstance(other, ZBeta):
            return NotImplemented
        self._check_unit(other)
        return ZBeta(self.a + other.a, self.b + other.b, self.unit)

    __radd__ = __add__

    def __sub__(self, other: Union[int, "ZBeta"]) -> "ZBeta":
        if isinstance(other, int):
            return ZBeta(self.a - other, self.b, self.unit)
        if not isinstance(other, ZBeta):
            return NotImplemented
        self._check_unit(other)
        return ZBeta(self.a - other.a, self.b - other.b, self.unit)

    def __rsub__(self, other: Union[int, "ZBeta"]) -> "ZBeta":
        return (-self) + other

    def __neg__(self) -> "ZBeta":
        return ZBeta(-self.a, -self.b, self.unit)

    def __mul__(self, other: Union[int, "ZBeta"]) -> "ZBeta":
        if isinstance(other, int):
            return ZBeta(self.a * other, self.b * other, self.unit)
        if not isinstance(other, ZBeta):
            return NotImplemented
        self._check_unit(other)
        const = self.a * other.a
        lin = self.a * other.b + self.b * other.a
        sq = self.b * other.b
        if self.unit.family is Family.PLUS:
            # beta^2 = 1 - m*beta
            return ZBeta(const + sq, lin - self.unit.m * sq, self.unit)
        # beta^2 = m*beta - 1
        return ZBeta(const - sq, lin + self.unit.m * sq, self.unit)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ZBeta":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            raise ValueError(f"negative power {n} not supported")
        result = ZBeta(1, 0, self.unit)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def sign(self) -> int:
        return self.unit.pair_sign(self.a, self.b)

    def floor(self) -> int:
        return self.a + self.unit.floor_mul(self.b)

    def ceil(self) -> int:
        return -(-self).floor()

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def approx(self) -> float:
        """Float value, display only."""
        return self.a + self.b * self.unit.beta_approx()

    def _diff_sign(self, other: Union[int, "ZBeta"]) -> Union[int, None]:
        if isinstance(other, int):
            return self.unit.pair_sign(self.a - other, self.b)
        if isinstance(other, ZBeta):
            self._check_unit(other)
            return self.unit.pair_sign(self.a - other.a, self.b - other.b)
        return None

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.b == 0 and self.a == other
        if isinstance(other, ZBeta):
            return self.a == other.a and self.b == other.b and self.unit == other.unit
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.unit))

    def __lt__(self, other: Union[int, "ZBeta"]) -> bool:
        s = self._diff_sign(other)
        if s is None:
            return NotImplemented
        return s < 0

    def __le__(self, other: Union[int, "ZBeta"]) -> bool:
        s = self._diff_sign(other)
        if s is None:
            return NotImplemented
        return s <= 0

    def __gt__(self, other: Union[int, "ZBeta"]) -> bool:
        s = self._diff_sign(other)
        if s is None:
            return NotImplemented
        return s > 0

    def __ge__(self, other: Union[int, "ZBeta"]) -> bool:
        s = self._diff_sign(other)
        if s is None:
            return NotImplemented
        return s >= 0

    def __str__(self) -> str:
        return f"{self.a}{self.b:+d}*beta"


def beta_pow(unit: QuadraticUnit, table: Sequence[int], i: int) -> ZBeta:
    """Exact coordinates of beta**i read off a recurrence table.

    Family a: beta**i = (-1)^i G_{i-1} + (-1)^{i+1} G_i beta.
    Family b: beta**i = -G_{i-1} + G_i beta.
    """
    if i < 1:
        raise ValueError(f"power index must be >= 1, got {i}")
    if i >= len(table):
        raise IndexError(f"table of length {len(table)} has no entry {i}")
    owner = getattr(table, "unit", None)
    if owner is not None and owner != unit:
        raise UnitMismatch("table belongs to a different unit")
    prev, cur = table[i - 1], table[i]
    if unit.family is Family.PLUS and i % 2 == 0:
        return ZBeta(prev, -cur, unit)
    return ZBeta(-prev, cur, unit)
