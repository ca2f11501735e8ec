"""Self-matching analysis of the sequence floor(j*beta).

Shifting the argument of j |-> floor(j*beta) by a table entry G_i
shifts the value by G_{i-1} at almost every j.  The exceptional
positions admit an exact closed-form enumeration, their membership is
a single fractional-part test, and their density over growing windows
is beta**i.  Everything here is integer-exact; the only float is the
display target carried by a scan summary.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .gfib import GFib
from .units import Family, QuadraticUnit, UnitMismatch, beta_pow


class NotAMismatch(ValueError):
    """Inverse lookup requested for a position that matches."""


@dataclass(frozen=True)
class MismatchRecord:
    """One exceptional position.

    ``k`` is the enumeration index that produced ``j``; ``None`` marks
    the single extra element (-G_i at odd i, family a) that the plain
    k-formula does not generate.
    """

    j: int
    k: Optional[int]
    epsilon: int


@dataclass(frozen=True)
class ScanSummary:
    """Outcome of an exact mismatch count over a symmetric window."""

    i: int
    window: tuple[int, int]
    mismatch_count: int
    frequency: Fraction
    target: float  # beta**i, display approximation only

    def __post_init__(self) -> None:
        if not 0 <= self.frequency <= 1:
            raise ValueError(f"frequency {self.frequency} outside [0, 1]")


def _require(table: GFib, unit: QuadraticUnit, i: int, need_next: bool = False) -> None:
    if table.unit != unit:
        raise UnitMismatch("table belongs to a different unit")
    if i < 1:
        raise ValueError(f"shift index must be >= 1, got {i}")
    top = i + 1 if need_next else i
    if top >= len(table):
        raise IndexError(f"table of length {len(table)} has no entry {top}")


def mismatch_epsilon(unit: QuadraticUnit, i: int) -> int:
    """The single nonzero value the discrepancy can take at level i."""
    if unit.family is Family.MINUS or i % 2:
        return 1
    return -1


def discrepancy(unit: QuadraticUnit, table: GFib, i: int, j: int) -> int:
    """floor(beta*(j + G_i)) - floor(beta*j) - G_{i-1}.

    Zero exactly at the self-matching positions; otherwise equal to
    ``mismatch_epsilon(unit, i)``.
    """
    _require(table, unit, i)
    return unit.floor_mul(j + table[i]) - unit.floor_mul(j) - table[i - 1]


def is_mismatch(unit: QuadraticUnit, table: GFib, i: int, j: int) -> bool:
    """Exact membership test, decided on the fractional part of j*beta
    without evaluating the discrepancy.

    Family a, even i: mismatch iff frac(j*beta) < beta**i.
    Family a odd i, and family b: mismatch iff frac(j*beta) >= 1 - beta**i.
    """
    _require(table, unit, i)
    f = unit.floor_mul(j)
    p = beta_pow(unit, table, i)
    if unit.family is Family.PLUS and i % 2 == 0:
        return unit.pair_sign(-f - p.a, j - p.b) < 0
    return unit.pair_sign(-f - 1 + p.a, j + p.b) >= 0


def mismatch_set(unit: QuadraticUnit, table: GFib, i: int, k_lo: int, k_hi: int) -> list[MismatchRecord]:
    """Closed-form enumeration of the exceptional positions for indices
    k_lo..k_hi, sorted by position.

    Family a: j = k*G_{i+1} + floor(k*beta)*G_i for k != 0; the k = 0
    slot contributes 0 at even i and the extra element -G_i at odd i.
    Family b: j = k*G_{i+1} - (floor(k*beta) + 1)*G_i for every k.
    """
    _require(table, unit, i, need_next=True)
    if k_lo > k_hi:
        raise ValueError(f"index range {k_lo}..{k_hi} is empty")
    eps = mismatch_epsilon(unit, i)
    succ, cur = table[i + 1], table[i]
    records = []
    for k in range(k_lo, k_hi + 1):
        if unit.family is Family.MINUS:
            j = k * succ - (unit.floor_mul(k) + 1) * cur
            records.append(MismatchRecord(j, k, eps))
        elif k != 0:
            j = k * succ + unit.floor_mul(k) * cur
            records.append(MismatchRecord(j, k, eps))
        elif i % 2:
            records.append(MismatchRecord(-cur, None, eps))
        else:
            records.append(MismatchRecord(0, 0, eps))
    records.sort(key=lambda r: r.j)
    return records


def recover_k(unit: QuadraticUnit, table: GFib, i: int, j: int) -> Optional[int]:
    """Invert the enumeration: the index k whose closed-form position is j.

    Returns ``None`` for the extra element -G_i (family a, odd i) and
    raises :class:`NotAMismatch` when j is not exceptional at level i.
    """
    _require(table, unit, i, need_next=True)
    if not is_mismatch(unit, table, i, j):
        raise NotAMismatch(f"position {j} matches at level {i}")
    succ, cur = table[i + 1], table[i]
    if unit.family is Family.PLUS and i % 2 and j == -cur:
        return None
    k = (beta_pow(unit, table, i) * j).ceil()
    if unit.family is Family.PLUS:
        assert k != 0 or i % 2 == 0
        assert k * succ + unit.floor_mul(k) * cur == j
    else:
        assert k * succ - (unit.floor_mul(k) + 1) * cur == j
    return k


def coverage_k(unit: QuadraticUnit, table: GFib, i: int, n: int) -> int:
    """Index bound K: every exceptional position in [-n, n] is produced
    by some |k| <= K.  The +2 margin absorbs the bounded fractional
    corrections of the enumeration."""
    _require(table, unit, i)
    return (beta_pow(unit, table, i) * (n + table[i])).ceil() + 2


def brute_force_mismatches(unit: QuadraticUnit, table: GFib, i: int, j_lo: int, j_hi: int) -> list[tuple[int, int]]:
    """Oracle scan: (j, discrepancy) for every exceptional j in
    [j_lo, j_hi], computed purely from floors with no closed forms."""
    _require(table, unit, i)
    out = []
    shift, drop = table[i], table[i - 1]
    fm = unit.floor_mul
    for j in range(j_lo, j_hi + 1):
        e = fm(j + shift) - fm(j) - drop
        if e:
            out.append((j, e))
    return out


def _count_mismatches(unit: QuadraticUnit, table: GFib, i: int, j_lo: int, j_hi: int) -> int:
    """Exceptional-position count over [j_lo, j_hi] by an incremental
    floor walk.

    Invariant: f == floor(j*beta) at the top of each step.  Advancing j
    by one advances the fractional part by beta, so the carry decision
    and the membership test are both exact radical-sign evaluations;
    the walk agrees with is_mismatch pointwise (property-tested).
    """
    if j_lo > j_hi:
        return 0
    p = beta_pow(unit, table, i)
    m = unit.m
    disc = unit.D
    plus = unit.family is Family.PLUS
    below = plus and i % 2 == 0
    if below:
        # mismatch iff frac + (ca + cb*beta) < 0, i.e. frac < beta**i
        ca, cb = -p.a, -p.b
    else:
        # mismatch iff frac + (ca + cb*beta) >= 0, i.e. frac >= 1 - beta**i
        ca, cb = p.a - 1, p.b

    def sgn(x: int, y: int) -> int:
        if plus:
            half = 2 * x - y * m
            c = y
        else:
            half = 2 * x + y * m
            c = -y
        if c == 0:
            return (half > 0) - (half < 0)
        if half == 0:
            return 1 if c > 0 else -1
        if half > 0:
            if c > 0:
                return 1
            return 1 if half * half > c * c * disc else -1
        if c < 0:
            return -1
        return 1 if half * half < c * c * disc else -1

    f = unit.floor_mul(j_lo)
    count = 0
    for j in range(j_lo, j_hi + 1):
        s = sgn(ca - f, cb + j)
        if below:
            if s < 0:
                count += 1
        elif s >= 0:
            count += 1
        if j < j_hi and sgn(-f - 1, j + 1) >= 0:
            f += 1
    return count


def frequency_scan(unit: QuadraticUnit, table: GFib, i: int, n: int) -> ScanSummary:
    """Exact share of exceptional positions among j in [-n, n]."""
    if n < 0:
        raise ValueError(f"window radius must be >= 0, got {n}")
    _require(table, unit, i)
    count = _count_mismatches(unit, table, i, -n, n)
    total = 2 * n + 1
    return ScanSummary(
        i=i,
        window=(-n, n),
        mismatch_count=count,
        frequency=Fraction(count, total),
        target=unit.beta_approx() ** i,
    )
