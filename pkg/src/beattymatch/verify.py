"""Cross-checking suites behind the ``verify`` command.

Every closed-form claim of the package is paired with an independent
route: discrepancy scans against value-range and membership criteria,
predicted position sets against brute-force floors, window frequencies
against their limit, power coordinates against folded ring products,
and the cut-and-project identities against direct enumeration.  A
perturbation hook lets the command demonstrate that the checks can
actually fail.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from . import beatty, cutproject
from .gfib import GFib, verify_power_identity
from .units import Family, QuadraticUnit, beta_pow, make_unit

SUITES = (
    "range-law",
    "criterion-equivalence",
    "set-equivalence",
    "frequency",
    "power-identities",
    "sigma-identities",
)

DEFAULT_I_MAX = 12
DEFAULT_WINDOW = 10_000
DEFAULT_FREQ_N = 100_000
DEFAULT_FREQ_TOL = 1e-3
DEFAULT_B_SPAN = 200

EpsFn = Callable[[QuadraticUnit, GFib, int, int], int]


@dataclass(frozen=True)
class SuiteResult:
    name: str
    checked: int
    failures: int
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.failures == 0


def default_units() -> list[QuadraticUnit]:
    """The standard verification grid: three units of each family."""
    grid = [make_unit(Family.PLUS, m) for m in (1, 2, 3)]
    grid += [make_unit(Family.MINUS, m) for m in (3, 4, 5)]
    return grid


def _fault_wrapper(fault_j: int) -> EpsFn:
    # perturbation hook: corrupt the discrepancy at one position so the
    # equivalence suite has something to catch
    def eps(unit: QuadraticUnit, table: GFib, i: int, j: int) -> int:
        base = beatty.discrepancy(unit, table, i, j)
        return base + 1 if j == fault_j else base

    return eps


def _suite_range_law(units: Sequence[QuadraticUnit], tables: dict, i_max: int, window: int) -> SuiteResult:
    checked = failures = 0
    for u in units:
        t = tables[u]
        for i in range(1, i_max + 1):
            allowed = {0, beatty.mismatch_epsilon(u, i)}
            for j in range(-window, window + 1):
                checked += 1
                if beatty.discrepancy(u, t, i, j) not in allowed:
                    failures += 1
    return SuiteResult("range-law", checked, failures)


def _suite_criterion_equivalence(
    units: Sequence[QuadraticUnit], tables: dict, i_max: int, window: int, eps_fn: EpsFn
) -> SuiteResult:
    checked = failures = 0
    for u in units:
        t = tables[u]
        for i in range(1, i_max + 1):
            for j in range(-window, window + 1):
                checked += 1
                if (eps_fn(u, t, i, j) != 0) != beatty.is_mismatch(u, t, i, j):
                    failures += 1
    return SuiteResult("criterion-equivalence", checked, failures)


def _suite_set_equivalence(units: Sequence[QuadraticUnit], tables: dict, i_max: int, window: int) -> SuiteResult:
    checked = failures = 0
    for u in units:
        t = tables[u]
        for i in range(1, i_max + 1):
            brute = beatty.brute_force_mismatches(u, t, i, -window, window)
            cap = beatty.coverage_k(u, t, i, window)
            records = beatty.mismatch_set(u, t, i, -cap, cap)
            predicted = [(r.j, r.epsilon) for r in records if -window <= r.j <= window]
            checked += len(brute) + 1
            if predicted != brute:
                failures += 1
    return SuiteResult("set-equivalence", checked, failures)


def _suite_frequency(
    units: Sequence[QuadraticUnit], tables: dict, i_max: int, n: int, tol: float
) -> SuiteResult:
    checked = failures = 0
    worst = 0.0
    for u in units:
        t = tables[u]
        for i in range(1, i_max + 1):
            summary = beatty.frequency_scan(u, t, i, n)
            gap = abs(float(summary.frequency) - u.beta_approx() ** i)
            worst = max(worst, gap)
            checked += 1
            if gap > tol:
                failures += 1
    return SuiteResult("frequency", checked, failures, note=f"max-gap={worst:.2e}")


def _suite_power_identities(units: Sequence[QuadraticUnit], tables: dict, i_cap: int = 60) -> SuiteResult:
    checked = failures = 0
    for u in units:
        t = tables[u]
        top = min(i_cap, len(t) - 1)
        for i in range(1, top + 1):
            checked += 1
            if not verify_power_identity(u, t, i):
                failures += 1
    return SuiteResult("power-identities", checked, failures)


def _conjugate_preimage(unit: QuadraticUnit, p: cutproject.LatticePoint) -> tuple[int, int]:
    # inverse of scale_by_conjugate on coordinates
    if unit.family is Family.PLUS:
        return p.b + unit.m * p.a, p.a
    return p.b + unit.m * p.a, -p.a


def _sample_windows(unit: QuadraticUnit, table: GFib) -> list[cutproject.Window]:
    zero = unit.element(0, 0)
    one = unit.element(1, 0)
    beta = unit.element(0, 1)
    return [
        cutproject.Window(zero, one),
        cutproject.Window(-one, zero),
        cutproject.Window(zero, beta),
        cutproject.Window(beta - 1, beta),
        cutproject.Window(zero, beta_pow(unit, table, 2)),
    ]


def _suite_sigma_identities(
    units: Sequence[QuadraticUnit], tables: dict, b_span: int, bridge_span: int = 500
) -> SuiteResult:
    checked = failures = 0
    for u in units:
        t = tables[u]
        zero = u.element(0, 0)
        one = u.element(1, 0)

        # closed form for the window [0, 1)
        w01 = cutproject.Window(zero, one)
        checked += 1
        if cutproject.cut_points(u, w01, -b_span, b_span) != cutproject.unit_interval_points(u, -b_span, b_span):
            failures += 1

        for w in _sample_windows(u, t):
            src = cutproject.cut_points(u, w, -b_span, b_span)

            # integer translation of the window moves every point with it
            for shift in (-1, 3):
                checked += 1
                moved = cutproject.cut_points(u, w.shifted(shift), -b_span, b_span)
                if moved != cutproject.translate(src, shift):
                    failures += 1

            # conjugate scaling carries the set onto the beta-scaled window;
            # compare two-sided on the exactly covered coordinate range
            image = cutproject.scale_by_conjugate(u, src)
            checked += 1
            if image:
                b_vals = [q.b for q in image]
                target = cutproject.cut_points(u, w.scaled_by_beta(), min(b_vals), max(b_vals))
                image_set = set(image)
                target_set = set(target)
                ok = all(q in target_set for q in image)
                for q in target:
                    _, pre_b = _conjugate_preimage(u, q)
                    if -b_span <= pre_b <= b_span and q not in image_set:
                        ok = False
                if not ok:
                    failures += 1

        # window [0, beta**i) at even i reproduces the exceptional positions
        if u.family is Family.PLUS:
            for i in (2, 4):
                w = cutproject.Window(zero, beta_pow(u, t, i))
                got = [p.b for p in cutproject.cut_points(u, w, -bridge_span, bridge_span)]
                cap = beatty.coverage_k(u, t, i, bridge_span)
                expect = [
                    r.j
                    for r in beatty.mismatch_set(u, t, i, -cap, cap)
                    if -bridge_span <= r.j <= bridge_span
                ]
                checked += 1
                if got != expect:
                    failures += 1
    return SuiteResult("sigma-identities", checked, failures)


def run_suites(
    names: Optional[Iterable[str]] = None,
    units: Optional[Sequence[QuadraticUnit]] = None,
    i_max: int = DEFAULT_I_MAX,
    window: int = DEFAULT_WINDOW,
    freq_n: int = DEFAULT_FREQ_N,
    freq_i_max: int = 10,
    freq_tol: float = DEFAULT_FREQ_TOL,
    b_span: int = DEFAULT_B_SPAN,
    fault_j: Optional[int] = None,
) -> list[SuiteResult]:
    """Run the named suites (all of them by default) over the unit grid."""
    chosen = list(names) if names is not None else list(SUITES)
    for name in chosen:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}")
    grid = list(units) if units is not None else default_units()
    tables = {u: GFib.build(u, max(64, i_max + 2)) for u in grid}
    eps_fn: EpsFn = beatty.discrepancy if fault_j is None else _fault_wrapper(fault_j)

    results = []
    for name in chosen:
        if name == "range-law":
            results.append(_suite_range_law(grid, tables, i_max, window))
        elif name == "criterion-equivalence":
            results.append(_suite_criterion_equivalence(grid, tables, i_max, window, eps_fn))
        elif name == "set-equivalence":
            results.append(_suite_set_equivalence(grid, tables, i_max, window))
        elif name == "frequency":
            results.append(_suite_frequency(grid, tables, freq_i_max, freq_n, freq_tol))
        elif name == "power-identities":
            results.append(_suite_power_identities(grid, tables))
        else:
            results.append(_suite_sigma_identities(grid, tables, b_span))
    return results


def render_report(results: Sequence[SuiteResult]) -> str:
    """Fixed-width textual report, one line per suite."""
    lines = [f"{'suite':<24} {'checked':>10} {'failures':>9}  status"]
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        tail = f"  {r.note}" if r.note else ""
        lines.append(f"{r.name:<24} {r.checked:>10} {r.failures:>9}  {status}{tail}")
    overall = "PASS" if all(r.passed for r in results) else "FAIL"
    lines.append(f"overall: {overall}")
    return "\n".join(lines) + "\n"
