"""Range scans over the global claims: the 6m ceiling and its equality set,
the <4 ratio for odd irreducible products, the Lucas maximum at m = 6, the
filter diagnostics, and the parity/divisibility laws.

Ratios are exact integer pairs throughout; floating point never enters a
stored value, so 6m equality cannot alias.  Hard assertions raise
ClaimViolationError with the offending evidence attached.  Scan workers
share nothing; records reach the sink in ascending m regardless of the
worker count, so identical arguments produce byte-identical reports.
"""

from __future__ import annotations

import csv
import enum
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import ClaimViolationError, DomainError
from .fibmod import Method
from .numth import _factor_pairs, primes_up_to
from .periods import (
    PrimeClass,
    _classify,
    _pisano_value,
    lucas_period,
    seed_prime_period_cache,
    _prime_period_value,
)
from .theorems import FilterReport, theorem1_period, theorem2_period


class Flag(enum.Enum):
    """Per-record markers attached during scans."""

    RATIO_SIX = "RatioSix"
    NEW_MAXIMUM = "NewMaximum"
    FILTER_DISAGREEMENT = "FilterDisagreement"
    LIFT_GUARD_TRIGGERED = "LiftGuardTriggered"


_FLAG_ORDER = (
    Flag.RATIO_SIX,
    Flag.NEW_MAXIMUM,
    Flag.FILTER_DISAGREEMENT,
    Flag.LIFT_GUARD_TRIGGERED,
)

CSV_COLUMNS = ("m", "period", "ratio_num", "ratio_den", "method", "flags")


@dataclass(frozen=True)
class ScanRecord:
    """One scanned modulus: its period, the exact ratio, and markers.

    ratio_num/ratio_den are period and m verbatim (never reduced, never
    floats) so equality tests against 6m stay exact.
    """

    m: int
    period: int
    method: Method
    class_summary: tuple[PrimeClass, ...]
    flags: frozenset[Flag]

    @property
    def ratio_num(self) -> int:
        return self.period

    @property
    def ratio_den(self) -> int:
        return self.m

    def flags_text(self) -> str:
        return ";".join(f.value for f in _FLAG_ORDER if f in self.flags)

    def csv_row(self) -> tuple:
        return (self.m, self.period, self.ratio_num, self.ratio_den,
                self.method.value, self.flags_text())

    def json_obj(self) -> dict:
        return dict(zip(CSV_COLUMNS, self.csv_row()))


def _classes_of(m: int, seed: int | None = None) -> tuple[PrimeClass, ...]:
    if m == 1:
        return ()
    present = {_classify(p) for p, _ in _factor_pairs(m, seed)}
    return tuple(c for c in PrimeClass if c in present)


# ---------------------------------------------------------------------------
# parallel prime-period precomputation

def _prime_period_slice(primes: list[int]) -> list[tuple[int, int]]:
    return [(p, _prime_period_value(p)) for p in primes]


def _prime_period_table(limit: int, workers: int) -> dict[int, int]:
    """h(p) for every prime p <= limit, split striped across workers."""
    primes = primes_up_to(limit)
    if workers <= 1:
        return {p: _prime_period_value(p) for p in primes}
    slices = [primes[i::workers] for i in range(workers)]
    table: dict[int, int] = {}
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_prime_period_slice, slices):
            table.update(part)
    return table


# ---------------------------------------------------------------------------
# scan summaries

@dataclass(frozen=True)
class RatioScanSummary:
    limit: int
    records: int
    max_ratio: tuple[int, int]   # (h(m), m) at the first maximum
    attained: tuple[int, ...]    # every m achieving the maximum ratio
    equality_set: tuple[int, ...]
    lift_guard_count: int

    @property
    def max_at(self) -> int:
        return self.attained[0]

    def to_dict(self) -> dict:
        return {
            "suite": "ratio", "limit": self.limit, "records": self.records,
            "max_ratio_num": self.max_ratio[0], "max_ratio_den": self.max_ratio[1],
            "attained": list(self.attained),
            "equality_set": list(self.equality_set),
            "lift_guard_count": self.lift_guard_count,
        }


@dataclass(frozen=True)
class IrreducibleScanSummary:
    limit: int
    checked: int
    max_ratio: tuple[int, int]
    max_at: int

    def to_dict(self) -> dict:
        return {
            "suite": "irreducible", "limit": self.limit, "checked": self.checked,
            "max_ratio_num": self.max_ratio[0], "max_ratio_den": self.max_ratio[1],
            "max_at": self.max_at,
        }


@dataclass(frozen=True)
class LucasScanSummary:
    limit: int
    records: int
    max_ratio: tuple[int, int]
    attained: tuple[int, ...]    # every m achieving the maximum ratio

    def to_dict(self) -> dict:
        return {
            "suite": "lucas", "limit": self.limit, "records": self.records,
            "max_ratio_num": self.max_ratio[0], "max_ratio_den": self.max_ratio[1],
            "attained": list(self.attained),
        }


@dataclass(frozen=True)
class FilterScanSummary:
    prime_limit: int
    reports: tuple[FilterReport, ...]

    @property
    def total(self) -> int:
        return len(self.reports)

    @property
    def agreements(self) -> int:
        return sum(1 for r in self.reports if r.agrees)

    @property
    def disagreements(self) -> tuple[FilterReport, ...]:
        return tuple(r for r in self.reports if not r.agrees)

    @property
    def agreement_rate(self) -> tuple[int, int]:
        return (self.agreements, self.total)

    def to_dict(self) -> dict:
        return {
            "suite": "filters", "prime_limit": self.prime_limit, "total": self.total,
            "agreements": self.agreements,
            "disagreements": [filter_report_obj(r) for r in self.disagreements],
        }


@dataclass(frozen=True)
class WallScanSummary:
    limit: int
    divisor_limit: int
    parity_checked: int
    divisibility_checked: int

    def to_dict(self) -> dict:
        return {
            "suite": "wall", "limit": self.limit, "divisor_limit": self.divisor_limit,
            "parity_checked": self.parity_checked,
            "divisibility_checked": self.divisibility_checked,
        }


# ---------------------------------------------------------------------------
# scans

def _check_limit(limit: int) -> None:
    if limit < 1:
        raise DomainError(f"scan limit {limit} must be >= 1")


def _expected_equality_set(limit: int) -> list[int]:
    out, v = [], 10
    while v <= limit:
        out.append(v)
        v *= 5
    return out


def ratio_scan(limit: int, emit=None, *, workers: int = 1,
               seed: int | None = None) -> RatioScanSummary:
    """h(m) for 1 <= m <= limit, asserting h(m) <= 6m everywhere and that
    equality happens exactly on {2 * 5^n}.  ``emit`` receives one ScanRecord
    per m in ascending order."""
    _check_limit(limit)
    if workers > 1:
        seed_prime_period_cache(_prime_period_table(limit, workers))
    best_num, best_den = 0, 1
    attained: list[int] = []
    equality: list[int] = []
    guard_count = 0
    for m in range(1, limit + 1):
        period, escalations, method = _pisano_value(m, seed)
        if period > 6 * m:
            raise ClaimViolationError(
                f"6m bound violated: h({m}) = {period} > {6 * m}",
                details=[(m, period)],
            )
        flags = set()
        if period == 6 * m:
            equality.append(m)
            flags.add(Flag.RATIO_SIX)
        cross_new, cross_best = period * best_den, best_num * m
        if cross_new > cross_best:
            best_num, best_den = period, m
            attained = [m]
            flags.add(Flag.NEW_MAXIMUM)
        elif cross_new == cross_best:
            attained.append(m)
        if escalations:
            guard_count += 1
            flags.add(Flag.LIFT_GUARD_TRIGGERED)
        if emit is not None:
            emit(ScanRecord(m, period, method, _classes_of(m, seed),
                            frozenset(flags)))
    expected = _expected_equality_set(limit)
    if equality != expected:
        raise ClaimViolationError(
            f"6m equality set {equality} differs from expected {expected}",
            details=[("equality_set", equality, expected)],
        )
    return RatioScanSummary(limit, limit, (best_num, best_den),
                            tuple(attained), tuple(equality), guard_count)


def irreducible_product_scan(limit: int, emit=None, *,
                             seed: int | None = None) -> IrreducibleScanSummary:
    """Over m <= limit built only from odd primes = +-2 (mod 5), assert the
    strict bound h(m) < 4m (checked as 4m - h(m) > 0, exactly)."""
    _check_limit(limit)
    checked = 0
    best_num, best_den, best_at = 0, 1, 0
    for m in range(1, limit + 1):
        if m == 1:
            pairs = []
        else:
            pairs = _factor_pairs(m, seed)
        if not all(p != 2 and p % 5 in (2, 3) for p, _ in pairs):
            continue
        period, _, method = _pisano_value(m, seed)
        if 4 * m - period <= 0:
            raise ClaimViolationError(
                f"irreducible-product bound violated: h({m}) = {period} >= {4 * m}",
                details=[(m, period)],
            )
        checked += 1
        flags = set()
        if period * best_den > best_num * m:
            best_num, best_den, best_at = period, m, m
            flags.add(Flag.NEW_MAXIMUM)
        if emit is not None:
            emit(ScanRecord(m, period, method,
                            (PrimeClass.IRREDUCIBLE,) if pairs else (),
                            frozenset(flags)))
    return IrreducibleScanSummary(limit, checked, (best_num, best_den), best_at)


def lucas_ratio_scan(limit: int, emit=None) -> LucasScanSummary:
    """Maximum Lucas-period ratio over m <= limit; for limit >= 6 asserts the
    maximum is exactly 4, attained only at m = 6."""
    _check_limit(limit)
    best_num, best_den = 0, 1
    attained: list[int] = []
    for m in range(1, limit + 1):
        result = lucas_period(m)
        period = result.period
        cross_new, cross_best = period * best_den, best_num * m
        flags = set()
        if cross_new > cross_best:
            best_num, best_den = period, m
            attained = [m]
            flags.add(Flag.NEW_MAXIMUM)
        elif cross_new == cross_best:
            attained.append(m)
        if emit is not None:
            emit(ScanRecord(m, period, result.method, _classes_of(m),
                            frozenset(flags)))
    if limit >= 6 and (best_num != 4 * best_den or attained != [6]):
        raise ClaimViolationError(
            f"Lucas maximum expected 4 at m = 6 only; got {best_num}/{best_den}"
            f" attained at {attained}",
            details=[("lucas_max", best_num, best_den, attained)],
        )
    return LucasScanSummary(limit, limit, (best_num, best_den), tuple(attained))


def filter_agreement_scan(prime_limit: int) -> FilterScanSummary:
    """Run the divisor filters on every applicable prime <= prime_limit and
    tally agreement with the true period.  Disagreements are listed, never
    suppressed and never asserted away; only h(p) membership in the divisor
    set (the divisibility theorem itself) is enforced."""
    if prime_limit < 0:
        raise DomainError(f"prime limit {prime_limit} must be >= 0")
    reports: list[FilterReport] = []
    for p in primes_up_to(prime_limit):
        if p in (2, 5):
            continue
        report = theorem1_period(p) if p % 5 in (2, 3) else theorem2_period(p)
        if not report.true_period_in_divisors:
            raise ClaimViolationError(
                f"h({p}) = {report.true_period} is not a divisor of the class"
                f" bound {report.bound}",
                details=[(p, report.true_period, report.bound)],
            )
        reports.append(report)
    return FilterScanSummary(prime_limit, tuple(reports))


def wall_property_scan(limit: int, divisor_limit: int | None = None) -> WallScanSummary:
    """Assert h(m) is even for 2 < m <= limit and h(n) | h(m) whenever
    n | m <= divisor_limit (defaults to limit)."""
    _check_limit(limit)
    div_limit = limit if divisor_limit is None else divisor_limit
    if div_limit > limit:
        raise DomainError("divisor_limit cannot exceed limit")
    periods = [0] * (limit + 1)
    for m in range(1, limit + 1):
        periods[m] = _pisano_value(m)[0]

    parity_violations = [(m, periods[m]) for m in range(3, limit + 1)
                         if periods[m] % 2]
    if parity_violations:
        raise ClaimViolationError(
            f"h(m) parity violated at {parity_violations[:10]}",
            details=parity_violations,
        )

    divisibility_checked = 0
    divisibility_violations = []
    for n in range(1, div_limit + 1):
        hn = periods[n]
        for m in range(2 * n, div_limit + 1, n):
            divisibility_checked += 1
            if periods[m] % hn:
                divisibility_violations.append((n, m, hn, periods[m]))
    if divisibility_violations:
        raise ClaimViolationError(
            f"h(n) | h(m) violated at {divisibility_violations[:10]}",
            details=divisibility_violations,
        )
    return WallScanSummary(limit, div_limit, max(limit - 2, 0), divisibility_checked)


# ---------------------------------------------------------------------------
# report sinks (CSV and JSON, both UTF-8 with LF endings)

class CsvRecordSink:
    """Streams ScanRecords as CSV rows; header written up front."""

    def __init__(self, fileobj):
        self._writer = csv.writer(fileobj, lineterminator="\n")
        self._writer.writerow(CSV_COLUMNS)

    def __call__(self, record: ScanRecord) -> None:
        self._writer.writerow(record.csv_row())

    def close(self) -> None:
        pass


class JsonRecordSink:
    """Streams ScanRecords as a JSON array, one object per line."""

    def __init__(self, fileobj):
        self._file = fileobj
        self._count = 0
        self._file.write("[")

    def __call__(self, record: ScanRecord) -> None:
        prefix = "\n" if self._count == 0 else ",\n"
        self._file.write(prefix + json.dumps(record.json_obj()))
        self._count += 1

    def close(self) -> None:
        self._file.write("\n]\n" if self._count else "]\n")


FILTER_CSV_COLUMNS = ("prime", "bound", "true_period", "filter_answer", "agrees",
                      "surviving", "all_divisors")


def filter_report_obj(report: FilterReport) -> dict:
    return {
        "prime": report.prime,
        "bound": report.bound,
        "true_period": report.true_period,
        "filter_answer": report.filter_answer,
        "agrees": report.agrees,
        "surviving": list(report.surviving),
        "all_divisors": list(report.all_divisors),
    }


def write_filter_reports_csv(reports, fileobj) -> None:
    writer = csv.writer(fileobj, lineterminator="\n")
    writer.writerow(FILTER_CSV_COLUMNS)
    for r in reports:
        writer.writerow((
            r.prime, r.bound, r.true_period,
            "" if r.filter_answer is None else r.filter_answer,
            str(r.agrees).lower(),
            ";".join(str(d) for d in r.surviving),
            ";".join(str(d) for d in r.all_divisors),
        ))


def write_filter_reports_json(reports, fileobj) -> None:
    fileobj.write("[")
    for i, r in enumerate(reports):
        fileobj.write(("\n" if i == 0 else ",\n") + json.dumps(filter_report_obj(r)))
    fileobj.write("\n]\n" if reports else "]\n")
