"""Resonance identity checks for non-contractible closed geodesics.

Each prime geodesic enters through purely local data: initial Morse index,
mean index, analytical period and the local homological type numbers of its
odd iterates within one period.  The identity under test says that the sum
over geodesics of (mean Euler number) / (mean index) equals the average
equivariant Betti number (n+1)/(2n) of the non-contractible component.

The analytical period is taken as input: computing it would require the
nullities of all iterates, which is outside this engine's scope.  Optional
nullity data is stored untouched, for the record only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import Mapping, Sequence

from .ring import InputError
from .series import average_alternating, lg_series


@dataclass(frozen=True)
class GeodesicRecord:
    """Index and type-number data of one prime closed geodesic.

    ``type_numbers`` maps (m, l) to the l-th type number of the (2m-1)-st
    iterate, for m in 1..period/2; entries repeat with period ``period`` in
    the iterate, which is what makes the truncated Morse sums computable.
    """

    label: str
    initial_index: int
    mean_index: Fraction
    period: int
    type_numbers: Mapping[tuple[int, int], int] = field(default_factory=dict)
    nullities: tuple[int, ...] | None = None
    nondegenerate: bool | None = None

    def __post_init__(self) -> None:
        if self.initial_index < 0:
            raise InputError(f"{self.label}: initial index must be nonnegative")
        mean = Fraction(self.mean_index)
        object.__setattr__(self, "mean_index", mean)
        if mean <= 0:
            raise InputError(f"{self.label}: mean index must be positive, got {mean}")
        if self.period <= 0 or self.period % 2:
            raise InputError(f"{self.label}: period must be a positive even integer")
        for (m, l), k in self.type_numbers.items():
            if not 1 <= m <= self.period // 2:
                raise InputError(f"{self.label}: iterate slot m={m} outside 1..{self.period // 2}")
            if l < 0:
                raise InputError(f"{self.label}: type-number degree l={l} is negative")
            if k < 0:
                raise InputError(f"{self.label}: type number k={k} is negative")


def nondegenerate_record(label: str, initial_index: int, mean_index) -> GeodesicRecord:
    """Record of a geodesic all of whose odd iterates are nondegenerate."""
    return GeodesicRecord(
        label,
        initial_index,
        Fraction(mean_index),
        period=2,
        type_numbers={(1, 0): 1},
        nondegenerate=True,
    )


def _check_l_range(rec: GeodesicRecord, n: int) -> None:
    for (_, l) in rec.type_numbers:
        if l > 4 * n:
            raise InputError(
                f"{rec.label}: type-number degree l={l} outside [0, {4 * n}]"
            )


def mean_euler(rec: GeodesicRecord, n: int) -> Fraction:
    """Period-averaged alternating sum of the type numbers of odd iterates."""
    _check_l_range(rec, n)
    sign_base = rec.initial_index % 2
    total = 0
    for (m, l), k in rec.type_numbers.items():
        total += -k if (l + sign_base) % 2 else k
    return Fraction(total, rec.period)


@dataclass(frozen=True)
class ResonanceReport:
    per_geodesic: dict[str, Fraction]  # mean Euler number of each geodesic
    total: Fraction                    # sum of (mean Euler)/(mean index)
    target: Fraction
    passed: bool
    vacuous: bool = False


def resonance_check(records: Sequence[GeodesicRecord], n: int) -> ResonanceReport:
    """Exact comparison of the weighted sum against (n+1)/(2n)."""
    target = Fraction(n + 1, 2 * n)
    if target != average_alternating(lg_series(n)):
        raise AssertionError("closed-form target disagrees with the series limit")
    if not records:
        return ResonanceReport({}, Fraction(0), target, passed=False, vacuous=True)
    labels = [r.label for r in records]
    if len(set(labels)) != len(labels):
        raise InputError(f"duplicate geodesic labels in {labels}")
    per = {r.label: mean_euler(r, n) for r in records}
    total = sum((per[r.label] / r.mean_index for r in records), Fraction(0))
    return ResonanceReport(per, total, target, passed=total == target)


@dataclass(frozen=True)
class NondegenerateReport:
    total: Fraction
    target: Fraction
    passed: bool
    consistent_with_full: bool


def nondegenerate_check(records: Sequence[GeodesicRecord], n: int) -> NondegenerateReport:
    """Specialised identity for all-nondegenerate data: signed reciprocal mean
    indices must sum to (n+1)/n, exactly twice the general sum."""
    for r in records:
        expected = {(1, 0): 1}
        positive = {key: k for key, k in r.type_numbers.items() if k}
        if r.period != 2 or positive != expected:
            raise InputError(
                f"{r.label}: not nondegenerate (period {r.period}, "
                f"type numbers {dict(r.type_numbers)})"
            )
    total = sum(
        (Fraction(-1 if r.initial_index % 2 else 1, 1) / r.mean_index for r in records),
        Fraction(0),
    )
    target = Fraction(n + 1, n)
    full = resonance_check(records, n) if records else None
    consistent = full is not None and total == 2 * full.total
    return NondegenerateReport(total, target, passed=total == target, consistent_with_full=consistent)


def _rounded_linear_index(rec: GeodesicRecord, iterate: int) -> int:
    """Nearest integer to iterate * mean_index with the parity of the initial
    index, ties broken downward."""
    t = rec.mean_index * iterate
    parity = rec.initial_index % 2
    low = floor(t)
    if low % 2 != parity:
        low -= 1
    high = low + 2
    return low if t - low <= high - t else high


def _index_at(
    rec: GeodesicRecord,
    n: int,
    iterate: int,
    model,
) -> int:
    if isinstance(model, str):
        if model != "rounded-linear":
            raise InputError(f"unknown index model {model!r}")
        value = _rounded_linear_index(rec, iterate)
    else:
        position = (iterate - 1) // 2
        if position >= len(model):
            raise InputError(
                f"{rec.label}: explicit index sequence too short for iterate {iterate}"
            )
        value = model[position]
    if value % 2 != rec.initial_index % 2:
        raise InputError(
            f"{rec.label}: index {value} at iterate {iterate} breaks the parity rule"
        )
    if abs(Fraction(value) - rec.mean_index * iterate) > 2 * n:
        raise InputError(
            f"{rec.label}: index {value} at iterate {iterate} deviates from "
            f"{rec.mean_index * iterate} by more than {2 * n}"
        )
    return value


def index_sequence(rec: GeodesicRecord, n: int, model, count: int) -> list[int]:
    """Morse indices of the first ``count`` odd iterates 1, 3, 5, ...

    ``model`` is either the string "rounded-linear" or an explicit list of
    indices for the odd iterates; both are validated against the parity rule
    and the linear-growth deviation bound.
    """
    if count < 0:
        raise InputError(f"count must be nonnegative, got {count}")
    return [_index_at(rec, n, 2 * j + 1, model) for j in range(count)]


@dataclass(frozen=True)
class MorseTruncation:
    counts: tuple[int, ...]      # w_h for h = 0..q
    alternating_sum: int         # sum of (-1)^h w_h
    average: Fraction | None     # alternating_sum / q; None when q = 0


def morse_truncation(
    records: Sequence[GeodesicRecord],
    n: int,
    q: int,
    model="rounded-linear",
) -> MorseTruncation:
    """Truncated Morse counts w_h through degree q and their alternating mean.

    Each geodesic contributes k_l at degree l + (index of the iterate), with
    type numbers repeating along the period.  Iterates stop once the
    deviation bound puts every later index above q.  ``model`` may be a
    mapping from labels to explicit index sequences.
    """
    if q < 0:
        raise InputError(f"truncation degree must be nonnegative, got {q}")
    counts = [0] * (q + 1)
    for rec in records:
        _check_l_range(rec, n)
        rec_model = model[rec.label] if isinstance(model, Mapping) else model
        for (m, l), k in rec.type_numbers.items():
            if not k:
                continue
            s = 0
            while True:
                iterate = 2 * m - 1 + s * rec.period
                if rec.mean_index * iterate - 2 * n > q:
                    break
                h = l + _index_at(rec, n, iterate, rec_model)
                if h <= q:
                    counts[h] += k
                s += 1
    alternating = sum(-c if h % 2 else c for h, c in enumerate(counts))
    average = Fraction(alternating, q) if q else None
    return MorseTruncation(tuple(counts), alternating, average)


def record_from_dict(obj: dict) -> GeodesicRecord:
    """Build a record from the JSON object layout."""
    try:
        type_numbers = {
            (entry["m"], entry["l"]): entry["k"] for entry in obj.get("type_numbers", [])
        }
        nullities = tuple(obj["nullities"]) if "nullities" in obj else None
        return GeodesicRecord(
            label=obj["label"],
            initial_index=obj["initial_index"],
            mean_index=Fraction(str(obj["mean_index"])),
            period=obj["period"],
            type_numbers=type_numbers,
            nullities=nullities,
            nondegenerate=obj.get("nondegenerate"),
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"malformed geodesic record: {exc}") from exc


def load_problem(obj: dict) -> tuple[int, list[GeodesicRecord]]:
    """Parse {"n": ..., "geodesics": [...]} into validated records."""
    try:
        n = obj["n"]
        geodesics = obj["geodesics"]
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed resonance input: {exc}") from exc
    if not isinstance(n, int) or n < 1:
        raise InputError(f"n must be a positive integer, got {n!r}")
    return n, [record_from_dict(g) for g in geodesics]
