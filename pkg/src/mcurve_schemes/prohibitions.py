"""Flat-file knowledge base of realized and excluded schemes.

One record per line, ``degree;kind;scheme;status;source``.  ``#`` starts a
comment line.  Arithmetic exclusions are recomputable and are not stored;
the file holds constructions and geometric exclusions only.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Optional, Union

from .enumerator import EnumerationResult
from .restrictions import HULL_MAX_DEGREE, Report, check_all
from .schemes import (
    ComplexScheme,
    DegreeError,
    NestlessScheme,
    RealScheme,
    SchemeSyntaxError,
    curve_params,
    format_canonical,
    parse_scheme,
    validate_m_scheme,
)


class DatabaseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class Status(str, enum.Enum):
    REALIZED = "realized"
    EXCLUDED = "excluded"
    OPEN = "open"


@dataclass(frozen=True)
class SchemeRecord:
    degree: int
    kind: str
    scheme: str
    status: Status
    source: str

    @property
    def key(self) -> tuple[int, str, str]:
        return (self.degree, self.kind, self.scheme)


@dataclass(frozen=True)
class LookupResult:
    status: Status
    source: Optional[str] = None
    record: Optional[SchemeRecord] = None

    def __str__(self) -> str:
        if self.status is Status.OPEN:
            return "open"
        return f"{self.status.value}; source: {self.source}"


@dataclass(frozen=True)
class Database:
    records: tuple[SchemeRecord, ...]
    _index: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        for rec in self.records:
            self._index[rec.key] = rec

    def __len__(self) -> int:
        return len(self.records)

    def get(self, degree: int, kind: str, scheme: str) -> Optional[SchemeRecord]:
        return self._index.get((degree, kind, scheme))


def _kind_of(s) -> str:
    return "complex" if isinstance(s, ComplexScheme) else "real"


def _parse_line(raw: str, lineno: int) -> SchemeRecord:
    parts = raw.split(";", 4)
    if len(parts) != 5:
        raise DatabaseError(f"expected 5 ';'-separated fields, got {len(parts)}", lineno)
    degree_s, kind, scheme_s, status_s, source = (x.strip() for x in parts)
    try:
        degree = int(degree_s)
        p = curve_params(degree)
    except (ValueError, DegreeError) as exc:
        raise DatabaseError(f"bad degree {degree_s!r}: {exc}", lineno) from None
    if kind not in ("real", "complex"):
        raise DatabaseError(f"kind must be 'real' or 'complex', got {kind!r}", lineno)
    if status_s not in (Status.REALIZED.value, Status.EXCLUDED.value):
        raise DatabaseError(f"status must be 'realized' or 'excluded', got {status_s!r}", lineno)
    try:
        scheme = parse_scheme(scheme_s, allow_nestless=True)
    except SchemeSyntaxError as exc:
        raise DatabaseError(f"unparsable scheme {scheme_s!r}: {exc}", lineno) from None
    if _kind_of(scheme) != kind:
        raise DatabaseError(f"scheme {scheme_s!r} is not of kind {kind}", lineno)
    count = validate_m_scheme(scheme, p)
    if not count.passed:
        raise DatabaseError(f"not an M-scheme: {count.detail}", lineno)
    if len(source) >= 2 and source[0] == source[-1] == '"':
        source = source[1:-1]
    if not source:
        raise DatabaseError("empty source", lineno)
    return SchemeRecord(degree, kind, format_canonical(scheme), Status(status_s), source)


def load_db(text: Union[str, Iterable[str]]) -> Database:
    lines = text.splitlines() if isinstance(text, str) else list(text)
    records: list[SchemeRecord] = []
    seen: dict[tuple, tuple[int, SchemeRecord]] = {}
    for lineno, raw in enumerate(lines, start=1):
        raw = raw.rstrip("\n")
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        rec = _parse_line(raw, lineno)
        if rec.key in seen:
            first, clash = seen[rec.key]
            what = "contradictory statuses" if clash.status != rec.status else "duplicate record"
            raise DatabaseError(f"{what} for {rec.scheme} (degree {rec.degree}), first on line {first}", lineno)
        seen[rec.key] = (lineno, rec)
        records.append(rec)

    db = Database(tuple(records))
    for rec in records:
        if rec.kind != "complex":
            continue
        cs = parse_scheme(rec.scheme)
        real = db.get(rec.degree, "real", format_canonical(cs.real))
        if rec.status is Status.REALIZED:
            if real is not None and real.status is Status.EXCLUDED:
                raise DatabaseError(
                    f"{rec.scheme} marked realized but its real scheme is excluded", seen[rec.key][0]
                )
            if rec.degree <= HULL_MAX_DEGREE:
                report = check_all(cs, curve_params(rec.degree))
                if not report.arithmetically_admissible:
                    bad = ", ".join(v.rule_id for v in report.failures)
                    raise DatabaseError(
                        f"{rec.scheme} marked realized but fails {bad}", seen[rec.key][0]
                    )
    return db


def default_text() -> str:
    return resources.files(__package__).joinpath("data/default_records.txt").read_text("utf-8")


def default_db() -> Database:
    return load_db(default_text())


def load_db_file(path: Union[str, Path]) -> Database:
    return load_db(Path(path).read_text("utf-8"))


def lookup(db: Database, degree: int, scheme: Union[RealScheme, ComplexScheme, NestlessScheme]) -> LookupResult:
    """Status of ``scheme`` in degree ``degree``; absent keys are open.

    A complex scheme inherits an exclusion recorded for its real scheme.
    """
    rec = db.get(degree, _kind_of(scheme), format_canonical(scheme))
    if rec is not None:
        return LookupResult(rec.status, rec.source, rec)
    if isinstance(scheme, ComplexScheme):
        real = db.get(degree, "real", format_canonical(scheme.real))
        if real is not None and real.status is Status.EXCLUDED:
            return LookupResult(Status.EXCLUDED, real.source, real)
    return LookupResult(Status.OPEN)


@dataclass(frozen=True)
class AnnotatedResult:
    result: EnumerationResult
    rows: tuple[tuple[ComplexScheme, Report, LookupResult], ...]


def annotate(db: Database, result: EnumerationResult) -> AnnotatedResult:
    rows = tuple(
        (cs, report, lookup(db, result.params.m, cs)) for cs, report in result.survivors
    )
    return AnnotatedResult(result, rows)
