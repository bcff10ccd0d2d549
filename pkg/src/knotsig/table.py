"""KnotInfo-style CSV tables and the signature scan over them."""

import csv
import io
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .bounds import BoundsError, bounds_report
from .seifert import SeifertMatrixError, format_matrix, parse_matrix, validate

log = logging.getLogger(__name__)


class TableError(ValueError):
    pass


class MissingColumnError(TableError):
    pass


class EmptyTableError(TableError):
    pass


@dataclass(frozen=True)
class TableFormat:
    """Maps record fields to CSV header names; ``None`` means the column is absent."""

    name: str = "name"
    seifert: str = "seifert_matrix"
    crossings: str = "crossing_number"
    g3: str = "three_genus"
    g4: str = "smooth_four_genus"
    gds: str = "double_slice_genus"

    @classmethod
    def from_mapping(cls, mapping):
        return cls(**{k: v for k, v in mapping.items()})


KNOTINFO = TableFormat()


@dataclass(frozen=True)
class KnotRecord:
    name: str
    seifert: object
    crossings: int = None
    g3: int = None
    g4: int = None
    gds: int = None

    @property
    def metadata(self):
        return {"g3": self.g3, "g4": self.g4, "gds": self.gds}


@dataclass(frozen=True)
class Diagnostic:
    line: int
    name: str
    message: str

    def __str__(self):
        return f"line {self.line} ({self.name or '?'}): {self.message}"


def _opt_int(text):
    if text is None:
        return None
    text = text.strip()
    try:
        v = int(text)
    except ValueError:
        return None  # ranges like "[1,2]" and blanks carry no single value
    return v if v >= 0 else None


def _open(source):
    if hasattr(source, "read"):
        return source, False
    return open(source, newline="", encoding="utf-8"), True


def parse_table(source, fmt=KNOTINFO, diagnostics=None):
    """Read knot records from a CSV path or text stream.

    Rows with a missing name or an unusable matrix are skipped; each skip
    is logged and, if ``diagnostics`` is a list, appended to it.
    """
    fh, close = _open(source)
    try:
        reader = csv.DictReader(fh)
        header = reader.fieldnames
        if not header:
            raise EmptyTableError("table has no header row")
        header = [h.strip() for h in header]
        reader.fieldnames = header
        for role in ("name", "seifert"):
            col = getattr(fmt, role)
            if col not in header:
                raise MissingColumnError(f"required {role} column {col!r} not in header {header}")
        optional = {role: getattr(fmt, role) for role in ("crossings", "g3", "g4", "gds")}
        optional = {k: v for k, v in optional.items() if v and v in header}

        records = []
        rows = 0
        for row in reader:
            rows += 1
            line = reader.line_num
            name = (row.get(fmt.name) or "").strip()
            problem = None
            if not name:
                problem = "empty name"
            else:
                try:
                    V = validate(parse_matrix(row.get(fmt.seifert) or ""))
                except SeifertMatrixError as exc:
                    problem = f"{type(exc).__name__}: {exc}"
            if problem:
                d = Diagnostic(line, name, problem)
                log.warning("skipping row: %s", d)
                if diagnostics is not None:
                    diagnostics.append(d)
                continue
            extra = {k: _opt_int(row.get(col)) for k, col in optional.items()}
            records.append(KnotRecord(name, V, **extra))
        if rows == 0:
            raise EmptyTableError("table has no data rows")
        return records
    finally:
        if close:
            fh.close()


def write_table(records, dest=None, fmt=KNOTINFO):
    """Write records as CSV; returns the text when ``dest`` is None."""
    buf = io.StringIO() if dest is None else None
    fh, close = (buf, False) if buf is not None else _open_w(dest)
    try:
        w = csv.writer(fh, lineterminator="\n")
        cols = [("name", fmt.name), ("crossings", fmt.crossings), ("g3", fmt.g3),
                ("g4", fmt.g4), ("gds", fmt.gds)]
        cols = [(k, c) for k, c in cols if c]
        w.writerow([c for _, c in cols] + [fmt.seifert])
        for r in records:
            vals = ["" if getattr(r, k) is None else str(getattr(r, k)) for k, _ in cols]
            w.writerow(vals + [format_matrix(r.seifert)])
    finally:
        if close:
            fh.close()
    return buf.getvalue() if buf is not None else None


def _open_w(dest):
    if hasattr(dest, "write"):
        return dest, False
    return open(dest, "w", newline="", encoding="utf-8"), True


def _squash(name):
    return name.replace("_", "").lower()


def find_record(records, name):
    """Look a knot up by name; ``11a_28`` and ``11a28`` are treated alike."""
    for r in records:
        if r.name == name:
            return r
    hits = [r for r in records if _squash(r.name) == _squash(name)]
    if len(hits) == 1:
        return hits[0]
    raise KeyError(name)


def fixture_path():
    return resources.files("knotsig") / "data" / "knotinfo_fixtures.csv"


def load_fixtures():
    """The bundled 23-knot table transcribed from KnotInfo."""
    with resources.as_file(fixture_path()) as p:
        return parse_table(Path(p))


@dataclass(frozen=True)
class ScanCriteria:
    max_crossings: int = None
    require_slice: bool = False
    min_root_signature: int = None


@dataclass(frozen=True)
class ScanHit:
    name: str
    report: object
    root_evidence: tuple = ()  # (jump index, SignatureValue)
    error: str = None


def _prefilter(rec, crit):
    if crit.max_crossings is not None and (rec.crossings is None or rec.crossings > crit.max_crossings):
        return False
    if crit.require_slice and rec.g4 != 0:
        return False
    return True


def _evaluate(rec, crit):
    try:
        rep = bounds_report(rec.seifert, rec.metadata, rec.name)
    except BoundsError as exc:
        return ScanHit(rec.name, None, (), str(exc))
    threshold = crit.min_root_signature or 0
    f = rep.function
    evidence = tuple((i, v) for i, v in enumerate(f.point_values) if abs(v.sigma) >= threshold)
    if crit.min_root_signature is not None and not evidence:
        return None
    return ScanHit(rec.name, rep, evidence)


def scan(records, criteria=None, n_jobs=1):
    """Records passing every supplied filter, in input order.

    ``min_root_signature`` keeps knots having some circle root of Δ with
    ``|σ| >= min_root_signature``; ``require_slice`` reads the table's g4.
    Computation failures come back as hits carrying ``error``.
    """
    crit = criteria or ScanCriteria()
    todo = [r for r in records if _prefilter(r, crit)]
    if n_jobs and n_jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=n_jobs) as ex:
            results = list(ex.map(_evaluate, todo, [crit] * len(todo)))
    else:
        results = [_evaluate(r, crit) for r in todo]
    return [h for h in results if h is not None]
