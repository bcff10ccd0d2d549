import csv
import io

import pytest

from conftest import ROOT_SIGNATURE_KNOTS
from knotsig import poly as P
from knotsig.seifert import alexander
from knotsig.signature import signature_function
import knotsig.table as T
from knotsig.table import (EmptyTableError, KnotRecord, MissingColumnError, ScanCriteria,
                           TableFormat, find_record, fixture_path, parse_table, scan,
                           write_table)

SMALL = '''name,crossing_number,seifert_matrix,three_genus
3_1,3,"[[-1,1],[0,-1]]",1
0_1,0,"[[]]",0
'''


def test_two_row_table():
    recs = parse_table(io.StringIO(SMALL))
    assert [r.name for r in recs] == ["3_1", "0_1"]
    assert recs[0].crossings == 3 and recs[0].g3 == 1 and recs[0].g4 is None
    assert recs[1].seifert.n == 0


def test_bad_rows_are_skipped_with_diagnostics():
    text = SMALL + 'odd,1,"[[1]]",0\n,2,"[[-1,1],[0,-1]]",1\nweird,4,"{{1,2},{0,1}}",[1,2]\n'
    diags = []
    recs = parse_table(io.StringIO(text), diagnostics=diags)
    assert len(recs) == 2
    assert [d.name for d in diags] == ["odd", "", "weird"]
    assert "OddDimensionError" in diags[0].message
    assert "empty name" in diags[1].message
    assert "NotUnimodularError" in diags[2].message


def test_unparsable_genus_is_unknown():
    text = 'name,seifert_matrix,smooth_four_genus\nk,"[[-1,1],[0,-1]]","[0,1]"\n'
    assert parse_table(io.StringIO(text))[0].g4 is None


def test_errors():
    with pytest.raises(MissingColumnError):
        parse_table(io.StringIO("name,crossing_number\n3_1,3\n"))
    with pytest.raises(EmptyTableError):
        parse_table(io.StringIO(""))
    with pytest.raises(EmptyTableError):
        parse_table(io.StringIO("name,seifert_matrix\n"))


def test_custom_format():
    fmt = TableFormat(name="knot", seifert="V", crossings=None, g3=None, g4="g4", gds=None)
    text = 'knot,V,g4\n3_1,"{{-1,1},{0,-1}}",1\n'
    [r] = parse_table(io.StringIO(text), fmt)
    assert r.name == "3_1" and r.g4 == 1 and r.crossings is None


def test_round_trip(fixtures):
    records, _ = fixtures
    again = parse_table(io.StringIO(write_table(records)))
    assert again == records


def test_fixture_table(fixtures):
    records, diags = fixtures
    assert diags == []
    assert len(records) == 23
    assert find_record(records, "11a_28").name == "11a28"
    with pytest.raises(KeyError):
        find_record(records, "3_1")


def test_fixture_alexander_matches_table_column(fixtures):
    text = fixture_path().read_text(encoding="utf-8")
    rows = {r["name"]: r["alexander_polynomial"] for r in csv.DictReader(io.StringIO(text))}
    records, _ = fixtures
    for r in records:
        d = alexander(r.seifert)
        coeffs = _parse_knotinfo_poly(rows[r.name])
        assert d in (coeffs, P.neg(coeffs)), r.name


def _parse_knotinfo_poly(text):
    # "1-2*t+ 3*t^2" style
    terms = text.replace(" ", "").replace("-", "+-").split("+")
    out = {}
    for t in filter(None, terms):
        coef, _, power = t.partition("t")
        coef = coef.rstrip("*")
        c = int(coef) if coef not in ("", "-") else (-1 if coef == "-" else 1)
        e = int(power.lstrip("^")) if power else (1 if "t" in t else 0)
        out[e] = c
    return tuple(out.get(i, 0) for i in range(max(out) + 1))


def test_root_signature_scan(fixtures):
    records, _ = fixtures
    hits = scan(records, ScanCriteria(12, True, 1))
    assert tuple(h.name for h in hits) == ROOT_SIGNATURE_KNOTS
    for h in hits:
        assert h.error is None and h.root_evidence
        assert all(abs(v.sigma) == 1 for _, v in h.root_evidence)


def test_scan_variants(fixtures):
    records, _ = fixtures
    assert scan(records, ScanCriteria(12, True, 2)) == []
    assert [h.name for h in scan(records)] == [r.name for r in records]
    par = scan(records, ScanCriteria(12, True, 1), n_jobs=2)
    assert [h.name for h in par] == list(ROOT_SIGNATURE_KNOTS)


def test_9_46_vanishes(knot):
    f = signature_function(knot("9_46").seifert)
    assert set(f.arc_values) == {0} and all(v.sigma == 0 for v in f.point_values)


def test_scan_reports_failures_inline(monkeypatch):
    def boom(V, meta, name):
        raise T.BoundsError(f"{name}: synthetic failure")

    monkeypatch.setattr(T, "bounds_report", boom)
    recs = parse_table(io.StringIO(SMALL))
    hits = scan(recs)
    assert [h.error for h in hits] == ["3_1: synthetic failure", "0_1: synthetic failure"]


def test_record_metadata():
    r = KnotRecord("x", None, 3, 1, 1, 2)
    assert r.metadata == {"g3": 1, "g4": 1, "gds": 2}
