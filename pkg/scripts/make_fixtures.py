"""Regenerate src/knotsig/data/knotinfo_fixtures.csv from the KnotInfo distribution.

Needs the ``database_knotinfo`` package (not a runtime dependency):

    pip install database_knotinfo
    python scripts/make_fixtures.py
"""

import csv
import sys
from pathlib import Path

from database_knotinfo import link_list

KNOTS = [
    "8_20", "10_87", "10_140", "11a_28", "11a_58", "11a_165", "12a_189", "12a_377",
    "12a_979", "12n_56", "12n_57", "12n_62", "12n_66", "12n_87", "12n_106", "12n_288",
    "12n_501", "12n_504", "12n_582", "12n_670", "12n_721",
    "5_2", "9_46",
]

COLUMNS = ["crossing_number", "three_genus", "smooth_four_genus",
           "topological_four_genus", "double_slice_genus", "alexander_polynomial",
           "seifert_matrix"]


def short_name(name):
    # KnotInfo writes 11a_28; the table keeps 11a28 but leaves 8_20 alone
    head, _, tail = name.partition("_")
    return head + tail if head[-1:].isalpha() else name


def main(out):
    rows = {r["name"]: r for r in link_list()[1:]}
    with open(out, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["name", "knotinfo_name"] + COLUMNS)
        for k in KNOTS:
            r = rows[k]
            w.writerow([short_name(k), k] + [r[c].strip() for c in COLUMNS])


if __name__ == "__main__":
    default = Path(__file__).resolve().parents[1] / "src/knotsig/data/knotinfo_fixtures.csv"
    main(sys.argv[1] if len(sys.argv) > 1 else default)
