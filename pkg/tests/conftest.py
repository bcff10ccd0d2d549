import random
import sys
from importlib.resources import as_file
from fractions import Fraction

import numpy as np
import pytest

from knotsig.signature import RationalPoint
from knotsig.table import fixture_path, parse_table

TREFOIL = [[-1, 1], [0, -1]]
FIGURE_EIGHT = [[1, 1], [0, -1]]

ROOT_SIGNATURE_KNOTS = ("8_20", "10_87", "10_140", "11a28", "11a58", "11a165", "12a189", "12a377",
                 "12a979", "12n56", "12n57", "12n62", "12n66", "12n87", "12n106", "12n288",
                 "12n501", "12n504", "12n582", "12n670", "12n721")


def _entries(V):
    return V.entries if hasattr(V, "entries") else V


def hermitian(V, c, s):
    """Numeric ``(1-ω)V + (1-ω̄)V^T`` at ``ω = c + i s``."""
    A = np.array(_entries(V), dtype=float)
    w = complex(float(c), float(s))
    return (1 - w) * A + (1 - w.conjugate()) * A.T


def numeric_signature(V, c, s):
    """(σ, smallest |eigenvalue|) from floating-point eigenvalues."""
    if not _entries(V):
        return 0, float("inf")
    ev = np.linalg.eigvalsh(hermitian(V, c, s))
    return int(np.sum(ev > 0) - np.sum(ev < 0)), float(np.min(np.abs(ev)))


def random_circle_point(rng):
    u = Fraction(rng.randint(1, 400), rng.randint(1, 400))
    return RationalPoint.from_parameter(u)


@pytest.fixture(scope="session")
def fixtures():
    diags = []
    with as_file(fixture_path()) as p:
        records = parse_table(p, diagnostics=diags)
    return records, diags


@pytest.fixture(scope="session")
def knot(fixtures):
    """Look up a fixture matrix; skips (reporting why) if its row failed validation."""
    records, diags = fixtures
    by_name = {r.name: r for r in records}

    def get(name):
        if name not in by_name:
            why = [str(d) for d in diags if d.name == name] or ["not in table"]
            pytest.skip(f"fixture {name} unavailable: {why[0]}")
        return by_name[name]

    return get


@pytest.fixture
def rng():
    return random.Random(20261016)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


def pytest_collection_modifyitems(items):
    for item in items:
        if {"fixtures", "knot", "table"} & set(getattr(item, "fixturenames", ())):
            item.add_marker(pytest.mark.fixtures)
