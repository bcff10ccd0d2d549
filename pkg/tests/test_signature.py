import random
from fractions import Fraction

import pytest

from conftest import FIGURE_EIGHT, TREFOIL, numeric_signature, random_circle_point
from knotsig.generate import random_seifert
from knotsig.realalg import compare_rational, halve, real_roots
from knotsig.seifert import UNKNOT, connected_sum, mirror, validate
from knotsig.signature import (MINUS_ONE, AlgebraicPoint, PointError, RationalPoint,
                               SignatureValue, averaged_signature, congruence_diagonalize,
                               rational_point_between, samples, signature_at,
                               signature_at_rational, signature_at_root, signature_function,
                               to_tsv)


def test_points():
    p = RationalPoint(Fraction(3, 5), Fraction(4, 5))
    assert p.x == Fraction(6, 5)
    with pytest.raises(PointError):
        RationalPoint(1, 0)
    with pytest.raises(PointError):
        RationalPoint(Fraction(1, 2), Fraction(1, 2))
    assert RationalPoint.from_parameter(Fraction(1, 2)) == p


def test_congruence_diagonalize_examples():
    D = [[Fraction(v) for v in r] for r in ((2, 0, 0), (0, -3, 0), (0, 0, 0))]
    assert congruence_diagonalize(D) == (0, 1)
    assert congruence_diagonalize([[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]]) == (0, 0)
    assert congruence_diagonalize([]) == (0, 0)


def test_trefoil_rational_points():
    assert signature_at_rational(TREFOIL, MINUS_ONE) == SignatureValue(-2, 0)
    assert signature_at_rational(TREFOIL, RationalPoint(Fraction(3, 5), Fraction(4, 5))) == SignatureValue(0, 0)
    assert signature_at_rational(UNKNOT, RationalPoint(0, 1)) == SignatureValue(0, 0)


def test_trefoil_at_root():
    assert signature_at_root(TREFOIL, Fraction(1, 2)) == SignatureValue(-1, 1)
    with pytest.raises(PointError):
        signature_at_root(TREFOIL, Fraction(1))


def test_root_of_irrational_abscissa():
    # c = sqrt2/2 is not a root of the trefoil: nullity 0, matches the numeric value
    c = halve(real_roots((-2, 0, 1))[1])
    v = signature_at_root(TREFOIL, c)
    num, _ = numeric_signature(TREFOIL, 2**-0.5, 2**-0.5)
    assert v == SignatureValue(num, 0)
    assert signature_at(TREFOIL, AlgebraicPoint(c)) == v


def test_block_sum_doubles_point_value():
    V = validate(TREFOIL)
    assert signature_at_root(connected_sum(V, V), Fraction(1, 2)) == SignatureValue(-2, 2)


def test_signature_function_examples():
    f = signature_function(TREFOIL)
    assert [x.value for x in f.jumps] == [1]
    assert f.arc_values == (-2, 0)
    assert f.point_values == (SignatureValue(-1, 1),)
    assert averaged_signature(f, 1) == -1
    assert averaged_signature(f, -2) == -2
    u = signature_function(UNKNOT)
    assert u.jumps == () and u.arc_values == (0,)
    assert averaged_signature(u, Fraction(1, 3)) == 0
    e = signature_function(FIGURE_EIGHT)
    assert e.jumps == () and e.arc_values == (0,)


def test_locate_and_value_at():
    f = signature_function(TREFOIL)
    assert f.locate(Fraction(1)) == ("jump", 0)
    assert f.locate(Fraction(0)) == ("arc", 0)
    assert f.value_at(Fraction(3, 2)) == SignatureValue(0, 0)
    with pytest.raises(ValueError):
        f.locate(Fraction(2))


def test_rational_point_between():
    for a, b in [(-2, 2), (Fraction(1), Fraction(1001, 1000)), (Fraction(-2), Fraction(-1999, 1000))]:
        p = rational_point_between(a, b)
        assert a < p.x < b


def test_serialization_and_samples():
    f = signature_function(TREFOIL)
    d = f.to_dict()
    assert d["jumps"][0]["min_poly"] == [-1, 1]
    assert d["jumps"][0]["theta_over_pi_approx"] == "0.333333333333"
    assert d["point_values"] == [{"sigma": -1, "nullity": 1}]
    s = samples(f, 4)
    assert s == [(Fraction(1, 4), 0), (Fraction(1, 2), -2), (Fraction(3, 4), -2), (Fraction(1), -2)]
    assert to_tsv(f).splitlines()[2] == "0.333333333333\t0.333333333333\t-1\t1"
    assert to_tsv(f) == to_tsv(signature_function(TREFOIL))


def test_numeric_oracle_random():
    rng = random.Random(7)
    checked = 0
    while checked < 200:
        V = random_seifert(rng, max_genus=4)
        p = random_circle_point(rng)
        num, gap = numeric_signature(V, p.c, p.s)
        if gap < 1e-9:
            continue
        assert signature_at_rational(V, p) == SignatureValue(num, 0)
        checked += 1


def test_conjugation_symmetry_and_parity():
    rng = random.Random(8)
    for _ in range(100):
        V = random_seifert(rng)
        p = random_circle_point(rng)
        v = signature_at_rational(V, p)
        assert signature_at_rational(V, RationalPoint(p.c, -p.s)) == v
        assert (v.sigma - (V.n - v.nullity)) % 2 == 0
        assert abs(v.sigma) + v.nullity <= V.n


def _function_invariants(V, f):
    assert f.arc_values[-1] == 0
    assert len(f.arc_values) == len(f.jumps) + 1
    for i, pv in enumerate(f.point_values):
        assert pv.nullity >= 1
        assert (pv.sigma - (V.n - pv.nullity)) % 2 == 0
        assert abs(pv.sigma - f.arc_values[i]) <= pv.nullity
        assert abs(pv.sigma - f.arc_values[i + 1]) <= pv.nullity


def test_function_properties_random():
    rng = random.Random(11)
    for _ in range(100):
        V = random_seifert(rng)
        f = signature_function(V)
        _function_invariants(V, f)
        g = signature_function(mirror(V))
        assert g.arc_values == tuple(-a for a in f.arc_values)
        assert g.point_values == tuple(SignatureValue(-p.sigma, p.nullity) for p in f.point_values)
        # a second sample inside every arc agrees and has nullity 0
        for i, a in enumerate(f.arc_values):
            lo, hi = f.arc_bounds(i)
            step = (hi - lo) / 9
            k = rng.choice([k for k in range(9)
                            if not lo + k * step <= f.arc_samples[i].x <= lo + (k + 1) * step])
            p = rational_point_between(lo + k * step, lo + (k + 1) * step)
            assert signature_at_rational(V, p) == SignatureValue(a, 0)


def test_additivity_on_common_refinement():
    rng = random.Random(12)
    for _ in range(30):
        A, B = random_seifert(rng, max_genus=2), random_seifert(rng, max_genus=2)
        fa, fb = signature_function(A), signature_function(B)
        fs = signature_function(connected_sum(A, B))
        for i, x in enumerate(fs.jumps):
            assert fs.point_values[i].sigma == fa.value_at(x).sigma + fb.value_at(x).sigma
        for i, a in enumerate(fs.arc_values):
            pt = fs.arc_samples[i]
            assert a == fa.value_at(Fraction(pt.x)).sigma + fb.value_at(Fraction(pt.x)).sigma


def test_fixture_invariants(fixtures):
    records, _ = fixtures
    for r in records:
        _function_invariants(r.seifert, signature_function(r.seifert))


def test_root_value_on_8_20(knot):
    V = knot("8_20").seifert
    [x] = signature_function(V).jumps
    assert compare_rational(x, 1) == 0
    assert abs(signature_at_root(V, halve(x)).sigma) == 1
