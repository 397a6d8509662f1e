import time
from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from negcurves import geometry as geo
from negcurves.families import Kind
from negcurves.laurent import LaurentPoly, parse, vanishing_order
from negcurves.search import (EXCEPTIONAL_NOTE, curve_isomorphism, dagger_triangle, default_bounds, enumerate_dagger,
                              naive_dagger, reference_instances, scan_dagger, verify_classification)

from strategies import unimodular_maps

CLASSES = {1: 1, 2: 1, 3: 2, 4: 2, 5: 3}


@pytest.fixture(scope="module")
def reports():
    return {m: verify_classification(m) for m in CLASSES}


def test_default_bounds():
    assert default_bounds(4) == (64, 18)


def test_bad_m():
    with pytest.raises(ValueError):
        scan_dagger(0, 5, 5)


@pytest.mark.parametrize("m", sorted(CLASSES))
def test_scan_matches_naive(m):
    h_max, k_max = default_bounds(m)
    got = {(c.h, c.K) for c in scan_dagger(m, h_max, k_max)}
    assert got == naive_dagger(m, h_max, k_max)


def test_dagger_triangle():
    assert dagger_triangle(4, 5, 5) == geo.Triangle.of((0, 0), (3, 0), (4, 5))


def test_enumeration_distinct():
    reps = enumerate_dagger(4, *default_bounds(4))
    for i, a in enumerate(reps):
        for b in reps[:i]:
            assert geo.find_isomorphism(a, b) is None


def test_reference_instances():
    labels = {(t.kind, t.K, t.M, t.N) for t in reference_instances(4)}
    assert (Kind.INTEGRAL, 5, 3, 1) in labels and (Kind.RATIONAL, 4, 4, 3) in labels
    assert all(t.m == 4 for t in reference_instances(4))


@pytest.mark.parametrize("m", sorted(CLASSES))
def test_class_counts(reports, m):
    r = reports[m]
    assert len(r.classes) == CLASSES[m]
    assert not r.flagged
    assert all(c.representative is not None for c in r.classes)
    assert EXCEPTIONAL_NOTE in r.notes


def test_m4_representatives(reports):
    labels = [c.representative.label() for c in reports[4].classes]
    assert labels == ["IT(3,1) K=5", "RT(4,3) K=4"]


def test_small_representatives(reports):
    assert [c.representative.label() for c in reports[2].classes] == ["IT(1,1) K=3"]
    assert len({c.representative.kind for c in reports[3].classes}) == 2


@pytest.mark.parametrize("m", sorted(CLASSES))
def test_records_are_negative_curves(reports, m):
    for rec in reports[m].records:
        assert vanishing_order(rec.poly) == m
        assert rec.self_intersection < 0
        assert all(rec.triangle.contains(p) for p in rec.poly.support())
        for mt in rec.matches:
            assert mt.map is not None


def test_m4_runtime():
    t0 = time.perf_counter()
    verify_classification(4)
    assert time.perf_counter() - t0 < 120


class TestCurveIsomorphism:
    P = parse("1 + x - 3*x*y + x^2*y^3")

    def test_self(self):
        assert curve_isomorphism(self.P, self.P) is not None

    def test_different(self):
        assert curve_isomorphism(self.P, parse("1 + x - 3*x*y + 2*x^2*y^3")) is None
        assert curve_isomorphism(self.P, parse("1 - x")) is None

    @settings(max_examples=60)
    @given(unimodular_maps())
    def test_transformed_and_scaled(self, f):
        q = self.P.transform(f) * F(-3, 2)
        g = curve_isomorphism(self.P, q)
        assert g is not None
        key = min(q.support())
        assert self.P.transform(g).scale_to(key) == q.scale_to(key)
