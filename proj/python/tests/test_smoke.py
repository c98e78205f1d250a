# Copyright 2026 The g2jac Authors
# Licensed under the Apache License, Version 2.0, see LICENSE for details.
# SPDX-License-Identifier: Apache-2.0

import pytest

import g2jac


@pytest.fixture
def curve():
    return g2jac.Curve(7, [1, 0, 0, 0, 0, 1])


def test_curve_points(curve):
    assert curve.p == 7
    assert curve.f == [1, 0, 0, 0, 0, 1]
    assert curve.enumerate_points() == [(0, 1), (0, 6), (1, 3), (1, 4), (5, 2), (5, 5), (6, 0)]
    assert curve.lift_x(2) == []
    assert curve.is_on_curve(1, 3)
    with pytest.raises(ValueError):
        g2jac.Curve(7, [0, 0, 0, 0, 0, 1])


def test_divisors(curve):
    d = g2jac.from_points(curve, (0, 1), (1, 3))
    assert d.u == [0, 6, 1] and d.v == [1, 2]
    assert d == g2jac.parse_divisor(curve, "u=[0,6,1];v=[1,2]")
    assert g2jac.support_points(curve, d) == [(0, 1), (1, 3)]
    assert g2jac.negate(d).v == [6, 5]
    assert str(d) == "u=[0,6,1] v=[1,2]"
    with pytest.raises(ValueError):
        g2jac.divisor(curve, [0, 6, 1], [2, 2])


def test_addition_cases(curve):
    a = g2jac.divisor(curve, [0, 6, 1], [1, 2])
    b = g2jac.divisor(curve, [0, 2, 1], [1, 3])
    total, info = g2jac.add(curve, a, b)
    assert info["case"] == "SharedPlace"
    assert info["field_mults"] > 0
    assert total == g2jac.cantor_add(curve, a, b)
    assert g2jac.classify(curve, a, a) == "Doubling"
    assert g2jac.double(curve, a) == g2jac.cantor_add(curve, a, a)
    assert g2jac.add(curve, a, g2jac.negate(a))[0].is_identity()


def test_group(curve):
    elements = g2jac.enumerate_jacobian(curve)
    assert len(elements) == 50
    assert len(set(elements)) == 50
    for d in elements:
        assert g2jac.scalar_mul(curve, 50, d).is_identity()
        assert 50 % g2jac.element_order(curve, d) == 0


def test_verify_and_bench(curve):
    report = g2jac.verify(curve)
    assert report["mismatches"] == 0
    bench = g2jac.bench(iterations=40, seed=3)
    assert bench["mismatches"] == 0
    assert {row["path"] for row in bench["rows"]} == {"case1", "case2", "case3", "fallback", "cantor"}


def test_large_prime_integers():
    p = 2**127 - 1
    c = g2jac.Curve(p, [3, 1, 4, 1, 5, 1])
    assert c.p == p
    pts = c.lift_x(-1 % p) or c.lift_x(2)
    assert all(c.is_on_curve(x, y) for x, y in pts)


def test_figure_svg():
    svg = g2jac.figure_svg(2)
    assert svg.startswith("<?xml") and "</svg>" in svg
