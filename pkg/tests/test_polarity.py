"""Polar calculus: polars, tangent planes, line contact, tangent cones."""

import random

import pytest

from polarcalc.linalg import mat_inverse
from polarcalc.polarity import (
    line_multiplicity,
    polar,
    polar_kic,
    restrict_to_line,
    tangent_cone,
    tangent_hyperplane,
)
from polarcalc.polyring import (
    INFINITY,
    QQ,
    DomainError,
    PolyRing,
    PrimeField,
    ProjPoint,
    exact_div,
    factorial_scalar,
    resultant,
)
from polarcalc.randomchecks import (
    property_suite,
    random_homogeneous,
    random_point,
    surface_through,
)
from polarcalc.reporting import all_ok

R = PolyRing()
FERMAT = R.parse("x^3 + y^3 + z^3 + w^3")
DIAG = R.parse("x^3 + y^3 + z^3 - 3*w^3")


class TestPolar:
    def test_quadric_first_polar(self):
        F = R.parse("x^2 + y^2 + z^2 + w^2")
        assert polar(F, R.point([1, 0, 0, 0]), 1) == R.parse("2*x")

    def test_fermat_first_polar(self):
        assert polar(FERMAT, R.point([1, 1, 1, 1]), 1) == R.parse(
            "3*x^2 + 3*y^2 + 3*z^2 + 3*w^2"
        )

    def test_full_polarization_is_scaled_value(self):
        rng = random.Random(5)
        for _ in range(10):
            d = rng.randint(1, 4)
            F = random_homogeneous(R, d, rng)
            a = random_point(R, rng)
            full = polar(F, a, d)
            expected = factorial_scalar(QQ, d) * F.evaluate(list(a.coords))
            assert full.constant_value() == expected

    def test_order_out_of_range(self):
        with pytest.raises(DomainError):
            polar(FERMAT, R.point([1, 0, 0, 0]), 4)


class TestPolarKic:
    def test_polar_quadric_diag_cubic(self):
        got = polar_kic(DIAG, R.point([1, 1, 1, 1]), 2)
        expected = R.parse("x^2 + y^2 + z^2 - 3*w^2")
        # equality up to one overall constant
        scale = next(iter(got.terms.values())) / next(iter(expected.terms.values()))
        assert got == expected * scale

    def test_quadric_polar_line_is_bilinear_form(self):
        F = R.parse("x*w - y*z")
        a = R.point([1, 2, 3, 4])
        got = polar_kic(F, a, 1)
        assert got == R.parse("4*x - 3*y - 2*z + w")

    def test_matches_polar_up_to_factorial_ratio(self):
        rng = random.Random(11)
        for _ in range(20):
            d = rng.randint(2, 4)
            F = random_homogeneous(R, d, rng)
            a = random_point(R, rng)
            k = rng.randint(1, d - 1)
            ratio = factorial_scalar(QQ, k) / factorial_scalar(QQ, d - k)
            assert polar_kic(F, a, k) == polar(F, a, d - k) * ratio

    def test_order_bounds(self):
        with pytest.raises(DomainError):
            polar_kic(FERMAT, R.point([1, 0, 0, 0]), 3)


class TestTangentHyperplane:
    def test_fermat(self):
        plane = tangent_hyperplane(FERMAT, R.point([1, -1, 0, 0]))
        assert plane == R.parse("3*x + 3*y")

    def test_rank_quadric(self):
        plane = tangent_hyperplane(R.parse("x^2 - y^2"), R.point([1, 1, 0, 0]))
        assert plane == R.parse("2*x - 2*y")

    def test_singular_point_rejected(self):
        with pytest.raises(DomainError):
            tangent_hyperplane(R.parse("y^2*w - x^3"), R.point([0, 0, 0, 1]))

    def test_point_off_surface_rejected(self):
        with pytest.raises(DomainError):
            tangent_hyperplane(FERMAT, R.point([1, 0, 0, 0]))


class TestLineMultiplicity:
    def test_inflection_line(self):
        report = line_multiplicity(FERMAT, R.point([1, -1, 0, 0]), R.point([0, 0, 1, 0]))
        assert report.multiplicity == 3
        assert report.polar_memberships == (True, True)

    def test_simple_tangency(self):
        report = line_multiplicity(DIAG, R.point([1, 1, 1, 1]), R.point([1, -1, 0, 0]))
        assert report.multiplicity == 2
        assert report.polar_memberships[0] is True
        assert report.polar_memberships[1] is False

    def test_line_inside_surface(self):
        report = line_multiplicity(FERMAT, R.point([1, -1, 1, -1]), R.point([1, -1, 0, 0]))
        assert report.multiplicity == INFINITY
        assert all(report.polar_memberships)

    def test_equal_points_rejected(self):
        a = R.point([1, -1, 0, 0])
        with pytest.raises(DomainError):
            line_multiplicity(FERMAT, a, R.point([-2, 2, 0, 0]))


class TestTaylorNewton:
    def test_shift_equals_polar_sum(self):
        rng = random.Random(23)
        for _ in range(25):
            d = rng.randint(1, 4)
            F = random_homogeneous(R, d, rng)
            a, b = random_point(R, rng), random_point(R, rng)
            total = QQ.zero
            for k in range(d + 1):
                total = total + polar(F, b, k).evaluate(list(a.coords)) / factorial_scalar(QQ, k)
            assert total == F.evaluate([x + y for x, y in zip(a.coords, b.coords)])


class TestTangentCone:
    def test_cuspidal_point(self):
        report = tangent_cone(R.parse("y^2*w - x^3"), R.point([0, 0, 0, 1]))
        assert report.multiplicity == 2
        assert report.cone == report.chart.parse("y^2")

    def test_nodal_point(self):
        report = tangent_cone(R.parse("x*y*w - z^3"), R.point([0, 0, 0, 1]))
        assert report.multiplicity == 2
        assert report.cone == report.chart.parse("x*y")

    def test_smooth_point_gives_tangent_plane(self):
        report = tangent_cone(FERMAT, R.point([1, -1, 0, 0]))
        assert report.multiplicity == 1
        # transformed tangent plane: the linear stratum of the chart form
        assert report.cone == report.chart.parse("3*y")

    def test_off_surface_rejected(self):
        with pytest.raises(DomainError):
            tangent_cone(FERMAT, R.point([1, 1, 1, 1]))


class TestPolarsAtSingularities:
    """Polars of a point of multiplicity m drop multiplicity one per order."""

    @pytest.mark.parametrize(
        "text,point,mult",
        [
            ("y^2*w - x^3", (0, 0, 0, 1), 2),
            ("x^3 + y^3 + z^3", (0, 0, 0, 1), 3),
        ],
    )
    def test_polar_multiplicity_drop(self, text, point, mult):
        rng = random.Random(37)
        F = R.parse(text)
        a = R.point(point)
        base = tangent_cone(F, a)
        assert base.multiplicity == mult
        field = R.field
        matrix = [list(row) for row in base.matrix]
        inverse = mat_inverse(field, matrix)
        trials = 0
        while trials < 20:
            b = random_point(R, rng)
            if b == a:
                continue
            chart_b = ProjPoint(
                [
                    sum((inverse[i][j] * b.coords[j] for j in range(1, 4)),
                        inverse[i][0] * b.coords[0])
                    for i in range(4)
                ],
                field,
            )
            # The exact drop needs b generic: the polarized cone must survive.
            if any(polar(base.cone, chart_b, r).is_zero for r in range(1, mult)):
                continue
            trials += 1
            for r in range(1, mult):
                pol = polar(F, b, r)
                rep = tangent_cone(pol, a)
                assert rep.multiplicity == mult - r
                assert rep.cone == polar(base.cone, chart_b, r)


class TestOsculatingPolarsPlaneCurve:
    def test_polar_line_and_conic_meet_doubly(self):
        # Cubic x^3 + y^3 + z^3 + xyz at (1 : -1 : 1).  The polar line is
        # 2x + 4y + 2z and the polar conic 6x^2 - 6y^2 + 6z^2 + 2xy - 2xz + 2yz;
        # eliminating z must leave the double factor (x + y)^2:
        # Q(x, y, -(x+2y)) = 14 (x + y)^2, scaled by the resultant rules.
        ring = PolyRing(("x", "y", "z"))
        F = ring.parse("x^3 + y^3 + z^3 + x*y*z")
        a = ring.point([1, -1, 1])
        assert not F.evaluate([1, -1, 1])
        line = polar_kic(F, a, 1)
        conic = polar_kic(F, a, 2)
        assert line == ring.parse("2*x + 4*y + 2*z")
        res = resultant(line, conic, "z")
        quotient = exact_div(res, ring.parse("x^2 + 2*x*y + y^2"))
        assert quotient.total_degree() == 0


class TestPropertyBatches:
    def test_rational_suite(self):
        assert all_ok(property_suite(QQ, seed=20240913, trials=100))

    def test_prime_field_suite(self):
        assert all_ok(property_suite(PrimeField(1048583), seed=20240913, trials=100))

    def test_restriction_matches_polar_coefficients(self):
        rng = random.Random(41)
        for _ in range(10):
            d = rng.randint(2, 4)
            a = random_point(R, rng)
            F = surface_through(R, a, d, rng)
            b = random_point(R, rng)
            restricted = restrict_to_line(F, a, b)
            for k in range(d + 1):
                coeff = restricted.coefficient((k,))
                expected = polar(F, b, k).evaluate(list(a.coords)) / factorial_scalar(QQ, k)
                assert coeff == expected
