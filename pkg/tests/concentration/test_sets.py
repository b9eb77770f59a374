import math

import numpy as np
import pytest

from relaylab.concentration import (
    distance_to_set,
    exact_enlarged_measure,
    has_exact_enlargement,
    set_measure,
)
from relaylab.numerics import DomainError


class TestDistanceToSet:
    def test_half_space(self, set_factory):
        halfspace = set_factory.make("half-space", {"dimension": 2, "direction": [0.0, 2.0], "offset": 1.0})
        distances = distance_to_set(halfspace, [[5.0, 0.0], [0.0, 3.0]])
        np.testing.assert_allclose(distances, [0.0, 2.0])

    def test_ball(self, set_factory):
        distances = distance_to_set(set_factory.make("ball"), [[0.0, 0.0], [3.0, 4.0]])
        np.testing.assert_allclose(distances, [0.0, 3.5])

    def test_slab_measures_both_sides(self, set_factory):
        distances = distance_to_set(set_factory.make("slab"), [[-3.0], [0.5], [1.25]])
        np.testing.assert_allclose(distances, [2.0, 0.0, 0.25])

    def test_rectangle_corner(self, set_factory):
        distances = distance_to_set(set_factory.make("rectangle"), [[4.0, 5.0]])
        np.testing.assert_allclose(distances, [5.0])

    def test_dimension_mismatch(self, set_factory):
        with pytest.raises(DomainError):
            distance_to_set(set_factory.make("ball"), [[1.0, 2.0, 3.0]])


class TestSetMeasure:
    def test_half_space(self, set_factory):
        halfspace = set_factory.make("half-space", {"offset": -1.0})
        assert set_measure(halfspace) == pytest.approx(0.15865525393145707, rel=1e-14)

    def test_noise_scales_the_set(self, set_factory):
        halfspace = set_factory.make("half-space", {"offset": -2.0, "noise": 4.0})
        assert set_measure(halfspace) == pytest.approx(0.15865525393145707, rel=1e-14)

    def test_ball_in_the_plane(self, set_factory):
        # chi with two degrees of freedom: 1 - exp(-rho^2 / 2)
        assert set_measure(set_factory.make("ball")) == pytest.approx(-math.expm1(-1.125), rel=1e-13)

    def test_rectangle_is_a_product(self, set_factory):
        one_side = 2.0 * 0.8413447460685429 - 1.0
        assert set_measure(set_factory.make("rectangle")) == pytest.approx(one_side**2, rel=1e-13)

    def test_whole_space(self, set_factory):
        assert set_measure(set_factory.make("half-space", {"offset": math.inf})) == 1.0


class TestExactEnlargement:
    def test_half_space_shifts_the_offset(self, set_factory):
        halfspace = set_factory.make("half-space", {"offset": -1.0})
        assert exact_enlarged_measure(halfspace, 2.0) == pytest.approx(0.8413447460685429, rel=1e-14)

    def test_slab_widens_both_sides(self, set_factory):
        slab = set_factory.make("slab", {"lower": -0.5, "upper": 0.5})
        assert exact_enlarged_measure(slab, 0.5) == pytest.approx(
            2.0 * 0.8413447460685429 - 1.0, rel=1e-13
        )

    def test_zero_radius_is_the_set(self, set_factory):
        ball = set_factory.make("ball")
        assert exact_enlarged_measure(ball, 0.0) == set_measure(ball)

    def test_rectangle_on_the_line(self, set_factory):
        rectangle = set_factory.make("rectangle", {"dimension": 1, "lower": [-1.0], "upper": [1.0]})
        assert has_exact_enlargement(rectangle)
        assert exact_enlarged_measure(rectangle, 1.0) == pytest.approx(
            1.0 - 2.0 * 0.022750131948179195, rel=1e-12
        )

    def test_rectangle_in_the_plane_has_no_closed_form(self, set_factory):
        rectangle = set_factory.make("rectangle")
        assert not has_exact_enlargement(rectangle)
        with pytest.raises(DomainError):
            exact_enlarged_measure(rectangle, 0.5)

    def test_negative_radius(self, set_factory):
        with pytest.raises(DomainError):
            exact_enlarged_measure(set_factory.make("slab"), -0.1)
