import math

import pytest

from relaylab.concentration import (
    MeasureFloorError,
    ball_blowup_semianalytic,
    ball_radius_for_measure,
    blowup_radius,
    enlarged_measure_mc,
    exact_blowup,
    exact_enlarged_measure,
    halfspace_blowup_exact,
    mc_blowup,
    measure_floor,
    scaling_invariance_check,
    set_measure,
    standard_concentration_bound,
    theoretical_bound,
)
from relaylab.models import Ball, HalfSpace, Rectangle, Slab
from relaylab.numerics import DomainError, RngStream, std_normal_cdf, std_normal_quantile
from tests.conftest import TEST_SEED

# -log2 Phi(-1): the half-space {w_1 <= -1} sits exactly on the floor.
UNIT_OFFSET_RATE = 2.6560327974241065


class TestHalfSpaceBlowup:
    def test_unit_offset_with_slack(self):
        report = halfspace_blowup_exact(1, UNIT_OFFSET_RATE, 1.0)
        assert report.radius == pytest.approx(2.9188651046956187, rel=1e-13)
        assert report.base_measure == pytest.approx(0.15865525393145707, rel=1e-12)
        assert report.measured == pytest.approx(0.97249929607875196, rel=1e-12)
        assert report.theoretical_bound == pytest.approx(0.2928932188134524, rel=1e-14)
        assert report.method == "exact"
        assert report.passed

    def test_unit_offset_without_slack(self):
        report = halfspace_blowup_exact(1, UNIT_OFFSET_RATE, 0.0)
        assert report.measured == pytest.approx(0.82091693299366653, rel=1e-12)
        assert report.theoretical_bound == 0.0
        assert report.passed

    def test_zero_rate_is_the_whole_space(self):
        report = halfspace_blowup_exact(3, 0.0, 0.0)
        assert report.descriptor.offset == math.inf
        assert report.measured == 1.0

    def test_passes_in_higher_dimensions(self):
        report = halfspace_blowup_exact(10, 0.2, 0.5, noise=4.0)
        assert report.base_measure == pytest.approx(0.25, rel=1e-12)
        assert report.measured >= report.theoretical_bound
        assert report.passed


class TestBallBlowup:
    def test_radius_hits_the_measure(self):
        radius = ball_radius_for_measure(2, 1.0, 0.25)
        assert radius == pytest.approx(math.sqrt(2.0 * math.log(4.0 / 3.0)), rel=1e-12)

    def test_full_measure_is_an_infinite_ball(self):
        assert ball_radius_for_measure(4, 1.0, 1.0) == math.inf

    def test_chain_of_bounds(self):
        report = ball_blowup_semianalytic(2, 1.0, 0.5)
        assert report.method == "semi-analytic"
        assert report.base_measure == pytest.approx(0.25, rel=1e-10)
        assert report.measured >= report.adaptive_bound >= report.theoretical_bound
        assert report.passed


class TestBoundHelpers:
    def test_blowup_radius(self):
        assert blowup_radius(4, 0.5, 1.0, 1.0) == pytest.approx(2.0 * (math.sqrt(math.log(2.0)) + 1.0))

    def test_theoretical_bound(self):
        assert theoretical_bound(2, 1.0, 1.0) == pytest.approx(0.5)
        assert theoretical_bound(5, 0.0, 1.0) == 0.0

    def test_measure_floor_underflow(self):
        assert measure_floor(2, 0.5) == 0.5
        with pytest.raises(DomainError):
            measure_floor(10_000, 1.0)

    def test_standard_bound_is_vacuous_below_threshold(self):
        assert standard_concentration_bound(1.0, 0.1) == 0.0
        assert standard_concentration_bound(1.0, 1.0) == pytest.approx(-math.expm1(-0.5))
        assert standard_concentration_bound(3.0, 0.0) == 0.0

    @pytest.mark.parametrize("a, r", [(-0.1, 1.0), (1.0, math.inf), (math.nan, 0.0)])
    def test_invalid_inputs(self, a, r):
        with pytest.raises(DomainError):
            blowup_radius(1, a, r, 1.0)


class TestPrecondition:
    def test_small_set_is_refused(self, set_factory):
        halfspace = set_factory.make("half-space", {"offset": -3.0})
        with pytest.raises(MeasureFloorError):
            exact_blowup(halfspace, 1.0, 0.5)

    def test_precondition_is_a_value_error(self):
        assert issubclass(MeasureFloorError, ValueError)

    def test_monte_carlo_checks_the_closed_form_measure(self, set_factory):
        rectangle = set_factory.make("rectangle", {"lower": [0.0, 0.0], "upper": [0.1, 0.1]})
        with pytest.raises(MeasureFloorError):
            mc_blowup(rectangle, 0.5, 0.5, 10_000, RngStream(seed=TEST_SEED))


class TestMonteCarlo:
    def test_slab_agrees_with_the_closed_form(self, set_factory):
        slab = set_factory.make("slab")
        report = mc_blowup(slab, 1.0, 0.5, 20_000, RngStream(seed=TEST_SEED), workers=1)
        exact = exact_enlarged_measure(slab, report.radius)
        assert abs(report.measured - exact) <= 5.0 * report.std_error + 1e-4
        assert report.trials == 20_000
        assert report.passed

    def test_result_does_not_depend_on_workers(self, set_factory):
        rectangle = set_factory.make("rectangle")
        rng = RngStream(seed=TEST_SEED, stream=3)
        serial = mc_blowup(rectangle, 0.75, 0.25, 25_000, rng, workers=1)
        threaded = mc_blowup(rectangle, 0.75, 0.25, 25_000, rng, workers=3)
        assert serial.measured == threaded.measured
        assert serial.std_error == threaded.std_error

    def test_streams_differ(self, set_factory):
        rectangle = set_factory.make("rectangle")
        rho = 0.5
        first, _ = enlarged_measure_mc(rectangle, rho, 10_000, RngStream(seed=TEST_SEED, stream=0), 1)
        second, _ = enlarged_measure_mc(rectangle, rho, 10_000, RngStream(seed=TEST_SEED, stream=1), 1)
        assert first != second

    def test_too_few_trials(self, set_factory):
        with pytest.raises(DomainError):
            enlarged_measure_mc(set_factory.make("slab"), 1.0, 9_999, RngStream(seed=TEST_SEED))

    def test_measured_rectangle_lies_between_inscribed_and_circumscribed_boxes(self, set_factory):
        rectangle = set_factory.make("rectangle")
        estimate, _ = enlarged_measure_mc(rectangle, 1.0, 100_000, RngStream(seed=TEST_SEED), 2)
        inner = set_measure(set_factory.make("rectangle", {"lower": [-1.0, -1.0], "upper": [1.0, 1.0]}))
        outer = set_measure(set_factory.make("rectangle", {"lower": [-2.0, -2.0], "upper": [2.0, 2.0]}))
        assert inner < estimate < outer


class TestScalingInvariance:
    def test_exact_shapes_agree_to_rounding(self, set_factory):
        slab = set_factory.make("slab", {"noise": 4.0, "lower": -2.0, "upper": 2.0})
        report = scaling_invariance_check(slab, 1.0, 1.0)
        assert report.method == "exact"
        assert report.difference <= 1e-10
        assert report.passed

    def test_rectangle_in_the_plane_is_sampled(self, set_factory):
        rectangle = set_factory.make("rectangle", {"noise": 2.0})
        report = scaling_invariance_check(
            rectangle, 1.0, 0.5, rng=RngStream(seed=TEST_SEED), workers=1
        )
        assert report.method == "monte-carlo"
        assert report.allowance > 0.0

    def test_sampling_needs_a_stream(self, set_factory):
        with pytest.raises(DomainError):
            scaling_invariance_check(set_factory.make("rectangle"), 0.5, 0.5)


EXACT_DIMENSIONS = (1, 2, 5, 10, 20, 50)
EXACT_RATES = (0.0, 0.05, 0.2, 0.5, 1.0)
EXACT_SLACKS = (0.0, 0.25, 0.5, 1.0)


@pytest.mark.parametrize("run", [halfspace_blowup_exact, ball_blowup_semianalytic])
def test_no_violations_on_extremal_shapes(run):
    """Half-spaces and balls sitting exactly on the floor, over a grid of n, a and r."""
    violations = [
        (n, a, r)
        for n in EXACT_DIMENSIONS
        for a in EXACT_RATES
        for r in EXACT_SLACKS
        if not run(n, a, r).passed
    ]
    assert violations == []


@pytest.mark.parametrize("run", [halfspace_blowup_exact, ball_blowup_semianalytic])
@pytest.mark.parametrize("noise", [0.25, 1.0, 4.0])
def test_sound_over_dimension_rate_and_slack(run, noise):
    failures = []
    for n in (1, 2, 5, 10, 50):
        for a in (0.05, 0.2, 1.0, 3.0):
            for r in (0.1, 0.5, 1.0, 2.0):
                report = run(n, a, r, noise)
                if report.measured < report.theoretical_bound:
                    failures.append((n, a, r))
    assert failures == []


@pytest.mark.parametrize("p", [0.05, 0.2, 0.5])
@pytest.mark.parametrize("rho", [0.1, 0.5, 1.0, 2.0])
def test_half_line_has_the_smallest_enlargement_in_one_dimension(p, rho):
    half_line = HalfSpace(dimension=1, offset=std_normal_quantile(p))
    others = [
        Ball(dimension=1, radius=std_normal_quantile((1.0 + p) / 2.0)),
        Slab(dimension=1, lower=-0.2, upper=std_normal_quantile(std_normal_cdf(-0.2) + p)),
        Rectangle(
            dimension=1,
            lower=[std_normal_quantile(0.01)],
            upper=[std_normal_quantile(0.01 + p)],
        ),
    ]
    for other in others:
        assert set_measure(other) == pytest.approx(p, abs=1e-12)
    floor = exact_enlarged_measure(half_line, rho)
    for other in others:
        assert floor <= exact_enlarged_measure(other, rho) + 1e-12


@pytest.mark.parametrize("noise", [0.25, 1.0, 4.0, 9.0])
@pytest.mark.parametrize(
    "shape, update, a",
    [
        ("half-space", {"offset": 0.5}, 1.0),
        ("ball", {"radius": 1.5}, 0.5),
        ("slab", {"lower": -1.0, "upper": 1.0}, 1.0),
        ("rectangle", {"dimension": 1, "lower": [-1.0], "upper": [2.0]}, 1.0),
    ],
)
def test_scaling_invariance_for_exact_shapes(set_factory, noise, shape, update, a):
    sd = math.sqrt(noise)
    scaled = {
        k: [v * sd for v in value] if isinstance(value, list) else value * sd
        for k, value in update.items()
        if k != "dimension"
    }
    descriptor = set_factory.make(shape, {**update, **scaled, "noise": noise})
    report = scaling_invariance_check(descriptor, a, 0.5)
    assert report.method == "exact"
    assert report.difference <= 1e-10
    assert report.passed
