import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from closedform import (
    SCENARIOS,
    ActiveConstraint,
    AsymFixedHeightScenario,
    AsymRatioBoxScenario,
    BoundSide,
    CompactnessRatio,
    OptimizationResult,
    RatioInterval,
    ScenarioTag,
    SymRatioIntervalScenario,
    asym_min_envelope,
    compactness,
    compactness_at_width,
    compactness_of,
    detect_degenerate_cuboid,
    optimize_asym_fixed_height,
    optimize_asym_fixed_ratios,
    optimize_asym_ratio_box,
    optimize_sym_fixed_ratio,
    optimize_sym_ratio_interval,
    sym_min_envelope,
)
from geometry import (
    AsymDims,
    AsymRatios,
    DegeneracyError,
    GeometryError,
    InconsistencyError,
    SymDims,
    SymRatio,
    asym_envelope,
    asym_volume,
    sym_envelope,
)

volumes = st.floats(1.0, 1e5)
sym_ratios = st.floats(1.01, 20.0)
asym_ratios = st.floats(0.02, 0.98)


class TestSymFixedRatio:
    def test_300_cubic_meters_ratio_2(self):
        result = optimize_sym_fixed_ratio(300.0, SymRatio(2.0))
        d = result.dims
        assert result.scenario is ScenarioTag.SYM_FIXED_RATIO
        assert d.B == pytest.approx(5.1087, abs=1e-4)
        assert d.L == pytest.approx(10.217, abs=1e-3)
        assert d.H == pytest.approx(3.8316, abs=1e-4)
        assert result.envelope == pytest.approx(234.89, abs=5e-3)
        assert result.active_constraints == ()
        assert not result.degenerate

    def test_small_volume(self):
        result = optimize_sym_fixed_ratio(4.0, SymRatio(2.0))
        assert result.dims.B == pytest.approx(1.2114, abs=1e-4)
        assert result.envelope == pytest.approx(13.208, abs=1e-3)

    def test_degenerate_ratio_is_refused(self):
        with pytest.raises(DegeneracyError) as info:
            optimize_sym_fixed_ratio(300.0, SymRatio.degenerate())
        assert "degenerate --volume" in str(info.value)

    def test_plain_float_ratio_is_refused(self):
        with pytest.raises(TypeError):
            optimize_sym_fixed_ratio(300.0, 2.0)

    @pytest.mark.parametrize("V", [0.0, -1.0, math.inf, "lots"])
    def test_bad_volume(self, V):
        with pytest.raises(GeometryError) as info:
            optimize_sym_fixed_ratio(V, SymRatio(2.0))
        assert info.value.field == "V"

    @settings(max_examples=200)
    @given(V=volumes, r=sym_ratios)
    def test_result_reproduces_volume_and_envelope(self, V, r):
        result = optimize_sym_fixed_ratio(V, SymRatio(r))
        assert result.recomputed_volume() == pytest.approx(V, rel=1e-10)
        assert sym_envelope(result.dims) == pytest.approx(sym_min_envelope(V, r), rel=1e-10)
        assert result.dims.L / result.dims.B == pytest.approx(r, rel=1e-12)

    @settings(max_examples=200)
    @given(V=volumes, r=sym_ratios, factor=st.floats(0.5, 2.0))
    def test_any_other_width_is_worse(self, V, r, factor):
        result = optimize_sym_fixed_ratio(V, SymRatio(r))
        B = result.dims.B * factor
        L = r * B
        other = SymDims(L, B, V / (2 * L * B - B ** 2))
        assert sym_envelope(other) >= result.envelope * (1 - 1e-12)


class TestSymRatioInterval:
    def test_200_cubic_meters_between_3_and_4(self):
        result = optimize_sym_ratio_interval(200.0, RatioInterval(3.0, 4.0))
        d = result.dims
        assert d.B == pytest.approx(3.6342, abs=1e-4)
        assert d.L == pytest.approx(10.903, abs=1e-3)
        assert d.H == pytest.approx(3.0285, abs=1e-4)
        assert result.envelope == pytest.approx(198.12, abs=5e-3)
        assert result.active_constraints == (ActiveConstraint("r", BoundSide.LOWER),)
        assert str(result.active_constraints[0]) == "r lower"

    def test_lower_bound_drives_the_result(self):
        result = optimize_sym_ratio_interval(200.0, RatioInterval(3.5, 4.0))
        assert result.envelope == pytest.approx(206.61, abs=5e-3)
        assert result.dims.L / result.dims.B == pytest.approx(3.5)

    def test_interval_starting_at_one_is_degenerate(self):
        with pytest.raises(DegeneracyError):
            optimize_sym_ratio_interval(200.0, RatioInterval(1.0, 2.0))

    def test_interval_below_one(self):
        with pytest.raises(GeometryError) as info:
            optimize_sym_ratio_interval(200.0, RatioInterval(0.5, 2.0))
        assert info.value.rule == "lo>1"

    @pytest.mark.parametrize("lo, hi", [(3.0, 3.0), (4.0, 3.0)])
    def test_empty_interval(self, lo, hi):
        with pytest.raises(GeometryError) as info:
            RatioInterval(lo, hi)
        assert info.value.rule == "lo<hi"

    def test_non_finite_bound(self):
        with pytest.raises(GeometryError) as info:
            RatioInterval(2.0, math.inf)
        assert info.value.rule == "finite"

    def test_lower_bound_beats_every_interior_ratio(self):
        rng = np.random.default_rng(7)
        for _ in range(250):
            V = rng.uniform(10.0, 5000.0)
            lo = rng.uniform(1.01, 8.0)
            hi = lo + rng.uniform(0.1, 3.0)
            best = optimize_sym_ratio_interval(V, RatioInterval(lo, hi)).envelope
            for r in rng.uniform(lo, hi, size=4):
                assert best <= sym_min_envelope(V, r) * (1 + 1e-12)


class TestAsymFixedRatios:
    def test_300_cubic_meters(self):
        result = optimize_asym_fixed_ratios(300.0, AsymRatios(0.4, 0.6))
        d = result.dims
        assert d.ratios.k == pytest.approx(0.76)
        assert d.L1 == pytest.approx(10.1276, abs=1e-4)
        assert d.L2 == d.L1
        assert d.H == pytest.approx(3.8485, abs=1e-4)
        assert result.envelope == pytest.approx(233.858, abs=1e-3)

    def test_half_ratios_small_volume(self):
        result = optimize_asym_fixed_ratios(4.0, AsymRatios(0.5, 0.5))
        assert result.dims.L1 == pytest.approx(2.4228, abs=1e-4)
        assert result.envelope == pytest.approx(13.208, abs=1e-3)

    def test_half_ratios_match_the_symmetric_ratio_2_optimum(self):
        asym = optimize_asym_fixed_ratios(4.0, AsymRatios(0.5, 0.5))
        sym = optimize_sym_fixed_ratio(4.0, SymRatio(2.0))
        assert asym.envelope == pytest.approx(sym.envelope, rel=1e-12)
        assert asym.dims.L1 == pytest.approx(sym.dims.L, rel=1e-12)

    def test_degenerate_ratios_are_refused(self):
        with pytest.raises(DegeneracyError):
            optimize_asym_fixed_ratios(300.0, AsymRatios.degenerate(1.0, 0.5))

    @settings(max_examples=200)
    @given(V=volumes, r1=asym_ratios, r2=asym_ratios)
    def test_wings_come_out_equally_long(self, V, r1, r2):
        result = optimize_asym_fixed_ratios(V, AsymRatios(r1, r2))
        d = result.dims
        assert d.L1 == d.L2
        assert d.B1 / d.L1 == pytest.approx(r1, rel=1e-12)
        assert d.B2 / d.L2 == pytest.approx(r2, rel=1e-12)
        assert asym_volume(d) == pytest.approx(V, rel=1e-10)
        assert result.envelope == pytest.approx(asym_min_envelope(V, d.ratios.k), rel=1e-12)

    @settings(max_examples=200)
    @given(V=volumes, r1=asym_ratios, r2=asym_ratios, f1=st.floats(0.6, 1.6), f2=st.floats(0.6, 1.6))
    def test_any_other_wing_lengths_are_worse(self, V, r1, r2, f1, f2):
        ratios = AsymRatios(r1, r2)
        result = optimize_asym_fixed_ratios(V, ratios)
        L1, L2 = result.dims.L1 * f1, result.dims.L2 * f2
        H = V / (L1 * L2 * ratios.k)
        other = AsymDims(L1, L2, r1 * L1, r2 * L2, H)
        assert asym_envelope(other) >= result.envelope * (1 - 1e-12)


class TestAsymRatioBox:
    def test_200_cubic_meters(self):
        result = optimize_asym_ratio_box(200.0, RatioInterval(0.3, 0.5), RatioInterval(0.2, 0.8))
        d = result.dims
        assert d.L1 == pytest.approx(7.904, abs=1e-3)
        assert d.B1 == pytest.approx(3.952, abs=1e-3)
        assert d.B2 == pytest.approx(6.323, abs=1e-3)
        assert d.H == pytest.approx(3.557, abs=1e-3)
        assert result.envelope == pytest.approx(168.69, abs=5e-3)
        assert result.active_constraints == (
            ActiveConstraint("r1", BoundSide.UPPER),
            ActiveConstraint("r2", BoundSide.UPPER),
        )

    def test_100_cubic_meters(self):
        result = optimize_asym_ratio_box(100.0, RatioInterval(0.2, 0.6), RatioInterval(0.2, 0.6))
        assert result.dims.ratios.k == pytest.approx(0.84)
        assert result.envelope == pytest.approx(108.74, abs=5e-3)

    def test_upper_bound_at_one_is_degenerate(self):
        with pytest.raises(DegeneracyError):
            optimize_asym_ratio_box(100.0, RatioInterval(0.2, 1.0), RatioInterval(0.2, 0.6))

    @pytest.mark.parametrize(
        "bounds, rule",
        [((0.0, 0.5), "lo>0"), ((0.2, 1.5), "hi<1")],
    )
    def test_box_outside_unit_interval(self, bounds, rule):
        with pytest.raises(GeometryError) as info:
            optimize_asym_ratio_box(100.0, RatioInterval(*bounds), RatioInterval(0.2, 0.6))
        assert info.value.rule == rule

    def test_upper_corner_beats_every_interior_point(self):
        rng = np.random.default_rng(11)
        for _ in range(250):
            V = rng.uniform(10.0, 5000.0)
            lo1, lo2 = rng.uniform(0.05, 0.8, size=2)
            hi1, hi2 = rng.uniform(lo1 + 0.02, 0.95), rng.uniform(lo2 + 0.02, 0.95)
            best = optimize_asym_ratio_box(V, RatioInterval(lo1, hi1), RatioInterval(lo2, hi2)).envelope
            r1 = rng.uniform(lo1, hi1, size=4)
            r2 = rng.uniform(lo2, hi2, size=4)
            interior = asym_min_envelope(V, r1 + r2 - r1 * r2)
            assert np.all(best <= interior * (1 + 1e-12))


class TestAsymFixedHeight:
    def test_unit_example(self):
        result = optimize_asym_fixed_height(3.0, 1.0, AsymRatios(0.5, 0.5))
        assert result.dims.L1 == pytest.approx(2.0, rel=1e-12)
        assert result.dims.L2 == pytest.approx(2.0, rel=1e-12)
        assert result.envelope == pytest.approx(11.0, rel=1e-12)
        assert result.dims.H == 1.0

    def test_house_a_height(self):
        house = AsymDims(13.7, 14.9, 8.7, 4.6, 3.6)
        result = optimize_asym_fixed_height(asym_volume(house), house.H, house.ratios)
        assert result.dims.L1 == pytest.approx(14.287, abs=1e-3)
        assert result.envelope == pytest.approx(358.37, abs=5e-3)
        assert asym_envelope(house) - result.envelope == pytest.approx(0.18, abs=5e-3)

    def test_gap_to_unequal_wings(self):
        house = AsymDims(13.7, 14.9, 8.7, 4.6, 3.6)
        result = optimize_asym_fixed_height(asym_volume(house), house.H, house.ratios)
        gap = 2 * house.H * (math.sqrt(house.L1) - math.sqrt(house.L2)) ** 2
        assert asym_envelope(house) - result.envelope == pytest.approx(gap, rel=1e-9)

    def test_height_must_be_positive(self):
        with pytest.raises(GeometryError) as info:
            optimize_asym_fixed_height(3.0, 0.0, AsymRatios(0.5, 0.5))
        assert info.value.field == "H"

    @settings(max_examples=200)
    @given(V=volumes, H=st.floats(1.0, 10.0), r1=asym_ratios, r2=asym_ratios)
    def test_height_is_kept(self, V, H, r1, r2):
        result = optimize_asym_fixed_height(V, H, AsymRatios(r1, r2))
        assert result.dims.H == H
        assert result.dims.L1 == result.dims.L2
        assert asym_volume(result.dims) == pytest.approx(V, rel=1e-10)


class TestDegenerateCuboid:
    def test_300_cubic_meters(self, caplog):
        result = detect_degenerate_cuboid(300.0)
        d = result.dims
        assert result.degenerate
        assert result.scenario is ScenarioTag.DEGENERATE_CUBOID
        assert d.is_degenerate
        assert d.L == d.B == pytest.approx(600.0 ** (1 / 3), rel=1e-12)
        assert d.H == pytest.approx(75.0 ** (1 / 3), rel=1e-12)
        assert result.envelope == pytest.approx(213.41, abs=5e-3)
        assert "cuboid" in caplog.text

    def test_half_cubic_meter(self):
        result = detect_degenerate_cuboid(0.5)
        assert result.dims.L == pytest.approx(1.0, rel=1e-12)
        assert result.envelope == pytest.approx(3.0, rel=1e-12)

    def test_negative_volume(self):
        with pytest.raises(GeometryError):
            detect_degenerate_cuboid(-1.0)

    @given(V=volumes)
    def test_matches_the_ratio_one_limit(self, V):
        assert detect_degenerate_cuboid(V).envelope == pytest.approx(sym_min_envelope(V, 1.0), rel=1e-12)
        assert detect_degenerate_cuboid(V).envelope == pytest.approx(asym_min_envelope(V, 1.0), rel=1e-12)

    @given(V=volumes, r=sym_ratios, r1=asym_ratios, r2=asym_ratios)
    def test_no_l_plan_undercuts_the_cuboid(self, V, r, r1, r2):
        cuboid = detect_degenerate_cuboid(V).envelope
        assert optimize_sym_fixed_ratio(V, SymRatio(r)).envelope > cuboid
        assert optimize_asym_fixed_ratios(V, AsymRatios(r1, r2)).envelope > cuboid


class TestMinimalEnvelopeShape:
    @settings(max_examples=250)
    @given(V=volumes, r=st.floats(1.0, 20.0), step=st.floats(1e-3, 1.0))
    def test_symmetric_minimum_grows_with_ratio(self, V, r, step):
        assert sym_min_envelope(V, r + step) > sym_min_envelope(V, r)

    @settings(max_examples=250)
    @given(V=volumes, k=st.floats(0.05, 0.95), step=st.floats(1e-3, 0.04))
    def test_asymmetric_minimum_falls_with_fill_factor(self, V, k, step):
        assert asym_min_envelope(V, k + step) < asym_min_envelope(V, k)

    def test_asymmetric_minimum_is_vectorized(self):
        k = np.array([0.5, 0.75, 1.0])
        values = asym_min_envelope(300.0, k)
        assert values.shape == (3,)
        np.testing.assert_allclose(values[1], optimize_asym_fixed_ratios(300.0, AsymRatios(0.5, 0.5)).envelope)


class TestScaleLaw:
    @settings(max_examples=100)
    @given(V=volumes, r=sym_ratios, c=st.floats(0.1, 10.0))
    def test_symmetric(self, V, r, c):
        base = optimize_sym_fixed_ratio(V, SymRatio(r))
        scaled = optimize_sym_fixed_ratio(c * V, SymRatio(r))
        np.testing.assert_allclose(scaled.lengths(), np.array(base.lengths()) * c ** (1 / 3), rtol=1e-10)
        assert scaled.envelope == pytest.approx(base.envelope * c ** (2 / 3), rel=1e-10)

    @settings(max_examples=100)
    @given(V=volumes, r1=asym_ratios, r2=asym_ratios, c=st.floats(0.1, 10.0))
    def test_asymmetric(self, V, r1, r2, c):
        base = optimize_asym_fixed_ratios(V, AsymRatios(r1, r2))
        scaled = optimize_asym_fixed_ratios(c * V, AsymRatios(r1, r2))
        np.testing.assert_allclose(scaled.lengths(), np.array(base.lengths()) * c ** (1 / 3), rtol=1e-10)
        assert scaled.envelope == pytest.approx(base.envelope * c ** (2 / 3), rel=1e-10)

    @settings(max_examples=100)
    @given(V=volumes, H=st.floats(1.0, 10.0), r1=asym_ratios, r2=asym_ratios, c=st.floats(0.1, 10.0))
    def test_fixed_height_scales_with_the_height(self, V, H, r1, r2, c):
        ratios = AsymRatios(r1, r2)
        base = optimize_asym_fixed_height(V, H, ratios)
        scaled = optimize_asym_fixed_height(c * V, c ** (1 / 3) * H, ratios)
        np.testing.assert_allclose(scaled.lengths(), np.array(base.lengths()) * c ** (1 / 3), rtol=1e-10)
        assert scaled.envelope == pytest.approx(base.envelope * c ** (2 / 3), rel=1e-10)

    @settings(max_examples=100)
    @given(V=volumes, lo=sym_ratios, width=st.floats(0.01, 5.0), c=st.floats(0.1, 10.0))
    def test_symmetric_interval(self, V, lo, width, c):
        bounds = RatioInterval(lo, lo + width)
        base = optimize_sym_ratio_interval(V, bounds)
        scaled = optimize_sym_ratio_interval(c * V, bounds)
        np.testing.assert_allclose(scaled.lengths(), np.array(base.lengths()) * c ** (1 / 3), rtol=1e-10)
        assert scaled.envelope == pytest.approx(base.envelope * c ** (2 / 3), rel=1e-10)
        assert scaled.active_constraints == base.active_constraints

    @settings(max_examples=100)
    @given(
        V=volumes,
        lo1=st.floats(0.02, 0.5),
        lo2=st.floats(0.02, 0.5),
        w1=st.floats(0.01, 0.45),
        w2=st.floats(0.01, 0.45),
        c=st.floats(0.1, 10.0),
    )
    def test_asymmetric_box(self, V, lo1, lo2, w1, w2, c):
        b1, b2 = RatioInterval(lo1, lo1 + w1), RatioInterval(lo2, lo2 + w2)
        base = optimize_asym_ratio_box(V, b1, b2)
        scaled = optimize_asym_ratio_box(c * V, b1, b2)
        np.testing.assert_allclose(scaled.lengths(), np.array(base.lengths()) * c ** (1 / 3), rtol=1e-10)
        assert scaled.envelope == pytest.approx(base.envelope * c ** (2 / 3), rel=1e-10)

    @settings(max_examples=100)
    @given(V=volumes, c=st.floats(0.1, 10.0))
    def test_degenerate_cuboid(self, V, c):
        base = detect_degenerate_cuboid(V)
        scaled = detect_degenerate_cuboid(c * V)
        np.testing.assert_allclose(scaled.lengths(), np.array(base.lengths()) * c ** (1 / 3), rtol=1e-10)
        assert scaled.envelope == pytest.approx(base.envelope * c ** (2 / 3), rel=1e-10)


class TestCompactness:
    def test_optimum_is_fully_compact(self):
        assert float(compactness(234.90, 300.0, SymRatio(2.0))) == pytest.approx(1.0, abs=1e-4)

    def test_wider_plan(self):
        ratio = compactness(261.2857, 300.0, SymRatio(2.0))
        assert ratio.value == pytest.approx(1.11236, abs=1e-5)
        assert compactness_at_width(7.0, SymRatio(2.0), 300.0).value == pytest.approx(ratio.value, abs=1e-6)

    def test_envelope_below_minimum_is_inconsistent(self):
        with pytest.raises(InconsistencyError):
            compactness(200.0, 300.0, SymRatio(2.0))

    def test_degenerate_ratio(self):
        with pytest.raises(DegeneracyError):
            compactness(250.0, 300.0, SymRatio.degenerate())

    def test_ratio_below_one_is_inconsistent(self):
        with pytest.raises(InconsistencyError):
            CompactnessRatio(0.9)

    @settings(max_examples=200)
    @given(B=st.floats(0.5, 20.0), r=sym_ratios, V=volumes)
    def test_at_width_matches_concrete_plan(self, B, r, V):
        L = r * B
        d = SymDims(L, B, V / (2 * L * B - B ** 2))
        by_plan = compactness_of(d).value
        assert by_plan >= 1.0
        assert compactness_at_width(B, SymRatio(r), V).value == pytest.approx(by_plan, rel=1e-9)


class TestSelfCheck:
    def test_tampered_envelope_is_caught(self):
        good = optimize_sym_fixed_ratio(300.0, SymRatio(2.0))
        bad = OptimizationResult(
            scenario=good.scenario, dims=good.dims, envelope=good.envelope * 1.01, input_volume=300.0
        )
        with pytest.raises(InconsistencyError):
            bad.verify()

    def test_wrong_volume_is_caught(self):
        good = optimize_asym_fixed_ratios(300.0, AsymRatios(0.4, 0.6))
        bad = OptimizationResult(
            scenario=good.scenario, dims=good.dims, envelope=good.envelope, input_volume=301.0
        )
        with pytest.raises(InconsistencyError):
            bad.verify()


class TestScenarios:
    @pytest.mark.parametrize("name", sorted(SCENARIOS))
    def test_worked_example_solves(self, name):
        scenario = SCENARIOS[name].worked_example()
        result = scenario.solve()
        assert result.scenario is scenario.tag
        assert len(scenario.free_coordinates(result)) == len(scenario.coordinate_names)
        assert scenario.get_name() == scenario.tag.value
        assert type(scenario).__name__ in repr(scenario)

    @pytest.mark.parametrize("name", sorted(SCENARIOS))
    def test_sampling_is_reproducible(self, name):
        cls = SCENARIOS[name]
        first = cls.sample(np.random.default_rng(5))
        second = cls.sample(np.random.default_rng(5))
        assert first.describe() == second.describe()
        assert first.solve().envelope == second.solve().envelope

    def test_interval_scenario_coordinates(self):
        scenario = SymRatioIntervalScenario.worked_example()
        B, r = scenario.free_coordinates(scenario.solve())
        assert r == pytest.approx(3.0)
        assert B == pytest.approx(3.6342, abs=1e-4)

    def test_box_scenario_coordinates(self):
        scenario = AsymRatioBoxScenario.worked_example()
        L1, L2, r1, r2 = scenario.free_coordinates(scenario.solve())
        assert (r1, r2) == (pytest.approx(0.5), pytest.approx(0.8))
        assert L1 == pytest.approx(L2)

    def test_fixed_height_scenario_rejects_bad_height(self):
        with pytest.raises(GeometryError):
            AsymFixedHeightScenario(100.0, -2.0, AsymRatios(0.5, 0.5))
