"""Capital recovery, levelized cost, and economies-of-scale interpolation."""

import dataclasses

import pytest

from h2tea import (
    CostBreakdown,
    FinancialParams,
    Pathway,
    PathwayParams,
    annuity_sum,
    capex_at_scale,
    crf,
    lcoh,
    lcoh_vs_size,
    opex_at_scale,
)
from conftest import annuity_oracle


class TestCrf:
    def test_zero_rate_limit(self):
        assert crf(0.0, 20) == pytest.approx(0.05, rel=1e-15)

    def test_seven_pct_twenty_years_vs_annuity_oracle(self):
        # independent oracle: reciprocal of the 20-term discounted sum
        oracle = 1.0 / annuity_oracle(0.07, 20)
        assert annuity_oracle(0.07, 20) == pytest.approx(10.594, abs=5e-4)
        assert crf(0.07, 20) == pytest.approx(oracle, rel=1e-12)
        assert crf(0.07, 20) == pytest.approx(0.09439, abs=5e-6)

    def test_single_year(self):
        assert crf(0.07, 1) == pytest.approx(1.07, rel=1e-15)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            crf(-0.01, 20)
        with pytest.raises(ValueError):
            crf(0.07, 0)

    def test_crf_times_annuity_is_one(self):
        for r100 in range(0, 21):
            for n in range(1, 41):
                r = r100 / 100.0
                assert crf(r, n) * annuity_sum(r, n) == pytest.approx(1.0, rel=1e-12)


class TestCostBreakdown:
    def test_total_is_component_sum(self):
        b = CostBreakdown(capital=1.0, fixed_om=0.5, feedstock=2.0, carbon=0.3,
                          credit=-1.0, transport=0.2, storage=0.1)
        assert b.total == pytest.approx(1.0 + 0.5 + 2.0 + 0.3 - 1.0 + 0.2 + 0.1, rel=1e-15)

    def test_sign_rules(self):
        with pytest.raises(ValueError):
            CostBreakdown(capital=-0.1, fixed_om=0.0, feedstock=0.0)
        with pytest.raises(ValueError):
            CostBreakdown(capital=0.1, fixed_om=0.0, feedstock=0.0, credit=0.5)

    def test_floored_total_is_zero(self):
        b = CostBreakdown(capital=1.0, fixed_om=0.0, feedstock=0.0, credit=-2.0, floored=True)
        assert b.total == 0.0
        with pytest.raises(ValueError):
            CostBreakdown(capital=1.0, fixed_om=0.0, feedstock=0.0, floored=True)


class TestLcoh:
    def test_green_example_point(self, fin):
        # capex 1700, CF 0.5, eff 0.60, electricity 50 USD/MWh, opex 0.50
        params = PathwayParams(
            pathway=Pathway.GREEN, capex=1700.0, fixed_opex=0.50,
            efficiency=0.60, capacity_factor=0.50, electricity_price=50.0,
        )
        b = lcoh(params, fin)
        output_per_kw = 8760 * 0.5 / (33.33 / 0.60)
        assert b.capital == pytest.approx(1700 * crf(0.07, 20) / output_per_kw, rel=1e-12)
        assert b.capital == pytest.approx(2.04, abs=0.01)
        assert b.feedstock == pytest.approx(2.78, abs=0.005)
        assert b.total == pytest.approx(5.31, abs=0.01)
        assert 3.50 <= b.total <= 6.00

    def test_gray_defaults_inside_band(self, gray, fin):
        b = lcoh(gray, fin)
        # hand arithmetic: 900*crf/(8760*0.9/41.66..) + 0.20 + 1.15
        assert b.total == pytest.approx(
            900 * crf(0.07, 20) * (33.33 / 0.80) / (8760 * 0.9) + 0.20 + 1.15, rel=1e-12
        )
        assert 1.50 <= b.total <= 2.50

    def test_capital_term_vanishes(self, fin):
        params = PathwayParams(
            pathway=Pathway.GRAY, capex=1e-9, fixed_opex=0.2,
            efficiency=0.8, capacity_factor=1.0, feedstock_cost=1.15,
        )
        assert lcoh(params, fin).total == pytest.approx(0.2 + 1.15, abs=1e-9)

    def test_size_invariance_at_fixed_unit_capex(self, green):
        # scale enters only via the capex lookup, not the division
        small = lcoh(green, FinancialParams(plant_size_kw=10_000.0))
        large = lcoh(green, FinancialParams(plant_size_kw=20_000.0))
        assert small.total == pytest.approx(large.total, rel=1e-12)

    def test_monotonicity_in_drivers(self, gray, fin):
        base = lcoh(gray, fin).total
        assert lcoh(dataclasses.replace(gray, capex=gray.capex * 1.1), fin).total > base
        assert lcoh(dataclasses.replace(gray, fixed_opex=gray.fixed_opex + 0.1), fin).total > base
        assert lcoh(dataclasses.replace(gray, feedstock_cost=gray.feedstock_cost + 0.1), fin).total > base
        assert lcoh(gray, dataclasses.replace(fin, discount_rate=0.09)).total > base
        assert lcoh(dataclasses.replace(gray, capacity_factor=0.95), fin).total < base


class TestAtScale:
    @pytest.mark.parametrize(
        "pathway,size_kw,low,high",
        [
            (Pathway.GREEN, 1_000.0, 1500, 2500),
            (Pathway.GREEN, 10_000.0, 1200, 1700),
            (Pathway.GREEN, 100_000.0, 800, 1500),
        ],
    )
    def test_capex_anchors_exact(self, pathway, size_kw, low, high):
        result = capex_at_scale(pathway, size_kw)
        assert not result.clamped
        assert result.band.low == low
        assert result.band.high == high

    @pytest.mark.parametrize(
        "pathway,size_kw,low,high",
        [
            (Pathway.BLUE, 1_000.0, 0.07, 0.12),
            (Pathway.GRAY, 100_000.0, 0.04, 0.08),
            (Pathway.BLUE, 10_000.0, 0.06, 0.10),
        ],
    )
    def test_opex_anchors_exact(self, pathway, size_kw, low, high):
        result = opex_at_scale(pathway, size_kw)
        assert not result.clamped
        assert result.band.low == pytest.approx(low)
        assert result.band.high == pytest.approx(high)

    def test_clamping_flags(self):
        below = capex_at_scale(Pathway.GREEN, 500.0)
        above = capex_at_scale(Pathway.GREEN, 500_000.0)
        assert below.clamped and below.band.low == 1500
        assert above.clamped and above.band.high == 1500

    def test_interpolation_monotone_and_in_hull(self):
        sizes = [1_000.0 * 10 ** (i / 8.0) for i in range(17)]  # 1..100 MW log grid
        for pathway in Pathway:
            mids = [capex_at_scale(pathway, s).band.mid for s in sizes]
            assert all(a >= b - 1e-9 for a, b in zip(mids, mids[1:]))
            for size, mid in zip(sizes, mids):
                anchors = sorted(
                    capex_at_scale(pathway, a).band.mid for a in (1_000.0, 10_000.0, 100_000.0)
                )
                assert anchors[0] - 1e-9 <= mid <= anchors[-1] + 1e-9

    def test_geometric_mean_size_sits_between_anchors(self):
        # log-linear: halfway in log space between 1 and 10 MW
        import math
        band = capex_at_scale(Pathway.GREEN, 1_000.0 * math.sqrt(10)).band
        assert band.low == pytest.approx((1500 + 1200) / 2, rel=1e-9)
        assert band.high == pytest.approx((2500 + 1700) / 2, rel=1e-9)


class TestLcohVsSize:
    def test_strictly_decreasing_for_all_pathways(self, scenario):
        for pathway in Pathway:
            points = lcoh_vs_size(scenario.params(pathway), scenario.financial,
                                  [1_000.0, 10_000.0, 100_000.0])
            totals = [t for _, t in points]
            assert totals[0] > totals[1] > totals[2]

    def test_single_size_equals_direct_call(self, scenario):
        from h2tea import lcoh_at_size

        points = lcoh_vs_size(scenario.params(Pathway.BLUE), scenario.financial, [10_000.0])
        assert len(points) == 1
        direct = lcoh_at_size(scenario.params(Pathway.BLUE), scenario.financial, 10_000.0)
        assert points[0][1] == direct.total

    def test_green_drop_exceeds_gray_drop(self, scenario):
        def drop(pathway):
            pts = lcoh_vs_size(scenario.params(pathway), scenario.financial,
                               [1_000.0, 100_000.0])
            return pts[0][1] - pts[1][1]

        assert drop(Pathway.GREEN) > drop(Pathway.GRAY)

    def test_empty_sizes_rejected(self, scenario):
        with pytest.raises(ValueError):
            lcoh_vs_size(scenario.params(Pathway.GRAY), scenario.financial, [])
