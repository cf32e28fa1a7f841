"""Policy overlays: carbon-price adders, production credits, switchover points.

Credits shorter than the project lifetime are levelized with the ratio of
annuity factors, so a 10-year credit of X USD/kg is worth
X * annuity(r, 10) / annuity(r, lifetime) per kg over the whole project.
With credit_years equal to the lifetime the credit passes through flat.
"""

from __future__ import annotations

from dataclasses import replace
from typing import Mapping

from .core import FinancialParams, Pathway, PathwayParams, PolicyRegime
from .errors import UndefinedMetricError
from .finance import build_cashflows, npv
from .lcoh import CostBreakdown, annuity_sum, lcoh
from .solvers import bisect

#: Statutory duration of the per-kg production credit, in years. The headline
#: policy figures apply credits flat over the project lifetime; switchover
#: economics use this finite duration instead (see switchover_carbon_price).
STATUTORY_CREDIT_YEARS = 10

SWITCHOVER_SEARCH_INTERVAL = (0.0, 1000.0)


def carbon_adder(params: PathwayParams, carbon_price: float) -> float:
    """Carbon cost of residual emissions in USD/kg H2 at carbon_price USD/ton."""
    if carbon_price < 0.0:
        raise ValueError(f"carbon_price must be >= 0, got {carbon_price}")
    return params.effective_emission_intensity * carbon_price / 1000.0


def levelized_credit(
    credit: float, fin: FinancialParams, credit_years: int
) -> float:
    """Per-kg value of a finite-duration credit spread over the project lifetime."""
    if credit_years < 0 or credit_years > fin.lifetime_years:
        raise ValueError(
            f"credit_years must be in [0, {fin.lifetime_years}], got {credit_years}"
        )
    if credit_years == 0 or credit == 0.0:
        return 0.0
    fraction = annuity_sum(fin.discount_rate, credit_years) / annuity_sum(
        fin.discount_rate, fin.lifetime_years
    )
    return credit * fraction


def effective_lcoh(
    params: PathwayParams, fin: FinancialParams, policy: PolicyRegime
) -> CostBreakdown:
    """Levelized cost including the carbon adder and the levelized credit.

    The total never goes negative: a credit larger than all costs floors
    the total at zero and sets the `floored` flag on the breakdown.
    """
    base = lcoh(params, fin)
    carbon = carbon_adder(params, policy.carbon_price)
    credit = levelized_credit(policy.credit_for(params.pathway), fin, policy.credit_years)
    raw_sum = base.capital + base.fixed_om + base.feedstock + carbon - credit
    # `or 0.0` keeps a zero credit from surfacing as -0.0 in reports
    return replace(base, carbon=carbon, credit=-credit or 0.0, floored=raw_sum < 0.0)


def switchover_carbon_price(
    a: Pathway,
    b: Pathway,
    params: Mapping[Pathway, PathwayParams],
    fin: FinancialParams,
    policy_base: PolicyRegime,
) -> float:
    """Carbon price equalizing the effective levelized costs of two pathways.

    Credits and credit duration come from policy_base; only the carbon
    price is swept. Raises UndefinedMetricError when the two pathways have
    the same residual emission intensity or never cross in [0, 1000].
    """
    params_a, params_b = params[a], params[b]
    if abs(params_a.effective_emission_intensity - params_b.effective_emission_intensity) < 1e-12:
        raise UndefinedMetricError(
            f"{a.value} and {b.value} have identical effective emission intensity; no crossing"
        )

    def gap(carbon_price: float) -> float:
        regime = replace(policy_base, carbon_price=carbon_price)
        return (
            effective_lcoh(params_a, fin, regime).total
            - effective_lcoh(params_b, fin, regime).total
        )

    lo, hi = SWITCHOVER_SEARCH_INTERVAL
    g_lo, g_hi = gap(lo), gap(hi)
    if g_lo == 0.0:
        return lo
    if (g_lo > 0.0) == (g_hi > 0.0):
        cheaper = b if g_lo > 0.0 else a
        raise UndefinedMetricError(
            f"no crossing in [{lo:g}, {hi:g}] USD/ton: {cheaper.value} stays cheaper throughout"
        )
    return bisect(gap, lo, hi, xtol=1e-6, label=f"{a.value}/{b.value} switchover")


def npv_vs_carbon_price(
    params: PathwayParams,
    fin: FinancialParams,
    policy: PolicyRegime,
    h2_price: float,
    carbon_grid: list[float],
) -> list[tuple[float, float]]:
    """NPV at a fixed hydrogen price across a carbon-price grid.

    Zero-emission production yields a literally constant series; emitting
    pathways decline linearly with slope -output * intensity/1000 * annuity.
    """
    if not carbon_grid:
        raise ValueError("carbon_grid must be non-empty")
    results = []
    for carbon_price in carbon_grid:
        regime = replace(policy, carbon_price=carbon_price)
        series = build_cashflows(params, fin, regime, h2_price)
        results.append((carbon_price, npv(series, fin.discount_rate)))
    return results
