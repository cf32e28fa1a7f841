"""Discounted-cash-flow analysis: NPV, IRR and break-even pricing.

Cash flows are real (uninflated) and constant across years except for
credit expiry; all production is sold at a single exogenous price and
there is no terminal value. Solver tolerances are fixed here: prices are
resolved to 1e-9 USD/kg with a residual-NPV cap of 0.5 USD, IRR to a
relative NPV residual of 1e-6 of the outlay.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import FinancialParams, PathwayParams, PolicyRegime, annual_output_kg
from .errors import BracketError, UndefinedMetricError
from .solvers import bisect

IRR_SEARCH_INTERVAL = (-0.99, 10.0)
BREAKEVEN_PRICE_INTERVAL = (0.0, 100.0)


@dataclass(frozen=True)
class CashFlowSeries:
    """Year-0 outlay (positive magnitude) plus one net flow per operating year."""

    initial_outlay: float
    net_flows: tuple[float, ...]

    def __post_init__(self) -> None:
        if self.initial_outlay < 0.0:
            raise ValueError(f"initial_outlay must be >= 0, got {self.initial_outlay}")
        if not self.net_flows:
            raise ValueError("net_flows must contain at least one year")
        object.__setattr__(self, "net_flows", tuple(float(x) for x in self.net_flows))


def variable_cost_per_kg(params: PathwayParams, policy: PolicyRegime, *, credited: bool) -> float:
    """Per-kg cash cost of production under a policy regime.

    O&M + feedstock + the carbon cost of residual emissions, minus the
    production credit while it applies.
    """
    carbon = params.effective_emission_intensity * policy.carbon_price / 1000.0
    credit = policy.credit_for(params.pathway) if credited else 0.0
    return params.fixed_opex + params.feedstock_cost + carbon - credit


def build_cashflows(
    params: PathwayParams,
    fin: FinancialParams,
    policy: PolicyRegime,
    h2_price: float,
) -> CashFlowSeries:
    """Cash flows for a plant selling its full output at h2_price."""
    if h2_price < 0.0:
        raise ValueError(f"h2_price must be >= 0, got {h2_price}")
    if policy.credit_years > fin.lifetime_years:
        raise ValueError(
            f"credit_years ({policy.credit_years}) exceeds lifetime ({fin.lifetime_years})"
        )
    output = annual_output_kg(params, fin)
    margin_credited = h2_price - variable_cost_per_kg(params, policy, credited=True)
    margin_plain = h2_price - variable_cost_per_kg(params, policy, credited=False)
    flows = tuple(
        output * (margin_credited if year <= policy.credit_years else margin_plain)
        for year in range(1, fin.lifetime_years + 1)
    )
    return CashFlowSeries(initial_outlay=params.capex * fin.plant_size_kw, net_flows=flows)


def npv(cf: CashFlowSeries, discount_rate: float) -> float:
    """-outlay + sum of net_flows[t] / (1+r)^t for t = 1..n."""
    if discount_rate <= -1.0:
        raise ValueError(f"discount_rate must be > -1, got {discount_rate}")
    total = -cf.initial_outlay
    for year, flow in enumerate(cf.net_flows, start=1):
        total += flow / (1.0 + discount_rate) ** year
    return total


def irr(cf: CashFlowSeries) -> float:
    """The unique rate where NPV crosses zero for a single-sign-change series."""
    if cf.initial_outlay <= 0.0:
        raise UndefinedMetricError("no sign change: the series has no initial outlay")
    if any(flow < 0.0 for flow in cf.net_flows):
        raise UndefinedMetricError("no sign change: net flows must be non-negative")
    if not any(flow > 0.0 for flow in cf.net_flows):
        raise UndefinedMetricError("no sign change: all net flows are zero")
    lo, hi = IRR_SEARCH_INTERVAL
    return bisect(
        lambda r: npv(cf, r),
        lo,
        hi,
        xtol=1e-9,
        ftol=1e-6 * cf.initial_outlay,
        label="irr",
    )


def breakeven_price(
    params: PathwayParams, fin: FinancialParams, policy: PolicyRegime
) -> float:
    """Hydrogen price at which project NPV is zero.

    With credit_years equal to the lifetime this coincides with the
    policy-adjusted levelized cost (production components only).
    """
    output = annual_output_kg(params, fin)
    if output <= 0.0:
        raise ValueError("annual output is zero; break-even undefined")

    def objective(price: float) -> float:
        return npv(build_cashflows(params, fin, policy, price), fin.discount_rate)

    lo, hi = BREAKEVEN_PRICE_INTERVAL
    f_lo = objective(lo)
    if f_lo == 0.0:
        return lo
    if f_lo > 0.0:
        raise BracketError(
            "break-even price lies below 0 USD/kg (credits exceed all costs)"
        )
    return bisect(objective, lo, hi, xtol=1e-9, ftol=0.5, label="breakeven price")


def npv_vs_price(
    params: PathwayParams,
    fin: FinancialParams,
    policy: PolicyRegime,
    price_grid: list[float],
) -> list[tuple[float, float]]:
    """NPV at each price; affine and strictly increasing in price."""
    if not price_grid:
        raise ValueError("price_grid must be non-empty")
    return [
        (price, npv(build_cashflows(params, fin, policy, price), fin.discount_rate))
        for price in price_grid
    ]


def irr_vs_price(
    params: PathwayParams,
    fin: FinancialParams,
    policy: PolicyRegime,
    price_grid: list[float],
) -> list[tuple[float, float | None]]:
    """IRR at each price where defined; None marks prices with no sign change."""
    if not price_grid:
        raise ValueError("price_grid must be non-empty")
    results: list[tuple[float, float | None]] = []
    for price in price_grid:
        series = build_cashflows(params, fin, policy, price)
        try:
            results.append((price, irr(series)))
        except UndefinedMetricError:
            results.append((price, None))
    return results
