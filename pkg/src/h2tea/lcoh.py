"""Capital-recovery annualization and levelized cost of hydrogen.

The levelized cost divides the total annualized cost of production by the
annual hydrogen output. Capital is annualized with the standard capital
recovery factor; everything is carried at full precision and only rounded
at the reporting edge.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

from .core import FinancialParams, Pathway, PathwayParams, ValueBand, annual_output_kg
from .dataset import REFERENCE, ReferenceDataset


def crf(discount_rate: float, lifetime_years: int) -> float:
    """Capital recovery factor r(1+r)^n / ((1+r)^n - 1); 1/n at r = 0.

    Evaluated via expm1/log1p so tiny rates degrade smoothly into the
    zero-rate limit instead of cancelling.
    """
    if discount_rate < 0.0:
        raise ValueError(f"discount_rate must be >= 0, got {discount_rate}")
    if lifetime_years < 1:
        raise ValueError(f"lifetime_years must be >= 1, got {lifetime_years}")
    growth_minus_one = math.expm1(lifetime_years * math.log1p(discount_rate))
    if growth_minus_one == 0.0:
        return 1.0 / lifetime_years
    return discount_rate * (growth_minus_one + 1.0) / growth_minus_one


def annuity_sum(discount_rate: float, lifetime_years: int) -> float:
    """Present value of 1 USD/yr over the lifetime: sum of (1+r)^-t; n at r = 0."""
    if discount_rate < 0.0:
        raise ValueError(f"discount_rate must be >= 0, got {discount_rate}")
    if lifetime_years < 1:
        raise ValueError(f"lifetime_years must be >= 1, got {lifetime_years}")
    one_minus_discounted = -math.expm1(-lifetime_years * math.log1p(discount_rate))
    if one_minus_discounted == 0.0:
        return float(lifetime_years)
    return one_minus_discounted / discount_rate


@dataclass(frozen=True)
class CostBreakdown:
    """Per-kg cost decomposition; total is always the component sum.

    credit is the only non-positive component. When a policy credit would
    push the sum below zero the total is floored at 0 and `floored` is set,
    so a negative levelized cost never leaves the model silently.
    """

    capital: float
    fixed_om: float
    feedstock: float
    carbon: float = 0.0
    credit: float = 0.0
    transport: float = 0.0
    storage: float = 0.0
    floored: bool = False
    total: float = field(init=False)

    def __post_init__(self) -> None:
        for name in ("capital", "fixed_om", "feedstock", "carbon", "transport", "storage"):
            if getattr(self, name) < 0.0:
                raise ValueError(f"{name} must be >= 0, got {getattr(self, name)}")
        if self.credit > 0.0:
            raise ValueError(f"credit must be <= 0, got {self.credit}")
        raw = (
            self.capital + self.fixed_om + self.feedstock
            + self.carbon + self.credit + self.transport + self.storage
        )
        if self.floored and raw >= 0.0:
            raise ValueError("floored breakdown requires a negative component sum")
        object.__setattr__(self, "total", 0.0 if self.floored else raw)

    def as_dict(self) -> dict[str, float]:
        return {
            "capital": self.capital,
            "fixed_om": self.fixed_om,
            "feedstock": self.feedstock,
            "carbon": self.carbon,
            "credit": self.credit,
            "transport": self.transport,
            "storage": self.storage,
            "total": self.total,
        }


def lcoh(params: PathwayParams, fin: FinancialParams) -> CostBreakdown:
    """Production-only levelized cost; policy and logistics components are zero here."""
    output = annual_output_kg(params, fin)
    if output <= 0.0:
        raise ValueError("annual output is zero; cannot levelize")
    capital = params.capex * fin.plant_size_kw * crf(fin.discount_rate, fin.lifetime_years) / output
    return CostBreakdown(capital=capital, fixed_om=params.fixed_opex, feedstock=params.feedstock_cost)


# Plant-size anchors of the scale tables, in kW.
SCALE_ANCHORS_KW = (1_000.0, 10_000.0, 100_000.0)
_SCALE_LABELS = ("1mw", "10mw", "100mw")


@dataclass(frozen=True)
class ScaleBand:
    """Interpolated band plus a flag marking out-of-range sizes that were clamped."""

    band: ValueBand
    clamped: bool = False


def _interp_at_scale(
    table: str, column_fmt: str, pathway: Pathway, plant_size_kw: float, dataset: ReferenceDataset
) -> ScaleBand:
    if plant_size_kw <= 0.0:
        raise ValueError(f"plant_size_kw must be > 0, got {plant_size_kw}")
    bands = [
        dataset.band(table, pathway.value, column_fmt.format(label))
        for label in _SCALE_LABELS
    ]
    if plant_size_kw <= SCALE_ANCHORS_KW[0]:
        return ScaleBand(bands[0], clamped=plant_size_kw < SCALE_ANCHORS_KW[0])
    if plant_size_kw >= SCALE_ANCHORS_KW[-1]:
        return ScaleBand(bands[-1], clamped=plant_size_kw > SCALE_ANCHORS_KW[-1])
    seg = 0 if plant_size_kw <= SCALE_ANCHORS_KW[1] else 1
    left, right = SCALE_ANCHORS_KW[seg], SCALE_ANCHORS_KW[seg + 1]
    # linear in log(size): the anchors are decade-spaced
    t = (math.log(plant_size_kw) - math.log(left)) / (math.log(right) - math.log(left))
    lo = bands[seg].low + t * (bands[seg + 1].low - bands[seg].low)
    hi = bands[seg].high + t * (bands[seg + 1].high - bands[seg].high)
    return ScaleBand(ValueBand.from_range(lo, hi))


def capex_at_scale(
    pathway: Pathway, plant_size_kw: float, dataset: ReferenceDataset = REFERENCE
) -> ScaleBand:
    """Production capex band (USD/kW) log-interpolated between the 1/10/100 MW anchors."""
    return _interp_at_scale("table10", "capex_{}_usd_per_kw", pathway, plant_size_kw, dataset)


def opex_at_scale(
    pathway: Pathway, plant_size_kw: float, dataset: ReferenceDataset = REFERENCE
) -> ScaleBand:
    """Plant O&M band (USD/kg) log-interpolated between the 1/10/100 MW anchors."""
    return _interp_at_scale("table11", "opex_{}_usd_per_kg", pathway, plant_size_kw, dataset)


def params_at_size(
    params: PathwayParams, plant_size_kw: float, dataset: ReferenceDataset = REFERENCE
) -> PathwayParams:
    """Parameters with capex and plant O&M replaced by the at-scale mid values."""
    return replace(
        params,
        capex=capex_at_scale(params.pathway, plant_size_kw, dataset).band.mid,
        fixed_opex=opex_at_scale(params.pathway, plant_size_kw, dataset).band.mid,
    )


def lcoh_at_size(
    params: PathwayParams,
    fin: FinancialParams,
    plant_size_kw: float,
    dataset: ReferenceDataset = REFERENCE,
) -> CostBreakdown:
    sized = params_at_size(params, plant_size_kw, dataset)
    return lcoh(sized, replace(fin, plant_size_kw=plant_size_kw))


def lcoh_vs_size(
    params: PathwayParams,
    fin: FinancialParams,
    sizes_kw: list[float],
    dataset: ReferenceDataset = REFERENCE,
) -> list[tuple[float, float]]:
    """Levelized cost at each plant size using the at-scale capex/opex mids."""
    if not sizes_kw:
        raise ValueError("sizes_kw must be non-empty")
    return [(size, lcoh_at_size(params, fin, size, dataset).total) for size in sizes_kw]
