"""Deterministic techno-economic model for gray, blue and green hydrogen.

Levelized cost of hydrogen, discounted-cash-flow metrics (NPV, IRR,
break-even), carbon pricing and production-credit overlays, and
delivered-cost logistics chains, all over a validated scenario config.
"""

from .analysis import (
    FIGURE_IDS,
    FigureTable,
    SweepSpec,
    TornadoEntry,
    evaluate_metric,
    figure_data,
    sweep,
    tornado,
)
from .core import (
    DEFAULT_CREDITS,
    H2_LHV_KWH_PER_KG,
    HOURS_PER_YEAR,
    FinancialParams,
    Pathway,
    PathwayParams,
    PolicyRegime,
    ValueBand,
    annual_output_kg,
    feedstock_cost_green,
)
from .dataset import REFERENCE, ReferenceDataset
from .errors import (
    BracketError,
    ConfigError,
    ConvergenceError,
    H2TeaError,
    UndefinedMetricError,
)
from .finance import (
    CashFlowSeries,
    breakeven_price,
    build_cashflows,
    irr,
    irr_vs_price,
    npv,
    npv_vs_price,
    variable_cost_per_kg,
)
from .lcoh import (
    CostBreakdown,
    ScaleBand,
    annuity_sum,
    capex_at_scale,
    crf,
    lcoh,
    lcoh_at_size,
    lcoh_vs_size,
    opex_at_scale,
    params_at_size,
)
from .logistics import (
    DeliveredCost,
    StorageKind,
    StorageSpec,
    TransportLeg,
    TransportMode,
    cheapest_chain,
    compose_chain,
    default_leg,
    default_storage,
    leg_cost,
    storage_cost_per_kg,
    voyage_loss,
)
from .policy import (
    STATUTORY_CREDIT_YEARS,
    carbon_adder,
    effective_lcoh,
    levelized_credit,
    npv_vs_carbon_price,
    switchover_carbon_price,
)
from .scenario import ChainSpec, Scenario, load_defaults, load_scenario, load_scenario_file

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "BracketError",
    "CashFlowSeries",
    "ChainSpec",
    "ConfigError",
    "ConvergenceError",
    "CostBreakdown",
    "DEFAULT_CREDITS",
    "DeliveredCost",
    "FIGURE_IDS",
    "FigureTable",
    "FinancialParams",
    "H2TeaError",
    "H2_LHV_KWH_PER_KG",
    "HOURS_PER_YEAR",
    "Pathway",
    "PathwayParams",
    "PolicyRegime",
    "REFERENCE",
    "ReferenceDataset",
    "ScaleBand",
    "Scenario",
    "StorageKind",
    "StorageSpec",
    "STATUTORY_CREDIT_YEARS",
    "SweepSpec",
    "TornadoEntry",
    "TransportLeg",
    "TransportMode",
    "UndefinedMetricError",
    "ValueBand",
    "annual_output_kg",
    "annuity_sum",
    "breakeven_price",
    "build_cashflows",
    "capex_at_scale",
    "carbon_adder",
    "cheapest_chain",
    "compose_chain",
    "crf",
    "default_leg",
    "default_storage",
    "effective_lcoh",
    "evaluate_metric",
    "feedstock_cost_green",
    "figure_data",
    "irr",
    "irr_vs_price",
    "lcoh",
    "lcoh_at_size",
    "lcoh_vs_size",
    "leg_cost",
    "levelized_credit",
    "load_defaults",
    "load_scenario",
    "load_scenario_file",
    "npv",
    "npv_vs_carbon_price",
    "npv_vs_price",
    "opex_at_scale",
    "params_at_size",
    "storage_cost_per_kg",
    "sweep",
    "switchover_carbon_price",
    "tornado",
    "variable_cost_per_kg",
    "voyage_loss",
]
