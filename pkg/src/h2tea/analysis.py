"""Parameter sweeps, tornado sensitivity and figure-data generation.

Every generator is pure and fully pinned: fixed grids, fixed column order,
fixed float formatting, so re-running a figure yields byte-identical CSV.
Grid points are independent; `parallel=True` evaluates them on a thread
pool and is required to produce the same bytes as the serial path.

Figure catalog (fig11 is intentionally absent: it covers market investment
projections, which are not model output; its transcribed anchor numbers
ship as a static, clearly labeled CSV next to the reference dataset):

* fig1   cost shares of the delivered chain at 1/10/100 MW
* fig2   profitability (NPV) vs selling price, all pathways
* fig3   green NPV vs selling price at 20/40/60 USD/MWh electricity
* fig4   NPV vs selling price, all pathways
* fig5   IRR vs selling price, all pathways (blank where undefined)
* fig6   tornado: NPV swing per driver, 10 MW green
* fig7   levelized cost vs plant size
* fig8   at-scale capex vs plant size
* fig9   NPV vs plant size at the scenario hydrogen price
* fig10  effective levelized cost vs carbon price, credits applied
* fig12  NPV vs carbon price at the scenario hydrogen price, credits applied
* fig13  green levelized cost vs electricity price

The finance figures (fig2-fig5) use a documented low-utilization green
variant (capacity factor 0.30, efficiency 0.60): the published profitability
curves are only reproducible with a green plant running well below the
default 0.50 capacity factor. figs 2-5 and fig9 are no-policy figures;
fig10/fig12 apply the scenario credits. fig13 uses `opex_source="table11"`
(at-scale O&M) since it isolates the electricity-price dependence.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Any, Callable, Iterable, Sequence

from .core import Pathway, PolicyRegime
from .errors import ConfigError, UndefinedMetricError
from .finance import breakeven_price, build_cashflows, irr, npv
from .lcoh import capex_at_scale, lcoh, lcoh_at_size, params_at_size
from .logistics import compose_chain, default_leg, default_storage
from .policy import effective_lcoh
from .scenario import Scenario, load_scenario

METRICS = ("lcoh", "npv", "irr", "breakeven", "delivered_cost")

#: Pathway column order used by every figure and table.
PATHWAY_ORDER = (Pathway.GRAY, Pathway.BLUE, Pathway.GREEN)

# Pinned figure grids. Versioned with the package; the acceptance suite
# asserts against exactly these.
PRICE_GRID = tuple(i * 0.25 for i in range(0, 41))          # 0..10 USD/kg
CARBON_GRID = tuple(float(c) for c in range(0, 201, 10))    # 0..200 USD/ton
SIZES_KW = (1_000.0, 10_000.0, 100_000.0)
ELECTRICITY_GRID = tuple(float(p) for p in range(20, 101, 5))   # 20..100 USD/MWh
FIG3_ELECTRICITY_PRICES = (20.0, 40.0, 60.0)

#: Green overrides for the finance figures (fig2-fig5); see module docstring.
LOW_CF_GREEN = {"capacity_factor": 0.30, "efficiency": 0.60}

#: Tornado drivers for fig6: selling price +-1 USD/kg, capex +-30%, and
#: feedstock +-30% expressed through the electricity price (green feedstock
#: is linear in it).
FIG6_DRIVERS = (
    ("market.h2_price_usd_per_kg", -1.0, 1.0, "relative"),
    ("pathways.green.capex_usd_per_kw", -0.30, 0.30, "fractional"),
    ("pathways.green.electricity_price_usd_per_mwh", -0.30, 0.30, "fractional"),
)

FLOAT_FORMAT = "{:.6f}"


@dataclass(frozen=True)
class FigureTable:
    """A rectangular result with pinned column order and rendering."""

    name: str
    columns: tuple[str, ...]
    rows: tuple[tuple[Any, ...], ...]

    def format_cell(self, value: Any) -> str:
        if value is None:
            return ""
        if isinstance(value, str):
            return value
        return FLOAT_FORMAT.format(float(value))

    def to_csv(self) -> str:
        lines = [",".join(self.columns)]
        lines.extend(",".join(self.format_cell(v) for v in row) for row in self.rows)
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        def jsonable(value: Any) -> Any:
            if value is None or isinstance(value, str):
                return value
            return round(float(value), 6)

        payload = {
            "name": self.name,
            "columns": list(self.columns),
            "rows": [[jsonable(v) for v in row] for row in self.rows],
        }
        return json.dumps(payload, indent=2, sort_keys=False) + "\n"


def _map_grid(fn: Callable[[float], tuple], grid: Sequence[float], parallel: bool) -> list[tuple]:
    if parallel:
        with ThreadPoolExecutor(max_workers=4) as pool:
            return list(pool.map(fn, grid))
    return [fn(value) for value in grid]


@dataclass(frozen=True)
class SweepSpec:
    """One swept parameter, the metric to evaluate and the pathways to report."""

    parameter: str
    grid: tuple[float, ...]
    metric: str
    pathways: tuple[Pathway, ...] = PATHWAY_ORDER

    def __post_init__(self) -> None:
        if self.metric not in METRICS:
            raise ConfigError(f"unknown metric {self.metric!r}; expected one of {METRICS}")
        if not self.grid:
            raise ConfigError("sweep grid must be non-empty")
        if any(b <= a for a, b in zip(self.grid, self.grid[1:])):
            raise ConfigError("sweep grid must be strictly increasing")
        if not self.pathways:
            raise ConfigError("sweep needs at least one pathway")
        object.__setattr__(self, "grid", tuple(float(v) for v in self.grid))
        object.__setattr__(self, "pathways", tuple(self.pathways))


def evaluate_metric(scenario: Scenario, metric: str, pathway: Pathway) -> float | None:
    """One metric for one pathway under a scenario.

    `lcoh` is the production-only levelized cost; npv/irr/breakeven apply
    the scenario's policy subtree; `delivered_cost` composes the scenario's
    default chain on top of production.
    """
    params = scenario.params(pathway)
    fin = scenario.financial
    if metric == "lcoh":
        return lcoh(params, fin).total
    if metric == "npv":
        return npv(build_cashflows(params, fin, scenario.policy, scenario.h2_price), fin.discount_rate)
    if metric == "irr":
        try:
            return irr(build_cashflows(params, fin, scenario.policy, scenario.h2_price))
        except UndefinedMetricError:
            return None
    if metric == "breakeven":
        return breakeven_price(params, fin, scenario.policy)
    if metric == "delivered_cost":
        leg = default_leg(scenario.chain.mode, scenario.chain.distance_km)
        store = None if scenario.chain.storage is None else default_storage(scenario.chain.storage)
        return compose_chain(lcoh(params, fin), [leg], store, fin).loss_adjusted_total
    raise ConfigError(f"unknown metric {metric!r}")


def _check_pathway_scope(spec: SweepSpec) -> None:
    if spec.parameter.startswith("pathways."):
        owner = Pathway.parse(spec.parameter.split(".")[1])
        for pathway in spec.pathways:
            if pathway is not owner:
                raise ConfigError(
                    f"parameter {spec.parameter} does not apply to pathway {pathway.value}"
                )


def sweep(scenario: Scenario, spec: SweepSpec, *, parallel: bool = False) -> FigureTable:
    """Evaluate a metric over a grid, all other scenario fields held fixed."""
    _check_pathway_scope(spec)
    scenario.with_value(spec.parameter, spec.grid[0])  # fail fast on bad paths

    def point(value: float) -> tuple:
        varied = scenario.with_value(spec.parameter, value)
        return (value, *(evaluate_metric(varied, spec.metric, p) for p in spec.pathways))

    rows = _map_grid(point, spec.grid, parallel)
    columns = (spec.parameter.split(".")[-1], *(p.value for p in spec.pathways))
    return FigureTable(name=f"sweep_{spec.metric}", columns=columns, rows=tuple(rows))


@dataclass(frozen=True)
class TornadoEntry:
    """Metric swing when one driver moves between its low and high setting."""

    parameter: str
    low_value: float
    high_value: float
    metric_at_low: float
    metric_at_high: float

    @property
    def swing(self) -> float:
        return abs(self.metric_at_high - self.metric_at_low)


def tornado(
    scenario: Scenario,
    parameters: Iterable[tuple[str, float, float]],
    metric: str,
    pathway: Pathway,
) -> list[TornadoEntry]:
    """Endpoint evaluations per driver, sorted by descending swing."""
    entries = []
    for parameter, low, high in parameters:
        if not low < high:
            raise ConfigError(f"{parameter}: tornado bounds must satisfy low < high")
        at_low = evaluate_metric(scenario.with_value(parameter, low), metric, pathway)
        at_high = evaluate_metric(scenario.with_value(parameter, high), metric, pathway)
        if at_low is None or at_high is None:
            raise UndefinedMetricError(f"{metric} undefined at a tornado endpoint of {parameter}")
        entries.append(TornadoEntry(parameter, float(low), float(high), at_low, at_high))
    return sorted(entries, key=lambda e: (-e.swing, e.parameter))


# --------------------------------------------------------------------------
# figure generators

FIGURE_IDS = ("fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8",
              "fig9", "fig10", "fig12", "fig13")


def _with_green_overrides(scenario: Scenario, overrides: dict[str, float]) -> Scenario:
    out = scenario
    for key, value in overrides.items():
        out = out.with_value(f"pathways.green.{key}", value)
    return out


def _finance_scenario(scenario: Scenario) -> Scenario:
    return _with_green_overrides(scenario, LOW_CF_GREEN)


def _npv_table(
    name: str, scenario: Scenario, policy: PolicyRegime, parallel: bool
) -> FigureTable:
    def point(price: float) -> tuple:
        return (
            price,
            *(
                npv(
                    build_cashflows(scenario.params(p), scenario.financial, policy, price),
                    scenario.financial.discount_rate,
                )
                for p in PATHWAY_ORDER
            ),
        )

    rows = _map_grid(point, PRICE_GRID, parallel)
    columns = ("h2_price_usd_per_kg", *(p.value for p in PATHWAY_ORDER))
    return FigureTable(name=name, columns=columns, rows=tuple(rows))


def _fig1(scenario: Scenario, parallel: bool) -> FigureTable:
    green = scenario.params(Pathway.GREEN)
    fin = scenario.financial
    store = None if scenario.chain.storage is None else default_storage(scenario.chain.storage)

    def point(size_kw: float) -> tuple:
        production = lcoh_at_size(green, fin, size_kw)
        leg = default_leg(scenario.chain.mode, scenario.chain.distance_km)
        sized_fin = replace(fin, plant_size_kw=size_kw)
        delivered = compose_chain(production, [leg], store, sized_fin)
        return (size_kw / 1000.0, delivered.production, delivered.transport,
                delivered.storage, *delivered.shares)

    rows = _map_grid(point, SIZES_KW, parallel)
    return FigureTable(
        name="fig1",
        columns=("plant_size_mw", "production_usd_per_kg", "transport_usd_per_kg",
                 "storage_usd_per_kg", "production_share", "transport_share", "storage_share"),
        rows=tuple(rows),
    )


def _fig3(scenario: Scenario, parallel: bool) -> FigureTable:
    base = _finance_scenario(scenario)
    no_policy = PolicyRegime.no_policy()
    variants = [
        base.with_value("pathways.green.electricity_price_usd_per_mwh", p)
        for p in FIG3_ELECTRICITY_PRICES
    ]

    def point(price: float) -> tuple:
        values = [
            npv(
                build_cashflows(v.params(Pathway.GREEN), v.financial, no_policy, price),
                v.financial.discount_rate,
            )
            for v in variants
        ]
        return (price, *values)

    rows = _map_grid(point, PRICE_GRID, parallel)
    columns = (
        "h2_price_usd_per_kg",
        *(f"npv_at_{int(p)}_usd_per_mwh" for p in FIG3_ELECTRICITY_PRICES),
    )
    return FigureTable(name="fig3", columns=columns, rows=tuple(rows))


def _fig5(scenario: Scenario, parallel: bool) -> FigureTable:
    fig = _finance_scenario(scenario)
    no_policy = PolicyRegime.no_policy()

    def point(price: float) -> tuple:
        values = []
        for pathway in PATHWAY_ORDER:
            try:
                values.append(irr(build_cashflows(fig.params(pathway), fig.financial, no_policy, price)))
            except UndefinedMetricError:
                values.append(None)
        return (price, *values)

    rows = _map_grid(point, PRICE_GRID, parallel)
    columns = ("h2_price_usd_per_kg", *(p.value for p in PATHWAY_ORDER))
    return FigureTable(name="fig5", columns=columns, rows=tuple(rows))


def _fig6(scenario: Scenario, parallel: bool) -> FigureTable:
    drivers = []
    for parameter, low, high, kind in FIG6_DRIVERS:
        keys = parameter.split(".")
        base_value = scenario.raw
        for key in keys:
            base_value = base_value[key]
        if kind == "fractional":
            drivers.append((parameter, base_value * (1.0 + low), base_value * (1.0 + high)))
        else:
            drivers.append((parameter, base_value + low, base_value + high))
    entries = tornado(scenario, drivers, "npv", Pathway.GREEN)
    rows = tuple(
        (e.parameter, e.low_value, e.high_value, e.metric_at_low, e.metric_at_high, e.swing)
        for e in entries
    )
    return FigureTable(
        name="fig6",
        columns=("parameter", "low_value", "high_value", "npv_at_low_usd", "npv_at_high_usd", "swing_usd"),
        rows=rows,
    )


def _scale_table(name: str, scenario: Scenario, parallel: bool, value_fn) -> FigureTable:
    def point(size_kw: float) -> tuple:
        return (size_kw / 1000.0, *(value_fn(p, size_kw) for p in PATHWAY_ORDER))

    rows = _map_grid(point, SIZES_KW, parallel)
    columns = ("plant_size_mw", *(p.value for p in PATHWAY_ORDER))
    return FigureTable(name=name, columns=columns, rows=tuple(rows))


def _fig9_value(scenario: Scenario) -> Callable[[Pathway, float], float]:
    no_policy = PolicyRegime.no_policy()

    def value(pathway: Pathway, size_kw: float) -> float:
        params = params_at_size(scenario.params(pathway), size_kw)
        fin = replace(scenario.financial, plant_size_kw=size_kw)
        series = build_cashflows(params, fin, no_policy, scenario.h2_price)
        return npv(series, fin.discount_rate)

    return value


def _fig10(scenario: Scenario, parallel: bool) -> FigureTable:
    def point(carbon_price: float) -> tuple:
        regime = replace(scenario.policy, carbon_price=carbon_price)
        return (
            carbon_price,
            *(
                effective_lcoh(scenario.params(p), scenario.financial, regime).total
                for p in PATHWAY_ORDER
            ),
        )

    rows = _map_grid(point, CARBON_GRID, parallel)
    columns = ("carbon_price_usd_per_ton", *(p.value for p in PATHWAY_ORDER))
    return FigureTable(name="fig10", columns=columns, rows=tuple(rows))


def _fig12(scenario: Scenario, parallel: bool) -> FigureTable:
    def point(carbon_price: float) -> tuple:
        regime = replace(scenario.policy, carbon_price=carbon_price)
        return (
            carbon_price,
            *(
                npv(
                    build_cashflows(scenario.params(p), scenario.financial, regime, scenario.h2_price),
                    scenario.financial.discount_rate,
                )
                for p in PATHWAY_ORDER
            ),
        )

    rows = _map_grid(point, CARBON_GRID, parallel)
    columns = ("carbon_price_usd_per_ton", *(p.value for p in PATHWAY_ORDER))
    return FigureTable(name="fig12", columns=columns, rows=tuple(rows))


def _fig13(scenario: Scenario, parallel: bool) -> FigureTable:
    fig = scenario.with_value("opex_source", "table11")

    def point(elec_price: float) -> tuple:
        varied = fig.with_value("pathways.green.electricity_price_usd_per_mwh", elec_price)
        return (elec_price, lcoh(varied.params(Pathway.GREEN), varied.financial).total)

    rows = _map_grid(point, ELECTRICITY_GRID, parallel)
    return FigureTable(
        name="fig13",
        columns=("electricity_price_usd_per_mwh", "green"),
        rows=tuple(rows),
    )


def figure_data(figure_id: str, scenario: Scenario | None = None, *, parallel: bool = False) -> FigureTable:
    """The exact data series behind one named figure.

    fig11 is rejected: it shows market investment projections, which this
    model does not compute; see the static investment_trends dataset.
    """
    if figure_id == "fig11":
        raise ConfigError(
            "fig11 charts market investment projections, not model output; "
            "the transcribed anchor values ship as the static investment_trends CSV"
        )
    if figure_id not in FIGURE_IDS:
        raise ConfigError(f"unknown figure id {figure_id!r}; supported: {', '.join(FIGURE_IDS)}")
    scenario = scenario if scenario is not None else load_scenario()
    no_policy = PolicyRegime.no_policy()
    if figure_id == "fig1":
        return _fig1(scenario, parallel)
    if figure_id in ("fig2", "fig4"):
        return _npv_table(figure_id, _finance_scenario(scenario), no_policy, parallel)
    if figure_id == "fig3":
        return _fig3(scenario, parallel)
    if figure_id == "fig5":
        return _fig5(scenario, parallel)
    if figure_id == "fig6":
        return _fig6(scenario, parallel)
    if figure_id == "fig7":
        return _scale_table(
            "fig7",
            scenario,
            parallel,
            lambda p, size: lcoh_at_size(scenario.params(p), scenario.financial, size).total,
        )
    if figure_id == "fig8":
        return _scale_table(
            "fig8", scenario, parallel, lambda p, size: capex_at_scale(p, size).band.mid
        )
    if figure_id == "fig9":
        return _scale_table("fig9", scenario, parallel, _fig9_value(scenario))
    if figure_id == "fig10":
        return _fig10(scenario, parallel)
    if figure_id == "fig12":
        return _fig12(scenario, parallel)
    return _fig13(scenario, parallel)
