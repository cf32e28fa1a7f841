"""Command-line surface: scripted, reproducible runs over scenario files.

Exit codes: 0 success, 2 user/config error, 3 metric undefined for the
given inputs, 1 internal failure. Identical scenario + command yields
byte-identical primary output; when --out is given a run manifest is
written next to it as <out>.manifest.json (identical across runs except
for its timestamp).
"""

from __future__ import annotations

import json
from datetime import datetime, timezone
from typing import Any

import click

from . import __version__
from .analysis import (
    FIG6_DRIVERS,
    PATHWAY_ORDER,
    FigureTable,
    SweepSpec,
    figure_data,
    sweep,
    tornado,
)
from .core import Pathway, PolicyRegime
from .dataset import REFERENCE
from .errors import ConfigError, H2TeaError, UndefinedMetricError
from .finance import breakeven_price, build_cashflows, irr, npv
from .lcoh import lcoh
from .logistics import TransportMode, cheapest_chain, default_leg, leg_cost
from .policy import effective_lcoh
from .scenario import Scenario, load_scenario_file

_FORMATS = click.Choice(["table", "csv", "json"])
_PATHWAYS = click.Choice(["all", "green", "blue", "gray"])


def _selected_pathways(pathway: str) -> tuple[Pathway, ...]:
    if pathway == "all":
        return PATHWAY_ORDER
    return (Pathway.parse(pathway),)


def _policy_for(scenario: Scenario, use_policy: bool) -> PolicyRegime:
    return scenario.policy if use_policy else PolicyRegime.no_policy()


def _render_table(table: FigureTable, fmt: str) -> str:
    if fmt == "csv":
        return table.to_csv()
    if fmt == "json":
        return table.to_json()
    cells = [list(table.columns)]
    for row in table.rows:
        cells.append([table.format_cell(v) for v in row])
    widths = [max(len(r[i]) for r in cells) for i in range(len(table.columns))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines) + "\n"


def _render_scalars(name: str, rows: list[tuple[str, Any]], fmt: str) -> str:
    """Scalar solver outputs keep full precision in every format."""
    if fmt == "json":
        return json.dumps({name: {k: v for k, v in rows}}, indent=2) + "\n"
    if fmt == "csv":
        lines = [f"pathway,{name}"]
        lines += [f"{k},{'' if v is None else repr(v)}" for k, v in rows]
        return "\n".join(lines) + "\n"
    return "\n".join(f"{k}: {'' if v is None else repr(v)}" for k, v in rows) + "\n"


def _emit(ctx: click.Context, text: str, out: str | None, scenario: Scenario | None) -> None:
    if out is None:
        click.echo(text, nl=False)
        return
    with open(out, "w", encoding="utf-8", newline="") as handle:
        handle.write(text)
    manifest = {
        "command": ctx.command_path,
        "args": {k: v for k, v in sorted(ctx.params.items())},
        "scenario_sha256": scenario.checksum() if scenario is not None else None,
        "dataset_sha256": REFERENCE.checksum(),
        "version": __version__,
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }
    with open(f"{out}.manifest.json", "w", encoding="utf-8", newline="") as handle:
        json.dump(manifest, handle, indent=2, sort_keys=True, default=str)
        handle.write("\n")
    click.echo(f"wrote {out}", err=True)


scenario_option = click.option(
    "--scenario", "scenario_path", type=str, default=None,
    help="Scenario JSON file; omit to run the packaged defaults.",
)
format_option = click.option("--format", "fmt", type=_FORMATS, default="table", show_default=True)
out_option = click.option("--out", type=str, default=None, help="Write output to a file (adds a manifest).")


class _ExitCodeGroup(click.Group):
    """Maps domain errors onto the exit-code contract (2 config, 3 undefined, 1 internal)."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except ConfigError as exc:
            click.echo(f"error: {exc}", err=True)
            ctx.exit(2)
        except UndefinedMetricError as exc:
            click.echo(f"error: {exc}", err=True)
            ctx.exit(3)
        except H2TeaError as exc:
            click.echo(f"internal error: {exc}", err=True)
            ctx.exit(1)


@click.group(name="h2tea", cls=_ExitCodeGroup)
@click.version_option(__version__, prog_name="h2tea")
def main() -> None:
    """Hydrogen techno-economic analysis: levelized costs, DCF metrics, policy and logistics."""


@main.command("lcoh")
@scenario_option
@click.option("--pathway", type=_PATHWAYS, default="all", show_default=True)
@click.option("--policy/--no-policy", "use_policy", default=False,
              help="Apply the scenario's carbon price and credits. [default: no-policy]")
@format_option
@out_option
@click.pass_context
def cmd_lcoh(ctx, scenario_path, pathway, use_policy, fmt, out) -> None:
    """Per-pathway levelized cost breakdown."""
    scenario = load_scenario_file(scenario_path)
    regime = _policy_for(scenario, use_policy)
    rows = []
    for p in _selected_pathways(pathway):
        breakdown = (
            effective_lcoh(scenario.params(p), scenario.financial, regime)
            if use_policy
            else lcoh(scenario.params(p), scenario.financial)
        )
        d = breakdown.as_dict()
        rows.append((p.value, d["capital"], d["fixed_om"], d["feedstock"], d["carbon"],
                     d["credit"], d["transport"], d["storage"], d["total"]))
    table = FigureTable(
        name="lcoh",
        columns=("pathway", "capital", "fixed_om", "feedstock", "carbon", "credit",
                 "transport", "storage", "total"),
        rows=tuple(rows),
    )
    _emit(ctx, _render_table(table, fmt), out, scenario)


def _finance_rows(scenario, pathways, regime, metric, price):
    rows: list[tuple[str, Any]] = []
    for p in pathways:
        params = scenario.params(p)
        if metric == "breakeven":
            rows.append((p.value, breakeven_price(params, scenario.financial, regime)))
        else:
            series = build_cashflows(params, scenario.financial, regime, price)
            if metric == "npv":
                rows.append((p.value, npv(series, scenario.financial.discount_rate)))
            else:
                rows.append((p.value, irr(series)))
    return rows


@main.command("npv")
@scenario_option
@click.option("--price", type=float, required=True, help="Hydrogen selling price, USD/kg.")
@click.option("--pathway", type=_PATHWAYS, default="all", show_default=True)
@click.option("--policy/--no-policy", "use_policy", default=False)
@format_option
@out_option
@click.pass_context
def cmd_npv(ctx, scenario_path, price, pathway, use_policy, fmt, out) -> None:
    """Project net present value at a selling price."""
    scenario = load_scenario_file(scenario_path)
    rows = _finance_rows(scenario, _selected_pathways(pathway), _policy_for(scenario, use_policy), "npv", price)
    _emit(ctx, _render_scalars("npv_usd", rows, fmt), out, scenario)


@main.command("irr")
@scenario_option
@click.option("--price", type=float, required=True, help="Hydrogen selling price, USD/kg.")
@click.option("--pathway", type=_PATHWAYS, default="all", show_default=True)
@click.option("--policy/--no-policy", "use_policy", default=False)
@format_option
@out_option
@click.pass_context
def cmd_irr(ctx, scenario_path, price, pathway, use_policy, fmt, out) -> None:
    """Internal rate of return at a selling price."""
    scenario = load_scenario_file(scenario_path)
    rows = _finance_rows(scenario, _selected_pathways(pathway), _policy_for(scenario, use_policy), "irr", price)
    _emit(ctx, _render_scalars("irr", rows, fmt), out, scenario)


@main.command("breakeven")
@scenario_option
@click.option("--pathway", type=_PATHWAYS, default="all", show_default=True)
@click.option("--policy/--no-policy", "use_policy", default=False)
@format_option
@out_option
@click.pass_context
def cmd_breakeven(ctx, scenario_path, pathway, use_policy, fmt, out) -> None:
    """Hydrogen price at which NPV is zero, per pathway."""
    scenario = load_scenario_file(scenario_path)
    rows = _finance_rows(scenario, _selected_pathways(pathway), _policy_for(scenario, use_policy), "breakeven", None)
    _emit(ctx, _render_scalars("breakeven_usd_per_kg", rows, fmt), out, scenario)


@main.command("chain")
@scenario_option
@click.option("--distance-km", type=float, required=True)
@click.option("--modes", type=str, default=",".join(m.value for m in TransportMode),
              help="Comma-separated candidate transport modes.", show_default=False)
@click.option("--pathway", type=click.Choice(["green", "blue", "gray"]), default="green", show_default=True)
@format_option
@out_option
@click.pass_context
def cmd_chain(ctx, scenario_path, distance_km, modes, pathway, fmt, out) -> None:
    """Per-mode delivery costs over a distance, cheapest chain marked."""
    scenario = load_scenario_file(scenario_path)
    if distance_km <= 0:
        raise ConfigError(f"--distance-km must be > 0, got {distance_km}")
    names = [m.strip() for m in modes.split(",") if m.strip()]
    if not names:
        raise ConfigError("--modes is empty: give at least one transport mode")
    candidates = [TransportMode.parse(name) for name in names]
    production = lcoh(scenario.params(Pathway.parse(pathway)), scenario.financial)
    _, best = cheapest_chain(distance_km, production, scenario.financial, candidates)
    rows = []
    for mode in candidates:
        leg = default_leg(mode, distance_km)
        rows.append((
            mode.value,
            distance_km,
            leg.fixed_cost_per_kg,
            leg.variable_cost_per_kg_per_1000km * distance_km / 1000.0,
            leg.reconversion_cost_per_kg,
            1.0 / (1.0 - leg.loss_fraction),
            leg_cost(leg),
            "cheapest" if mode is best else "",
        ))
    table = FigureTable(
        name="chain",
        columns=("mode", "distance_km", "fixed", "variable", "reconversion", "loss_uplift", "total", "cheapest"),
        rows=tuple(rows),
    )
    _emit(ctx, _render_table(table, fmt), out, scenario)


def _parse_range(spec: str) -> tuple[float, ...]:
    parts = spec.split(":")
    if len(parts) != 3:
        raise ConfigError(f"--range must be lo:hi:step, got {spec!r}")
    try:
        lo, hi, step = (float(p) for p in parts)
    except ValueError:
        raise ConfigError(f"--range must be numeric lo:hi:step, got {spec!r}") from None
    if step <= 0 or hi < lo:
        raise ConfigError(f"--range needs lo <= hi and step > 0, got {spec!r}")
    grid = []
    i = 0
    while True:
        value = lo + i * step
        if value > hi + 1e-9 * max(1.0, abs(hi)):
            break
        grid.append(value)
        i += 1
    return tuple(grid)


@main.command("sweep")
@scenario_option
@click.option("--param", "parameter", type=str, required=True, help="Dotted scenario path to sweep.")
@click.option("--range", "range_spec", type=str, required=True, help="Grid as lo:hi:step.")
@click.option("--metric", type=click.Choice(["lcoh", "npv", "irr", "breakeven", "delivered_cost"]),
              default="lcoh", show_default=True)
@click.option("--pathway", type=_PATHWAYS, default="all", show_default=True)
@click.option("--parallel/--serial", default=False, help="Evaluate grid points on a thread pool.")
@format_option
@out_option
@click.pass_context
def cmd_sweep(ctx, scenario_path, parameter, range_spec, metric, pathway, parallel, fmt, out) -> None:
    """Evaluate a metric over a parameter grid."""
    scenario = load_scenario_file(scenario_path)
    if pathway == "all" and parameter.startswith("pathways."):
        pathways: tuple[Pathway, ...] = (Pathway.parse(parameter.split(".")[1]),)
    else:
        pathways = _selected_pathways(pathway)
    spec = SweepSpec(parameter=parameter, grid=_parse_range(range_spec), metric=metric, pathways=pathways)
    table = sweep(scenario, spec, parallel=parallel)
    _emit(ctx, _render_table(table, fmt), out, scenario)


@main.command("tornado")
@scenario_option
@click.option("--param", "params_spec", type=str, multiple=True,
              help="Driver as path:low:high; repeatable. Defaults to the standard driver set.")
@click.option("--metric", type=click.Choice(["lcoh", "npv", "irr", "breakeven", "delivered_cost"]),
              default="npv", show_default=True)
@click.option("--pathway", type=click.Choice(["green", "blue", "gray"]), default="green", show_default=True)
@format_option
@out_option
@click.pass_context
def cmd_tornado(ctx, scenario_path, params_spec, metric, pathway, fmt, out) -> None:
    """Rank cost drivers by the metric swing over their low/high settings."""
    scenario = load_scenario_file(scenario_path)
    drivers: list[tuple[str, float, float]] = []
    if params_spec:
        for item in params_spec:
            parts = item.rsplit(":", 2)
            if len(parts) != 3:
                raise ConfigError(f"--param must be path:low:high, got {item!r}")
            try:
                drivers.append((parts[0], float(parts[1]), float(parts[2])))
            except ValueError:
                raise ConfigError(f"--param bounds must be numeric, got {item!r}") from None
    else:
        for parameter, low, high, kind in FIG6_DRIVERS:
            node: Any = scenario.raw
            for key in parameter.split("."):
                node = node[key]
            if kind == "fractional":
                drivers.append((parameter, node * (1.0 + low), node * (1.0 + high)))
            else:
                drivers.append((parameter, node + low, node + high))
    entries = tornado(scenario, drivers, metric, Pathway.parse(pathway))
    table = FigureTable(
        name="tornado",
        columns=("parameter", "low_value", "high_value", "metric_at_low", "metric_at_high", "swing"),
        rows=tuple((e.parameter, e.low_value, e.high_value, e.metric_at_low, e.metric_at_high, e.swing)
                   for e in entries),
    )
    _emit(ctx, _render_table(table, fmt), out, scenario)


@main.command("figure")
@click.argument("figure_id", type=str)
@scenario_option
@click.option("--out", type=str, required=True, help="Output path; a manifest is written alongside.")
@click.option("--format", "fmt", type=_FORMATS, default="csv", show_default=True)
@click.option("--parallel/--serial", default=False)
@click.pass_context
def cmd_figure(ctx, figure_id, scenario_path, out, fmt, parallel) -> None:
    """Emit the data series behind a named figure (fig1..fig10, fig12, fig13)."""
    scenario = load_scenario_file(scenario_path)
    table = figure_data(figure_id, scenario, parallel=parallel)
    _emit(ctx, _render_table(table, fmt), out, scenario)


@main.group("dataset")
def cmd_dataset() -> None:
    """Bundled reference dataset operations."""


@cmd_dataset.command("export")
@click.option("--table", "table_id", type=str, default=None,
              help="Limit to one table (table1..table13), or 'investment_trends' for the static non-model CSV.")
@out_option
@click.pass_context
def cmd_dataset_export(ctx, table_id, out) -> None:
    """Write the reference dataset as CSV (table_id,row,column,low,mid,high,unit)."""
    if table_id == "investment_trends":
        from importlib import resources

        text = resources.files("h2tea.data").joinpath("investment_trends.csv").read_text("utf-8")
        _emit(ctx, text, out, None)
        return
    if table_id is not None and table_id not in REFERENCE.tables():
        raise ConfigError(
            f"unknown table {table_id!r}; expected one of: {', '.join(REFERENCE.tables())}, investment_trends"
        )
    _emit(ctx, REFERENCE.to_csv(table_id), out, None)


if __name__ == "__main__":
    main()
