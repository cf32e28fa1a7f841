"""Sensitivity sweeps, tornado ranking, and reproducible figure exports.

Run:  python demos/05_sensitivity_and_figures.py
Writes the full figure set to demos/out/.
"""

from pathlib import Path

from h2tea import FIGURE_IDS, Pathway, SweepSpec, figure_data, load_scenario, sweep, tornado

scenario = load_scenario()

print("Sweep: green levelized cost vs electricity price (at-scale O&M preset):")
preset = scenario.with_value("opex_source", "table11")
spec = SweepSpec(
    parameter="pathways.green.electricity_price_usd_per_mwh",
    grid=tuple(float(p) for p in range(20, 101, 10)),
    metric="lcoh",
    pathways=(Pathway.GREEN,),
)
for price, total in sweep(preset, spec).rows:
    flag = "  <- below 4" if total < 4.0 else ("  <- above 6" if total > 6.0 else "")
    print(f"  {price:>5.0f} USD/MWh  ->  {total:5.2f} USD/kg{flag}")

print()
print("Tornado on 10 MW green NPV (selling price +-1 USD/kg, capex +-30%,")
print("electricity price +-30% as the feedstock driver):")
entries = tornado(
    scenario,
    [
        ("market.h2_price_usd_per_kg", 4.0, 6.0),
        ("pathways.green.capex_usd_per_kw", 1190.0, 2210.0),
        ("pathways.green.electricity_price_usd_per_mwh", 35.0, 65.0),
    ],
    "npv",
    Pathway.GREEN,
)
widest = entries[0].swing
for e in entries:
    bar = "#" * int(round(40 * e.swing / widest))
    print(f"  {e.parameter:<46} {e.swing / 1e6:>6.1f}M  {bar}")

print()
out_dir = Path(__file__).parent / "out"
out_dir.mkdir(exist_ok=True)
print(f"Exporting every figure dataset to {out_dir}/ (byte-stable across runs):")
for figure_id in FIGURE_IDS:
    table = figure_data(figure_id, scenario)
    path = out_dir / f"{figure_id}.csv"
    path.write_text(table.to_csv(), encoding="utf-8", newline="")
    print(f"  {figure_id:<6} {len(table.rows):>3} rows  -> {path.name}")
print("fig11 is deliberately absent: market investment projections are not model output.")
