"""Command-line contract: outputs, formats, exit codes, manifests."""

import json

import pytest
from click.testing import CliRunner

from h2tea.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(main, list(args), catch_exceptions=False)


def csv_rows(text):
    lines = [ln for ln in text.strip().split("\n") if ln]
    header = lines[0].split(",")
    return [dict(zip(header, ln.split(","))) for ln in lines[1:]]


class TestLcohCommand:
    def test_defaults_inside_estimation_bands(self, runner):
        result = invoke(runner, "lcoh", "--format", "csv")
        assert result.exit_code == 0
        rows = {r["pathway"]: float(r["total"]) for r in csv_rows(result.output)}
        assert 3.50 <= rows["green"] <= 6.00
        assert 2.00 <= rows["blue"] <= 3.50
        assert 1.50 <= rows["gray"] <= 2.50

    def test_policy_toggle_shifts_green_by_credit(self, runner):
        off = invoke(runner, "lcoh", "--pathway", "green", "--no-policy", "--format", "csv")
        on = invoke(runner, "lcoh", "--pathway", "green", "--policy", "--format", "csv")
        total_off = float(csv_rows(off.output)[0]["total"])
        total_on = float(csv_rows(on.output)[0]["total"])
        assert total_off - total_on == pytest.approx(3.00, abs=1e-9)

    def test_missing_scenario_file_exit_2(self, runner):
        result = runner.invoke(main, ["lcoh", "--scenario", "/no/such/scenario.json"])
        assert result.exit_code == 2
        assert "/no/such/scenario.json" in result.output

    def test_formats_carry_identical_numbers(self, runner):
        csv_out = invoke(runner, "lcoh", "--pathway", "gray", "--format", "csv")
        json_out = invoke(runner, "lcoh", "--pathway", "gray", "--format", "json")
        table_out = invoke(runner, "lcoh", "--pathway", "gray", "--format", "table")
        row = csv_rows(csv_out.output)[0]
        payload = json.loads(json_out.output)
        json_row = dict(zip(payload["columns"], payload["rows"][0]))
        for key in ("capital", "total", "feedstock"):
            assert float(row[key]) == pytest.approx(json_row[key], abs=1e-9)
            assert row[key] in table_out.output


class TestFinanceCommands:
    def test_breakeven_bands(self, runner):
        result = invoke(runner, "breakeven", "--format", "csv")
        values = {r["pathway"]: float(r["breakeven_usd_per_kg"]) for r in csv_rows(result.output)}
        assert 1.5 <= values["gray"] <= 2.0
        assert 2.5 <= values["blue"] <= 3.5
        assert 4.5 <= values["green"] <= 6.0

    def test_npv_at_printed_breakeven_is_tiny(self, runner):
        be = invoke(runner, "breakeven", "--pathway", "gray", "--format", "csv")
        printed = csv_rows(be.output)[0]["breakeven_usd_per_kg"]
        result = invoke(runner, "npv", "--price", printed, "--pathway", "gray", "--format", "csv")
        npv_value = float(csv_rows(result.output)[0]["npv_usd"])
        assert abs(npv_value) < 1.0

    def test_irr_below_variable_cost_exit_3(self, runner):
        result = runner.invoke(main, ["irr", "--price", "0.5", "--pathway", "gray"])
        assert result.exit_code == 3
        assert "no sign change" in result.output

    def test_price_required(self, runner):
        result = runner.invoke(main, ["npv"])
        assert result.exit_code == 2

    def test_irr_at_high_price_reported(self, runner):
        result = invoke(runner, "irr", "--price", "3.0", "--pathway", "gray", "--format", "json")
        value = json.loads(result.output)["irr"]["gray"]
        assert value > 0.07


class TestChainCommand:
    def test_truck_cheapest_at_300(self, runner):
        result = invoke(runner, "chain", "--distance-km", "300",
                        "--modes", "truck_tube,lh2_ship_large", "--format", "csv")
        rows = {r["mode"]: r for r in csv_rows(result.output)}
        assert rows["truck_tube"]["cheapest"] == "cheapest"
        assert rows["lh2_ship_large"]["cheapest"] == ""

    def test_lh2_cheapest_at_3000(self, runner):
        result = invoke(runner, "chain", "--distance-km", "3000",
                        "--modes", "truck_tube,lh2_ship_large", "--format", "csv")
        rows = {r["mode"]: r for r in csv_rows(result.output)}
        assert rows["lh2_ship_large"]["cheapest"] == "cheapest"

    def test_empty_modes_exit_2(self, runner):
        result = runner.invoke(main, ["chain", "--distance-km", "300", "--modes", ""])
        assert result.exit_code == 2

    def test_unknown_mode_exit_2(self, runner):
        result = runner.invoke(main, ["chain", "--distance-km", "300", "--modes", "zeppelin"])
        assert result.exit_code == 2
        assert "zeppelin" in result.output


class TestFigureCommand:
    def test_fig10_csv_and_manifest(self, runner, tmp_path):
        out = tmp_path / "fig10.csv"
        result = runner.invoke(main, ["figure", "fig10", "--out", str(out)])
        assert result.exit_code == 0
        lines = out.read_text().split("\n")
        assert lines[0] == "carbon_price_usd_per_ton,gray,blue,green"
        manifest = json.loads((tmp_path / "fig10.csv.manifest.json").read_text())
        assert manifest["command"] == "h2tea figure"
        assert len(manifest["dataset_sha256"]) == 64
        assert len(manifest["scenario_sha256"]) == 64
        assert manifest["version"]

    def test_byte_identical_across_runs_and_parallelism(self, runner, tmp_path):
        paths = [tmp_path / f"run{i}.csv" for i in range(3)]
        runner.invoke(main, ["figure", "fig4", "--out", str(paths[0])])
        runner.invoke(main, ["figure", "fig4", "--out", str(paths[1])])
        runner.invoke(main, ["figure", "fig4", "--out", str(paths[2]), "--parallel"])
        blobs = [p.read_bytes() for p in paths]
        assert blobs[0] == blobs[1] == blobs[2]

    def test_manifests_identical_except_timestamp(self, runner, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        runner.invoke(main, ["figure", "fig7", "--out", str(a)])
        runner.invoke(main, ["figure", "fig7", "--out", str(b)])
        ma = json.loads((tmp_path / "a.csv.manifest.json").read_text())
        mb = json.loads((tmp_path / "b.csv.manifest.json").read_text())
        ma.pop("timestamp"), mb.pop("timestamp")
        ma["args"].pop("out"), mb["args"].pop("out")
        assert ma == mb

    def test_fig1_share_columns(self, runner, tmp_path):
        out = tmp_path / "fig1.csv"
        runner.invoke(main, ["figure", "fig1", "--out", str(out)])
        header = out.read_text().split("\n")[0]
        assert header.startswith("plant_size_mw,production_usd_per_kg")
        assert "production_share" in header

    def test_fig11_exit_2(self, runner, tmp_path):
        result = runner.invoke(main, ["figure", "fig11", "--out", str(tmp_path / "x.csv")])
        assert result.exit_code == 2
        assert "investment" in result.output

    def test_figure_json_format_same_numbers(self, runner, tmp_path):
        csv_path, json_path = tmp_path / "f.csv", tmp_path / "f.json"
        runner.invoke(main, ["figure", "fig10", "--out", str(csv_path)])
        runner.invoke(main, ["figure", "fig10", "--out", str(json_path), "--format", "json"])
        payload = json.loads(json_path.read_text())
        first_csv_row = csv_path.read_text().split("\n")[1].split(",")
        assert [float(x) for x in first_csv_row] == pytest.approx(payload["rows"][0], abs=1e-9)


class TestSweepAndTornado:
    def test_sweep_csv(self, runner):
        result = invoke(runner, "sweep", "--param", "pathways.green.electricity_price_usd_per_mwh",
                        "--range", "20:60:20", "--metric", "lcoh", "--format", "csv")
        rows = csv_rows(result.output)
        assert [float(r["electricity_price_usd_per_mwh"]) for r in rows] == [20.0, 40.0, 60.0]
        assert float(rows[0]["green"]) < float(rows[-1]["green"])

    def test_sweep_infers_owning_pathway(self, runner):
        result = invoke(runner, "sweep", "--param", "pathways.gray.feedstock_usd_per_kg",
                        "--range", "1:1.5:0.25", "--metric", "lcoh", "--format", "csv")
        assert csv_rows(result.output)[0].keys() == {"feedstock_usd_per_kg", "gray"}

    def test_sweep_bad_range_exit_2(self, runner):
        result = runner.invoke(main, ["sweep", "--param", "market.h2_price_usd_per_kg",
                                      "--range", "5:1:1"])
        assert result.exit_code == 2

    def test_tornado_default_drivers_rank_price_first(self, runner):
        result = invoke(runner, "tornado", "--format", "csv")
        rows = csv_rows(result.output)
        assert rows[0]["parameter"] == "market.h2_price_usd_per_kg"

    def test_tornado_custom_driver(self, runner):
        result = invoke(runner, "tornado", "--param",
                        "pathways.gray.feedstock_usd_per_kg:0.8:1.5",
                        "--pathway", "gray", "--format", "csv")
        rows = csv_rows(result.output)
        assert len(rows) == 1
        assert rows[0]["parameter"] == "pathways.gray.feedstock_usd_per_kg"


class TestDatasetCommand:
    def test_export_columns(self, runner):
        result = invoke(runner, "dataset", "export")
        assert result.output.startswith("table_id,row,column,low,mid,high,unit\n")

    def test_export_single_table(self, runner):
        result = invoke(runner, "dataset", "export", "--table", "table13")
        lines = result.output.strip().split("\n")
        assert all(ln.startswith("table13,") for ln in lines[1:])

    def test_export_unknown_table_exit_2(self, runner):
        result = runner.invoke(main, ["dataset", "export", "--table", "table99"])
        assert result.exit_code == 2

    def test_investment_trends_static_csv(self, runner):
        result = invoke(runner, "dataset", "export", "--table", "investment_trends")
        assert "NOT model output" in result.output
        assert result.output.startswith("series,year,")


class TestScenarioPlumbing:
    def test_scenario_file_respected(self, runner, tmp_path):
        config = tmp_path / "s.json"
        config.write_text('{"pathways": {"gray": {"feedstock_usd_per_kg": 1.5}}}')
        result = invoke(runner, "lcoh", "--scenario", str(config), "--pathway", "gray", "--format", "csv")
        assert float(csv_rows(result.output)[0]["feedstock"]) == pytest.approx(1.5)

    def test_env_defaults_override(self, runner, tmp_path, monkeypatch):
        import copy

        from h2tea.scenario import _packaged_defaults

        defaults = copy.deepcopy(_packaged_defaults())
        defaults["pathways"]["gray"]["capex_usd_per_kw"] = 950.0
        path = tmp_path / "defaults.json"
        path.write_text(json.dumps(defaults))
        monkeypatch.setenv("H2TEA_DEFAULTS", str(path))
        result = invoke(runner, "lcoh", "--pathway", "gray", "--format", "json")
        payload = json.loads(result.output)
        row = dict(zip(payload["columns"], payload["rows"][0]))
        assert row["capital"] > 0.449  # pricier plant than the packaged 900 USD/kW

    def test_invalid_scenario_names_key_exit_2(self, runner, tmp_path):
        config = tmp_path / "bad.json"
        config.write_text('{"pathways": {"green": {"efficiency": 1.2}}}')
        result = runner.invoke(main, ["lcoh", "--scenario", str(config)])
        assert result.exit_code == 2
        assert "efficiency" in result.output
