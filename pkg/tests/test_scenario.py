"""Scenario parsing, defaults, schema validation."""

import json

import pytest

from h2tea import Pathway, StorageKind, TransportMode, load_scenario
from h2tea.errors import ConfigError
from h2tea.scenario import iter_schema, load_scenario_file


class TestDefaults:
    def test_empty_config_yields_documented_capex(self, scenario):
        assert scenario.params(Pathway.GREEN).capex == 1700.0
        assert scenario.params(Pathway.BLUE).capex == 1100.0
        assert scenario.params(Pathway.GRAY).capex == 900.0

    def test_financial_defaults(self, scenario):
        assert scenario.financial.discount_rate == 0.07
        assert scenario.financial.lifetime_years == 20
        assert scenario.financial.plant_size_kw == 10_000.0

    def test_policy_defaults(self, scenario):
        assert scenario.policy.carbon_price == 0.0
        assert scenario.policy.credit_for(Pathway.GREEN) == 3.0
        assert scenario.policy.credit_for(Pathway.BLUE) == 1.0
        assert scenario.policy.credit_for(Pathway.GRAY) == 0.0
        assert scenario.policy.credit_years == 20

    def test_chain_defaults(self, scenario):
        assert scenario.chain.mode is TransportMode.PIPELINE_REPURPOSED
        assert scenario.chain.distance_km == 1000.0
        assert scenario.chain.storage is StorageKind.SALT_CAVERN

    def test_empty_string_equals_empty_object(self):
        assert load_scenario("").checksum() == load_scenario("{}").checksum()


class TestValidation:
    def test_zero_discount_rate_accepted(self):
        s = load_scenario('{"financial": {"discount_rate": 0.0}}')
        assert s.financial.discount_rate == 0.0

    def test_bad_efficiency_names_key(self):
        with pytest.raises(ConfigError, match="efficiency"):
            load_scenario('{"pathways": {"green": {"efficiency": 1.2}}}')

    def test_unknown_key_rejected(self):
        with pytest.raises(ConfigError, match="unknown key: finances"):
            load_scenario('{"finances": {"discount_rate": 0.05}}')

    def test_unknown_nested_key_rejected(self):
        with pytest.raises(ConfigError, match="pathways.green.foo"):
            load_scenario('{"pathways": {"green": {"foo": 1}}}')

    def test_green_feedstock_not_directly_settable(self):
        with pytest.raises(ConfigError, match="pathways.green.feedstock_usd_per_kg"):
            load_scenario('{"pathways": {"green": {"feedstock_usd_per_kg": 2.0}}}')

    def test_electricity_price_only_for_green(self):
        with pytest.raises(ConfigError, match="pathways.gray.electricity_price_usd_per_mwh"):
            load_scenario('{"pathways": {"gray": {"electricity_price_usd_per_mwh": 40.0}}}')

    def test_malformed_json(self):
        with pytest.raises(ConfigError, match="not valid JSON"):
            load_scenario("{nope")

    def test_non_object_top_level(self):
        with pytest.raises(ConfigError, match="JSON object"):
            load_scenario("[1, 2, 3]")

    def test_type_mismatch_names_key(self):
        with pytest.raises(ConfigError, match="financial.lifetime_years"):
            load_scenario('{"financial": {"lifetime_years": 19.5}}')

    def test_credit_years_capped_by_lifetime(self):
        with pytest.raises(ConfigError, match="credit_years"):
            load_scenario('{"policy": {"credit_years": 30}}')

    def test_bad_opex_source(self):
        with pytest.raises(ConfigError, match="opex_source"):
            load_scenario('{"opex_source": "table7"}')

    def test_unknown_chain_mode(self):
        with pytest.raises(ConfigError, match="unknown transport mode"):
            load_scenario('{"chain": {"mode": "teleport"}}')


class TestOverrides:
    def test_electricity_price_override_rederives_feedstock(self):
        s = load_scenario('{"pathways": {"green": {"electricity_price_usd_per_mwh": 20.0}}}')
        green = s.params(Pathway.GREEN)
        assert green.feedstock_cost == pytest.approx(33.33 / 0.65 * 0.020, rel=1e-12)

    def test_gas_price_index_scales_fossil_feedstock(self, scenario):
        s = load_scenario('{"market": {"gas_price_index": 1.2}}')
        assert s.params(Pathway.GRAY).feedstock_cost == pytest.approx(
            scenario.params(Pathway.GRAY).feedstock_cost * 1.2, rel=1e-12
        )
        # green feedstock is electricity-driven and unaffected
        assert s.params(Pathway.GREEN).feedstock_cost == scenario.params(Pathway.GREEN).feedstock_cost

    def test_opex_source_table11_uses_at_scale_mids(self):
        s = load_scenario('{"opex_source": "table11"}')
        assert s.params(Pathway.GREEN).fixed_opex == pytest.approx(0.05)
        assert s.params(Pathway.BLUE).fixed_opex == pytest.approx(0.08)
        assert s.params(Pathway.GRAY).fixed_opex == pytest.approx(0.07)

    def test_with_value_roundtrip(self, scenario):
        varied = scenario.with_value("pathways.green.capacity_factor", 0.3)
        assert varied.params(Pathway.GREEN).capacity_factor == 0.3
        assert scenario.params(Pathway.GREEN).capacity_factor == 0.5

    def test_with_value_unknown_path(self, scenario):
        with pytest.raises(ConfigError, match="unknown parameter path"):
            scenario.with_value("pathways.green.magic", 1.0)

    def test_with_value_non_numeric_path(self, scenario):
        with pytest.raises(ConfigError, match="string"):
            scenario.with_value("chain.mode", 3.0)
        with pytest.raises(ConfigError, match="numeric"):
            scenario.with_value("market.h2_price_usd_per_kg", "high")


class TestChecksumAndSchema:
    def test_checksum_stable_and_sensitive(self, scenario):
        assert scenario.checksum() == load_scenario().checksum()
        varied = scenario.with_value("market.h2_price_usd_per_kg", 6.0)
        assert varied.checksum() != scenario.checksum()

    def test_schema_covers_defaults_file(self, scenario):
        """Every leaf in the packaged defaults is a documented schema path."""
        paths = {path for path, _, _, _ in iter_schema()}

        def walk(node, prefix=""):
            for key, value in node.items():
                path = f"{prefix}.{key}" if prefix else key
                if isinstance(value, dict):
                    walk(value, path)
                else:
                    assert path in paths, f"undocumented defaults key {path}"

        walk(dict(scenario.raw))

    def test_scenario_file_loading(self, tmp_path):
        config = tmp_path / "scenario.json"
        config.write_text(json.dumps({"financial": {"plant_size_kw": 2000}}))
        s = load_scenario_file(str(config))
        assert s.financial.plant_size_kw == 2000.0

    def test_missing_file_names_path(self):
        with pytest.raises(ConfigError, match="no/such/file.json"):
            load_scenario_file("no/such/file.json")


class TestDefaultsOverrideFile:
    def test_env_defaults_file(self, tmp_path, monkeypatch):
        import copy

        from h2tea.scenario import _packaged_defaults

        defaults = copy.deepcopy(_packaged_defaults())
        defaults["market"]["h2_price_usd_per_kg"] = 7.5
        path = tmp_path / "defaults.json"
        path.write_text(json.dumps(defaults))
        monkeypatch.setenv("H2TEA_DEFAULTS", str(path))
        assert load_scenario().h2_price == 7.5

    def test_broken_env_defaults_reported(self, tmp_path, monkeypatch):
        monkeypatch.setenv("H2TEA_DEFAULTS", str(tmp_path / "missing.json"))
        with pytest.raises(ConfigError, match="missing.json"):
            load_scenario()
