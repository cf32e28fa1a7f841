"""Scenario configuration: schema, defaults and loading.

A scenario is a JSON key/value tree. Every key has a documented unit and a
default; anything absent falls back to the packaged defaults file (or the
file named by the H2TEA_DEFAULTS environment variable), and unknown keys
are rejected with the full dotted path in the message.

Key defaults worth calling out, since several are model decisions rather
than table lookups:

* capacity factors: green 0.50 (intermittent renewables), blue/gray 0.90;
* conversion efficiencies: the table-band midpoints 0.65 / 0.75 / 0.80;
* blue fixed O&M 1.30 USD/kg = 0.30 plant O&M + 1.00 capture/compression/
  CO2-transport surcharge (top of the quoted 0.50-1.00 range, which is what
  reconciles the blue break-even band with its cost tables);
* green feedstock is always derived from the electricity price, never set
  directly;
* `opex_source = "table11"` swaps each pathway's fixed O&M for the at-scale
  table11 midpoint at the configured plant size (the two published O&M
  tables disagree by an order of magnitude; table1 heads the defaults).
"""

from __future__ import annotations

import copy
import hashlib
import json
import os
from dataclasses import dataclass
from importlib import resources
from types import MappingProxyType
from typing import Any, Mapping

from .core import FinancialParams, Pathway, PathwayParams, PolicyRegime
from .errors import ConfigError
from .lcoh import opex_at_scale
from .logistics import StorageKind, TransportMode

ENV_DEFAULTS = "H2TEA_DEFAULTS"

# schema leaf: (python type, unit, description)
_NUM = (float, "", "")


def _leaf(kind: type, unit: str, description: str) -> tuple[type, str, str]:
    return (kind, unit, description)


SCHEMA: dict[str, Any] = {
    "financial": {
        "discount_rate": _leaf(float, "fraction/yr", "weighted average cost of capital"),
        "lifetime_years": _leaf(int, "yr", "project lifetime"),
        "plant_size_kw": _leaf(float, "kW", "input capacity of the plant"),
    },
    "market": {
        "h2_price_usd_per_kg": _leaf(float, "usd/kg", "hydrogen selling price for cash-flow runs"),
        "gas_price_index": _leaf(float, "-", "multiplier on blue/gray feedstock for sensitivity runs"),
    },
    "pathways": {
        "green": {
            "capex_usd_per_kw": _leaf(float, "usd/kW", "electrolyzer capex"),
            "fixed_opex_usd_per_kg": _leaf(float, "usd/kg", "non-feedstock O&M"),
            "electricity_price_usd_per_mwh": _leaf(float, "usd/MWh", "renewable electricity price"),
            "efficiency": _leaf(float, "-", "LHV conversion efficiency"),
            "capacity_factor": _leaf(float, "-", "annual utilization"),
        },
        "blue": {
            "capex_usd_per_kw": _leaf(float, "usd/kW", "reformer + capture capex"),
            "fixed_opex_usd_per_kg": _leaf(float, "usd/kg", "plant O&M incl. capture surcharge"),
            "feedstock_usd_per_kg": _leaf(float, "usd/kg", "natural-gas feedstock cost"),
            "efficiency": _leaf(float, "-", "LHV conversion efficiency"),
            "capacity_factor": _leaf(float, "-", "annual utilization"),
            "emission_intensity_kg_co2_per_kg": _leaf(float, "kgCO2/kg", "pre-capture emissions"),
            "capture_rate": _leaf(float, "-", "share of emissions captured"),
        },
        "gray": {
            "capex_usd_per_kw": _leaf(float, "usd/kW", "reformer capex"),
            "fixed_opex_usd_per_kg": _leaf(float, "usd/kg", "plant O&M"),
            "feedstock_usd_per_kg": _leaf(float, "usd/kg", "natural-gas feedstock cost"),
            "efficiency": _leaf(float, "-", "LHV conversion efficiency"),
            "capacity_factor": _leaf(float, "-", "annual utilization"),
            "emission_intensity_kg_co2_per_kg": _leaf(float, "kgCO2/kg", "unabated emissions"),
        },
    },
    "policy": {
        "carbon_price_usd_per_ton": _leaf(float, "usd/ton", "economy-wide carbon price"),
        "credits_usd_per_kg": {
            "green": _leaf(float, "usd/kg", "production credit, green"),
            "blue": _leaf(float, "usd/kg", "production credit, blue"),
            "gray": _leaf(float, "usd/kg", "production credit, gray"),
        },
        "credit_years": _leaf(int, "yr", "years the credit applies"),
    },
    "opex_source": _leaf(str, "-", 'fixed O&M source: "table1" or "table11"'),
    "chain": {
        "mode": _leaf(str, "-", "default transport mode"),
        "distance_km": _leaf(float, "km", "default transport distance"),
        "storage": _leaf(str, "-", "default storage kind, or null for none"),
    },
}


def _is_leaf(node: Any) -> bool:
    return isinstance(node, tuple)


def iter_schema(prefix: str = "", node: Mapping[str, Any] | None = None):
    """Yield (dotted_path, type, unit, description) for every schema leaf."""
    node = SCHEMA if node is None else node
    for key, child in node.items():
        path = f"{prefix}.{key}" if prefix else key
        if _is_leaf(child):
            kind, unit, description = child
            yield path, kind, unit, description
        else:
            yield from iter_schema(path, child)


def _check_types(config: Any, schema: Any, path: str) -> None:
    if _is_leaf(schema):
        kind, _, _ = schema
        value = config
        if path == "chain.storage" and value is None:
            return
        if kind is float and isinstance(value, (int, float)) and not isinstance(value, bool):
            return
        if kind is int:
            if isinstance(value, bool) or not isinstance(value, int):
                raise ConfigError(f"{path}: expected an integer, got {value!r}")
            return
        if kind is str and isinstance(value, str):
            return
        raise ConfigError(f"{path}: expected {kind.__name__}, got {value!r}")
    if not isinstance(config, dict):
        raise ConfigError(f"{path or 'scenario'}: expected an object, got {config!r}")
    for key, value in config.items():
        child_path = f"{path}.{key}" if path else key
        if key not in schema:
            raise ConfigError(f"unknown key: {child_path}")
        _check_types(value, schema[key], child_path)


def _deep_merge(base: dict, override: Mapping) -> dict:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, Mapping) and isinstance(merged.get(key), dict):
            merged[key] = _deep_merge(merged[key], value)
        else:
            merged[key] = copy.deepcopy(value)
    return merged


def _packaged_defaults() -> dict:
    text = resources.files("h2tea.data").joinpath("defaults.json").read_text("utf-8")
    return json.loads(text)


def load_defaults(path: str | None = None) -> dict:
    """The defaults tree, from an explicit path, $H2TEA_DEFAULTS, or the package."""
    path = path or os.environ.get(ENV_DEFAULTS)
    if path:
        try:
            with open(path, "r", encoding="utf-8") as handle:
                return json.load(handle)
        except OSError as exc:
            raise ConfigError(f"cannot read defaults file {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"defaults file {path} is not valid JSON: {exc}") from exc
    return _packaged_defaults()


@dataclass(frozen=True)
class ChainSpec:
    mode: TransportMode
    distance_km: float
    storage: StorageKind | None


@dataclass(frozen=True)
class Scenario:
    """A fully resolved model configuration."""

    pathways: Mapping[Pathway, PathwayParams]
    financial: FinancialParams
    policy: PolicyRegime
    h2_price: float
    gas_price_index: float
    opex_source: str
    chain: ChainSpec
    raw: Mapping[str, Any]

    def params(self, pathway: Pathway) -> PathwayParams:
        return self.pathways[pathway]

    def canonical_json(self) -> str:
        return json.dumps(dict(self.raw), sort_keys=True, separators=(",", ":"))

    def checksum(self) -> str:
        return hashlib.sha256(self.canonical_json().encode("utf-8")).hexdigest()

    def with_value(self, dotted_path: str, value: float | str) -> "Scenario":
        """A new scenario with one schema leaf replaced; path must exist in the schema.

        Numeric sweeps pass floats; string-typed leaves (e.g. opex_source)
        accept strings.
        """
        keys = dotted_path.split(".")
        schema_node: Any = SCHEMA
        for key in keys:
            if _is_leaf(schema_node) or key not in schema_node:
                raise ConfigError(f"unknown parameter path: {dotted_path}")
            schema_node = schema_node[key]
        if not _is_leaf(schema_node):
            raise ConfigError(f"parameter path does not name a scalar field: {dotted_path}")
        kind = schema_node[0]
        if kind is str:
            if not isinstance(value, str):
                raise ConfigError(f"{dotted_path}: expected a string value")
            new_value: Any = value
        else:
            if isinstance(value, str):
                raise ConfigError(f"{dotted_path}: expected a numeric value")
            new_value = int(value) if kind is int else float(value)
        raw = copy.deepcopy(dict(self.raw))
        node = raw
        for key in keys[:-1]:
            node = node[key]
        node[keys[-1]] = new_value
        return _from_config(raw)


def _build_pathway(name: Pathway, cfg: Mapping[str, Any], scenario_cfg: Mapping[str, Any]) -> PathwayParams:
    prefix = f"pathways.{name.value}"
    fixed_opex = float(cfg["fixed_opex_usd_per_kg"])
    if scenario_cfg["opex_source"] == "table11":
        fixed_opex = opex_at_scale(name, float(scenario_cfg["financial"]["plant_size_kw"])).band.mid
    gas_index = float(scenario_cfg["market"]["gas_price_index"])
    try:
        if name is Pathway.GREEN:
            return PathwayParams(
                pathway=name,
                capex=float(cfg["capex_usd_per_kw"]),
                fixed_opex=fixed_opex,
                efficiency=float(cfg["efficiency"]),
                capacity_factor=float(cfg["capacity_factor"]),
                electricity_price=float(cfg["electricity_price_usd_per_mwh"]),
            )
        return PathwayParams(
            pathway=name,
            capex=float(cfg["capex_usd_per_kw"]),
            fixed_opex=fixed_opex,
            efficiency=float(cfg["efficiency"]),
            capacity_factor=float(cfg["capacity_factor"]),
            feedstock_cost=float(cfg["feedstock_usd_per_kg"]) * gas_index,
            emission_intensity_unabated=float(cfg["emission_intensity_kg_co2_per_kg"]),
            capture_rate=float(cfg.get("capture_rate", 0.0)),
        )
    except ValueError as exc:
        raise ConfigError(f"{prefix}: {exc}") from exc


def _from_config(merged: dict) -> Scenario:
    _check_types(merged, SCHEMA, "")
    if merged["opex_source"] not in ("table1", "table11"):
        raise ConfigError(f'opex_source: expected "table1" or "table11", got {merged["opex_source"]!r}')
    fin_cfg = merged["financial"]
    try:
        financial = FinancialParams(
            discount_rate=float(fin_cfg["discount_rate"]),
            lifetime_years=int(fin_cfg["lifetime_years"]),
            plant_size_kw=float(fin_cfg["plant_size_kw"]),
        )
    except ValueError as exc:
        raise ConfigError(f"financial: {exc}") from exc
    pol_cfg = merged["policy"]
    try:
        policy = PolicyRegime(
            carbon_price=float(pol_cfg["carbon_price_usd_per_ton"]),
            credits={Pathway.parse(k): float(v) for k, v in pol_cfg["credits_usd_per_kg"].items()},
            credit_years=int(pol_cfg["credit_years"]),
        )
    except ValueError as exc:
        raise ConfigError(f"policy: {exc}") from exc
    if policy.credit_years > financial.lifetime_years:
        raise ConfigError(
            f"policy.credit_years: must be <= financial.lifetime_years "
            f"({policy.credit_years} > {financial.lifetime_years})"
        )
    h2_price = float(merged["market"]["h2_price_usd_per_kg"])
    if h2_price < 0.0:
        raise ConfigError(f"market.h2_price_usd_per_kg: must be >= 0, got {h2_price}")
    gas_index = float(merged["market"]["gas_price_index"])
    if gas_index <= 0.0:
        raise ConfigError(f"market.gas_price_index: must be > 0, got {gas_index}")
    chain_cfg = merged["chain"]
    if chain_cfg["distance_km"] <= 0:
        raise ConfigError(f"chain.distance_km: must be > 0, got {chain_cfg['distance_km']}")
    chain = ChainSpec(
        mode=TransportMode.parse(chain_cfg["mode"]),
        distance_km=float(chain_cfg["distance_km"]),
        storage=None if chain_cfg["storage"] is None else StorageKind.parse(chain_cfg["storage"]),
    )
    pathways = {
        pathway: _build_pathway(pathway, merged["pathways"][pathway.value], merged)
        for pathway in Pathway
    }
    return Scenario(
        pathways=MappingProxyType(pathways),
        financial=financial,
        policy=policy,
        h2_price=h2_price,
        gas_price_index=gas_index,
        opex_source=merged["opex_source"],
        chain=chain,
        raw=MappingProxyType(merged),
    )


def load_scenario(config_text: str = "", *, defaults_path: str | None = None) -> Scenario:
    """Parse a JSON scenario, fill gaps from the defaults, validate everything.

    An empty string is the all-defaults scenario. Parse failures and
    invariant violations raise ConfigError naming the offending key.
    """
    if config_text.strip():
        try:
            user_cfg = json.loads(config_text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"scenario is not valid JSON: {exc}") from exc
        if not isinstance(user_cfg, dict):
            raise ConfigError("scenario must be a JSON object at the top level")
    else:
        user_cfg = {}
    defaults = load_defaults(defaults_path)
    _check_types(user_cfg, SCHEMA, "")
    merged = _deep_merge(defaults, user_cfg)
    return _from_config(merged)


def load_scenario_file(path: str | None, *, defaults_path: str | None = None) -> Scenario:
    """Load a scenario from a file path; None means the all-defaults scenario."""
    if path is None:
        return load_scenario("", defaults_path=defaults_path)
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ConfigError(f"cannot read scenario file {path}: {exc}") from exc
    return load_scenario(text, defaults_path=defaults_path)
