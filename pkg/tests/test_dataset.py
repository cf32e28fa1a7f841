"""Transcription spot checks, immutability and the frozen checksum."""

import pytest

from h2tea import REFERENCE
from h2tea.dataset import (
    CCS_OPEX_ADDER_BAND,
    ELECTROLYZER_EFFICIENCY_TEXT_BAND,
    SALT_CAVERN_CYCLE_EFFICIENCY,
)

# sha256 over the canonical CSV export; regenerate only on a deliberate
# dataset change and record why.
FROZEN_CHECKSUM = "2b543de96538b82f02ed77278ecd1c83ec9aaca6dc6c4e16f65ab3e4ce9047e2"


def test_checksum_is_frozen():
    assert REFERENCE.checksum() == FROZEN_CHECKSUM


def test_entries_are_read_only():
    with pytest.raises(TypeError):
        REFERENCE.entries[("table1", "green", "capex_usd_per_kw")] = None


@pytest.mark.parametrize(
    "table,row,column,low,high",
    [
        ("table1", "green", "capex_usd_per_kw", 1700, 1700),
        ("table1", "blue", "capex_usd_per_kw", 1100, 1100),
        ("table1", "gray", "capex_usd_per_kw", 900, 900),
        ("table1", "green", "opex_usd_per_kg", 0.50, 0.50),
        ("table1", "green", "breakeven_price_usd_per_kg", 4.5, 6.0),
        ("table1", "blue", "breakeven_price_usd_per_kg", 2.5, 3.5),
        ("table1", "gray", "breakeven_price_usd_per_kg", 1.5, 2.0),
        ("table2", "pipeline_new", "capex_usd_per_km", 1.0e6, 2.0e6),
        ("table2", "pipeline_repurposed", "capex_usd_per_km", 0.3e6, 0.6e6),
        ("table2", "pipeline_repurposed", "opex_usd_per_kg_per_1000km", 0.07, 0.10),
        ("table3", "lh2_ship_large", "liquefaction_usd_per_kg", 1.5, 2.0),
        ("table3", "lh2_ship_large", "boiloff_pct_per_day", 0.2, 0.4),
        ("table4", "truck_tube", "trucking_usd_per_kg_per_1000km", 2.0, 5.0),
        ("table5", "carrier_nh3", "reconversion_usd_per_kg", 0.75, 1.50),
        ("table6", "compressed_700", "capex_usd_per_kg", 1200, 2000),
        ("table7", "lh2_tank_large", "opex_usd_per_kg_per_yr", 45, 85),
        ("table8", "salt_cavern", "capex_usd_per_kg", 0.15, 0.60),
        ("table8", "salt_cavern", "cycle_efficiency_pct", 5, 95),  # stored as printed
        ("table9", "metal_hydride", "reconversion_usd_per_kg", 1.70, 3.20),
        ("table10", "green", "capex_1mw_usd_per_kw", 1500, 2500),
        ("table10", "green", "capex_10mw_usd_per_kw", 1200, 1700),
        ("table10", "green", "capex_100mw_usd_per_kw", 800, 1500),
        ("table11", "blue", "opex_1mw_usd_per_kg", 0.07, 0.12),
        ("table11", "gray", "opex_100mw_usd_per_kg", 0.04, 0.08),
        ("table12", "green", "feedstock_usd_per_kg", 1.50, 3.00),
        ("table12", "blue", "feedstock_usd_per_kg", 0.90, 1.80),
        ("table12", "gray", "feedstock_usd_per_kg", 0.80, 1.50),
        ("table13", "green", "lcoh_usd_per_kg", 3.50, 6.00),
        ("table13", "blue", "lcoh_usd_per_kg", 2.00, 3.50),
        ("table13", "gray", "lcoh_usd_per_kg", 1.50, 2.50),
        ("table13", "green", "efficiency_pct", 60, 70),
    ],
)
def test_transcribed_values(table, row, column, low, high):
    band = REFERENCE.band(table, row, column)
    assert band.low == pytest.approx(low)
    assert band.high == pytest.approx(high)
    assert band.mid == pytest.approx((low + high) / 2)


def test_all_thirteen_tables_present():
    assert set(REFERENCE.tables()) == {f"table{i}" for i in range(1, 14)}


def test_unknown_entry_raises():
    with pytest.raises(KeyError, match="no dataset entry"):
        REFERENCE.band("table1", "green", "nope")


def test_csv_export_shape():
    csv = REFERENCE.to_csv()
    lines = csv.strip().split("\n")
    assert lines[0] == "table_id,row,column,low,mid,high,unit"
    assert len(lines) == len(REFERENCE.entries) + 1
    assert "\r" not in csv
    # sorted and therefore byte-stable
    assert csv == REFERENCE.to_csv()
    body = lines[1:]
    assert body == sorted(body)


def test_single_table_export():
    csv = REFERENCE.to_csv("table12")
    lines = csv.strip().split("\n")
    assert len(lines) == 4
    assert all(line.startswith("table12,") for line in lines[1:])


def test_model_side_constants():
    assert (SALT_CAVERN_CYCLE_EFFICIENCY.low, SALT_CAVERN_CYCLE_EFFICIENCY.high) == (75.0, 95.0)
    assert (ELECTROLYZER_EFFICIENCY_TEXT_BAND.low, ELECTROLYZER_EFFICIENCY_TEXT_BAND.high) == (0.55, 0.70)
    assert (CCS_OPEX_ADDER_BAND.low, CCS_OPEX_ADDER_BAND.high) == (0.50, 1.00)
