"""Transport and storage cost models plus chain composition.

Leg costs are per kg delivered: the (1 - loss) divisor charges boil-off or
line losses to the hydrogen that actually arrives. Table-derived defaults
use band midpoints throughout. Two transport conventions are baked in and
configurable at the call site:

* pipeline O&M is read as USD/kg per 1000 km for cross-mode comparability
  (the source table states no distance basis);
* ship boil-off converts to a loss via voyage days = distance / 600 km/day
  (25 km/h service speed), compounded daily.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from .core import FinancialParams
from .dataset import REFERENCE, SALT_CAVERN_CYCLE_EFFICIENCY, ReferenceDataset
from .errors import ConfigError
from .lcoh import CostBreakdown, crf

SHIP_SPEED_KM_PER_DAY = 600.0


class TransportMode(str, Enum):
    PIPELINE_NEW = "pipeline_new"
    PIPELINE_REPURPOSED = "pipeline_repurposed"
    LH2_SHIP_LARGE = "lh2_ship_large"
    LH2_SHIP_SMALL = "lh2_ship_small"
    TRUCK_TUBE = "truck_tube"
    TRUCK_CRYO = "truck_cryo"
    CARRIER_NH3 = "carrier_nh3"
    CARRIER_LOHC = "carrier_lohc"

    @classmethod
    def parse(cls, name: str) -> "TransportMode":
        try:
            return cls(str(name).lower())
        except ValueError:
            known = ", ".join(m.value for m in cls)
            raise ConfigError(f"unknown transport mode {name!r}; expected one of: {known}") from None


CARRIER_MODES = frozenset({TransportMode.CARRIER_NH3, TransportMode.CARRIER_LOHC})
SHIP_MODES = frozenset({TransportMode.LH2_SHIP_LARGE, TransportMode.LH2_SHIP_SMALL})


class StorageKind(str, Enum):
    COMPRESSED_350 = "compressed_350"
    COMPRESSED_700 = "compressed_700"
    LH2_TANK_SMALL = "lh2_tank_small"
    LH2_TANK_LARGE = "lh2_tank_large"
    SALT_CAVERN = "salt_cavern"
    DEPLETED_FIELD = "depleted_field"
    AQUIFER = "aquifer"
    NH3_STORE = "nh3_store"
    LOHC_STORE = "lohc_store"
    METAL_HYDRIDE = "metal_hydride"

    @classmethod
    def parse(cls, name: str) -> "StorageKind":
        try:
            return cls(str(name).lower())
        except ValueError:
            known = ", ".join(k.value for k in cls)
            raise ConfigError(f"unknown storage kind {name!r}; expected one of: {known}") from None


@dataclass(frozen=True)
class TransportLeg:
    """One logistics step with a fixed, per-distance and reconversion cost."""

    mode: TransportMode
    distance_km: float
    fixed_cost_per_kg: float = 0.0          # liquefaction, compression or synthesis
    variable_cost_per_kg_per_1000km: float = 0.0
    reconversion_cost_per_kg: float = 0.0   # chemical carriers only
    loss_fraction: float = 0.0              # boil-off / line loss share of the leg

    def __post_init__(self) -> None:
        if self.distance_km <= 0.0:
            raise ValueError(f"distance_km must be > 0, got {self.distance_km}")
        for name in ("fixed_cost_per_kg", "variable_cost_per_kg_per_1000km", "reconversion_cost_per_kg"):
            if getattr(self, name) < 0.0:
                raise ValueError(f"{name} must be >= 0, got {getattr(self, name)}")
        if not (0.0 <= self.loss_fraction < 1.0):
            raise ValueError(f"loss_fraction must be in [0, 1), got {self.loss_fraction}")
        if self.reconversion_cost_per_kg > 0.0 and self.mode not in CARRIER_MODES:
            raise ValueError(f"reconversion cost applies to carrier modes only, not {self.mode.value}")


@dataclass(frozen=True)
class StorageSpec:
    """One storage option priced per kg of throughput."""

    kind: StorageKind
    capex_per_kg_capacity: float
    opex_per_kg_year: float
    cycles_per_year: float
    efficiency_loss: float

    def __post_init__(self) -> None:
        if self.capex_per_kg_capacity < 0.0 or self.opex_per_kg_year < 0.0:
            raise ValueError("storage costs must be >= 0")
        if self.cycles_per_year < 1.0:
            raise ValueError(f"cycles_per_year must be >= 1, got {self.cycles_per_year}")
        if not (0.0 <= self.efficiency_loss < 1.0):
            raise ValueError(f"efficiency_loss must be in [0, 1), got {self.efficiency_loss}")


@dataclass(frozen=True)
class DeliveredCost:
    """Production + transport + storage per kg at the point of use."""

    production: float
    transport: float
    storage: float
    leg_loss_fractions: tuple[float, ...] = ()
    total: float = field(init=False)
    loss_adjusted_total: float = field(init=False)
    shares: tuple[float, float, float] = field(init=False)

    def __post_init__(self) -> None:
        total = self.production + self.transport + self.storage
        if total <= 0.0:
            raise ValueError("delivered cost must be positive to take shares")
        surviving = 1.0
        for loss in self.leg_loss_fractions:
            surviving *= 1.0 - loss
        object.__setattr__(self, "total", total)
        object.__setattr__(self, "loss_adjusted_total", total / surviving)
        object.__setattr__(
            self,
            "shares",
            (self.production / total, self.transport / total, self.storage / total),
        )


def voyage_loss(boiloff_per_day: float, distance_km: float, speed_km_per_day: float = SHIP_SPEED_KM_PER_DAY) -> float:
    """Compounded boil-off over the voyage: 1 - (1 - daily)^(days)."""
    days = distance_km / speed_km_per_day
    return 1.0 - (1.0 - boiloff_per_day) ** days


def default_leg(
    mode: TransportMode,
    distance_km: float,
    dataset: ReferenceDataset = REFERENCE,
    *,
    ship_speed_km_per_day: float = SHIP_SPEED_KM_PER_DAY,
) -> TransportLeg:
    """A leg priced from the reference-table midpoints for the chosen mode."""
    if mode in (TransportMode.PIPELINE_NEW, TransportMode.PIPELINE_REPURPOSED):
        row = mode.value
        return TransportLeg(
            mode=mode,
            distance_km=distance_km,
            variable_cost_per_kg_per_1000km=dataset.band("table2", row, "opex_usd_per_kg_per_1000km").mid,
            loss_fraction=dataset.band("table2", row, "energy_loss_pct").mid / 100.0,
        )
    if mode in SHIP_MODES:
        row = mode.value
        daily = dataset.band("table3", row, "boiloff_pct_per_day").mid / 100.0
        return TransportLeg(
            mode=mode,
            distance_km=distance_km,
            fixed_cost_per_kg=dataset.band("table3", row, "liquefaction_usd_per_kg").mid,
            variable_cost_per_kg_per_1000km=dataset.band("table3", row, "shipping_usd_per_kg_per_1000km").mid,
            loss_fraction=voyage_loss(daily, distance_km, ship_speed_km_per_day),
        )
    if mode in (TransportMode.TRUCK_TUBE, TransportMode.TRUCK_CRYO):
        row = mode.value
        return TransportLeg(
            mode=mode,
            distance_km=distance_km,
            fixed_cost_per_kg=dataset.band("table4", row, "compression_usd_per_kg").mid,
            variable_cost_per_kg_per_1000km=dataset.band("table4", row, "trucking_usd_per_kg_per_1000km").mid,
        )
    row = mode.value
    return TransportLeg(
        mode=mode,
        distance_km=distance_km,
        fixed_cost_per_kg=dataset.band("table5", row, "synthesis_usd_per_kg").mid,
        variable_cost_per_kg_per_1000km=dataset.band("table5", row, "transport_usd_per_kg_per_1000km").mid,
        reconversion_cost_per_kg=dataset.band("table5", row, "reconversion_usd_per_kg").mid,
    )


def leg_cost(leg: TransportLeg) -> float:
    """USD per kg delivered for one leg."""
    shipped = (
        leg.fixed_cost_per_kg
        + leg.variable_cost_per_kg_per_1000km * leg.distance_km / 1000.0
        + leg.reconversion_cost_per_kg
    )
    return shipped / (1.0 - leg.loss_fraction)


# Cycle-count defaults: weekly turns for tank storage, monthly for
# underground caverns and chemical stores. The source tables give none.
_STORAGE_SOURCES: dict[StorageKind, tuple[str, str, float]] = {
    StorageKind.COMPRESSED_350: ("table6", "capex_usd_per_kg", 52.0),
    StorageKind.COMPRESSED_700: ("table6", "capex_usd_per_kg", 52.0),
    StorageKind.LH2_TANK_SMALL: ("table7", "capex_usd_per_kg", 52.0),
    StorageKind.LH2_TANK_LARGE: ("table7", "capex_usd_per_kg", 52.0),
    StorageKind.SALT_CAVERN: ("table8", "capex_usd_per_kg", 12.0),
    StorageKind.DEPLETED_FIELD: ("table8", "capex_usd_per_kg", 12.0),
    StorageKind.AQUIFER: ("table8", "capex_usd_per_kg", 12.0),
    StorageKind.NH3_STORE: ("table9", "synthesis_usd_per_kg", 12.0),
    StorageKind.LOHC_STORE: ("table9", "synthesis_usd_per_kg", 12.0),
    StorageKind.METAL_HYDRIDE: ("table9", "synthesis_usd_per_kg", 12.0),
}


def _default_storage_loss(kind: StorageKind, dataset: ReferenceDataset) -> float:
    row = kind.value
    if kind in (StorageKind.COMPRESSED_350, StorageKind.COMPRESSED_700):
        return dataset.band("table6", row, "efficiency_loss_pct").mid / 100.0
    if kind in (StorageKind.LH2_TANK_SMALL, StorageKind.LH2_TANK_LARGE):
        return dataset.band("table7", row, "boiloff_loss_pct").mid / 100.0
    if kind == StorageKind.SALT_CAVERN:
        # corrected cycle-efficiency band; the printed one is a misprint
        return 1.0 - SALT_CAVERN_CYCLE_EFFICIENCY.mid / 100.0
    if kind in (StorageKind.DEPLETED_FIELD, StorageKind.AQUIFER):
        return 1.0 - dataset.band("table8", row, "cycle_efficiency_pct").mid / 100.0
    return dataset.band("table9", row, "efficiency_loss_pct").mid / 100.0


def default_storage(kind: StorageKind, dataset: ReferenceDataset = REFERENCE) -> StorageSpec:
    """A storage spec priced from the reference-table midpoints."""
    table, capex_col, cycles = _STORAGE_SOURCES[kind]
    return StorageSpec(
        kind=kind,
        capex_per_kg_capacity=dataset.band(table, kind.value, capex_col).mid,
        opex_per_kg_year=dataset.band(table, kind.value, "opex_usd_per_kg_per_yr").mid,
        cycles_per_year=cycles,
        efficiency_loss=_default_storage_loss(kind, dataset),
    )


def storage_cost_per_kg(spec: StorageSpec, fin: FinancialParams) -> float:
    """Annualized storage cost per kg of throughput, uplifted for cycle losses."""
    annual = spec.capex_per_kg_capacity * crf(fin.discount_rate, fin.lifetime_years) + spec.opex_per_kg_year
    return annual / spec.cycles_per_year / (1.0 - spec.efficiency_loss)


def compose_chain(
    production: CostBreakdown,
    legs: Sequence[TransportLeg],
    store: StorageSpec | None,
    fin: FinancialParams,
) -> DeliveredCost:
    """Delivered cost of production followed by transport legs and one storage step."""
    transport = sum(leg_cost(leg) for leg in legs)
    storage = storage_cost_per_kg(store, fin) if store is not None else 0.0
    return DeliveredCost(
        production=production.total,
        transport=transport,
        storage=storage,
        leg_loss_fractions=tuple(leg.loss_fraction for leg in legs),
    )


def cheapest_chain(
    distance_km: float,
    production: CostBreakdown,
    fin: FinancialParams,
    candidate_modes: Iterable[TransportMode],
    dataset: ReferenceDataset = REFERENCE,
) -> tuple[DeliveredCost, TransportMode]:
    """Least-cost single-leg chain over the candidate modes at table midpoints.

    Ties break on fewer non-zero cost components, then on mode name.
    Multi-modal chains are out of scope: no interchange pricing exists in
    the reference tables.
    """
    candidates = list(candidate_modes)
    if not candidates:
        raise ConfigError("candidate mode set is empty")
    if distance_km <= 0.0:
        raise ValueError(f"distance_km must be > 0, got {distance_km}")

    def rank(mode: TransportMode) -> tuple[float, int, str]:
        leg = default_leg(mode, distance_km, dataset)
        components = sum(
            1
            for value in (
                leg.fixed_cost_per_kg,
                leg.variable_cost_per_kg_per_1000km * distance_km / 1000.0,
                leg.reconversion_cost_per_kg,
            )
            if value > 0.0
        )
        return (leg_cost(leg), components, mode.value)

    best = min(candidates, key=rank)
    delivered = compose_chain(production, [default_leg(best, distance_km, dataset)], None, fin)
    return delivered, best
