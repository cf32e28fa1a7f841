"""Domain types and base production arithmetic.

Unit conventions used throughout the package:

* capacity        kW of input power (1 MW plant = 1000 kW)
* energy          kWh; electricity prices in USD/MWh
* hydrogen        kg; specific energy fixed at the lower heating value,
                  33.33 kWh/kg
* costs           USD/kg H2 unless a field name says otherwise
* emissions       kg CO2 per kg H2; carbon prices in USD/ton CO2
* rates, shares   dimensionless fractions per year / of unity

All types are immutable after construction and every function is pure, so
everything here is safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from types import MappingProxyType
from typing import Mapping

from .errors import ConfigError

H2_LHV_KWH_PER_KG = 33.33
HOURS_PER_YEAR = 8760.0


class Pathway(str, Enum):
    """The three production routes the model distinguishes."""

    GREEN = "green"
    BLUE = "blue"
    GRAY = "gray"

    @classmethod
    def parse(cls, name: str) -> "Pathway":
        try:
            return cls(str(name).lower())
        except ValueError:
            known = ", ".join(p.value for p in cls)
            raise ConfigError(f"unknown pathway {name!r}; expected one of: {known}") from None


@dataclass(frozen=True)
class ValueBand:
    """A low/mid/high range, the shape of most entries in the reference tables."""

    low: float
    mid: float
    high: float

    def __post_init__(self) -> None:
        if not (self.low <= self.mid <= self.high):
            raise ValueError(f"band must satisfy low <= mid <= high, got {self}")

    @classmethod
    def from_range(cls, low: float, high: float, mid: float | None = None) -> "ValueBand":
        """Build a band; the midpoint defaults to the arithmetic mean."""
        if mid is None:
            mid = (low + high) / 2.0
        return cls(float(low), float(mid), float(high))

    @classmethod
    def point(cls, value: float) -> "ValueBand":
        return cls(float(value), float(value), float(value))

    def contains(self, x: float, tol: float = 0.0) -> bool:
        return self.low - tol <= x <= self.high + tol


def feedstock_cost_green(electricity_price: float, efficiency: float) -> float:
    """Electricity cost of electrolysis in USD/kg H2.

    electricity_price is in USD/MWh; efficiency is the LHV conversion
    efficiency in (0, 1]. Specific consumption is 33.33/efficiency kWh/kg.
    """
    if efficiency <= 0.0 or efficiency > 1.0:
        raise ValueError(f"efficiency must be in (0, 1], got {efficiency}")
    if electricity_price < 0.0:
        raise ValueError(f"electricity_price must be >= 0, got {electricity_price}")
    kwh_per_kg = H2_LHV_KWH_PER_KG / efficiency
    return kwh_per_kg * electricity_price / 1000.0


@dataclass(frozen=True)
class PathwayParams:
    """Full techno-economic description of one production pathway.

    For electricity-priced production (green), feedstock_cost is derived
    from electricity_price and must not be supplied independently; for the
    gas-based routes it is a direct USD/kg input and electricity_price must
    be None.
    """

    pathway: Pathway
    capex: float                         # USD per kW of input capacity
    fixed_opex: float                    # USD/kg, non-feedstock O&M
    efficiency: float                    # LHV conversion efficiency, (0, 1]
    capacity_factor: float               # (0, 1]
    emission_intensity_unabated: float = 0.0   # kg CO2 per kg H2, before capture
    capture_rate: float = 0.0            # [0, 1)
    electricity_price: float | None = None     # USD/MWh, electricity-priced routes only
    feedstock_cost: float | None = None        # USD/kg, derived when electricity-priced
    specific_energy_lhv: float = H2_LHV_KWH_PER_KG

    def __post_init__(self) -> None:
        if self.capex <= 0.0:
            raise ValueError(f"capex must be > 0, got {self.capex}")
        if self.fixed_opex < 0.0:
            raise ValueError(f"fixed_opex must be >= 0, got {self.fixed_opex}")
        if not (0.0 < self.efficiency <= 1.0):
            raise ValueError(f"efficiency must be in (0, 1], got {self.efficiency}")
        if not (0.0 < self.capacity_factor <= 1.0):
            raise ValueError(f"capacity_factor must be in (0, 1], got {self.capacity_factor}")
        if not (0.0 <= self.capture_rate < 1.0):
            raise ValueError(f"capture_rate must be in [0, 1), got {self.capture_rate}")
        if self.emission_intensity_unabated < 0.0:
            raise ValueError(
                f"emission_intensity_unabated must be >= 0, got {self.emission_intensity_unabated}"
            )
        if self.specific_energy_lhv <= 0.0:
            raise ValueError(f"specific_energy_lhv must be > 0, got {self.specific_energy_lhv}")
        if self.electricity_price is not None:
            derived = feedstock_cost_green(self.electricity_price, self.efficiency)
            if self.feedstock_cost is not None and abs(self.feedstock_cost - derived) > 1e-9:
                raise ValueError(
                    "feedstock_cost is derived from electricity_price and may not be set independently"
                )
            object.__setattr__(self, "feedstock_cost", derived)
        elif self.feedstock_cost is None:
            raise ValueError("feedstock_cost is required when electricity_price is not set")
        elif self.feedstock_cost < 0.0:
            raise ValueError(f"feedstock_cost must be >= 0, got {self.feedstock_cost}")

    @property
    def kwh_per_kg(self) -> float:
        """Specific energy demand at the plant's conversion efficiency."""
        return self.specific_energy_lhv / self.efficiency

    @property
    def effective_emission_intensity(self) -> float:
        """kg CO2 per kg H2 after capture."""
        return self.emission_intensity_unabated * (1.0 - self.capture_rate)


@dataclass(frozen=True)
class FinancialParams:
    """Financing assumptions driving capital recovery and discounting."""

    discount_rate: float = 0.07     # fraction per year; 0 is the analytic limit
    lifetime_years: int = 20
    plant_size_kw: float = 10_000.0

    def __post_init__(self) -> None:
        if self.discount_rate < 0.0:
            raise ValueError(f"discount_rate must be >= 0, got {self.discount_rate}")
        if not isinstance(self.lifetime_years, int) or isinstance(self.lifetime_years, bool):
            raise ValueError(f"lifetime_years must be an integer, got {self.lifetime_years!r}")
        if self.lifetime_years < 1:
            raise ValueError(f"lifetime_years must be >= 1, got {self.lifetime_years}")
        if self.plant_size_kw <= 0.0:
            raise ValueError(f"plant_size_kw must be > 0, got {self.plant_size_kw}")


#: Per-kg production credits applied by default: the full clean-production
#: credit for green, the partial-capture tier for blue, nothing for gray.
DEFAULT_CREDITS: Mapping[Pathway, float] = MappingProxyType(
    {Pathway.GREEN: 3.0, Pathway.BLUE: 1.0, Pathway.GRAY: 0.0}
)


@dataclass(frozen=True)
class PolicyRegime:
    """Carbon price plus per-pathway production credits with a finite duration."""

    carbon_price: float = 0.0                       # USD per ton CO2
    credits: Mapping[Pathway, float] = DEFAULT_CREDITS   # USD per kg H2
    credit_years: int = 20                          # years the credit applies

    def __post_init__(self) -> None:
        if self.carbon_price < 0.0:
            raise ValueError(f"carbon_price must be >= 0, got {self.carbon_price}")
        if not isinstance(self.credit_years, int) or isinstance(self.credit_years, bool):
            raise ValueError(f"credit_years must be an integer, got {self.credit_years!r}")
        if self.credit_years < 0:
            raise ValueError(f"credit_years must be >= 0, got {self.credit_years}")
        normalized: dict[Pathway, float] = {}
        for key, value in dict(self.credits).items():
            pathway = key if isinstance(key, Pathway) else Pathway.parse(key)
            if value < 0.0:
                raise ValueError(f"credit for {pathway.value} must be >= 0, got {value}")
            normalized[pathway] = float(value)
        for pathway in Pathway:
            normalized.setdefault(pathway, 0.0)
        object.__setattr__(self, "credits", MappingProxyType(normalized))

    def credit_for(self, pathway: Pathway) -> float:
        return self.credits[pathway]

    @classmethod
    def no_policy(cls) -> "PolicyRegime":
        return cls(carbon_price=0.0, credits={p: 0.0 for p in Pathway}, credit_years=0)


def annual_output_kg(params: PathwayParams, fin: FinancialParams) -> float:
    """Yearly hydrogen production in kg for a plant of fin.plant_size_kw."""
    energy_in_kwh = fin.plant_size_kw * HOURS_PER_YEAR * params.capacity_factor
    return energy_in_kwh / params.kwh_per_kg
