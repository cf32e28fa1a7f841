"""Delivered cost: transport legs, storage, and least-cost chain selection.

Run:  python demos/04_logistics_chains.py
"""

import numpy as np

from h2tea import (
    Pathway,
    StorageKind,
    TransportMode,
    cheapest_chain,
    compose_chain,
    default_leg,
    default_storage,
    lcoh,
    leg_cost,
    load_scenario,
    storage_cost_per_kg,
)

scenario = load_scenario()
fin = scenario.financial

print("Per-kg transport cost by mode and distance (band midpoints):")
distances = [200.0, 500.0, 1000.0, 2000.0, 5000.0]
print(f"  {'mode':<20}" + "".join(f"{d:>9.0f}" for d in distances) + "   km")
for mode in TransportMode:
    costs = [leg_cost(default_leg(mode, d)) for d in distances]
    print(f"  {mode.value:<20}" + "".join(f"{c:>9.2f}" for c in costs))

print()
print("Cheapest single-mode chain vs distance (all modes as candidates):")
production = lcoh(scenario.params(Pathway.GREEN), fin)
for distance in np.arange(100.0, 5100.0, 500.0):
    _, mode = cheapest_chain(float(distance), production, fin, list(TransportMode))
    print(f"  {distance:>6.0f} km -> {mode.value}")

print()
print("Storage options, annualized per kg of throughput:")
for kind in StorageKind:
    spec = default_storage(kind)
    cost = storage_cost_per_kg(spec, fin)
    print(f"  {kind.value:<18} {cost:>8.4f} USD/kg  "
          f"({spec.cycles_per_year:.0f} cycles/yr, {spec.efficiency_loss:.0%} cycle loss)")
print("  Weekly-cycled pressure tanks are buffer storage; bulk storage lives underground.")

print()
print("Composed delivered cost, green production + 1000 km repurposed pipeline + salt cavern:")
store = default_storage(StorageKind.SALT_CAVERN)
leg = default_leg(TransportMode.PIPELINE_REPURPOSED, 1000.0)
delivered = compose_chain(production, [leg], store, fin)
print(f"  production {delivered.production:.3f} + transport {delivered.transport:.3f} "
      f"+ storage {delivered.storage:.3f} = {delivered.total:.3f} USD/kg")
print(f"  shares: {delivered.shares[0]:.1%} / {delivered.shares[1]:.1%} / {delivered.shares[2]:.1%}"
      f"   (loss-adjusted total {delivered.loss_adjusted_total:.3f})")
