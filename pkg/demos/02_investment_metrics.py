"""Investment screening: break-even prices, NPV and IRR vs selling price.

Run:  python demos/02_investment_metrics.py
"""

import numpy as np

from h2tea import (
    Pathway,
    PolicyRegime,
    breakeven_price,
    build_cashflows,
    irr_vs_price,
    load_scenario,
    npv,
    npv_vs_price,
)

scenario = load_scenario()
fin = scenario.financial
no_policy = PolicyRegime.no_policy()

print("Break-even selling prices (NPV = 0), no policy support:")
for pathway in (Pathway.GRAY, Pathway.BLUE, Pathway.GREEN):
    price = breakeven_price(scenario.params(pathway), fin, no_policy)
    print(f"  {pathway.value:<6} {price:6.2f} USD/kg")

print()
print("NPV at selected selling prices (million USD, 10 MW plant):")
prices = np.arange(1.0, 8.5, 1.0)
print(f"  {'price':>6} " + "".join(f"{p.value:>10}" for p in (Pathway.GRAY, Pathway.BLUE, Pathway.GREEN)))
for price in prices:
    row = []
    for pathway in (Pathway.GRAY, Pathway.BLUE, Pathway.GREEN):
        series = build_cashflows(scenario.params(pathway), fin, no_policy, float(price))
        row.append(npv(series, fin.discount_rate) / 1e6)
    print(f"  {price:>6.2f} " + "".join(f"{v:>10.1f}" for v in row))

print()
print("IRR vs price for the gas-based routes (blank = undefined, price below cash cost):")
grid = [2.0, 2.5, 3.0, 4.0, 5.0]
for pathway in (Pathway.GRAY, Pathway.BLUE):
    points = irr_vs_price(scenario.params(pathway), fin, no_policy, grid)
    cells = ", ".join(
        f"{price:.1f}: " + (f"{rate:.1%}" if rate is not None else "--")
        for price, rate in points
    )
    print(f"  {pathway.value:<6} {cells}")

print()
print("A sanity identity: NPV crosses zero exactly at the break-even price, and")
print("the IRR of the break-even cash flows equals the discount rate.")
be = breakeven_price(scenario.params(Pathway.BLUE), fin, no_policy)
points = npv_vs_price(scenario.params(Pathway.BLUE), fin, no_policy, [be])
print(f"  blue: NPV at break-even = {points[0][1]:+.4f} USD")
