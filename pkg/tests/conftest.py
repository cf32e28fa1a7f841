import pytest

from h2tea import Pathway, PathwayParams, PolicyRegime, load_scenario


@pytest.fixture(scope="session")
def scenario():
    """The all-defaults scenario."""
    return load_scenario()


@pytest.fixture(scope="session")
def fin(scenario):
    return scenario.financial


@pytest.fixture(scope="session")
def no_policy():
    return PolicyRegime.no_policy()


@pytest.fixture(scope="session")
def green(scenario):
    return scenario.params(Pathway.GREEN)


@pytest.fixture(scope="session")
def blue(scenario):
    return scenario.params(Pathway.BLUE)


@pytest.fixture(scope="session")
def gray(scenario):
    return scenario.params(Pathway.GRAY)


@pytest.fixture(scope="session")
def low_cf_green():
    """The documented low-utilization green variant behind the finance figures."""
    return PathwayParams(
        pathway=Pathway.GREEN,
        capex=1700.0,
        fixed_opex=0.50,
        efficiency=0.60,
        capacity_factor=0.30,
        electricity_price=50.0,
    )


def annuity_oracle(rate: float, years: int) -> float:
    """Independent annuity sum: explicit term-by-term discounting."""
    if rate == 0.0:
        return float(years)
    return sum((1.0 + rate) ** -t for t in range(1, years + 1))
