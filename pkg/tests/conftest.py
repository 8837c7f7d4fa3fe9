import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from coalgmin import FunctorSpec, PointedCoalgebra

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def fig4a() -> PointedCoalgebra:
    return PointedCoalgebra.build(
        FunctorSpec.powerset(), [{1, 2}, {1, 2}, set()], point=0, labels=["q0", "q1", "q2"]
    )


def fig4a_quotient() -> PointedCoalgebra:
    return PointedCoalgebra.build(FunctorSpec.powerset(), [{0, 1}, set()], point=0, labels=["s0", "s1"])


def fig4b() -> PointedCoalgebra:
    return PointedCoalgebra.build(
        FunctorSpec.monoid_valued("rational"),
        [{1: 4, 2: -7}, {2: 5}, {2: 5}],
        point=0,
        labels=["x", "y", "z"],
    )


def fig6a() -> PointedCoalgebra:
    return PointedCoalgebra.build(FunctorSpec.bag(), [{1: 2}, {}], point=0, labels=["p", "q"])


def fig6b() -> PointedCoalgebra:
    return PointedCoalgebra.build(FunctorSpec.bag(), [{0: 1}], point=0, labels=["p"])


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    report = sys.modules.get("test_acceptance")
    if report is not None and report.REPORT:
        terminalreporter.section("acceptance criteria")
        for line in sorted(report.REPORT, key=lambda l: int(l.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
