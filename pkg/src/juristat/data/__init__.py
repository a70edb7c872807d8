"""Court-volume series shipped with the package.

``tjrs_year_month``: monthly lawsuits judged by the Rio Grande do Sul state
court, Jan 2000 to Dec 2017 (216 values).
``tjmg_year_head``: the first ten yearly totals (2000-2009) of the Minas
Gerais state court series; the later years were never published alongside
them and are not included.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from ..core import TimeSeries, parse_series_csv
from ..errors import InvalidValue


@dataclass(frozen=True)
class Fixture:
    name: str
    series: TimeSeries
    checksum: int
    description: str = ""

    def __post_init__(self):
        if sum(int(v) for v in self.series.values) != self.checksum:
            raise InvalidValue(f"fixture {self.name!r} does not sum to its checksum {self.checksum}")


TJMG_FULL_TOTAL = 4236229  # total of the full 2000-2013 series; not checkable from the head


def _load(name: str) -> TimeSeries:
    text = resources.files(__name__).joinpath(f"{name}.csv").read_text(encoding="utf-8")
    return parse_series_csv(text)


def tjrs_year_month() -> Fixture:
    return Fixture(
        "tjrs_year_month",
        _load("tjrs_year_month"),
        checksum=5625666,
        description="TJRS monthly lawsuit volume, 2000-01 to 2017-12",
    )


def tjmg_year_head() -> Fixture:
    return Fixture(
        "tjmg_year_head",
        _load("tjmg_year_head"),
        checksum=1437411,
        description="TJMG yearly lawsuit volume, first ten years (2000-2009)",
    )


FIXTURES = {
    "tjrs_year_month": tjrs_year_month,
    "tjmg_year_head": tjmg_year_head,
}


def load_fixture(name: str) -> Fixture:
    try:
        return FIXTURES[name]()
    except KeyError:
        raise InvalidValue(
            f"unknown dataset {name!r}; choose from {', '.join(sorted(FIXTURES))}"
        ) from None
