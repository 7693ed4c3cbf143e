"""Published tables bundled with the package, used as regression references."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from importlib import resources

from .census import IsoClass4

# printed order label -> the order whose value the row actually carries
PALEY_Q_CORRECTIONS = {223: 233}


@dataclass(frozen=True)
class K4Row:
    q_printed: int
    k4: int

    @property
    def q(self) -> int:
        return PALEY_Q_CORRECTIONS.get(self.q_printed, self.q_printed)


def _rows(name: str):
    text = resources.files(__package__).joinpath("data", name).read_text()
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    return list(csv.DictReader(lines))


def paley_k4_table() -> list[K4Row]:
    return [K4Row(int(r["q_printed"]), int(r["k4"])) for r in _rows("paley_k4.csv")]


def peisert_k4_table() -> list[K4Row]:
    return [K4Row(int(r["q"]), int(r["k4"])) for r in _rows("peisert_k4.csv")]


def design_lambda_q29() -> dict:
    """Family tuple (in tilde-class order) -> printed lambda."""
    return {tuple(IsoClass4.parse(n) for n in r["family"].split()): int(r["lambda"])
            for r in _rows("design_lambda_q29.csv")}
