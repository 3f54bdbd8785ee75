"""Built-in reference germs with their published spectral pairs."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .spp import SpectralPairs, parse_spp_text

NAMES = ("f1", "f2", "f3")


@dataclass(frozen=True)
class Fixture:
    name: str
    germ: str
    variables: tuple
    milnor: int
    reference_text: str

    @property
    def reference(self) -> SpectralPairs:
        return parse_spp_text(self.reference_text)


def _data(name: str):
    return resources.files("newton_spectra").joinpath("data", "fixtures", name)


def load_fixture(name: str) -> Fixture:
    if name not in NAMES:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(NAMES)}")
    meta = json.loads(_data("germs.json").read_text())[name]
    text = _data(f"{name}.spp").read_text().strip()
    return Fixture(name, meta["germ"], tuple(meta["variables"]), meta["milnor"], text)


def result_schema() -> dict:
    return json.loads(resources.files("newton_spectra").joinpath("data", "result.schema.json").read_text())
