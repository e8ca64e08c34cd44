"""Scenario config: a single JSON document describing lattice, regulatory
domain, per-PAN superframes and the request workload.

Example::

    {
      "lattice": {"index_bound_N": 2, "radius_R": 1.0, "origin": [0.0, 0.0]},
      "domain": "Europe",
      "superframes": [{"cell": [0, 0], "SO": 1, "BO": 4, "phase": 0}],
      "workload": {"requests_per_pan": 8, "slots_per_request": 3}
    }

The lattice may instead list explicit cells (``"cells": [[0, 0], [0, 2]]``)
for irregular deployments, and the domain may be a custom channel table
(``{"name": ..., "channels": [{"phy_channel": 4, "code": 7}, ...]}``).
A ``notes`` field is allowed anywhere and ignored.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .dynamic_alloc import SuperframeConfig
from .errors import ConfigError, HexchanError
from .evaluate import RequestScenario
from .lattice import CellIndex, Lattice, build_lattice, lattice_from_cells
from .spectrum import (
    DOMAIN_NAMES,
    ChannelPlan,
    RegulatoryDomain,
    channel_plan,
    channels_from_pairs,
    default_domain,
)


@dataclass(frozen=True)
class ScenarioConfig:
    lattice: Lattice
    domain: RegulatoryDomain
    us_data_card: int | None
    superframes: tuple[SuperframeConfig, ...] | None
    workload: RequestScenario | None
    out_dir: str | None

    def plan(self) -> ChannelPlan:
        return channel_plan(self.domain, us_data_card=self.us_data_card)

    def require_superframes(self) -> tuple[SuperframeConfig, ...]:
        if not self.superframes:
            raise ConfigError("command needs per-PAN superframes", field="superframes")
        return self.superframes

    def request_scenario(self) -> RequestScenario:
        """Explicit workload if given, else 8 requests of 3 slots per PAN."""
        if self.workload is not None:
            return self.workload
        cells = [cfg.pan_cell for cfg in self.require_superframes()]
        return RequestScenario.uniform(cells)


def _expect(mapping, key, kind, field, optional=False, default=None):
    if key not in mapping:
        if optional:
            return default
        raise ConfigError("missing required field", field=field)
    value = mapping[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise ConfigError(f"expected {kind.__name__}, got {type(value).__name__}", field=field)
    return value


def _parse_cell(value, field) -> CellIndex:
    if not isinstance(value, list) or len(value) != 2 or not all(isinstance(k, int) for k in value):
        raise ConfigError("expected a two-integer [i, j] pair", field=field)
    try:
        return CellIndex(value[0], value[1])
    except ValueError as exc:
        raise ConfigError(str(exc), field=field) from None


def _parse_lattice(doc) -> Lattice:
    section = _expect(doc, "lattice", dict, "lattice")
    radius = _expect(section, "radius_R", (int, float), "lattice.radius_R")
    if radius <= 0:
        raise ConfigError("must be positive", field="lattice.radius_R")
    origin_raw = section.get("origin", [0.0, 0.0])
    if not isinstance(origin_raw, list) or len(origin_raw) != 2:
        raise ConfigError("expected [x0, y0]", field="lattice.origin")
    origin = (float(origin_raw[0]), float(origin_raw[1]))
    if "cells" in section and "index_bound_N" in section:
        raise ConfigError("give either index_bound_N or cells, not both", field="lattice")
    if "cells" in section:
        raw = _expect(section, "cells", list, "lattice.cells")
        if not raw:
            raise ConfigError("cell list must be non-empty", field="lattice.cells")
        cells = [_parse_cell(c, f"lattice.cells[{k}]") for k, c in enumerate(raw)]
        if len(set(cells)) != len(cells):
            raise ConfigError("duplicate cells", field="lattice.cells")
        return lattice_from_cells(cells, radius_r=float(radius), origin=origin)
    bound = _expect(section, "index_bound_N", int, "lattice.index_bound_N")
    if bound < 0:
        raise ConfigError("must be non-negative", field="lattice.index_bound_N")
    return build_lattice(bound, radius_r=float(radius), origin=origin)


def _parse_domain(doc) -> RegulatoryDomain:
    section = doc.get("domain", "Europe")
    if isinstance(section, str):
        if section not in DOMAIN_NAMES:
            raise ConfigError(f"unknown domain {section!r}; expected one of {DOMAIN_NAMES}", field="domain")
        return default_domain(section)
    if not isinstance(section, dict):
        raise ConfigError("expected a domain name or a custom table object", field="domain")
    name = _expect(section, "name", str, "domain.name")
    raw = _expect(section, "channels", list, "domain.channels")
    pairs = []
    for k, entry in enumerate(raw):
        field = f"domain.channels[{k}]"
        if not isinstance(entry, dict):
            raise ConfigError("expected an object with phy_channel and code", field=field)
        phy = _expect(entry, "phy_channel", int, f"{field}.phy_channel")
        code = _expect(entry, "code", int, f"{field}.code")
        pairs.append((phy, code))
    try:
        table = channels_from_pairs(pairs)
    except ValueError as exc:
        raise ConfigError(str(exc), field="domain.channels") from None
    return RegulatoryDomain(name=name, total_channels=table)


def _parse_superframes(doc, lattice: Lattice):
    raw = doc.get("superframes")
    if raw is None:
        return None
    if not isinstance(raw, list) or not raw:
        raise ConfigError("expected a non-empty list", field="superframes")
    configs = []
    seen = set()
    for k, entry in enumerate(raw):
        field = f"superframes[{k}]"
        if not isinstance(entry, dict):
            raise ConfigError("expected an object", field=field)
        cell = _parse_cell(_expect(entry, "cell", list, f"{field}.cell"), f"{field}.cell")
        if cell not in lattice:
            raise ConfigError(f"cell ({cell.i}, {cell.j}) is not in the lattice", field=f"{field}.cell")
        if cell in seen:
            raise ConfigError(f"duplicate PAN cell ({cell.i}, {cell.j})", field=f"{field}.cell")
        seen.add(cell)
        so = _expect(entry, "SO", int, f"{field}.SO")
        bo = _expect(entry, "BO", int, f"{field}.BO")
        phase = _expect(entry, "phase", int, f"{field}.phase", optional=True, default=0)
        try:
            configs.append(SuperframeConfig(pan_cell=cell, so=so, bo=bo, phase=phase))
        except HexchanError as exc:
            raise ConfigError(str(exc), field=field) from None
    return tuple(configs)


def _parse_workload(doc, superframes) -> RequestScenario | None:
    raw = doc.get("workload")
    if raw is None:
        return None
    if not isinstance(raw, dict):
        raise ConfigError("expected an object", field="workload")
    if "per_pan" in raw:
        entries = _expect(raw, "per_pan", list, "workload.per_pan")
        if not entries:
            raise ConfigError("must be non-empty", field="workload.per_pan")
        per_pan = {}
        for k, entry in enumerate(entries):
            field = f"workload.per_pan[{k}]"
            if not isinstance(entry, dict):
                raise ConfigError("expected an object", field=field)
            cell = _parse_cell(_expect(entry, "cell", list, f"{field}.cell"), f"{field}.cell")
            slots = _expect(entry, "slots", list, f"{field}.slots")
            if not slots or not all(isinstance(s, int) and s > 0 for s in slots):
                raise ConfigError("expected a non-empty list of positive integers", field=f"{field}.slots")
            per_pan[cell] = tuple(slots)
        return RequestScenario(per_pan=per_pan)
    count = _expect(raw, "requests_per_pan", int, "workload.requests_per_pan")
    slots = _expect(raw, "slots_per_request", int, "workload.slots_per_request")
    if count < 1:
        raise ConfigError("must be positive", field="workload.requests_per_pan")
    if slots < 1:
        raise ConfigError("must be positive", field="workload.slots_per_request")
    if superframes is None:
        raise ConfigError("uniform workload needs superframes to know the PANs", field="workload")
    return RequestScenario.uniform([cfg.pan_cell for cfg in superframes], count=count, slots=slots)


def load_config(path: str | Path, domain_override: str | None = None) -> ScenarioConfig:
    """Parse and validate a scenario config file.

    ``domain_override`` replaces the config's domain by a built-in one
    (the CLI's ``--domain`` flag).
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {path}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise ConfigError("top-level config must be a JSON object")

    lattice = _parse_lattice(doc)
    if domain_override is not None:
        if domain_override not in DOMAIN_NAMES:
            raise ConfigError(f"unknown domain {domain_override!r}; expected one of {DOMAIN_NAMES}")
        domain = default_domain(domain_override)
    else:
        domain = _parse_domain(doc)
    us_data_card = doc.get("us_data_card")
    if us_data_card is not None:
        if not isinstance(us_data_card, int) or us_data_card not in (24, 28):
            raise ConfigError("must be 24 or 28", field="us_data_card")
        if domain.name != "US":
            raise ConfigError("only meaningful with the US domain", field="us_data_card")
    superframes = _parse_superframes(doc, lattice)
    workload = _parse_workload(doc, superframes)
    out_dir = doc.get("out_dir")
    if out_dir is not None and not isinstance(out_dir, str):
        raise ConfigError("expected a path string", field="out_dir")
    return ScenarioConfig(
        lattice=lattice,
        domain=domain,
        us_data_card=us_data_card,
        superframes=superframes,
        workload=workload,
        out_dir=out_dir,
    )
