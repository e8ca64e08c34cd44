"""Duty-cycle-aware dynamic data-channel allocation.

Every PAN runs a beacon-mode superframe with active period SD = 2^SO inside
a beacon interval BI = 2^BO (both counted in base superframe units, SO <=
BO).  The network-wide schedule repeats with the major cycle, the largest
BI; time is sliced into elementary cycles of the smallest SD.  Per
elementary cycle, the PANs active in it induce a metric-12 interference
graph; each connected component is colored exactly and every PAN in a
component with chi colors receives a disjoint group of
|data channels| // chi channels for that cycle, so isolated PANs get the
whole data set while busy cycles fall back to the static share.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .coloring import DEFAULT_VERTEX_CAP, chromatic_coloring
from .errors import InsufficientSpectrumError, InvalidSuperframeError
from .interference import build_interference_graph, connected_components, subgraph_on
from .lattice import DATA_REUSE_METRIC, CellIndex, Lattice
from .spectrum import ChannelPlan, LogicalChannel, partition_channels


@dataclass(frozen=True)
class SuperframeConfig:
    """One PAN's duty cycle: cell, superframe order SO, beacon order BO.

    ``phase`` shifts the start of the beacon interval, in elementary time
    units; zero means all PANs start together (the worst case).
    """

    pan_cell: CellIndex
    so: int
    bo: int
    phase: int = 0

    def __post_init__(self) -> None:
        if self.so < 0 or self.bo < 0 or self.phase < 0:
            raise InvalidSuperframeError("SO, BO and phase must be non-negative")
        if self.so > self.bo:
            raise InvalidSuperframeError(
                f"SO={self.so} exceeds BO={self.bo}: active period must fit in the beacon interval"
            )

    @property
    def sd(self) -> int:
        return 1 << self.so

    @property
    def bi(self) -> int:
        return 1 << self.bo


@dataclass(frozen=True)
class CycleStructure:
    """Major cycle, elementary cycle length, and cycles per major cycle."""

    bi_maj: int
    sd_min: int
    u_cycles: int


@dataclass(frozen=True)
class ActivityMatrix:
    """active[pan][cycle] for every configured PAN and elementary cycle."""

    active: tuple[tuple[bool, ...], ...]


@dataclass(frozen=True)
class AllocationMatrix:
    """channels[pan][cycle]: the data channels granted per elementary cycle.

    ``per_cycle_chi`` is the chromatic number of the cycle's active
    interference graph (max over its components; 0 when idle) and
    ``per_cycle_k`` the largest channel grant in the cycle.
    """

    channels: tuple[tuple[tuple[LogicalChannel, ...], ...], ...]
    per_cycle_chi: tuple[int, ...]
    per_cycle_k: tuple[int, ...]


def cycle_structure(configs: Sequence[SuperframeConfig]) -> CycleStructure:
    """BI_maj = max beacon interval, SD_min = min active period, U = ratio.

    All durations are powers of two, so the least common multiple of the
    intervals is the maximum and the greatest common divisor of the active
    periods is the minimum.
    """
    if not configs:
        raise ValueError("need at least one superframe config")
    bi_maj = max(c.bi for c in configs)
    sd_min = min(c.sd for c in configs)
    return CycleStructure(bi_maj=bi_maj, sd_min=sd_min, u_cycles=bi_maj // sd_min)


def is_active(config: SuperframeConfig, cycle: int, sd_min: int) -> bool:
    """Whether the PAN's active period covers elementary cycle ``cycle``."""
    return (cycle * sd_min - config.phase) % config.bi < config.sd


def activity_matrix(
    configs: Sequence[SuperframeConfig], cycles: CycleStructure, num_cycles: int | None = None
) -> ActivityMatrix:
    """Activity of every PAN over ``num_cycles`` cycles (default one major cycle)."""
    u = cycles.u_cycles if num_cycles is None else num_cycles
    rows = tuple(
        tuple(is_active(cfg, t, cycles.sd_min) for t in range(u)) for cfg in configs
    )
    return ActivityMatrix(active=rows)


def allocate_dynamic(
    lattice: Lattice,
    configs: Sequence[SuperframeConfig],
    plan: ChannelPlan,
    num_cycles: int | None = None,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
) -> AllocationMatrix:
    """Per-PAN per-cycle channel groups over one major cycle.

    Within a cycle, each connected component of the active PANs' metric-12
    graph is colored exactly; a PAN in a component needing chi colors gets
    the group of |data| // chi channels matching its color.  PANs in
    different components may share channels, they are out of range of each
    other.
    """
    cells = [c.pan_cell for c in configs]
    for cell in cells:
        lattice.require(cell)
    if len(set(cells)) != len(cells):
        raise ValueError("duplicate PAN cells in superframe configs")
    cycles = cycle_structure(configs)
    act = activity_matrix(configs, cycles, num_cycles)
    u = len(act.active[0]) if act.active else 0
    ordered_data = plan.ordered_data()
    full_graph = build_interference_graph(lattice, cells, DATA_REUSE_METRIC)
    pan_of_cell = {cfg.pan_cell: k for k, cfg in enumerate(configs)}

    grants: list[list[tuple[LogicalChannel, ...]]] = [[() for _ in range(u)] for _ in configs]
    per_cycle_chi = []
    per_cycle_k = []
    for t in range(u):
        active_cells = [cfg.pan_cell for k, cfg in enumerate(configs) if act.active[k][t]]
        chi_t = 0
        k_t = 0
        if active_cells:
            cycle_graph = subgraph_on(full_graph, active_cells)
            for component in connected_components(cycle_graph):
                coloring = chromatic_coloring(subgraph_on(cycle_graph, component), vertex_cap=vertex_cap)
                chi = coloring.num_colors
                group_size = len(ordered_data) // chi
                if group_size == 0:
                    raise InsufficientSpectrumError(
                        f"cycle {t + 1}: need {chi} data channels, plan has {len(ordered_data)}"
                    )
                groups, _ = partition_channels(ordered_data, chi, group_size)
                for cell in component:
                    grants[pan_of_cell[cell]][t] = groups[coloring.assignment[cell]]
                chi_t = max(chi_t, chi)
                k_t = max(k_t, group_size)
        per_cycle_chi.append(chi_t)
        per_cycle_k.append(k_t)

    return AllocationMatrix(
        channels=tuple(tuple(row) for row in grants),
        per_cycle_chi=tuple(per_cycle_chi),
        per_cycle_k=tuple(per_cycle_k),
    )


def activity_csv(configs: Sequence[SuperframeConfig], act: ActivityMatrix) -> str:
    """Long-form activity table; cycles are printed 1-based."""
    lines = ["cycle,pan_i,pan_j,active"]
    u = len(act.active[0]) if act.active else 0
    for t in range(u):
        for k, cfg in enumerate(configs):
            cell = cfg.pan_cell
            lines.append(f"{t + 1},{cell.i},{cell.j},{int(act.active[k][t])}")
    return "\r\n".join(lines) + "\r\n"


def allocation_csv(
    configs: Sequence[SuperframeConfig], act: ActivityMatrix, alloc: AllocationMatrix
) -> str:
    """Per-cycle per-PAN grants; ``chi`` is the cycle's chromatic number."""
    lines = ["cycle,pan_i,pan_j,active,chi,k,channels"]
    u = len(alloc.per_cycle_chi)
    for t in range(u):
        for k, cfg in enumerate(configs):
            cell = cfg.pan_cell
            channels = alloc.channels[k][t]
            tokens = " ".join(ch.token() for ch in channels)
            lines.append(
                f"{t + 1},{cell.i},{cell.j},{int(act.active[k][t])},"
                f"{alloc.per_cycle_chi[t]},{len(channels)},{tokens}"
            )
    return "\r\n".join(lines) + "\r\n"


def allocation_json_doc(
    configs: Sequence[SuperframeConfig], cycles: CycleStructure, alloc: AllocationMatrix
) -> str:
    """JSON mirror of the per-PAN per-cycle channel matrix."""
    doc = {
        "bi_maj": cycles.bi_maj,
        "sd_min": cycles.sd_min,
        "u_cycles": cycles.u_cycles,
        "per_cycle_chi": list(alloc.per_cycle_chi),
        "per_cycle_k": list(alloc.per_cycle_k),
        "pans": [
            {
                "pan": k + 1,
                "cell": [cfg.pan_cell.i, cfg.pan_cell.j],
                "SO": cfg.so,
                "BO": cfg.bo,
                "phase": cfg.phase,
                "channels_per_cycle": [
                    [[ch.phy_channel, ch.code] for ch in alloc.channels[k][t]]
                    for t in range(len(alloc.per_cycle_chi))
                ],
            }
            for k, cfg in enumerate(configs)
        ],
    }
    return json.dumps(doc, indent=2) + "\n"
