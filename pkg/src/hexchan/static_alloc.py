"""Static channel assignment: one control channel per cell, and the baseline
per-cell data-channel groups shared uniformly across the network.

Control assignments color the metric-16 interference graph (at most 4
colors on any lattice); data groups color the metric-12 graph (at most 3)
and split the data set into equal groups of k_static = |data| // colors,
one group per color class.  Leftover channels stay unassigned rather than
being spread unevenly, and are reported explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import (
    CONTROL,
    DATA,
    DEFAULT_VERTEX_CAP,
    Coloring,
    chromatic_coloring,
    pattern_coloring,
)
from .errors import InsufficientSpectrumError
from .interference import build_interference_graph
from .lattice import CONTROL_REUSE_METRIC, DATA_REUSE_METRIC, CellIndex, Lattice
from .spectrum import ChannelPlan, LogicalChannel, partition_channels


@dataclass(frozen=True)
class StaticAllocation:
    """Full static assignment plus the summary numbers reports need.

    ``control`` is None when the allocation was built tolerantly and the
    plan's control set is smaller than the control chromatic number (some
    regulatory tables leave only 2 control channels, fewer than the 4 a
    dense network needs).
    """

    control: dict[CellIndex, LogicalChannel] | None
    data_groups: dict[CellIndex, tuple[LogicalChannel, ...]]
    k_static: int
    chi_control: int
    chi_data: int
    unassigned: tuple[LogicalChannel, ...]


def color_lattice_graph(lattice: Lattice, kind: str, vertex_cap: int = DEFAULT_VERTEX_CAP) -> Coloring:
    """Color the lattice's interference graph: exact when small enough,
    the closed-form pattern otherwise."""
    threshold = CONTROL_REUSE_METRIC if kind == CONTROL else DATA_REUSE_METRIC
    if len(lattice) <= vertex_cap:
        graph = build_interference_graph(lattice, None, threshold)
        return chromatic_coloring(graph, vertex_cap=vertex_cap)
    return pattern_coloring(lattice, kind)


def allocate_control(
    lattice: Lattice, plan: ChannelPlan, vertex_cap: int = DEFAULT_VERTEX_CAP
) -> dict[CellIndex, LogicalChannel]:
    """Assign one control channel per cell; color class k gets the k-th
    control channel in (phy, code) order."""
    coloring = color_lattice_graph(lattice, CONTROL, vertex_cap)
    channels = plan.ordered_control()
    if coloring.num_colors > len(channels):
        raise InsufficientSpectrumError(
            f"need {coloring.num_colors} control channels, plan has {len(channels)}"
        )
    return {cell: channels[color] for cell, color in coloring.assignment.items()}


def allocate_static_data(
    lattice: Lattice, plan: ChannelPlan, vertex_cap: int = DEFAULT_VERTEX_CAP
) -> tuple[dict[CellIndex, tuple[LogicalChannel, ...]], int]:
    """Per-cell data-channel groups and the uniform group size k_static."""
    coloring = color_lattice_graph(lattice, DATA, vertex_cap)
    ordered = plan.ordered_data()
    chi = coloring.num_colors
    if chi == 0:
        return {}, 0
    k_static = len(ordered) // chi
    if k_static == 0:
        raise InsufficientSpectrumError(f"need at least {chi} data channels, plan has {len(ordered)}")
    groups, _ = partition_channels(ordered, chi, k_static)
    return {cell: groups[color] for cell, color in coloring.assignment.items()}, k_static


def allocate_static(
    lattice: Lattice,
    plan: ChannelPlan,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    require_control: bool = True,
) -> StaticAllocation:
    """Control assignment and static data groups in one report-ready record.

    With ``require_control=False`` a control set smaller than the control
    chromatic number yields ``control=None`` instead of an error, so the
    data side can still be reported.
    """
    control_coloring = color_lattice_graph(lattice, CONTROL, vertex_cap)
    data_coloring = color_lattice_graph(lattice, DATA, vertex_cap)
    try:
        control = allocate_control(lattice, plan, vertex_cap)
    except InsufficientSpectrumError:
        if require_control:
            raise
        control = None
    data_groups, k_static = allocate_static_data(lattice, plan, vertex_cap)
    ordered = plan.ordered_data()
    unassigned = ordered[k_static * data_coloring.num_colors :] if data_coloring.num_colors else ordered
    return StaticAllocation(
        control=control,
        data_groups=data_groups,
        k_static=k_static,
        chi_control=control_coloring.num_colors,
        chi_data=data_coloring.num_colors,
        unassigned=unassigned,
    )


def static_allocation_csv(lattice: Lattice, alloc: StaticAllocation) -> str:
    """One row per cell: control channel plus its k_static data channels.

    Control columns stay empty when no control assignment exists.
    """
    header = ["i", "j", "control_phy", "control_code"]
    header += [f"data_ch_{k + 1}" for k in range(alloc.k_static)]
    lines = [",".join(header)]
    for cell in lattice.cells:
        if alloc.control is None:
            row = [str(cell.i), str(cell.j), "", ""]
        else:
            cch = alloc.control[cell]
            row = [str(cell.i), str(cell.j), str(cch.phy_channel), str(cch.code)]
        row += [ch.token() for ch in alloc.data_groups[cell]]
        lines.append(",".join(row))
    return "\r\n".join(lines) + "\r\n"
