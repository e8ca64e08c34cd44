"""Hexagonal cell lattice: integer indexing, center geometry, reuse neighborhoods.

Cells live on a doubled integer grid: cell (i, j) has its center at
(x0 + i * 3R/2, y0 + j * sqrt(3)R/2) and i + j must be even, which places
the centers on a triangular lattice of hexagons with circumradius R.

The squared center distance between two cells is

    d^2 = (3 R^2 / 4) * (3*di^2 + dj^2)

so every distance comparison reduces to an exact integer test on the
lattice metric 3*di^2 + dj^2.  Channel reuse is allowed at or beyond a
reuse distance, which corresponds to a metric of 16 for control traffic
(distance 2*sqrt(3)*R) and 12 for data traffic (distance 3R); cells
strictly inside the threshold interfere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .errors import NotInLatticeError

# Reuse-rule metric thresholds: interference iff 3*di^2 + dj^2 < threshold.
CONTROL_REUSE_METRIC = 16
DATA_REUSE_METRIC = 12


@dataclass(frozen=True)
class CellIndex:
    """Integer index (i, j) of a cell; i + j must be even."""

    i: int
    j: int

    def __post_init__(self) -> None:
        if (self.i + self.j) % 2 != 0:
            raise ValueError(f"cell index ({self.i}, {self.j}) violates parity: i + j must be even")

    def offset(self, di: int, dj: int) -> "CellIndex":
        return CellIndex(self.i + di, self.j + dj)


def row_major_key(cell: CellIndex) -> tuple[int, int]:
    """Sort key for the canonical cell ordering (by j, then i)."""
    return (cell.j, cell.i)


@dataclass(frozen=True)
class Lattice:
    """A finite set of cells with shared radius and Cartesian origin.

    ``cells`` is ordered row-major (by j, then i) and duplicate-free; every
    index lies within [-index_bound_n, index_bound_n].
    """

    radius_r: float
    origin: tuple[float, float]
    cells: tuple[CellIndex, ...]
    index_bound_n: int

    def __post_init__(self) -> None:
        if self.radius_r <= 0:
            raise ValueError("radius_r must be positive")
        if len(set(self.cells)) != len(self.cells):
            raise ValueError("duplicate cells in lattice")
        n = self.index_bound_n
        for c in self.cells:
            if abs(c.i) > n or abs(c.j) > n:
                raise ValueError(f"cell ({c.i}, {c.j}) outside index bound {n}")
        object.__setattr__(self, "_members", frozenset(self.cells))

    def __contains__(self, cell: CellIndex) -> bool:
        return cell in self._members  # type: ignore[attr-defined]

    def __len__(self) -> int:
        return len(self.cells)

    def require(self, cell: CellIndex) -> None:
        if cell not in self:
            raise NotInLatticeError(f"cell ({cell.i}, {cell.j}) is not in the lattice")


@dataclass(frozen=True)
class NeighborhoodPartition:
    """Cells strictly beyond / exactly at / strictly inside a reuse metric.

    The three sets partition the whole lattice; ``g_set`` contains the
    reference cell itself (metric 0) whenever the threshold is positive.
    """

    e_set: frozenset[CellIndex]
    f_set: frozenset[CellIndex]
    g_set: frozenset[CellIndex]


def build_lattice(index_bound_n: int, radius_r: float, origin: tuple[float, float] = (0.0, 0.0)) -> Lattice:
    """All parity-valid cells in the square index window [-N, N]^2.

    N = 0 gives the single cell (0, 0).  Cell count is 2*N^2 + 2*N + 1.
    """
    if index_bound_n < 0:
        raise ValueError("index_bound_n must be non-negative")
    n = index_bound_n
    cells = tuple(
        CellIndex(i, j)
        for j in range(-n, n + 1)
        for i in range(-n, n + 1)
        if (i + j) % 2 == 0
    )
    return Lattice(radius_r=radius_r, origin=origin, cells=cells, index_bound_n=n)


def lattice_from_cells(
    cells: Iterable[CellIndex], radius_r: float, origin: tuple[float, float] = (0.0, 0.0)
) -> Lattice:
    """Lattice over an explicit cell list, for irregular deployments.

    Cells are reordered canonically; the index bound is derived from the
    largest index in use.
    """
    ordered = tuple(sorted(set(cells), key=row_major_key))
    bound = max((max(abs(c.i), abs(c.j)) for c in ordered), default=0)
    return Lattice(radius_r=radius_r, origin=origin, cells=ordered, index_bound_n=bound)


def twelve_cell_lattice(radius_r: float = 1.0, origin: tuple[float, float] = (0.0, 0.0)) -> Lattice:
    """Canonical 12-cell deployment: a 3-column by 4-row parity-valid block.

    This is the bundled small-network fixture used by the example configs
    and the test-suite.
    """
    cells = [CellIndex(i, j) for i in (0, 1, 2) for j in range(i % 2, 8, 2)]
    return lattice_from_cells(cells, radius_r=radius_r, origin=origin)


def center_of(lattice: Lattice, c: CellIndex) -> tuple[float, float]:
    """Cartesian center of a lattice cell."""
    lattice.require(c)
    x0, y0 = lattice.origin
    r = lattice.radius_r
    return (x0 + c.i * (3.0 * r / 2.0), y0 + c.j * (math.sqrt(3.0) * r / 2.0))


def lattice_metric(a: CellIndex, b: CellIndex) -> int:
    """Integer metric 3*di^2 + dj^2; d^2 = (3 R^2 / 4) * metric."""
    di = a.i - b.i
    dj = a.j - b.j
    return 3 * di * di + dj * dj


def distance(lattice: Lattice, a: CellIndex, b: CellIndex) -> float:
    """Euclidean center distance, R * sqrt(3 * metric) / 2."""
    lattice.require(a)
    lattice.require(b)
    return lattice.radius_r * math.sqrt(3.0 * lattice_metric(a, b)) / 2.0


def neighborhood_sets(lattice: Lattice, c: CellIndex, metric_threshold: int) -> NeighborhoodPartition:
    """Partition the lattice around ``c`` by metric vs. ``metric_threshold``.

    E = strictly above, F = exactly at, G = strictly below (G holds ``c``
    itself when the threshold is positive).  Thresholds 16 and 12 give the
    control and data reuse neighborhoods.
    """
    lattice.require(c)
    e, f, g = [], [], []
    for other in lattice.cells:
        m = lattice_metric(c, other)
        if m > metric_threshold:
            e.append(other)
        elif m == metric_threshold:
            f.append(other)
        else:
            g.append(other)
    return NeighborhoodPartition(e_set=frozenset(e), f_set=frozenset(f), g_set=frozenset(g))


def boundary_f_offsets(metric_threshold: int) -> tuple[tuple[int, int], ...]:
    """All (di, dj) displacements at exactly the given metric.

    Solved by direct enumeration over the bounded integer window; at the
    thresholds 16 and 12 this yields the six-displacement reuse rings.
    """
    sols = []
    bound = int(math.isqrt(metric_threshold)) + 1
    for di in range(-bound, bound + 1):
        for dj in range(-bound, bound + 1):
            if (di + dj) % 2 == 0 and 3 * di * di + dj * dj == metric_threshold:
                sols.append((di, dj))
    return tuple(sorted(sols))
