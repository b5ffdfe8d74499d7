"""Incomplete 2D cluster lattice generation.

Columns of a height-H cluster are generated left to right. Every potential
entanglement edge is drawn independently with probability p: the H-1 vertical
edges inside a new column and the H horizontal edges connecting it to the
previous column are drawn together, once, when the column appears. Column 0
has no horizontal edges.

Coordinates are (x, y) with x the global column index (unbounded, increasing)
and y the row in [0, H). Neighbor enumeration order is fixed to
up, right, down, left so that traversals are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# direction codes shared with the search kernels
UP, RIGHT, DOWN, LEFT = 0, 1, 2, 3
DX = np.array([0, 1, 0, -1], dtype=np.int64)
DY = np.array([-1, 0, 1, 0], dtype=np.int64)


@dataclass(frozen=True)
class LatticeParams:
    """Cluster geometry: height H, edge probability p, total width W."""

    H: int
    p: float
    W: int

    def __post_init__(self):
        if self.H < 2:
            raise ValueError("cluster height must be at least 2")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError("edge probability must lie in [0, 1]")
        if self.W < 1:
            raise ValueError("cluster width must be positive")


@dataclass(frozen=True)
class ColumnEdges:
    """Edge presence bits for one column.

    vertical[y] is the edge (x, y)-(x, y+1), length H-1.
    horizontal[y] is the edge (x-1, y)-(x, y), length H.
    """

    x: int
    vertical: np.ndarray
    horizontal: np.ndarray


class EndOfCluster(Exception):
    """Raised when a column at or beyond the cluster width is requested."""


def generate_column(rng: np.random.Generator, params: LatticeParams, x: int) -> ColumnEdges:
    """Draw the edges of column x from the caller's stream.

    Consumes exactly 2H-1 uniform draws per column, in vertical-then-horizontal
    order, so that repeated calls walk the same stream as :func:`edge_stream`.
    """
    if x >= params.W:
        raise EndOfCluster(f"column {x} outside cluster of width {params.W}")
    u = rng.random(2 * params.H - 1)
    vertical = u[: params.H - 1] < params.p
    horizontal = u[params.H - 1 :] < params.p
    if x == 0:
        horizontal = np.zeros(params.H, dtype=bool)
    return ColumnEdges(x=x, vertical=vertical, horizontal=horizontal)


def edge_stream(seed, params: LatticeParams) -> tuple[np.ndarray, np.ndarray]:
    """Materialize the full edge stream of a trial as two uint8 arrays.

    Returns (vert, horiz) of shape (W, H): vert[x, y] is the edge
    (x, y)-(x, y+1) (row H-1 unused, always 0), horiz[x, y] is the edge
    (x-1, y)-(x, y). Identical to generating columns one at a time with
    :func:`generate_column` from a generator seeded the same way.
    """
    rng = np.random.default_rng(seed)
    u = rng.random((params.W, 2 * params.H - 1))
    vert = np.zeros((params.W, params.H), dtype=np.uint8)
    horiz = np.zeros((params.W, params.H), dtype=np.uint8)
    vert[:, : params.H - 1] = u[:, : params.H - 1] < params.p
    horiz[:, :] = u[:, params.H - 1 :] < params.p
    horiz[0, :] = 0
    return vert, horiz


def trial_seeds(master_seed: int, index: int) -> tuple[np.random.SeedSequence, int]:
    """Derive the per-trial RNG sources from a master seed.

    Trial `index` gets an edge-stream SeedSequence and an integer seed for the
    in-kernel choice/outcome stream. The two are independent, and neither
    depends on the algorithm under test, so GBFS and IBFS runs at the same
    (master_seed, index) consume identical lattices.
    """
    ss = np.random.SeedSequence(entropy=master_seed, spawn_key=(index,))
    edge_ss, choice_ss = ss.spawn(2)
    choice_seed = int(choice_ss.generate_state(1)[0] % np.uint64(2**31 - 1)) + 1
    return edge_ss, choice_seed


def neighbors(c: tuple[int, int], window) -> list[tuple[int, int]]:
    """Edge-connected lattice neighbors of c inside the live window.

    Enumerated in the fixed order up, right, down, left. `window` is a
    NodeWindow (anything exposing tail_x, head_x, H and edge bit lookup).
    """
    x, y = c
    if not window.contains(x, y):
        raise IndexError(f"coordinate {c} outside live window")
    out = []
    for d in range(4):
        nx, ny = x + int(DX[d]), y + int(DY[d])
        if ny < 0 or ny >= window.H or not window.contains(nx, ny):
            continue
        if window.has_edge(x, y, d):
            out.append((nx, ny))
    return out
