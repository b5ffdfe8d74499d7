"""Block-search algorithms over the node window.

Two searches establish the predecessor trees, successor sets and right nodes
that path extension consumes:

* the global search (gbfs) resets all search data and re-runs a full
  breadth-first search of the live block from the path head every cycle;
* the incremental search (ibfs) keeps the previous trees, only explores the
  region between the penultimate and rightmost columns from the previous
  exit nodes, and prunes successor branches that turned into dead ends.

The incremental search may assign non-shortest distances (nodes are visited
at most once over their window lifetime, so a later, shorter route is never
recorded) and can miss detours around a dead end that the global search
would find; both behaviors are intended and measured by the experiments.

These wrappers adapt the compiled kernels in _kernels to the NodeWindow
container; the kernels themselves are shared with the Monte Carlo driver.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels as k
from .window import NodeWindow

GBFS = "gbfs"
IBFS = "ibfs"


class SearchDeath(Exception):
    """The incremental queue was empty at cycle start: no path can continue."""


@dataclass
class SearchOutcome:
    """Result of one block search."""

    exit_nodes: list
    right_nodes_found: bool
    pruned: int = 0


@dataclass
class SearchState:
    """Queue and scratch arrays for one trial's searches.

    The queue persists across cycles for the incremental search: at cycle
    start it holds the previous block's exit nodes.
    """

    window: NodeWindow
    algorithm: str = GBFS
    qx: np.ndarray = field(init=False)
    qy: np.ndarray = field(init=False)
    qreg: np.ndarray = field(init=False)

    def __post_init__(self):
        n = (self.window.cap + 2) * self.window.H
        self.qx = np.zeros(n, dtype=np.int64)
        self.qy = np.zeros(n, dtype=np.int64)
        self.qreg = np.zeros(2, dtype=np.int64)

    @property
    def queue(self) -> list:
        return [(int(self.qx[i]), int(self.qy[i]))
                for i in range(self.qreg[0], self.qreg[1])]

    def seed_queue(self, coords):
        for i, (x, y) in enumerate(coords):
            self.qx[i] = x
            self.qy[i] = y
        self.qreg[0] = 0
        self.qreg[1] = len(coords)


def gbfs_search(w: NodeWindow, root, state: SearchState | None = None,
                mark_exits: bool = False, strict: bool = False) -> SearchOutcome:
    """Global search of the live block from the given root.

    The root must lie in the leftmost live column (it is the current path
    head). Returns the exit set; the state's queue (a temporary one if no
    state is passed) is left holding the exits.
    """
    rx, ry = root
    if not w.contains(rx, ry):
        raise IndexError(f"root {root} outside live window")
    if rx != w.tail_x:
        raise ValueError(f"root {root} not in the leftmost live column")
    st = state or SearchState(w)
    n_exits, n_right = k.gbfs_search(
        w.u8, w.dist, w.pred, w.theta, w.span, w.counters,
        st.qx, st.qy, st.qreg, rx, ry, 1 if mark_exits else 0,
        1 if strict else 0)
    return SearchOutcome(exit_nodes=st.queue, right_nodes_found=n_right > 0)


def reverse_pass(w: NodeWindow, exits, write_succ_from_x: int | None = None) -> int:
    """Walk each exit's predecessor chain, writing successors and flagging
    right nodes. Returns the number of chains that produced a right node."""
    if write_succ_from_x is None:
        write_succ_from_x = w.tail_x
    n = 0
    for (x, y) in exits:
        n += k.reverse_walk(w.u8, w.dist, w.pred, w.span, w.counters,
                            x, y, write_succ_from_x)
    return n


def ibfs_step(w: NodeWindow, state: SearchState,
              strict: bool = False) -> SearchOutcome:
    """One incremental search cycle; raises SearchDeath on an empty queue."""
    status, n_exits, n_right, n_pruned = k.ibfs_step(
        w.u8, w.dist, w.pred, w.theta, w.span, w.counters,
        state.qx, state.qy, state.qreg, 1 if strict else 0)
    if status != 0:
        raise SearchDeath("no exit nodes survived the previous cycle")
    return SearchOutcome(exit_nodes=state.queue, right_nodes_found=n_right > 0,
                         pruned=n_pruned)


def prune_failed_paths(w: NodeWindow) -> int:
    """Detach successor branches leading only to failed exit nodes.

    Part of ibfs_step; exposed separately for direct testing. Returns the
    number of successor deletions.
    """
    return int(k.prune_failed_paths(w.u8, w.dist, w.pred, w.span, w.counters))


def collect_exit_nodes(w: NodeWindow, state: SearchState | None = None,
                       mark_inaccessible: bool = False) -> list:
    """Queue up the visited nodes of the rightmost column, top to bottom."""
    st = state or SearchState(w)
    k.collect_exit_nodes(w.u8, w.dist, w.span, w.counters,
                         st.qx, st.qy, st.qreg, 1 if mark_inaccessible else 0)
    return st.queue
