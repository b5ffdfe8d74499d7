"""Ring buffer of live cluster columns with instrumented node records.

The window owns B+1 column slots. A column's slot is its global index modulo
the capacity, so a live column is never relocated: pushing a new column only
installs data at head+1 (evicting the tail when full) and leaves every other
slot untouched. Each slot stores the column's edge bits plus one fixed-layout
record per node: search data (distance, predecessor, successors, right-node
and inaccessible flags) and pattern data (measurement kind, base angle,
setting rule, byproduct rule, pending outcome flip).

Every record mutation and read made through this module or the search kernels
bumps a MemCounters field. Counting conventions:

* push_column initializes H fresh records, counted as H resets.
* clear_all resets the search fields of every live record and counts, per
  node, one reset, one predecessor write and one distance write - the clear
  is unconditional, so a second clear in a row counts the same.
* field writes count toward their own counter; pattern-rule and flag fields
  (kind, theta, setting/byproduct rules, right/inaccessible flags, pending
  flips) all count as flag writes.
* any record read counts as a node read.

The heavy lifting (push, clear, searches, extension, pattern generation) is
implemented once, in the compiled kernels of _kernels; this module provides
the state container and a record-level instrumented view used by tests and
the quantum harness.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels as k
from .lattice import DX, DY, ColumnEdges

# MemCounters slot indices (shared with the kernels)
C_RESETS = k.C_RESETS
C_DIST = k.C_DIST
C_PRED = k.C_PRED
C_SUCC = k.C_SUCC
C_FLAG = k.C_FLAG
C_READS = k.C_READS
N_COUNTERS = 6

# pattern kinds
K_NONE = k.K_NONE
K_PATH = k.K_PATH
K_CUT = k.K_CUT

NO_PRED = -1
UNSET = -1


@dataclass
class MemCounters:
    """Per-cycle tallies of instrumented memory operations."""

    resets: int = 0
    distance_writes: int = 0
    predecessor_writes: int = 0
    successor_writes: int = 0
    flag_writes: int = 0
    node_reads: int = 0

    @classmethod
    def from_array(cls, a) -> "MemCounters":
        return cls(int(a[C_RESETS]), int(a[C_DIST]), int(a[C_PRED]),
                   int(a[C_SUCC]), int(a[C_FLAG]), int(a[C_READS]))

    def total_writes(self) -> int:
        return (self.resets + self.distance_writes + self.predecessor_writes
                + self.successor_writes + self.flag_writes)


class NodeWindow:
    """Fixed-capacity window of live columns and their node records."""

    def __init__(self, H: int, B: int):
        if B < 2:
            raise ValueError("block width must be at least 2")
        if H < 2:
            raise ValueError("cluster height must be at least 2")
        self.H = H
        self.B = B
        self.cap = B + 1
        self.u8 = np.zeros((k.N_FIELDS, self.cap, H), dtype=np.uint8)
        self.dist = np.full((self.cap, H), UNSET, dtype=np.int32)
        self.pred = np.full((self.cap, H), NO_PRED, dtype=np.int8)
        self.theta = np.zeros((self.cap, H), dtype=np.float64)
        # span[0] = tail_x (oldest live), span[1] = head_x (newest)
        self.span = np.array([0, -1], dtype=np.int64)
        self.counters = np.zeros(N_COUNTERS, dtype=np.int64)

    # named views into the packed byte fields
    @property
    def vert(self):
        return self.u8[k.F_VERT]

    @property
    def horiz(self):
        return self.u8[k.F_HORIZ]

    @property
    def succ(self):
        return self.u8[k.F_SUCC]

    @property
    def right(self):
        return self.u8[k.F_RIGHT]

    @property
    def inacc(self):
        return self.u8[k.F_INACC]

    @property
    def kind(self):
        return self.u8[k.F_KIND]

    @property
    def rset(self):
        return self.u8[k.F_RSET]

    @property
    def rbyp(self):
        return self.u8[k.F_RBYP]

    @property
    def oflip(self):
        return self.u8[k.F_OFLIP]

    @property
    def rblate(self):
        return self.u8[k.F_RBLATE]

    # -- span bookkeeping ---------------------------------------------------

    @property
    def tail_x(self) -> int:
        return int(self.span[0])

    @property
    def head_x(self) -> int:
        return int(self.span[1])

    @property
    def n_live(self) -> int:
        return self.head_x - self.tail_x + 1

    def slot(self, x: int) -> int:
        return x % self.cap

    def contains(self, x: int, y: int = 0) -> bool:
        return self.tail_x <= x <= self.head_x and 0 <= y < self.H

    # -- operations ----------------------------------------------------------

    def push_column(self, edges: ColumnEdges):
        """Install a new column at head+1; evict the tail if full.

        Returns the evicted global column index, or None.
        """
        ve = np.zeros(self.H, dtype=np.uint8)
        ve[: self.H - 1] = np.asarray(edges.vertical, dtype=np.uint8)
        he = np.asarray(edges.horizontal, dtype=np.uint8)
        ev = k.push_column(self.u8, self.dist, self.pred, self.theta,
                           self.span, self.counters, ve, he)
        return None if ev < 0 else int(ev)

    def retire_tail(self) -> int:
        """Drop the oldest live column (after it has been measured out)."""
        if self.n_live < 1:
            raise IndexError("window is empty")
        x = self.tail_x
        self.span[0] += 1
        return x

    def clear_all(self):
        """Unconditionally reset the search fields of every live record.

        Pattern fields survive; they belong to columns that still have to be
        measured out.
        """
        if self.n_live > 0:
            k.clear_all(self.u8, self.dist, self.pred, self.span,
                        self.counters)

    def record(self, c: tuple[int, int]) -> "NodeRecord":
        """Instrumented accessor for the record at coordinate c."""
        x, y = c
        if not self.contains(x, y):
            raise IndexError(f"coordinate {c} outside live window")
        return NodeRecord(self, x, y)

    def has_edge(self, x: int, y: int, d: int) -> bool:
        """Edge presence from (x, y) toward direction d."""
        nx, ny = x + int(DX[d]), y + int(DY[d])
        if ny < 0 or ny >= self.H or not self.contains(nx):
            return False
        s = self.slot(x)
        if d == 0:
            return bool(self.vert[s, y - 1])
        if d == 2:
            return bool(self.vert[s, y])
        if d == 1:
            return bool(self.horiz[self.slot(nx), y])
        return bool(self.horiz[s, y])

    def snapshot_counters(self) -> MemCounters:
        return MemCounters.from_array(self.counters)

    def reset_counters(self):
        self.counters[:] = 0

    def dump(self) -> str:
        """Debug dump, one line per live node: x,y,d,pred,succs,right,inacc.

        Coordinates inside the pred/succs fields are rendered x:y (and
        successor sets joined with |) so every line splits into exactly
        seven comma-separated fields.
        """
        lines = []
        for x in range(self.tail_x, self.head_x + 1):
            s = self.slot(x)
            for y in range(self.H):
                p = int(self.pred[s, y])
                pred = "-" if p == NO_PRED else f"{x + DX[p]}:{y + DY[p]}"
                succs = "|".join(
                    f"{x + DX[d]}:{y + DY[d]}"
                    for d in range(4)
                    if self.succ[s, y] & (1 << d)
                )
                lines.append(
                    f"{x},{y},{int(self.dist[s, y])},{pred},{succs or '-'},"
                    f"{int(self.right[s, y])},{int(self.inacc[s, y])}"
                )
        return "\n".join(lines)


class NodeRecord:
    """Counter-instrumented view of one node record.

    Every property read counts as a node read and every assignment counts
    toward the matching write counter.
    """

    __slots__ = ("_w", "x", "y", "_s")

    def __init__(self, w: NodeWindow, x: int, y: int):
        self._w = w
        self.x = x
        self.y = y
        self._s = w.slot(x)

    def _read(self):
        self._w.counters[C_READS] += 1

    def _dir_to(self, c) -> int:
        dx, dy = c[0] - self.x, c[1] - self.y
        for d in range(4):
            if dx == DX[d] and dy == DY[d]:
                return d
        raise ValueError(f"{c} is not lattice-adjacent to ({self.x},{self.y})")

    # search fields
    @property
    def distance(self):
        self._read()
        v = int(self._w.dist[self._s, self.y])
        return None if v == UNSET else v

    @distance.setter
    def distance(self, v):
        self._w.dist[self._s, self.y] = UNSET if v is None else v
        self._w.counters[C_DIST] += 1

    @property
    def predecessor(self):
        self._read()
        d = int(self._w.pred[self._s, self.y])
        if d == NO_PRED:
            return None
        return (self.x + int(DX[d]), self.y + int(DY[d]))

    @predecessor.setter
    def predecessor(self, c):
        if c is None:
            self._w.pred[self._s, self.y] = NO_PRED
        else:
            self._w.pred[self._s, self.y] = self._dir_to(c)
        self._w.counters[C_PRED] += 1

    @property
    def successors(self):
        self._read()
        m = int(self._w.succ[self._s, self.y])
        return {
            (self.x + int(DX[d]), self.y + int(DY[d]))
            for d in range(4)
            if m & (1 << d)
        }

    def add_successor(self, c):
        self._w.succ[self._s, self.y] |= np.uint8(1 << self._dir_to(c))
        self._w.counters[C_SUCC] += 1

    def remove_successor(self, c):
        self._w.succ[self._s, self.y] &= np.uint8(~(1 << self._dir_to(c)) & 0xF)
        self._w.counters[C_SUCC] += 1

    @property
    def right_node(self):
        self._read()
        return bool(self._w.right[self._s, self.y])

    @right_node.setter
    def right_node(self, v):
        self._w.right[self._s, self.y] = 1 if v else 0
        self._w.counters[C_FLAG] += 1

    @property
    def inaccessible(self):
        self._read()
        return bool(self._w.inacc[self._s, self.y])

    @inaccessible.setter
    def inaccessible(self, v):
        self._w.inacc[self._s, self.y] = 1 if v else 0
        self._w.counters[C_FLAG] += 1

    # pattern fields
    @property
    def kind(self):
        self._read()
        return int(self._w.kind[self._s, self.y])

    @kind.setter
    def kind(self, v):
        self._w.kind[self._s, self.y] = v
        self._w.counters[C_FLAG] += 1

    @property
    def theta(self):
        self._read()
        return float(self._w.theta[self._s, self.y])

    @theta.setter
    def theta(self, v):
        self._w.theta[self._s, self.y] = v
        self._w.counters[C_FLAG] += 1

    @property
    def setting_rule(self):
        self._read()
        m = int(self._w.rset[self._s, self.y])
        return (m & 1, (m >> 1) & 1)

    @setting_rule.setter
    def setting_rule(self, rs):
        self._w.rset[self._s, self.y] = (rs[0] & 1) | ((rs[1] & 1) << 1)
        self._w.counters[C_FLAG] += 1

    @property
    def byproduct_rule(self):
        self._read()
        m = int(self._w.rbyp[self._s, self.y])
        return (m & 1, (m >> 1) & 1)

    @byproduct_rule.setter
    def byproduct_rule(self, rs):
        self._w.rbyp[self._s, self.y] = (rs[0] & 1) | ((rs[1] & 1) << 1)
        self._w.counters[C_FLAG] += 1

    @property
    def outcome_flip(self):
        self._read()
        return int(self._w.oflip[self._s, self.y])

    @outcome_flip.setter
    def outcome_flip(self, v):
        self._w.oflip[self._s, self.y] = v & 1
        self._w.counters[C_FLAG] += 1

    def clear(self):
        """Reset the search fields of this record (counting convention of
        clear_all, applied to a single node)."""
        self._w.dist[self._s, self.y] = UNSET
        self._w.pred[self._s, self.y] = NO_PRED
        self._w.succ[self._s, self.y] = 0
        self._w.right[self._s, self.y] = 0
        self._w.inacc[self._s, self.y] = 0
        self._w.counters[C_RESETS] += 1
        self._w.counters[C_PRED] += 1
        self._w.counters[C_DIST] += 1
