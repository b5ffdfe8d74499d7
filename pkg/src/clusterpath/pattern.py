"""Path extension, measurement-pattern mapping and byproduct tracking.

A one-qubit gate is mapped onto the logical path a_0, a_1, ... through the
cluster. Every on-path qubit is measured in the xy-plane at a base angle
theta (0 for plain wire segments) with an adaptive sign; every off-path
neighbor of the path is cut out with a computational-basis measurement.
Outcomes fold into the running byproduct pair (x, z) through per-node local
rules:

* on-path node a_n: outcome flips z when n is even, x when n is odd, stored
  as the rule pair (r, s) = (n mod 2, (n+1) mod 2) applied as
  (x, z) -> (x XOR m*r, z XOR m*s);
* cut-out node b: rule pair equal to the XOR of the rules of all adjacent
  on-path nodes, accumulated adjacency by adjacency as the path grows;
* adaptive setting of a_n: s = r*x XOR s*z from the rule pair R_s, which is
  (1, 0) at even n and (0, 1) at odd n for angle-carrying nodes.

Program angles are placed on nodes that open a fresh rightmost column (see
_kernels.generate_pattern); wire nodes carry theta = 0, making their setting
irrelevant, which is what keeps the pattern executable column by column on
paths that wander.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels as k
from .window import NodeWindow, K_CUT, K_NONE, K_PATH


class NoRightNode(Exception):
    """No successor chain from the head reaches a right node."""


@dataclass
class GateProgram:
    """Sequence of logical rotation angles phi_0, phi_1, ... (radians).

    Consumed in order, alternating R_z (even index) and R_x (odd index)
    factors; an exhausted or empty program leaves pure wire measurements
    (the identity gate).
    """

    angles: np.ndarray

    @classmethod
    def identity(cls) -> "GateProgram":
        return cls(angles=np.zeros(0, dtype=np.float64))

    @classmethod
    def random(cls, n: int, rng) -> "GateProgram":
        return cls(angles=rng.uniform(-np.pi, np.pi, size=n))


@dataclass
class PatternRules:
    """Local measurement rules of one node, as stored in the ring buffer."""

    z_flag: bool
    theta: float = 0.0
    r_setting: tuple = (0, 0)
    r_byproduct: tuple = (0, 0)


@dataclass
class PathState:
    """The evolving logical path, its registers and its byproduct pair."""

    capacity: int
    px: np.ndarray = field(init=False)
    py: np.ndarray = field(init=False)
    preg: np.ndarray = field(init=False)

    def __post_init__(self):
        self.px = np.zeros(self.capacity, dtype=np.int64)
        self.py = np.zeros(self.capacity, dtype=np.int64)
        self.preg = np.zeros(k.N_PREG, dtype=np.int64)

    @classmethod
    def start_at(cls, root, capacity: int = 4096) -> "PathState":
        p = cls(capacity)
        p.px[0], p.py[0] = root
        p.preg[k.P_LEN] = 1
        p.preg[k.P_RUNMAX] = root[0]
        return p

    @property
    def nodes(self) -> list:
        return [(int(self.px[i]), int(self.py[i])) for i in range(len(self))]

    def __len__(self) -> int:
        return int(self.preg[k.P_LEN])

    @property
    def head(self):
        n = len(self)
        return (int(self.px[n - 1]), int(self.py[n - 1]))

    @property
    def byproduct(self) -> tuple:
        return (int(self.preg[k.P_BX]), int(self.preg[k.P_BZ]))

    @byproduct.setter
    def byproduct(self, xz):
        self.preg[k.P_BX], self.preg[k.P_BZ] = xz

    @property
    def depth(self) -> int:
        """Deepest column reached: 0 until the first extension succeeds,
        then one past the maximum committed path column."""
        if len(self) <= 1:
            return 0
        return int(self.preg[k.P_RUNMAX]) + 1


def extend_path(w: NodeWindow, path: PathState, seed: int | None = None,
                strict: bool = False) -> list:
    """Extend the path from its head to the next right node.

    Walks successor links, choosing uniformly at random at branch points
    (backtracking out of dead ends). In strict mode, successors that could
    not physically join the path are skipped. Returns the list of appended
    coordinates; raises NoRightNode when no usable chain reaches a right
    node (the trial ends there).
    """
    if seed is not None:
        k.seed_choice_stream(seed)
    before = len(path)
    ok = k.extend_path(w.u8, w.dist, w.pred, w.theta, w.span, w.counters,
                       path.px, path.py, path.preg, 1 if strict else 0)
    if ok == 0:
        raise NoRightNode(f"no extension from head {path.head}")
    return path.nodes[before:]


def generate_pattern(w: NodeWindow, path: PathState, seg_start: int,
                     prog: GateProgram):
    """Map pattern rules onto path nodes seg_start.. and their neighbors."""
    k.generate_pattern(w.u8, w.dist, w.pred, w.theta, w.span, w.counters,
                       path.px, path.py, path.preg, seg_start, prog.angles)


def rules_at(w: NodeWindow, c) -> PatternRules | None:
    """Read back the stored pattern rules of a node (None when unruled)."""
    r = w.record(c)
    kind = r.kind
    if kind == K_NONE:
        return None
    if kind == K_CUT:
        return PatternRules(z_flag=True, r_byproduct=r.byproduct_rule)
    return PatternRules(z_flag=False, theta=r.theta,
                        r_setting=r.setting_rule,
                        r_byproduct=r.byproduct_rule)


def adaptive_setting(rules: PatternRules, byproduct) -> int:
    """Adaptive sign bit s = r*x XOR s*z for an xy-plane measurement."""
    if rules.z_flag:
        raise ValueError("computational-basis nodes have no adaptive setting")
    r, s = rules.r_setting
    x, z = byproduct
    return (r & x) ^ (s & z)


def update_byproduct(byproduct, m: int, r_byproduct) -> tuple:
    """Fold outcome m through the rule pair: (x^m*r, z^m*s)."""
    x, z = byproduct
    r, s = r_byproduct
    return (x ^ (m & r), z ^ (m & s))


def basis_to_modulator(rules: PatternRules, s: int) -> tuple:
    """Modulator angle pair (alpha, beta) realizing the node's measurement.

    xy-plane at angle (-1)^s * theta maps to (pi/2 - (-1)^s theta, pi/2);
    the computational basis is encoded as (0, 0).
    """
    if rules.z_flag:
        return (0.0, 0.0)
    sign = -1.0 if s else 1.0
    return (np.pi / 2 - sign * rules.theta, np.pi / 2)


def measurement_order(w: NodeWindow, col: int, path: PathState) -> list:
    """Processing order for measuring out one column.

    Computational-basis qubits (cut-outs and unruled nodes) come first, top
    to bottom; on-path qubits follow in path order, so that an adaptive
    setting never reads a byproduct bit that this column has yet to produce.
    Returns [(y, kind, path_index-or-None), ...].
    """
    s = w.slot(col)
    order = [(y, int(w.kind[s, y]), None)
             for y in range(w.H) if w.kind[s, y] != K_PATH]
    start = int(path.preg[k.P_MEAS])
    for i in range(start, len(path)):
        if path.px[i] == col:
            order.append((int(path.py[i]), K_PATH, i))
    return order


def measure_column(w: NodeWindow, col: int, outcomes, path: PathState,
                   retire: bool = True) -> list:
    """Process one column's measurement outcomes into the byproduct pair.

    `outcomes` is called as outcomes(x, y, kind, s_bit) and must return the
    measurement outcome bit; the classical harness draws random bits, the
    quantum harness measures the simulator state. Outcomes of
    computational-basis qubits adjacent to an uncommitted live right
    neighbor leave a pending flip on that neighbor; on-path outcomes apply
    their own pending flip before folding through their byproduct rule.
    Cut-out rule contributions accumulated only during the current cycle's
    pattern generation belong to later path slots than any angle-carrying
    node of this column, so their fold is deferred until after the on-path
    pass. Returns [(x, y, kind, s_bit, m), ...] in processing order.
    """
    if col != w.tail_x:
        raise ValueError(f"column {col} is not the leftmost live column")
    s = w.slot(col)
    log = []
    late = []
    bx, bz = int(path.preg[k.P_BX]), int(path.preg[k.P_BZ])
    for (y, kind, idx) in measurement_order(w, col, path):
        if kind == K_PATH:
            rs = int(w.rset[s, y])
            sbit = ((rs & 1) & bx) ^ (((rs >> 1) & 1) & bz)
            m = int(outcomes(col, y, kind, sbit))
            m_eff = m ^ int(w.oflip[s, y])
            rb = int(w.rbyp[s, y])
            bx ^= m_eff & (rb & 1)
            bz ^= m_eff & ((rb >> 1) & 1)
            w.counters[k.C_READS] += 2
        else:
            m = int(outcomes(col, y, kind, 0))
            sbit = 0
            if kind == K_CUT:
                rb = int(w.rbyp[s, y]) ^ int(w.rblate[s, y])
                bx ^= m & (rb & 1)
                bz ^= m & ((rb >> 1) & 1)
                if w.rblate[s, y]:
                    late.append((y, m))
                w.counters[k.C_READS] += 1
            if m and col + 1 <= w.head_x and w.horiz[w.slot(col + 1), y]:
                if w.kind[w.slot(col + 1), y] == K_NONE:
                    w.oflip[w.slot(col + 1), y] ^= 1
                    w.counters[k.C_FLAG] += 1
        log.append((col, y, kind, sbit, m))
    for (y, m) in late:
        rb = int(w.rblate[s, y])
        bx ^= m & (rb & 1)
        bz ^= m & ((rb >> 1) & 1)
    path.preg[k.P_BX], path.preg[k.P_BZ] = bx, bz
    if retire:
        w.retire_tail()
        i = int(path.preg[k.P_MEAS])
        while i < len(path) and path.px[i] < w.tail_x:
            i += 1
        path.preg[k.P_MEAS] = i
    return log
