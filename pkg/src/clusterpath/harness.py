"""Cycle-by-cycle driver of the control loop, in Python.

Replays exactly the kernel sequence of experiment.run_trial (same RNG
streams, same order) but one cycle at a time, so callers can inspect state
between cycles or substitute the measurement step; the trace mode and the
quantum verification harness both build on this.
"""

from __future__ import annotations

import numpy as np

from . import _kernels as k
from .experiment import ExperimentConfig, TERMINATIONS
from .lattice import ColumnEdges, LatticeParams, edge_stream, trial_seeds
from .pattern import GateProgram, NoRightNode, PathState, extend_path, \
    generate_pattern
from .search import IBFS, SearchDeath, SearchState, gbfs_search, ibfs_step
from .window import NodeWindow


class ControlRun:
    """One trial of the control system, stepped one photonic cycle at a time."""

    def __init__(self, cfg: ExperimentConfig, index: int = 0,
                 prog: GateProgram | None = None):
        self.cfg = cfg
        params = LatticeParams(H=cfg.H, p=cfg.p, W=cfg.W)
        edge_ss, choice_seed = trial_seeds(cfg.master_seed, index)
        self.ve, self.he = edge_stream(edge_ss, params)
        k.seed_choice_stream(choice_seed)
        self.window = NodeWindow(cfg.H, cfg.B)
        self.state = SearchState(self.window, algorithm=cfg.algorithm)
        self.path = PathState.start_at((0, cfg.H // 2),
                                       capacity=cfg.W * cfg.H + cfg.H + 4)
        self.prog = prog if prog is not None else GateProgram.identity()
        self.cycle = 0
        self.termination: str | None = None
        self.per_cycle: list = []
        for x in range(cfg.B):
            self._push(x)

    # -- pieces ---------------------------------------------------------------

    def _push(self, x: int):
        edges = ColumnEdges(x=x,
                            vertical=self.ve[x, : self.cfg.H - 1],
                            horizontal=self.he[x])
        self.window.push_column(edges)

    def measure_leftmost(self):
        """Default measurement: random outcomes from the trial's choice
        stream, identical to the compiled trial. Subclasses override."""
        k.measure_column_classical(
            self.window.u8, self.window.dist, self.window.pred,
            self.window.theta, self.window.span, self.window.counters,
            self.path.px, self.path.py, self.path.preg)

    @property
    def depth(self) -> int:
        return min(self.path.depth, self.cfg.W)

    # -- the cycle ------------------------------------------------------------

    def step_cycle(self) -> bool:
        """Run one photonic cycle; returns False once the trial is over."""
        if self.termination is not None:
            return False
        c = self.cycle + 1
        w = self.window
        if c > 1:
            nxt = self.cfg.B + c - 2
            if nxt < self.cfg.W:
                self._push(nxt)
            elif w.tail_x + 1 > w.head_x:
                self.termination = TERMINATIONS[k.T_REACHED_END]
                return False
        self.cycle = c
        before = w.counters.copy()
        try:
            if self.cfg.algorithm != IBFS or c == 1:
                gbfs_search(w, self.path.head, self.state,
                            mark_exits=self.cfg.algorithm == IBFS,
                            strict=self.cfg.strict)
            else:
                ibfs_step(w, self.state, strict=self.cfg.strict)
            seg = 0 if c == 1 else len(self.path)
            extend_path(w, self.path, strict=self.cfg.strict)
            generate_pattern(w, self.path, seg, self.prog)
            self.measure_leftmost()
        except SearchDeath:
            self.termination = TERMINATIONS[k.T_SEARCH_DEATH]
        except NoRightNode:
            self.termination = TERMINATIONS[k.T_NO_RIGHT_NODE]
        self.per_cycle.append(w.counters - before)
        return self.termination is None
