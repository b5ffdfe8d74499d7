"""Emulation of real-time classical control for photonic cluster computing.

The package finds one-qubit-gate paths through incomplete 2D cluster states
under a ring-buffer memory model, counts the memory operations each photonic
cycle requires, converts the counts into write-latency budgets, and verifies
the generated measurement patterns with a small resizing statevector
simulator.
"""

from .lattice import ColumnEdges, LatticeParams, edge_stream, generate_column, \
    neighbors
from .window import MemCounters, NodeRecord, NodeWindow
from .search import SearchOutcome, SearchState, SearchDeath, gbfs_search, \
    ibfs_step, prune_failed_paths, collect_exit_nodes, reverse_pass
from .pattern import GateProgram, NoRightNode, PathState, PatternRules, \
    adaptive_setting, basis_to_modulator, extend_path, generate_pattern, \
    measure_column, update_byproduct
from .timing import TimingReport, clock_floor, gbfs_asymptotic_bound, \
    write_time_bound
from .experiment import ExperimentConfig, TrialResult, find_failure_case, \
    run_point, run_sweep, run_trial, sweep_to_csv, trial_trace
from .harness import ControlRun

__all__ = [
    "ColumnEdges", "LatticeParams", "edge_stream", "generate_column",
    "neighbors", "MemCounters", "NodeRecord", "NodeWindow", "SearchOutcome",
    "SearchState", "SearchDeath", "gbfs_search", "ibfs_step",
    "prune_failed_paths", "collect_exit_nodes", "reverse_pass",
    "GateProgram", "NoRightNode", "PathState", "PatternRules",
    "adaptive_setting", "basis_to_modulator", "extend_path",
    "generate_pattern", "measure_column", "update_byproduct",
    "TimingReport", "clock_floor", "gbfs_asymptotic_bound",
    "write_time_bound", "ExperimentConfig", "TrialResult",
    "find_failure_case", "run_point", "run_sweep", "run_trial",
    "sweep_to_csv", "trial_trace", "ControlRun",
]

__version__ = "0.1.0"
