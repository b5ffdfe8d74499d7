"""Latency budgets from memory-operation counts.

All classical work of one cycle must finish within the photonic clock period
T_p. With memory accesses performed sequentially, an average of W_pred
predecessor writes per cycle caps the tolerable write latency at
t_write = T_p / W_pred. In the high edge-probability limit the global search
writes approach 2*B*H per cycle (the block is touched once by the clearing
step and once by the forward pass), giving the closed form
t_write ~ T_p / (2*B*H); the incremental search approaches H.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass


def write_time_bound(T_p: float, W_pred: float) -> float:
    """Maximum acceptable memory write time T_p / W_pred (seconds)."""
    if W_pred <= 0:
        raise ValueError("predecessor-write count must be positive")
    if T_p <= 0:
        raise ValueError("clock period must be positive")
    return T_p / W_pred


def gbfs_asymptotic_bound(T_p: float, B: int, H: int) -> float:
    """High edge-probability limit of the global-search write budget."""
    if B < 1 or H < 1:
        raise ValueError("block width and height must be at least 1")
    return T_p / (2.0 * B * H)


def clock_floor(t_write_available: float, W_pred: float) -> float:
    """Minimum photonic clock period that a given write latency supports."""
    if t_write_available <= 0 or W_pred <= 0:
        raise ValueError("inputs must be positive")
    return W_pred * t_write_available


@dataclass(frozen=True)
class TimingReport:
    """Write-latency budget of one sweep point.

    W_pred_mean is the mean predecessor writes per cycle (what the budget is
    based on); W_pred_max is the worst cycle seen, reported as well because
    hard deadlines are governed by the worst case.
    """

    algorithm: str
    p: float
    B: int
    H: int
    T_p: float
    W_pred_mean: float
    W_pred_max: float

    @property
    def t_write(self) -> float:
        return write_time_bound(self.T_p, self.W_pred_mean)

    @property
    def t_write_worst(self) -> float:
        return write_time_bound(self.T_p, self.W_pred_max)


CSV_HEADER = ["algorithm", "p", "B", "H", "T_p", "W_pred_mean", "W_pred_max",
              "t_write"]


def reports_to_csv(reports) -> str:
    """Serialize timing reports as CSV rows under the standard header."""
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(CSV_HEADER)
    for r in reports:
        writer.writerow([r.algorithm, r.p, r.B, r.H, r.T_p,
                         f"{r.W_pred_mean:.6g}", f"{r.W_pred_max:.6g}",
                         f"{r.t_write:.6e}"])
    return buf.getvalue()
