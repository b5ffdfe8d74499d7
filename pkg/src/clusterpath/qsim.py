"""Resizing statevector simulation and column-by-column verification.

The simulator holds at most two live columns of cluster qubits: each round a
new column is created in |+> (the path-start qubit in the injected input
state), entangled with controlled-Z gates along the present edges, and then
the leftmost column is measured out according to the stored local pattern
rules. That is enough to execute arbitrarily long patterns, since
measurements commute through the entangling of later columns.

Verification runs on a copy of the state at each column boundary: every
qubit except the current path end is measured out (computational basis for
everything that is not part of the executed pattern prefix, the stored rules
for the prefix itself), the accumulated byproduct corrections are applied to
the remaining qubit, and its fidelity against an independently evolved
reference qubit is returned. The reference and the correction pair are
recomputed from first principles (path, edges and raw outcomes), so the
check genuinely exercises the controller's rule algebra: a wrong adaptive
setting or byproduct fold in the main rounds shows up as fidelity loss.

Modulator noise enters as a Gaussian voltage error on the xy-plane angle,
theta -> theta + pi * eps / V_pi with eps ~ N(0, sigma_V^2), drawn
independently for every main-round measurement.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels as k
from .experiment import ExperimentConfig
from .harness import ControlRun
from .pattern import GateProgram, measure_column
from .window import K_CUT, K_NONE, K_PATH

SQ2 = 1.0 / np.sqrt(2.0)
H_MAT = np.array([[SQ2, SQ2], [SQ2, -SQ2]], dtype=complex)
X_MAT = np.array([[0, 1], [1, 0]], dtype=complex)
Z_MAT = np.array([[1, 0], [0, -1]], dtype=complex)
PLUS = np.array([SQ2, SQ2], dtype=complex)


def rz(theta: float) -> np.ndarray:
    return np.array([[np.exp(-0.5j * theta), 0], [0, np.exp(0.5j * theta)]],
                    dtype=complex)


def rx(theta: float) -> np.ndarray:
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)


@dataclass
class NoiseModel:
    """Gaussian white noise on the modulator voltage."""

    sigma_V: float
    V_pi: float = 1.0

    def __post_init__(self):
        if self.sigma_V < 0:
            raise ValueError("noise level must be nonnegative")


def noisy_angle(theta: float, noise: NoiseModel | None, rng) -> float:
    """Measurement angle after modulator voltage noise."""
    if noise is None or noise.sigma_V == 0:
        return theta
    eps = rng.normal(0.0, noise.sigma_V)
    return theta + np.pi * eps / noise.V_pi


class ZeroProbabilityBranch(Exception):
    """A forced measurement outcome had no amplitude."""


class ClusterSimulator:
    """Statevector over the live cluster qubits, grown column by column."""

    def __init__(self, H: int):
        self.H = H
        self.max_qubits = 2 * H + 1
        self.amps = np.ones(1, dtype=complex)
        self.labels: list = []

    @property
    def n_qubits(self) -> int:
        return len(self.labels)

    def copy(self) -> "ClusterSimulator":
        c = ClusterSimulator(self.H)
        c.amps = self.amps.copy()
        c.labels = list(self.labels)
        return c

    def norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.amps) ** 2)))

    def index_of(self, coord) -> int:
        return self.labels.index(tuple(coord))

    # -- growth ---------------------------------------------------------------

    def add_column(self, x: int, vertical, horizontal,
                   input_state: np.ndarray | None = None,
                   input_row: int | None = None):
        """Append column x: H new qubits in |+> (the input row, if given, in
        the injected state), then CZ along present vertical edges and along
        horizontal edges to the previous column while it is still live."""
        if self.n_qubits + self.H > self.max_qubits:
            raise MemoryError("more than two columns would be live")
        for y in range(self.H):
            q = PLUS
            if input_row is not None and y == input_row:
                q = np.asarray(input_state, dtype=complex)
                q = q / np.linalg.norm(q)
            self.amps = np.kron(self.amps, q)
            self.labels.append((x, y))
        for y in range(self.H - 1):
            if vertical[y]:
                self.cz((x, y), (x, y + 1))
        if horizontal is not None:
            for y in range(self.H):
                if horizontal[y] and (x - 1, y) in self.labels:
                    self.cz((x - 1, y), (x, y))

    def cz(self, a, b):
        n = self.n_qubits
        i, j = self.index_of(a), self.index_of(b)
        t = self.amps.reshape((2,) * n)
        sl = [slice(None)] * n
        sl[i] = 1
        sl[j] = 1
        t[tuple(sl)] *= -1.0
        self.amps = t.reshape(-1)

    def apply_single(self, coord, u2: np.ndarray):
        n = self.n_qubits
        i = self.index_of(coord)
        t = np.moveaxis(self.amps.reshape((2,) * n), i, -1)
        t = t @ np.asarray(u2, dtype=complex).T
        self.amps = np.moveaxis(t, -1, i).reshape(-1)

    # -- measurement ----------------------------------------------------------

    def measure(self, coord, basis, rng=None, forced: int | None = None) -> int:
        """Projective measurement; the qubit is removed afterwards.

        basis is ("z",) for the computational basis or ("xy", phi) for the
        xy-plane at angle phi (outcome m projects onto
        (|0> + (-1)^m e^{i phi} |1>)/sqrt(2)).
        """
        n = self.n_qubits
        i = self.index_of(coord)
        t = np.moveaxis(self.amps.reshape((2,) * n), i, 0)
        a0, a1 = t[0], t[1]
        if basis[0] == "z":
            br0, br1 = a0, a1
        else:
            phase = np.exp(-1j * basis[1])
            br0 = (a0 + phase * a1) * SQ2
            br1 = (a0 - phase * a1) * SQ2
        p0 = float(np.sum(np.abs(br0) ** 2))
        p1 = float(np.sum(np.abs(br1) ** 2))
        tot = p0 + p1
        if forced is not None:
            m = int(forced)
        else:
            m = int(rng.random() * tot >= p0)
        pm = (p0, p1)[m]
        if pm / tot < 1e-12:
            raise ZeroProbabilityBranch(f"outcome {m} at {coord}")
        self.amps = ((br0, br1)[m] / np.sqrt(pm)).reshape(-1)
        self.labels.pop(i)
        return m

    def single_qubit_state(self) -> np.ndarray:
        if self.n_qubits != 1:
            raise ValueError("more than one qubit left")
        return self.amps.copy()


def measure_qubit(sim: ClusterSimulator, coord, alpha: float, beta: float,
                  rng=None, forced: int | None = None) -> int:
    """Measure one qubit through the modulator-angle interface.

    beta = pi/2 selects the xy-plane at angle pi/2 - alpha (so a node with
    base angle theta and setting s uses alpha = pi/2 - (-1)^s theta);
    beta = 0 selects the computational basis.
    """
    if abs(beta) < 1e-9:
        return sim.measure(coord, ("z",), rng=rng, forced=forced)
    if abs(beta - np.pi / 2) > 1e-9:
        raise ValueError("modulator beta must be 0 or pi/2")
    return sim.measure(coord, ("xy", np.pi / 2 - alpha), rng=rng, forced=forced)


def prefix_unitary(base_angles) -> np.ndarray:
    """Logical operator of a measured on-path prefix.

    Node i with stored base angle theta_i contributes the factor
    H . R_z(-theta_i), applied in path order; pairs of factors collapse to
    the alternating R_x R_z structure of the implemented gate, and a
    trailing unpaired factor is simply part of the operator.
    """
    u = np.eye(2, dtype=complex)
    for th in base_angles:
        u = H_MAT @ rz(-th) @ u
    return u


@dataclass
class ReferenceQubit:
    """Two-component reference tracking the intended logical state."""

    amplitudes: np.ndarray

    @classmethod
    def from_state(cls, psi) -> "ReferenceQubit":
        v = np.asarray(psi, dtype=complex)
        return cls(v / np.linalg.norm(v))


def reference_evolve(ref: ReferenceQubit, angle_pairs,
                     byproduct=(0, 0)) -> ReferenceQubit:
    """Apply alternating R_z, R_x rotations for consumed angle pairs and the
    byproduct X^x Z^z."""
    v = ref.amplitudes.copy()
    for (phi_z, phi_x) in angle_pairs:
        v = rx(phi_x) @ rz(phi_z) @ v
    x, z = byproduct
    if z:
        v = Z_MAT @ v
    if x:
        v = X_MAT @ v
    return ReferenceQubit(v)


def state_fidelity(a, b) -> float:
    a = np.asarray(a, dtype=complex).reshape(-1)
    b = np.asarray(b, dtype=complex).reshape(-1)
    a = a / np.linalg.norm(a)
    b = b / np.linalg.norm(b)
    return float(np.abs(np.vdot(a, b)) ** 2)


class VerifiedRun(ControlRun):
    """Control trial with a trailing quantum simulation and verification.

    Always runs the strict controller (the simulator cannot execute a path
    that revisits or chords with itself). Each cycle, before the next column
    is entangled, the current boundary is verified on a copy of the state;
    then the leftmost column is measured out with outcomes drawn from the
    simulator, the adaptive settings coming from the controller's own rules
    and running byproduct pair.
    """

    def __init__(self, cfg: ExperimentConfig, index: int = 0,
                 prog: GateProgram | None = None,
                 noise: NoiseModel | None = None,
                 psi_in=None, rng=None, verify: bool = True):
        if not cfg.strict:
            cfg = ExperimentConfig(**{**cfg.__dict__, "strict": True})
        super().__init__(cfg, index, prog=prog)
        self.noise = noise
        self.rng = rng if rng is not None else np.random.default_rng(index)
        self.verify = verify
        self.sim = ClusterSimulator(cfg.H)
        if psi_in is None:
            psi_in = PLUS
        self.psi_in = np.asarray(psi_in, dtype=complex)
        self.psi_in = self.psi_in / np.linalg.norm(self.psi_in)
        self.next_col = 0
        self.index_of_coord: dict = {}
        self.theta_of_index: dict = {}
        self.meas_log: list = []   # (x, y, role, m_raw); role = path index or "z"
        self.fidelities: list = [] # (column, fidelity)

    # -- bookkeeping ----------------------------------------------------------

    def _sync_path_maps(self):
        for i in range(len(self.index_of_coord), len(self.path)):
            c = (int(self.path.px[i]), int(self.path.py[i]))
            self.index_of_coord[c] = i
            self.theta_of_index[i] = float(
                self.window.theta[self.window.slot(c[0]), c[1]])

    def _edge(self, a, b) -> bool:
        (ax, ay), (bx, by) = a, b
        if ax == bx and abs(ay - by) == 1:
            return bool(self.ve[ax, min(ay, by)])
        if ay == by and abs(ax - bx) == 1:
            return bool(self.he[max(ax, bx), ay])
        return False

    def _add_column_to_sim(self, x: int):
        self.sim.add_column(
            x, self.ve[x], self.he[x] if x > 0 else None,
            input_state=self.psi_in if x == 0 else None,
            input_row=self.cfg.H // 2 if x == 0 else None)
        self.next_col = x + 1

    # -- the measurement round -------------------------------------------------

    def measure_leftmost(self):
        c = self.window.tail_x
        self._sync_path_maps()
        if self.next_col == c:
            self._add_column_to_sim(c)
        if self.verify:
            self.fidelities.append((c, self.verify_boundary(c)))
        if self.next_col == c + 1 and c + 1 <= self.window.head_x:
            self._add_column_to_sim(c + 1)

        def outcome(x, y, kind, sbit):
            if kind == K_PATH:
                th = float(self.window.theta[self.window.slot(x), y])
                phi = noisy_angle((-1.0) ** sbit * th, self.noise, self.rng)
                m = self.sim.measure((x, y), ("xy", phi), rng=self.rng)
                self.meas_log.append((x, y, self.index_of_coord[(x, y)], m))
            else:
                m = self.sim.measure((x, y), ("z",), rng=self.rng)
                self.meas_log.append((x, y, "z", m))
            return m

        measure_column(self.window, c, outcome, self.path, retire=True)

    # -- verification ----------------------------------------------------------

    def verify_boundary(self, c: int) -> float:
        """Fidelity of the logical state at the boundary before column c+1.

        The live state holds column c only. On a copy, everything except the
        path end is measured out (plain computational basis for anything not
        in the executed prefix), the byproduct corrections implied by the
        full outcome record are applied to the remaining qubit, and the
        result is compared against the reference evolution of the input.
        """
        nodes = self.path.nodes
        vend = 0
        while vend + 1 < len(nodes) and nodes[vend + 1][0] <= c:
            vend += 1
        out_coord = nodes[vend]
        sim = self.sim.copy()
        log = list(self.meas_log)
        # computational-basis measurements first (they commute with all of it)
        for (x, y) in list(sim.labels):
            if (x, y) == out_coord:
                continue
            idx = self.index_of_coord.get((x, y))
            if idx is not None and idx < vend:
                continue
            m = sim.measure((x, y), ("z",), rng=self.rng)
            log.append((x, y, "z", m))
        # shadow byproduct pair of the prefix, recomputed from raw outcomes
        # independently of the controller's stored rules: on-path outcomes
        # are corrected by the XOR of the computational-basis outcomes of
        # edge-adjacent qubits (such a measurement leaves a Z on its pattern
        # neighbors, and it commutes to before everything else), then folded
        # by path-index parity
        zmap = {(x, y): m for (x, y, role, m) in log if role == "z"}
        bx = bz = 0
        for (x, y, role, m) in log:
            if role == "z" or role >= vend:
                continue
            m_eff = m ^ self._adjacent_flips((x, y), zmap)
            bx ^= (role & 1) & m_eff
            bz ^= ((role + 1) & 1) & m_eff
        # prefix path nodes still live, in path order, with adaptive settings
        # from the shadow pair as it evolves
        for i in range(vend):
            coord = nodes[i]
            if coord not in sim.labels:
                continue
            s = self.window.slot(coord[0])
            rs = int(self.window.rset[s, coord[1]])
            sbit = ((rs & 1) & bx) ^ (((rs >> 1) & 1) & bz)
            th = self.theta_of_index[i]
            m = sim.measure(coord, ("xy", (-1.0) ** sbit * th), rng=self.rng)
            m_eff = m ^ self._adjacent_flips(coord, zmap)
            bx ^= (i & 1) & m_eff
            bz ^= ((i + 1) & 1) & m_eff
        # computational-basis outcomes next to the unmeasured path end leave
        # a Z on it; fold them by the end's parity and correct in its frame
        pend = self._adjacent_flips(out_coord, zmap)
        bx ^= (vend & 1) & pend
        bz ^= ((vend + 1) & 1) & pend
        cx, cz = (bx, bz) if vend % 2 == 0 else (bz, bx)
        if cx:
            sim.apply_single(out_coord, X_MAT)
        if cz:
            sim.apply_single(out_coord, Z_MAT)
        ref = prefix_unitary([self.theta_of_index[i] for i in range(vend)]) \
            @ self.psi_in
        return state_fidelity(sim.single_qubit_state(), ref)

    def _adjacent_flips(self, coord, zmap) -> int:
        x, y = coord
        f = 0
        for (nx, ny) in ((x, y - 1), (x + 1, y), (x, y + 1), (x - 1, y)):
            m = zmap.get((nx, ny))
            if m and self._edge(coord, (nx, ny)):
                f ^= m
        return f


def run_noise_point(H: int, p: float, sigma: float, cols: int, reps: int,
                    algorithm: str = "gbfs", angles: str = "identity",
                    master_seed: int = 404) -> tuple:
    """Mean verified fidelity per column over reps trials at one noise level.

    Returns (columns, mean_fidelity, survivors, sem): arrays of length cols;
    fidelity at each column is averaged over the trials still alive there,
    and sem is the standard error of that mean.
    """
    fsum = np.zeros(cols)
    fsq = np.zeros(cols)
    alive = np.zeros(cols, dtype=np.int64)
    for i in range(reps):
        rng = np.random.default_rng(
            np.random.SeedSequence(entropy=master_seed,
                                   spawn_key=(int(sigma * 1e6), i)))
        prog = (GateProgram.identity() if angles == "identity"
                else GateProgram.random(cols, rng))
        cfg = ExperimentConfig(algorithm=algorithm, H=H, B=4,
                               W=cols + 8, p=p, reps=1,
                               master_seed=master_seed, strict=True)
        noise = NoiseModel(sigma_V=sigma) if sigma > 0 else None
        run = VerifiedRun(cfg, i, prog=prog, noise=noise, rng=rng)
        while run.step_cycle():
            if run.cycle >= cols:
                break
        for (col, f) in run.fidelities:
            if col < cols:
                fsum[col] += f
                fsq[col] += f * f
                alive[col] += 1
    n = np.maximum(alive, 1)
    mean = np.where(alive > 0, fsum / n, np.nan)
    var = np.maximum(fsq / n - mean ** 2, 0.0)
    sem = np.sqrt(var / n)
    return np.arange(cols), mean, alive, sem


def noise_sweep_csv(H: int, p: float, sigmas, cols: int, reps: int,
                    algorithm: str = "gbfs", angles: str = "identity",
                    master_seed: int = 404, T_p: float = 1e-9) -> str:
    """Heatmap CSV: sigma, elapsed_ns, mean_fidelity (one row per column)."""
    lines = ["sigma,elapsed_ns,mean_fidelity"]
    for sigma in sigmas:
        cols_idx, mean, alive, _ = run_noise_point(
            H, p, sigma, cols, reps, algorithm, angles, master_seed)
        for ci in cols_idx:
            if alive[ci] > 0:
                lines.append(f"{sigma:g},{ci * T_p * 1e9:g},{mean[ci]:.6f}")
    return "\n".join(lines) + "\n"
