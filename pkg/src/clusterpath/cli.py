"""Command-line entry points: pathf, sweep, timing, esim."""

from __future__ import annotations

import argparse
import csv
import sys

import numpy as np

from . import experiment, qsim, timing


def _parse_grid(spec: str) -> list:
    """Grid spec: comma list ("0.6,0.7,0.8") or start:stop:step ("0.5:1:0.1"),
    stop inclusive up to rounding."""
    if ":" in spec:
        a, b, step = (float(v) for v in spec.split(":"))
        n = int(round((b - a) / step)) + 1
        return [round(a + i * step, 10) for i in range(n)]
    return [float(v) for v in spec.split(",")]


def pathf_main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="pathf",
        description="Emulate path finding over an incomplete cluster state "
                    "and report depth and memory-operation statistics.")
    ap.add_argument("--seed", type=int, default=2024, help="master seed")
    ap.add_argument("--debug", action="store_true",
                    help="print a per-cycle trace of the first trial")
    ap.add_argument("--alg", choices=("gbfs", "ibfs"), default="gbfs")
    ap.add_argument("-p", type=float, default=0.75, help="edge probability")
    ap.add_argument("-B", type=int, default=5, help="block width")
    ap.add_argument("-H", type=int, default=20, help="cluster height")
    ap.add_argument("-W", type=int, default=2000, help="cluster width")
    ap.add_argument("--reps", type=int, default=1000)
    ap.add_argument("--strict", action="store_true",
                    help="keep paths physically realizable (pattern-safe)")
    ap.add_argument("--out", help="write the aggregated point as CSV")
    args = ap.parse_args(argv)
    try:
        cfg = experiment.ExperimentConfig(
            algorithm=args.alg, H=args.H, B=args.B, W=args.W, p=args.p,
            reps=args.reps, master_seed=args.seed, strict=args.strict)
    except ValueError as e:
        print(f"pathf: {e}", file=sys.stderr)
        return 2
    if args.debug:
        print(experiment.trial_trace(cfg, 0))
        return 0
    pt = experiment.run_point(cfg)
    print(f"alg={pt.alg} p={pt.p} B={pt.B} H={pt.H} W={pt.W} reps={pt.reps}")
    print(f"mean depth            {pt.mean_depth:.2f}")
    print(f"mean pred writes      {pt.mean_pred_writes:.2f}")
    print(f"max pred writes       {pt.max_pred_writes}")
    if args.out:
        with open(args.out, "w", newline="") as f:
            w = csv.writer(f)
            w.writerow(experiment.SWEEP_HEADER)
            w.writerow(pt.csv_row())
    return 0


def sweep_main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="sweep",
        description="Sweep edge probability and block width, averaging "
                    "trials per point; emits the standard sweep CSV.")
    ap.add_argument("--alg", default="gbfs",
                    help="comma list of algorithms (gbfs,ibfs)")
    ap.add_argument("--p-grid", default="0.5:1.0:0.05")
    ap.add_argument("--B-grid", default="5,6,7,8,9,10")
    ap.add_argument("-H", type=int, default=20)
    ap.add_argument("-W", type=int, default=2000)
    ap.add_argument("--reps", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=2024)
    ap.add_argument("--out", help="output CSV (default stdout)")
    args = ap.parse_args(argv)
    try:
        algs = [a.strip() for a in args.alg.split(",") if a.strip()]
        points = experiment.run_sweep(
            algs, _parse_grid(args.p_grid),
            [int(b) for b in _parse_grid(args.B_grid)],
            H=args.H, W=args.W, reps=args.reps, master_seed=args.seed,
            progress=lambda pt: print(
                f"# {pt.alg} p={pt.p} B={pt.B}: depth={pt.mean_depth:.1f} "
                f"writes={pt.mean_pred_writes:.1f}", file=sys.stderr))
    except ValueError as e:
        print(f"sweep: {e}", file=sys.stderr)
        return 2
    text = experiment.sweep_to_csv(points)
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return 0


def timing_main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="timing",
        description="Convert a sweep CSV into memory write-latency budgets.")
    ap.add_argument("--in", dest="infile", required=True, help="sweep CSV")
    ap.add_argument("--T-p", dest="T_p", type=float, default=1e-9,
                    help="photonic clock period in seconds")
    ap.add_argument("--out", help="output CSV (default stdout)")
    args = ap.parse_args(argv)
    reports = []
    try:
        with open(args.infile, newline="") as f:
            for row in csv.DictReader(f):
                reports.append(timing.TimingReport(
                    algorithm=row["alg"], p=float(row["p"]),
                    B=int(row["B"]), H=int(row["H"]), T_p=args.T_p,
                    W_pred_mean=float(row["mean_pred_writes"]),
                    W_pred_max=float(row["max_pred_writes"])))
    except (OSError, KeyError, ValueError) as e:
        print(f"timing: bad input ({e})", file=sys.stderr)
        return 2
    text = timing.reports_to_csv(reports)
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return 0


def esim_main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="esim",
        description="Quantum-verify the generated patterns column by column "
                    "under modulator voltage noise; emits the fidelity CSV.")
    ap.add_argument("--H", type=int, default=7)
    ap.add_argument("--p", type=float, default=1.0)
    ap.add_argument("--alg", choices=("gbfs", "ibfs"), default="gbfs")
    ap.add_argument("--cols", type=int, default=50,
                    help="number of verified columns per trial")
    ap.add_argument("--sigma", default="0,0.02,0.05,0.1",
                    help="comma list of voltage-noise levels (V)")
    ap.add_argument("--reps", type=int, default=100)
    ap.add_argument("--angles", choices=("identity", "random"),
                    default="identity")
    ap.add_argument("--seed", type=int, default=404)
    ap.add_argument("--T-p", dest="T_p", type=float, default=1e-9)
    ap.add_argument("--out", help="output CSV (default stdout)")
    args = ap.parse_args(argv)
    if args.H > 10:
        print("esim: heights above 10 are impractical to simulate",
              file=sys.stderr)
        return 2
    try:
        text = qsim.noise_sweep_csv(
            args.H, args.p, _parse_grid(args.sigma), args.cols, args.reps,
            algorithm=args.alg, angles=args.angles, master_seed=args.seed,
            T_p=args.T_p)
    except ValueError as e:
        print(f"esim: {e}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(pathf_main())
