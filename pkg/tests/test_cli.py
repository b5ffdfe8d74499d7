import csv

from clusterpath.cli import esim_main, pathf_main, sweep_main, timing_main


def test_pathf_runs_and_writes_csv(tmp_path, capsys):
    out = tmp_path / "pt.csv"
    rc = pathf_main(["--alg", "gbfs", "-p", "1.0", "-B", "3", "-H", "5",
                     "-W", "30", "--reps", "3", "--seed", "7",
                     "--out", str(out)])
    assert rc == 0
    assert "mean depth" in capsys.readouterr().out
    rows = list(csv.DictReader(open(out)))
    assert rows[0]["alg"] == "gbfs"
    assert float(rows[0]["mean_depth"]) == 30.0


def test_pathf_debug_trace(capsys):
    rc = pathf_main(["--alg", "ibfs", "-p", "0.9", "-B", "3", "-H", "5",
                     "-W", "20", "--debug", "--seed", "3"])
    assert rc == 0
    assert "== cycle 1" in capsys.readouterr().out


def test_pathf_rejects_bad_config(capsys):
    assert pathf_main(["-W", "2", "-B", "5"]) == 2


def test_sweep_and_timing_roundtrip(tmp_path):
    sweep_csv = tmp_path / "sweep.csv"
    rc = sweep_main(["--alg", "gbfs,ibfs", "--p-grid", "0.9,1.0",
                     "--B-grid", "3", "-H", "5", "-W", "40", "--reps", "3",
                     "--seed", "5", "--out", str(sweep_csv)])
    assert rc == 0
    rows = list(csv.DictReader(open(sweep_csv)))
    assert len(rows) == 4
    assert set(r["alg"] for r in rows) == {"gbfs", "ibfs"}

    timing_csv = tmp_path / "timing.csv"
    rc = timing_main(["--in", str(sweep_csv), "--T-p", "1e-9",
                      "--out", str(timing_csv)])
    assert rc == 0
    trows = list(csv.DictReader(open(timing_csv)))
    assert len(trows) == 4
    for r in trows:
        assert float(r["t_write"]) > 0


def test_timing_rejects_missing_file():
    assert timing_main(["--in", "/nonexistent.csv"]) == 2


def test_esim_emits_fidelity_csv(tmp_path):
    out = tmp_path / "fid.csv"
    rc = esim_main(["--H", "4", "--p", "1.0", "--cols", "6", "--sigma",
                    "0,0.1", "--reps", "2", "--seed", "2",
                    "--out", str(out)])
    assert rc == 0
    rows = list(csv.DictReader(open(out)))
    assert set(rows[0].keys()) == {"sigma", "elapsed_ns", "mean_fidelity"}
    zero = [r for r in rows if float(r["sigma"]) == 0.0]
    assert all(abs(float(r["mean_fidelity"]) - 1.0) < 1e-9 for r in zero)


def test_esim_rejects_large_height():
    assert esim_main(["--H", "14"]) == 2
