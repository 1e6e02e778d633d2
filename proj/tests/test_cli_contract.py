"""Contract checks for the command line tool: exit codes, file layout,
numeric formatting, determinism. Driven by ctest with CAVROTOR_CLI set."""

import json
import os
import re
import subprocess
import sys
import tempfile

CLI = os.environ.get("CAVROTOR_CLI")

SCI = re.compile(r"-?\d\.\d{12,}e[+-]\d+")


def run(args, config=None, out=None):
    cmd = [CLI]
    if config is not None:
        cmd += ["--config", config]
    if out is not None:
        cmd += ["--out", out]
    cmd += args
    return subprocess.run(cmd, capture_output=True, text=True, timeout=600)


def write_config(d, obj):
    path = os.path.join(d, "config.json")
    with open(path, "w") as f:
        json.dump(obj, f)
    return path


def check(cond, msg):
    if not cond:
        print("FAIL:", msg)
        sys.exit(1)


def main():
    check(CLI and os.path.exists(CLI), "CAVROTOR_CLI not set or missing")

    small = {
        "params": {"delta": 1.0, "g": 0.4, "b_field": 0.2, "inertia": 50.0},
        "trunc": {"n_max": 5, "k_max": 5},
    }

    with tempfile.TemporaryDirectory() as d:
        cfg = write_config(d, small)

        # ground: exit 0, csv + json sidecar, >= 12 significant digits
        r = run(["ground"], cfg, d)
        check(r.returncode == 0, f"ground exited {r.returncode}: {r.stderr}")
        csv_path = os.path.join(d, "ground.csv")
        check(os.path.exists(csv_path), "ground.csv missing")
        body = open(csv_path).read()
        check(body.startswith("E0,"), "unexpected ground.csv header")
        check(SCI.search(body), "ground.csv lacks full-precision numbers")
        meta = json.load(open(os.path.join(d, "ground.json")))
        check("params" in meta and "tool" in meta, "ground.json metadata incomplete")

        # determinism: byte-identical CSV on rerun
        d2 = os.path.join(d, "again")
        os.mkdir(d2)
        r = run(["ground"], cfg, d2)
        check(r.returncode == 0, "ground rerun failed")
        check(open(os.path.join(d2, "ground.csv"), "rb").read()
              == open(csv_path, "rb").read(), "ground.csv not deterministic")

        # sweep: needs a sweep block; valid sweep emits one row per point
        r = run(["sweep"], cfg, d)
        check(r.returncode == 1, f"sweep without block exited {r.returncode}")
        sweep_cfg = dict(small)
        sweep_cfg["sweep"] = {"parameter": "g", "start": 0.1, "stop": 0.5,
                              "count": 3, "spacing": "linear"}
        r = run(["sweep"], write_config(d, sweep_cfg), d)
        check(r.returncode == 0, f"sweep exited {r.returncode}: {r.stderr}")
        lines = open(os.path.join(d, "sweep.csv")).read().strip().splitlines()
        check(len(lines) == 4, f"sweep.csv has {len(lines)} lines, expected header + 3")

        # perturbation and rpa run off the same config
        r = run(["perturbation"], cfg, d)
        check(r.returncode == 0, f"perturbation exited {r.returncode}: {r.stderr}")
        names = [ln.split(",")[0] for ln in open(os.path.join(d, "perturbation.csv"))]
        check("weak_E2" in names and "strong_L1" in names, "perturbation rows missing")

        rpa_cfg = {"params": {"delta": 1.0, "g": 0.3, "b_field": 0.0}, "rpa": {"Z": 0.8}}
        r = run(["rpa"], write_config(d, rpa_cfg), d)
        check(r.returncode == 0, f"rpa exited {r.returncode}: {r.stderr}")
        rpa_rows = open(os.path.join(d, "rpa.csv")).read()
        check("closed_form_B0" in rpa_rows, "B = 0 closed form row missing")

        # bo with the cheap analytic surface
        bo_cfg = {"params": {"delta": 1.0, "g": 0.2, "b_field": 0.0, "inertia": 1e6,
                             "n_dimers": 2},
                  "bo": {"source": "weak_pt", "n_points": 128}}
        r = run(["bo"], write_config(d, bo_cfg), d)
        check(r.returncode == 0, f"bo exited {r.returncode}: {r.stderr}")
        bo_meta = json.load(open(os.path.join(d, "bo.json")))
        check(abs(bo_meta["norm_check"] - 1.0) < 1e-6, "bo wavefunction not normalized")

        # feasibility reports computed and reference values side by side
        r = run(["feasibility"], cfg, d)
        check(r.returncode == 0, f"feasibility exited {r.returncode}: {r.stderr}")
        feas = open(os.path.join(d, "feasibility.csv")).read()
        check("quantity,computed,reference" in feas, "feasibility header wrong")
        check("potential_height_ueV" in feas and "alignment_temperature_mK" in feas,
              "feasibility rows missing")

    # config errors: exit 1 and no partial outputs
    with tempfile.TemporaryDirectory() as d:
        bad = os.path.join(d, "bad.json")
        with open(bad, "w") as f:
            f.write("{not json")
        r = run(["ground"], bad, d)
        check(r.returncode == 1, f"malformed config exited {r.returncode}")
        check("config error" in r.stderr, "missing config error message")
        check(not os.path.exists(os.path.join(d, "ground.csv")),
              "partial output left behind on config error")

        neg = write_config(d, {"params": {"delta": -1.0}})
        r = run(["ground"], neg, d)
        check(r.returncode == 1, f"invalid parameter exited {r.returncode}")

        r = run(["figure", "not_a_figure"], None, d)
        check(r.returncode == 1, f"unknown figure exited {r.returncode}")

    # one real figure end to end (the cheapest one)
    with tempfile.TemporaryDirectory() as d:
        r = run(["figure", "fig2b"], None, d)
        check(r.returncode == 0, f"fig2b exited {r.returncode}: {r.stderr}")
        check(os.path.exists(os.path.join(d, "fig2b.csv")), "fig2b.csv missing")
        check(os.path.exists(os.path.join(d, "fig2b.json")), "fig2b.json missing")

    print("cli contract: ok")
    return 0


if __name__ == "__main__":
    sys.exit(main())
