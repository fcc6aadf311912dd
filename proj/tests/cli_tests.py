#!/usr/bin/env python3
"""CLI surface tests: exit codes, CSV shapes, determinism."""
import json
import math
import subprocess
import sys

QWM = sys.argv[1]
failures = 0


def run(*args, expect=0):
    global failures
    proc = subprocess.run([QWM, *args], capture_output=True, text=True)
    if proc.returncode != expect:
        failures += 1
        print(f"FAIL {' '.join(args)}: exit {proc.returncode}, expected {expect}")
        print(proc.stderr)
    return proc


def check(name, cond):
    global failures
    if not cond:
        failures += 1
        print(f"FAIL {name}")
    else:
        print(f"ok   {name}")


# spectrum: hypercube n=3 -> lambda multiset {3,1,1,1,-1,-1,-1,-3}
out = run("spectrum", "--graph", "hypercube", "--n", "3")
rows = out.stdout.strip().splitlines()
check("spectrum header", rows[0] == "a,weight,lambda")
lambdas = sorted(int(r.split(",")[2]) for r in rows[1:])
check("spectrum Q3 values", lambdas == [-3, -1, -1, -1, 1, 1, 1, 3])

# eta-cube spectrum: (3 - 2|a| + (-1)^(a.eta))/4
out = run("spectrum", "--graph", "eta-cube", "--n", "3", "--eta", "110")
for row in out.stdout.strip().splitlines()[1:]:
    a, w, lam = row.split(",")
    dot = (a[0] != a[1])  # a.110 over bits (coord 3, coord 2)
    expected = (3 - 2 * int(w) + (-1 if dot else 1)) / 4
    check(f"eta spectrum a={a}", abs(float(lam) - expected) < 1e-12)

# bunkbed delta0 = Q_{n+1} spectrum
out = run("spectrum", "--graph", "bunkbed", "--n", "2", "--connection", "delta0")
lambdas = sorted(int(r.split(",")[2]) for r in out.stdout.strip().splitlines()[1:])
check("bunkbed delta0 is Q3", lambdas == [-3, -1, -1, -1, 1, 1, 1, 3])

# walk at pi/4: all probabilities 1/8
out = run("walk", "--graph", "hypercube", "--n", "3", "--time", "0.7853981633974483")
rows = out.stdout.strip().splitlines()
check("walk header", rows[0] == "vertex,re,im,prob")
probs = [float(r.split(",")[3]) for r in rows[1:]]
check("walk Q3 uniform", all(abs(p - 0.125) < 1e-12 for p in probs))

# walk at t=0: point mass at the start vertex
out = run("walk", "--graph", "hypercube", "--n", "3", "--time", "0", "--start", "101")
probs = [float(r.split(",")[3]) for r in out.stdout.strip().splitlines()[1:]]
check("walk t=0 point mass", probs[0b101] == 1.0 and sum(probs) == 1.0)

# eta-cube half-uniform at pi: 0.25 on four vertices, 0 on four
out = run("walk", "--graph", "eta-cube", "--n", "3", "--eta", "111", "--time",
          "3.141592653589793")
probs = sorted(float(r.split(",")[3]) for r in out.stdout.strip().splitlines()[1:])
check("eta-cube half-uniform",
      all(p < 1e-9 for p in probs[:4]) and all(abs(p - 0.25) < 1e-9 for p in probs[4:]))

# scan: Q2 uniform times ~ pi/4, 3pi/4
out = run("scan", "--graph", "hypercube", "--n", "2", "--t-max", "3.1416", "--steps", "10000")
summary = {l.split(": ")[0]: l.split(": ")[1] for l in out.stdout.strip().splitlines()
           if ": " in l}
check("scan Q2 uniform time", abs(float(summary["uniform_time"]) - math.pi / 4) < 1e-6)

# scan: K5 finds no uniform time over one period
out = run("scan", "--graph", "complete", "--q", "5", "--t-max", "1.2566370614",
          "--steps", "100000")
summary = {l.split(": ")[0]: l.split(": ")[1] for l in out.stdout.strip().splitlines()
           if ": " in l}
check("scan K5 no uniform time", summary["uniform_time"] == "none")
check("scan K5 min tv", abs(float(summary["min_tv"]) - 0.16) < 1e-3)

# determinism: identical seeds give byte-identical CSV
a = run("walk", "--graph", "eta-cube", "--n", "4", "--eta", "1100", "--time", "2.5")
b = run("walk", "--graph", "eta-cube", "--n", "4", "--eta", "1100", "--time", "2.5")
check("deterministic output", a.stdout == b.stdout)

# verify: JSON report shape and pass
out = run("verify", "--suite", "bbqn", "--max-n", "3")
report = json.loads(out.stdout)
check("verify json shape",
      report["suite"] == "bbqn" and report["pass"] is True and
      all({"params", "expected", "observed", "pass"} <= set(c) for c in report["cases"]))

# oracle-compare
out = run("oracle-compare", "--graph", "bunkbed", "--n", "4", "--connection", "all-ones",
          "--trials", "20", "--seed", "7")
check("oracle-compare output", out.stdout.startswith("max_deviation:"))

# usage errors exit 2
run("walk", "--graph", "hypercube", "--n", "3", expect=2)              # missing --time
run("walk", "--graph", "nosuch", "--n", "3", "--time", "1", expect=2)  # bad family
run("spectrum", "--graph", "eta-cube", "--n", "3", "--eta", "010", expect=2)  # eta = e_j
run("scan", "--graph", "hypercube", "--n", "2", "--t-max", "1", "--steps", "1", expect=2)

if failures:
    print(f"{failures} CLI check(s) failed")
    sys.exit(1)
print("all CLI checks passed")
