#!/usr/bin/env python3
"""Exit codes and a few rendered outputs of the hbo command line tool."""
import json
import subprocess
import sys
import tempfile

HBO = sys.argv[1]
failures = []


def run(args, code):
    p = subprocess.run([HBO] + args, capture_output=True, text=True)
    if p.returncode != code:
        failures.append(f"{' '.join(args)}: exit {p.returncode}, wanted {code}\n{p.stderr[-400:]}")
    return p.stdout


def expect(cond, what):
    if not cond:
        failures.append(what)


# 0: success
dot = run(["show", "braid-graph", "--n", "4", "--window", "(1,7,2,0)", "--format", "dot"], 0)
expect(dot.startswith("digraph") and dot.count("->") == 5, "braid graph dot should have 5 arcs")
sets = run(["show", "consistent", "--window", "(6,4,5,2,3,1)", "--k", "4", "--format", "json"], 0)
expect(len(json.loads(sets)["elements"]) == 6, "C_w(6,4) should have 6 sets")
expect(run(["show", "inversions", "--window", "(1,2,3,4)", "--k", "2"], 0).strip() == "", "identity has no inversions")
words = run(["show", "words", "--n", "4", "--word", "4121432"], 0)
expect(len(words.split()) == 10, "fig1 word should have 10 reduced words")
gr = run(["show", "gr", "--window", "(6,4,5,2,3,1)", "--k", "3", "--rset", "1256,1356", "--format", "dot"], 0)
expect("red" in gr and "blue" in gr, "G_R dot should colour reversal and complement arcs")
run(["reproduce", "all"], 0)
run(["verify", "--suite", "thm13", "--n", "3", "--max-len", "6"], 0)

with tempfile.NamedTemporaryFile(suffix=".json") as f:
    run(["verify", "--suite", "conj-gr", "--n", "3", "--max-len", "5", "--workers", "2", "--out", f.name], 0)
    report = json.load(open(f.name))
    expect(set(report) >= {"spec", "records", "summary", "elapsed_ms"}, "report schema")
    expect(report["summary"]["fail"] == 0, "conj-gr should pass")

# 1: a failing check, with a witness in the report
with tempfile.NamedTemporaryFile(suffix=".json") as f:
    run(["verify", "--suite", "thm14", "--n", "3", "--inject-fault", "thm14", "--out", f.name], 1)
    report = json.load(open(f.name))
    bad = [r for r in report["records"] if not r["pass"]]
    expect(bad and all("witness" in r for r in bad), "failed records must carry a witness")

# 2: usage errors and unsupported cases
run(["show", "inversions", "--window", "(1,7,2,0)", "--k", "1"], 2)
run(["show", "inversions", "--window", "(1,1,2)", "--k", "1"], 2)
run(["verify", "--suite", "nope", "--n", "3"], 2)
run(["verify", "--suite", "thm14", "--n", "3", "--max-len", "4", "--k-min", "1"], 2)
run(["reproduce", "fig9"], 2)
run(["frobnicate"], 2)

# 3: budget skips under --strict; plain runs still exit 0
run(["verify", "--suite", "thm14", "--n", "4", "--budget-inv", "1", "--strict"], 3)
run(["verify", "--suite", "thm14", "--n", "4", "--budget-inv", "1"], 0)

for f in failures:
    print("FAIL:", f)
print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
