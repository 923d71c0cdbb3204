"""Exit codes and output determinism of the arr executable."""

import json
import subprocess
import sys

ARR = sys.argv[1]
failures = []


def run(*args, env=None):
    return subprocess.run([ARR, *args], capture_output=True, text=True, env=env)


def expect(cond, what):
    if not cond:
        failures.append(what)


r = run("chi", "--family", "linial", "--n", "4", "--engine", "nbc", "--json")
expect(r.returncode == 0, "chi exit code")
doc = json.loads(r.stdout)
expect(doc["results"][0]["regions"] == "36", "linial n=4 regions")

r = run("count", "--family", "alternating-trees", "--n", "0")
expect(r.returncode == 0 and r.stdout.strip().endswith(": 1"), "alternating trees n=0")

r = run("roots", "--family", "trunc-affine", "--a", "1", "--b", "3", "--n", "5", "--json")
doc = json.loads(r.stdout)
expect(r.returncode == 0 and doc["expected_real_part"] == "15/2" and doc["max_deviation"] < 1e-8, "roots report")

r = run("series", "--a", "1", "--b", "2", "--order", "4", "--json")
expect(json.loads(r.stdout)["counts"] == ["1", "1", "3", "16", "125"], "series counts")

r = run("oracle", "--family", "shi", "--n", "3", "--prime", "11", "--json")
expect(r.returncode == 0 and json.loads(r.stdout)["results"][0]["points"] == "704", "oracle shi p=11")

r = run("chi", "--family", "nonsense", "--n", "3")
expect(r.returncode == 2, f"unknown family exit {r.returncode}")
r = run("chi", "--family", "linial", "--n", "3", "--bogus-flag")
expect(r.returncode == 2, f"unknown flag exit {r.returncode}")
r = run("chi", "--family", "catalan0", "--n", "5", "--engine", "whitney")
expect(r.returncode == 3 and "whitney_cap" in r.stderr, f"cap exit {r.returncode}")
r = run("oracle", "--family", "catalan0", "--n", "3", "--prime", "2")
expect(r.returncode == 2, f"inadmissible prime exit {r.returncode}")
r = run("verify", "--suite", "nowhere")
expect(r.returncode == 2, f"unknown suite exit {r.returncode}")

for args in (["chi", "--family", "catalan", "--n", "4", "--engine", "all", "--json"],
             ["regions", "--family", "shi", "--n", "4", "--engine", "all", "--json"],
             ["verify", "--suite", "roots", "--json"]):
    outputs = {run(*args).stdout for _ in range(2)}
    outputs.add(run(*args, "--threads", "4").stdout)
    expect(len(outputs) == 1, "nondeterministic output for " + " ".join(args))

r = run("count", "--family", "sleek-posets", "--n", "4", "--csv")
expect(r.stdout.splitlines() == ["family,n,count", "sleek-posets,0,1", "sleek-posets,1,1", "sleek-posets,2,2",
                                 "sleek-posets,3,7", "sleek-posets,4,36"], "csv table")

for f in failures:
    print("FAIL", f)
print("ok" if not failures else f"{len(failures)} failures")
sys.exit(1 if failures else 0)
