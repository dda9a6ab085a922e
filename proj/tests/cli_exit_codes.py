"""Exit-code and diagnostic-stream checks for the aztec CLI."""
import json
import os
import subprocess
import sys
import tempfile

AZTEC = sys.argv[1]


def run(*args, env=None):
    merged = dict(os.environ)
    merged.update(env or {})
    return subprocess.run([AZTEC, *args], capture_output=True, text=True, env=merged)


def expect(cond, message):
    if not cond:
        print("FAIL:", message)
        sys.exit(1)


r = run("compute", "0", "0", "4", "vector")
expect(r.returncode == 0, f"compute exit {r.returncode}")

r = run("compute", "--p", "0", "--q", "0", "--n", "7", "--method", "dense")
expect(r.returncode == 2, f"dense cap exit {r.returncode}")
err = json.loads(r.stderr.strip().splitlines()[-1])
expect(err["error"] == "capacity" and err["limit"] == 12 and err["requested"] == 14, r.stderr)
expect(r.stdout == "", "capacity failure must not print a record")

r = run("compute", "0", "0", "7", "dense", env={"AZTEC_DENSE_CAP": "10"})
expect(r.returncode == 2, "env override lowers the cap")
r = run("compute", "0", "0", "5", "dense", env={"AZTEC_DENSE_CAP": "10"})
expect(r.returncode == 0 and "0,0,5,32768,dense" in r.stdout, r.stdout + r.stderr)
r = run("compute", "0", "0", "1", env={"AZTEC_DENSE_CAP": "lots"})
expect(r.returncode == 1, "malformed env override is a usage error")

r = run("compute", "0", "0")
expect(r.returncode == 1, f"missing argument exit {r.returncode}")
r = run("compute", "0", "0", "1", "magic")
expect(r.returncode == 1, f"bad method exit {r.returncode}")
r = run()
expect(r.returncode == 1, f"no subcommand exit {r.returncode}")

r = run("verify", "--max-squares", "16", "--inject-fault", "bar-seed")
expect(r.returncode == 3, f"fault injection exit {r.returncode}")
expect("FAIL bar-recurrence" in r.stdout, r.stdout)

with tempfile.TemporaryDirectory() as tmp:
    path = os.path.join(tmp, "sweep.jsonl")
    r = run("sweep", "1", "1", "1", "all", "--format", "jsonl", "--output", path,
            env={"AZTEC_ORACLE_SQUARES": "4"})
    expect(r.returncode == 0, r.stderr)
    with open(path) as fh:
        rows = [json.loads(line) for line in fh]
    expect(len(rows) == 8 * 3, f"{len(rows)} rows")
    for row in rows:
        if row["p"] == 1 and row["q"] == 1 and row["count"] is not None:
            expect(row["count"] == "0", row)
    expect(any(row["count"] is None and "oracle squares" in row["error"] for row in rows),
           "oracle cap recorded in-row")

print("cli exit codes ok")
