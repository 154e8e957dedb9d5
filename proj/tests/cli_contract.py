"""Runs the humbert binary over a table of invocations and checks exit codes,
schema conformance, a few literal outputs and byte-identical reruns."""

import json
import os
import subprocess
import sys

import jsonschema

BINARY, SCHEMA = sys.argv[1], sys.argv[2]

with open(SCHEMA, encoding="utf-8") as fh:
    schema = json.load(fh)

# (argv, expected exit code, schema definition, exact expected JSON or None)
CASES = [
    (["equivalent", "2", "3", "1/2", "1/3"], 0, "equivalent", {"equivalent": True, "witness": "A"}),
    (["equivalent", "2", "5", "2", "3"], 0, "equivalent", {"equivalent": False, "witness": None}),
    (["symmetry", "2", "1/2"], 0, "symmetry", {"order": 2, "type": "Z2", "quasiplatonic": False}),
    (["symmetry", "1-i", "-i"], 0, "symmetry", {"order": 4, "type": "Z4", "quasiplatonic": True}),
    (["symmetry", "2", "5"], 0, "symmetry", {"order": 1, "type": "trivial", "quasiplatonic": False}),
    (["invariants", "2", "2"], 1, "error", None),
    (["invariants", "2", "5"], 0, "invariants", None),
    (["--approx", "invariants", "2", "5"], 0, "invariants", None),
    (["orbit", "2", "5"], 0, "orbit", None),
    (["orbit", "2", "1/2", "--count-only"], 0, "orbit", {"count": 60}),
    (["normalize", "2", "1/2"], 0, "normalize", {"lambda": "1/2", "pair": ["1/2", "2"], "witness": "A"}),
    (["normalize", "2", "5"], 1, "error", None),
    (["certificate", "2", "1/2"], 0, "certificate", None),
    (["certificate", "2", "5"], 0, "certificate", None),
    (["certificate", "1-i", "-i"], 0, "certificate", None),
    (["certificate", "--minpoly", "-2,0,1", "--near", "1.4"], 0, "certificate", None),
    (["certificate", "--minpoly", "-2,0,1", "--near", "0"], 1, "error", None),
    (["--approx", "certificate", "2", "0.5"], 1, "error", None),
    (["verify-j"], 0, "verify-j", None),
    (["verify-j", "--fixtures", "/nonexistent"], 1, "error", None),
    (["fiber", "2", "5", "1"], 0, "fiber", None),
    (["fiber", "2", "5", "inf"], 0, "fiber", None),
    (["fiber", "2", "5", "-3"], 1, "error", None),
    (["--approx", "fiber", "2", "5", "0.3+0.7i"], 0, "fiber", None),
    (["symmetry", "2"], 2, "error", None),
    (["symmetry", "1.5", "2"], 2, "error", None),
    (["nosuchcommand"], 2, "error", None),
]

failures = 0


def check(cond, message):
    global failures
    if not cond:
        failures += 1
        print("FAIL:", message)


for argv, code, definition, expected in CASES:
    label = " ".join(argv)
    first = subprocess.run([BINARY, *argv], capture_output=True, check=False)
    second = subprocess.run([BINARY, *argv], capture_output=True, check=False)
    check(first.returncode == code, f"{label}: exit {first.returncode}, expected {code}")
    check(first.stdout == second.stdout, f"{label}: output differs between runs")
    try:
        doc = json.loads(first.stdout)
    except json.JSONDecodeError as exc:
        check(False, f"{label}: invalid JSON ({exc})")
        continue
    sub = dict(schema)
    sub["$ref"] = f"#/$defs/{definition}"
    try:
        jsonschema.validate(doc, sub)
    except jsonschema.ValidationError as exc:
        check(False, f"{label}: schema violation: {exc.message}")
    if expected is not None:
        check(doc == expected, f"{label}: got {doc}")

bad_eps = subprocess.run([BINARY, "symmetry", "2", "5"], capture_output=True, check=False,
                         env={**os.environ, "HUMBERT_EPS": "abc"})
check(bad_eps.returncode == 2, "HUMBERT_EPS=abc should be a usage error")

print(f"{len(CASES)} invocations, {failures} failures")
sys.exit(1 if failures else 0)
