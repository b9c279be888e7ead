"""Runs qsitool with --json on a spread of inputs, validates every document
against the published schemas and checks text and JSON agree."""

import json
import pathlib
import re
import subprocess
import sys

import jsonschema
import referencing

TOOL = sys.argv[1]
SCHEMA_DIR = pathlib.Path(sys.argv[2])

resources = []
for path in SCHEMA_DIR.glob("*.schema.json"):
    doc = json.loads(path.read_text())
    resources.append((doc["$id"], referencing.Resource.from_contents(doc)))
registry = referencing.Registry().with_resources(resources)


def validator(name):
    schema = json.loads((SCHEMA_DIR / f"{name}.schema.json").read_text())
    return jsonschema.Draft202012Validator(schema, registry=registry)


def run(*args, expect=0):
    p = subprocess.run([TOOL, *args], capture_output=True, text=True)
    if p.returncode != expect:
        raise AssertionError(f"{args}: exit {p.returncode}, expected {expect}\n{p.stderr}")
    return p.stdout


failures = 0


def check(cond, what):
    global failures
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures += 1


CASES = [
    ("table", ["table", "A5"]),
    ("table", ["table", "S4"]),
    ("table", ["table", "Q8"]),
    ("qsi", ["qsi", "A5"]),
    ("qsi", ["qsi", "S4", "--monomial"]),
    ("qsi", ["qsi", "PSL27", "--char", "deg:7", "--monomial"]),
    ("qsi", ["qsi", "PSL27", "--char", "idx:4"]),
    ("order", ["order", "PSL", "2", "7"]),
    ("order", ["order", "E8", "1", "2"]),
    ("order", ["order", "PSU", "3", "2"]),
    ("zsigmondy", ["zsigmondy", "2", "6"]),
    ("zsigmondy", ["zsigmondy", "7", "5"]),
    ("eliminate", ["eliminate", "PSL", "5", "3"]),
    ("eliminate", ["eliminate", "2B2", "1", "8"]),
    ("eliminate", ["eliminate", "3D4", "1", "2"]),
    ("verify-paper", ["verify-paper", "a5-not-qsi"]),
]

for schema, args in CASES:
    text = run(*args)
    doc = json.loads(run("--json", *args))
    errors = list(validator(schema).iter_errors(doc))
    check(not errors, f"{' '.join(args)} validates against {schema}" + (f": {errors[0].message}" if errors else ""))

    if schema == "qsi":
        statuses = re.findall(r"^X(\d+) \(degree (\d+)\): (\S+)$", text, re.M)
        from_json = [(str(v["char_index"] + 1), str(v["character"]["degree"]), v["status"]) for v in doc["verdicts"]]
        check(statuses == from_json, f"{' '.join(args)}: text and JSON verdicts agree")
    elif schema == "order":
        check(text.splitlines()[0] == doc["order"], f"{' '.join(args)}: text and JSON orders agree")
    elif schema == "zsigmondy":
        expected = "none (exception)" if doc["prime"] is None else doc["prime"]
        check(text.strip() == expected, f"{' '.join(args)}: text and JSON agree")
    elif schema == "table":
        rows = [l for l in text.splitlines() if re.match(r"^X\d+ ", l)]
        check(len(rows) == len(doc["irreducibles"]), f"{' '.join(args)}: same number of irreducibles")
    elif schema == "eliminate":
        settled = "every candidate overgroup is eliminated" in text
        check(settled == doc["eliminated"], f"{' '.join(args)}: text and JSON agree on elimination")
    elif schema == "verify-paper":
        check(doc["passed"] == ("all assertions passed" in text), f"{' '.join(args)}: text and JSON agree")

check(run("zsigmondy", "2", "6").strip() == "none (exception)", "zsigmondy 2 6 is the exception")
check(run("order", "PSL", "2", "7").splitlines()[0] == "168", "order PSL 2 7 is 168")
run("frobnicate", expect=2)
run("table", "NoSuchGroup", expect=2)
run("verify-paper", "no-such-case", expect=2)
run("order", "XYZ", "2", "7", expect=2)
run("--max-group-order", "100", "qsi", "PSL27", expect=3)
check(True, "usage and capacity exit codes")

sys.exit(1 if failures else 0)
