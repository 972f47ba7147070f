#!/usr/bin/env python3
"""Runs the verlab binary over a fixed command list, validates every JSON
payload against the schema and checks repeated runs are byte-identical."""
import json
import subprocess
import sys
import tempfile

import jsonschema

CASES = [
    # (argv, expected exit code)
    (["char", "weyl", "-m", "4"], 0),
    (["char", "weyl", "-m", "4", "-p", "5"], 0),
    (["char", "simple", "-p", "2", "-m", "5"], 0),
    (["char", "tilt", "-p", "3", "-m", "7"], 0),
    (["char", "decompose", "-p", "3", "--char", "0:2,2:1,4:1", "--basis", "tilting"], 0),
    (["char", "decompose", "--char", "0:1,2:1,4:1"], 0),
    (["char", "decompose", "-p", "3", "--char", "0:1,2:1,4:1", "--basis", "tilting"], 1),
    (["char", "mul", "--char", "1:1", "--other", "1:1,3:1"], 0),
    (["char", "mul", "--char", "1", "--other", "1:1"], 1),
    (["char", "simple", "-p", "4", "-m", "3"], 1),
    (["tilt", "fuse-decompose", "-p", "3", "-a", "2", "-b", "4"], 0),
    (["tilt", "fuse-decompose", "-p", "2", "-n", "2", "-a", "3", "-b", "5"], 0),
    (["verp", "fuse", "-p", "5", "-a", "1", "-b", "3", "--json"], 0),
    (["verp", "fuse", "-p", "5", "-a", "9", "-b", "1"], 1),
    (["verp", "oracle", "-p", "7", "-a", "2", "-b", "3", "-c", "3"], 0),
    (["verp", "fpdim", "-p", "5", "-a", "1"], 0),
    (["verp", "gd", "-p", "5", "-a", "1", "--nmax", "20"], 0),
    (["verp", "gd", "-p", "7", "--x", "1:1,2:2", "--nmax", "8"], 0),
    (["verpn", "digits", "-p", "3", "-n", "2", "-i", "5"], 0),
    (["verpn", "product", "-p", "3", "-n", "2", "--digits", "1,2"], 0),
    (["verpn", "product", "-p", "3", "-n", "2", "--digits", "2,0"], 1),
    (["verpn", "embed", "-p", "3", "-n", "1", "-i", "1"], 0),
    (["verpn", "oddline", "-p", "5", "-n", "2"], 0),
    (["verpn", "oddline", "-p", "2", "-n", "2"], 1),
    (["verpn", "sympower", "-p", "3", "-n", "2", "-i", "4", "-k", "3"], 0),
    (["verpn", "sympower", "-p", "5", "-n", "3", "-i", "5", "-k", "7"], 0),
    (["padic", "pow", "-p", "2", "--value", "-2", "--prec", "16"], 0),
    (["padic", "pow", "-p", "3", "--digits", "1,2,0,1"], 0),
    (["padic", "recover", "-p", "2", "--series", "[1,0,1,0,0,0,0,0]"], 0),
    (["padic", "recover", "-p", "3", "--series", "[1,1,1,1]"], 0),
    (["padic", "recover", "-p", "3", "--series", "[1,1,0,0]"], 1),
    (["padic", "finite", "--top", "2"], 0),
    (["padic", "finite", "--top", "7", "-p", "3"], 0),
    (["padic", "extend", "-p", "2", "--nlen", "4", "--dimplus-v=-2", "--dimplus-vdual=-2"], 0),
    (["padic", "extend", "-p", "2", "--nlen", "3", "--dimplus-v=-2", "--dimplus-vdual=-2"], 1),
    (["padic", "palindrome", "-p", "3", "--hs", "1,2,1"], 0),
    (["sgd", "estimate", "--provider", "sl2_sym", "-p", "2", "--nmax", "1024"], 0),
    (["sgd", "estimate", "--provider", "binomial", "-m", "3", "--nmax", "1024"], 0),
    (["sgd", "estimate", "--provider", "partitions", "--nmax", "256"], 0),
    (["sgd", "diagnose", "--provider", "constant", "--hom-dim", "1", "--nmax", "1024"], 0),
    (["sgd", "diagnose", "--provider", "constant", "--nmax", "64"], 1),
    (["verp", "fuse", "-p", "5"], 2),
    (["nosuch"], 2),
]


def main() -> int:
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)

    with tempfile.NamedTemporaryFile("w", suffix=".csv", delete=False) as f:
        f.write("n,length\n" + "".join(f"{n},{n + 1}\n" for n in range(0, 65)))
        csv_path = f.name
    cases = CASES + [(["sgd", "estimate", "--provider", "csv", "--csv", csv_path, "--nmax", "64"], 0)]

    failures = 0
    for argv, expected in cases:
        runs = [subprocess.run([binary, *argv], capture_output=True, text=True) for _ in range(2)]
        label = " ".join(argv)
        if runs[0].returncode != expected:
            print(f"FAIL exit {runs[0].returncode} != {expected}: {label}\n{runs[0].stderr}")
            failures += 1
            continue
        if runs[0].stdout != runs[1].stdout:
            print(f"FAIL nondeterministic output: {label}")
            failures += 1
        try:
            payload = json.loads(runs[0].stdout)
        except json.JSONDecodeError as e:
            print(f"FAIL not JSON ({e}): {label}")
            failures += 1
            continue
        errors = sorted(validator.iter_errors(payload), key=lambda e: list(e.path))
        for e in errors:
            print(f"FAIL schema: {label}: {'/'.join(map(str, e.path))}: {e.message}")
        failures += bool(errors)
        if expected != 0 and "error" not in payload:
            print(f"FAIL missing error object: {label}")
            failures += 1

    help_run = subprocess.run([binary, "--help"], capture_output=True, text=True)
    if help_run.returncode != 0 or "Usage" not in help_run.stdout:
        print("FAIL --help")
        failures += 1

    print(f"{len(cases) + 1} cli cases, {failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
