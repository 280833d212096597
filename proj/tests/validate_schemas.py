"""Run every cyarith subcommand with --json and validate the output against docs/schemas.

usage: validate_schemas.py CYARITH SCHEMA_DIR CACHE_DIR
"""

import json
import pathlib
import shutil
import subprocess
import sys

import jsonschema

CASES = [
    ("count", ["-d", "5", "-n", "3", "-p", "11", "--verify"]),
    ("count", ["-e", "2,3,6", "--range", "7:13", "-r", "2"]),
    ("jacobi", ["-d", "3", "-n", "1", "-p", "7,13"]),
    ("jacobi", ["-d", "5", "-n", "3", "-p", "11", "--alpha", "1/5,1/5,1/5,1/5,1/5"]),
    ("zeta", ["-d", "5", "-n", "3", "-p", "2,11", "--counts", "2", "--verify"]),
    ("zeta", ["-d", "5", "-n", "3", "-p", "3", "--max-degree", "2"]),
    ("lseries", ["-d", "5", "-n", "3", "-N", "30", "-s", "3.5"]),
    ("hecke", ["-m", "5", "-a", "1,1,1,1", "-p", "11,2"]),
    ("hecke", ["-m", "5", "-a", "1,2,3,4", "-N", "40"]),
    ("cyclo", ["-m", "5", "--regulator", "--delta", "7", "--s-element", "1,1,1,1,1"]),
    ("cyclo", ["-m", "12"]),
    ("cft", ["-k", "3"]),
    ("cft", ["-k", "4", "--check", "all"]),
    ("cft", ["-k", "2", "--spectrum"]),
    ("cft", ["--gepner", "--max-factors", "6"]),
    ("match", ["-d", "5", "-n", "3", "-p", "11,31"]),
]


def main() -> int:
    tool, schema_dir, cache = sys.argv[1], pathlib.Path(sys.argv[2]), sys.argv[3]
    shutil.rmtree(cache, ignore_errors=True)
    failures = 0
    for command, args in CASES:
        schema = json.loads((schema_dir / f"{command}.schema.json").read_text())
        argv = [tool, command, *args, "--json", "--deterministic", "--cache", cache]
        proc = subprocess.run(argv, capture_output=True, text=True)
        label = " ".join([command, *args])
        if proc.returncode != 0:
            print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        try:
            jsonschema.validate(json.loads(proc.stdout), schema)
        except (json.JSONDecodeError, jsonschema.ValidationError) as e:
            print(f"FAIL {label}: {str(e).splitlines()[0]}")
            failures += 1
            continue
        print(f"ok   {label}")
    shutil.rmtree(cache, ignore_errors=True)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
