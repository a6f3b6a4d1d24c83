#!/usr/bin/env python3
"""Run the CLI on a fixed set of invocations and validate each JSON output."""
import json
import pathlib
import subprocess
import sys

import jsonschema

RUNS = [
    ["orders-demo"],
    ["divide", "--order", "harevlex", "--divisor", "x1*x2 - x3", "--divisor", "x1^2 - x2",
     "--input", "x1^2*x2"],
    ["divide", "--order", "plex", "--field", "7", "--divisor", "x2 - x1^2", "--input", "3*x2^3 + x1"],
    ["gb", "--gen", "x1*x2 - x3", "--gen", "x1^2 - x2", "--n", "3", "--deg", "8", "--reduced"],
    ["gb", "--family", "x{i}^p - x{p*i}", "--W", "pm1mod3", "--p", "2", "--n", "12", "--deg", "24",
     "--order", "hlex"],
    ["gb", "--order", "plex", "--gen", "x2 - x1^2", "--n", "2", "--deg", "6"],
    ["hilbert", "--preset", "schur-p2", "--N", "30"],
    ["hilbert", "--preset", "schur-p3", "--N", "30", "--execution", "serial"],
    ["hilbert", "--gen", "x1*x3 + x2^2", "--N", "12"],
    ["bijection", "--format", "json", "--preset", "AB", "--n", "10"],
    ["bijection", "--format", "json", "--preset", "AC", "--n", "0", "--route", "oracle"],
    ["bijection", "--format", "json", "--W", "nonzeromod5", "--p", "2", "--n", "12"],
    ["identities", "--schur", "--rr", "--N", "30"],
    ["properties", "--seed", "3", "--count", "10"],
]


def main() -> int:
    tool, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {}
    for path in sorted(schema_dir.glob("*.schema.json")):
        schema = json.loads(path.read_text())
        jsonschema.Draft202012Validator.check_schema(schema)
        schemas[path.name.removesuffix(".schema.json")] = schema
    failed = 0
    for args in RUNS:
        proc = subprocess.run([tool, *args], capture_output=True, text=True)
        label = " ".join(args)
        try:
            if proc.returncode != 0:
                raise ValueError(f"exit {proc.returncode}: {proc.stderr.strip()}")
            doc = json.loads(proc.stdout)
            jsonschema.validate(doc, schemas[doc["command"]],
                                cls=jsonschema.Draft202012Validator)
            print(f"ok   {label}")
        except (ValueError, KeyError, jsonschema.ValidationError) as e:
            failed += 1
            print(f"FAIL {label}: {str(e).splitlines()[0]}")
    missing = set(schemas) - {a[0] for a in RUNS}
    if missing:
        failed += 1
        print(f"FAIL no invocation covers: {sorted(missing)}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
