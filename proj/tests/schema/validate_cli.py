"""Runs the regspec CLI with --json and validates every record against schemas/."""

import json
import pathlib
import subprocess
import sys

from jsonschema import Draft202012Validator


def load_validators(schema_dir):
    validators = {}
    for path in sorted(pathlib.Path(schema_dir).glob("*.schema.json")):
        schema = json.loads(path.read_text())
        Draft202012Validator.check_schema(schema)
        validators[path.name.removesuffix(".schema.json")] = Draft202012Validator(schema)
    return validators


def run(tool, args, stdin=""):
    proc = subprocess.run([tool, *args], input=stdin, capture_output=True, text=True, timeout=600)
    return proc.returncode, proc.stdout


def main():
    tool, schema_dir = sys.argv[1], sys.argv[2]
    validators = load_validators(schema_dir)
    _, c7 = run(tool, ["construct", "cycle", "7"])
    _, heawood = run(tool, ["construct", "incidence", "7", "0", "1", "3"])
    _, anyg = run(tool, ["enumerate", "8", "3"])
    graphs = "\n".join([c7.strip(), heawood.strip(), anyg.strip(), "C~", "Cl", "A_", "@", "DQc", "G`~~fc"]) + "\n"
    cases = [
        (["analyze", "--json"], graphs, 0),
        (["construct", "kss-expand", "2", "2", "--spectrum", "--json"], "", 0),
        (["construct", "crown-expand", "3", "1", "--spectrum", "--json"], "", 0),
        (["construct", "complement-crown-expand", "4", "2", "--spectrum", "--json"], "", 0),
        (["construct", "incidence", "13", "0", "1", "3", "9", "--spectrum", "--json"], "", 0),
        (["construct", "cycle", "7", "--spectrum", "--json"], "", 0),
        (["construct", "a-graph", "1", "2", "3", "--json"], "", 0),
        (["enumerate", "10", "3", "--connected", "--json"], "", 0),
        (["enumerate", "10", "4", "--four-eig", "--json"], "", 0),
        (["scan", "integer", "--nmax", "20", "--all", "--json"], "", 0),
        (["scan", "integer", "--nmax", "30", "--json"], "", 0),
        (["scan", "noninteger", "--kmax", "40", "--json"], "", 0),
    ]
    for theorem in ["thm3.1", "thm3.6", "thm3.9", "thm3.10", "lem2.2"]:
        cases.append((["verify", theorem, "--nmax", "8", "--json"], "", 0))

    records = 0
    failures = 0
    seen = set()
    for args, stdin, expected in cases:
        code, out = run(tool, args, stdin)
        if code != expected:
            print(f"FAIL exit {code} != {expected}: {' '.join(args)}")
            failures += 1
        for line in out.splitlines():
            record = json.loads(line)
            kind = record.get("record")
            if kind not in validators:
                print(f"FAIL no schema for record {kind!r}: {' '.join(args)}")
                failures += 1
                continue
            errors = list(validators[kind].iter_errors(record))
            for e in errors:
                print(f"FAIL {kind}: {e.message} at {list(e.absolute_path)}")
            failures += len(errors) > 0
            seen.add(kind)
            records += 1
    unused = set(validators) - seen
    if unused:
        print(f"FAIL schemas never exercised: {sorted(unused)}")
        failures += 1
    print(f"{records} records validated against {len(validators)} schemas, {failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
