#!/usr/bin/env python3
"""Runs every JSON-emitting subcommand over the instance directory and
validates each document against the shipped schema."""

import json
import pathlib
import subprocess
import sys

import jsonschema


def variables_of(path):
    """Quantified variables of a QDIMACS file, in prefix order."""
    out = []
    for line in path.read_text().splitlines():
        parts = line.split()
        if parts and parts[0] in ("e", "a"):
            out.extend(int(t) for t in parts[1:] if t != "0")
    return out


def invocations(instances):
    yield ["bench", "--sizes", "200,400", "--repeats", "1"]
    for path in sorted(instances.glob("*.qdimacs")):
        f = str(path)
        yield ["deps", f]
        yield ["deps", f, "--scheme", "triv"]
        yield ["deps", f, "--witness", "--verbose", "--report"]
        yield ["eval", f]
        yield ["check", f]
        vs = variables_of(path)
        if len(vs) >= 2:
            yield ["query", f, str(vs[0]), str(vs[-1]), "--witness"]
            yield ["deps", f, "--var", str(vs[0]), "--witness"]


def main():
    tool, schema_path, instance_dir = sys.argv[1:4]
    schema = json.loads(pathlib.Path(schema_path).read_text())
    validator = jsonschema.Draft202012Validator(schema)
    validated = 0
    failures = 0
    for args in invocations(pathlib.Path(instance_dir)):
        proc = subprocess.run([tool, *args, "--format", "json"], capture_output=True, text=True)
        if proc.returncode in (2, 4) and not proc.stdout:
            continue  # parse error or budget stop: no document, message on stderr
        if proc.returncode not in (0, 1):
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        try:
            doc = json.loads(proc.stdout)
        except json.JSONDecodeError as e:
            print(f"FAIL {' '.join(args)}: not JSON: {e}")
            failures += 1
            continue
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        for e in errors:
            print(f"FAIL {' '.join(args)}: {list(e.path)}: {e.message}")
        failures += bool(errors)
        validated += 1
    print(f"{validated} documents validated, {failures} failures")
    return 1 if failures or validated == 0 else 0


if __name__ == "__main__":
    sys.exit(main())
