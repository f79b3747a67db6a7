"""Runs `qbern verify` on a config and validates the JSON report against the schema."""
import json
import subprocess
import sys

import jsonschema


def main() -> int:
    binary, schema_path, config = sys.argv[1:4]
    schema = json.load(open(schema_path))
    for extra in ([], ["--suite", "convolution-identity"]):
        proc = subprocess.run([binary, "verify", "--config", config, *extra], capture_output=True, text=True)
        if proc.returncode != 0:
            print(proc.stderr)
            return 1
        jsonschema.validate(json.loads(proc.stdout), schema)
    print("report validates against", schema_path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
