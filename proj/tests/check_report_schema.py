"""Validate `splinedim dim` JSON reports for the sample partitions against data/report.schema.json."""
import json
import pathlib
import subprocess
import sys

try:
    import jsonschema
except ImportError:
    print("jsonschema not installed; skipping")
    sys.exit(77)

cli, data = sys.argv[1], pathlib.Path(sys.argv[2])
schema = json.loads((data / "report.schema.json").read_text())
specs = [(2, 1), (3, 1), (5, 2), (5, 3)]
checked = 0
for part in sorted(data.glob("*.json")):
    if part.name == "report.schema.json":
        continue
    for d, mu in specs:
        for extra in ([], ["--dump-matrix"]):
            args = [cli, "dim", "-p", str(part), "-d", str(d), "-m", str(mu), *extra]
            out = subprocess.run(args, capture_output=True, text=True, check=True).stdout
            report = json.loads(out)
            jsonschema.validate(report, schema)
            if report["spec"] != {"d": d, "mu": mu}:
                sys.exit(f"{part.name}: spec echoed incorrectly")
            checked += 1
print(f"{checked} reports valid")
