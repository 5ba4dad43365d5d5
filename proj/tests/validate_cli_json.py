"""Validate the CLI's --format json output against docs/schemas."""
import json
import subprocess
import sys
from pathlib import Path

import jsonschema


def run(cli, *args):
    proc = subprocess.run([cli, *args], capture_output=True, text=True)
    return proc.returncode, proc.stdout


def main():
    cli, root = sys.argv[1], Path(sys.argv[2])
    schemas = root / "docs" / "schemas"
    fixtures = root / "tests" / "fixtures" / "cli"
    words = ["--words", str(fixtures / "words.txt"), "--format", "json"]
    report = json.loads((schemas / "check_report.schema.json").read_text())
    suggestions = json.loads((schemas / "suggestions.schema.json").read_text())

    for name, expected_exit in (("clean.txt", 0), ("misspelled.txt", 1)):
        code, out = run(cli, "check", *words, str(fixtures / name))
        assert code == expected_exit, f"{name}: exit {code}"
        for line in out.splitlines():
            doc = json.loads(line)
            doc.pop("file", None)
            jsonschema.validate(doc, report)

    code, out = run(cli, "suggest", "اسئر", *words)
    assert code == 0, f"suggest: exit {code}"
    jsonschema.validate(json.loads(out), suggestions)
    print("cli json output matches schemas")


if __name__ == "__main__":
    main()
