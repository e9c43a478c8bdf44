#!/usr/bin/env python3
"""Check that design decisions, code references and generated docs agree.

- every `### ID` entry in docs/DESIGN.md is referenced as `DESIGN ID` in the
  sources, and every reference resolves to an entry;
- docs/DERIVATIONS.md covers the required oracle derivations;
- docs/CONVENTIONS.txt and every golden fixture carry the same hash.
"""

import json
import re
import sys
from pathlib import Path

SOURCE_DIRS = ("src", "include", "tools", "python")
SOURCE_SUFFIXES = {".cpp", ".hpp", ".h", ".py"}
REQUIRED_DERIVATIONS = (
    "Closed forms for n = 0, 1",
    "Derivative relation",
    "Laplace limit",
    "Generating-function check",
    "Disk scaling factor",
    "Wigner function",
)
MODULES = ("POLY", "QUAD", "EIG", "GL", "SCALE", "WIG", "CLI", "FIX")


def main(root: Path) -> int:
    errors = []

    design = (root / "docs" / "DESIGN.md").read_text()
    defined = re.findall(r"^### ([A-Z]+-\d+)\b", design, flags=re.M)
    dupes = {d for d in defined if defined.count(d) > 1}
    errors += [f"DESIGN.md: duplicate entry {d}" for d in sorted(dupes)]
    for module in MODULES:
        if not any(d.startswith(module + "-") for d in defined):
            errors.append(f"DESIGN.md: no entries for {module}")

    referenced = {}
    for top in SOURCE_DIRS:
        for path in sorted((root / top).rglob("*")):
            if path.suffix not in SOURCE_SUFFIXES or path.name == Path(__file__).name:
                continue
            for ident in re.findall(r"DESIGN ([A-Z]+-\d+)", path.read_text()):
                referenced.setdefault(ident, []).append(str(path.relative_to(root)))

    for ident in defined:
        if ident not in referenced:
            errors.append(f"{ident}: documented but not referenced in the sources")
    for ident, files in sorted(referenced.items()):
        if ident not in defined:
            errors.append(f"{ident}: referenced in {files[0]} but not documented")

    derivations = (root / "docs" / "DERIVATIONS.md").read_text()
    headings = re.findall(r"^## (.+)$", derivations, flags=re.M)
    for want in REQUIRED_DERIVATIONS:
        if not any(h.startswith(want) for h in headings):
            errors.append(f"DERIVATIONS.md: missing section '{want}'")

    conventions = (root / "docs" / "CONVENTIONS.txt").read_text()
    match = re.search(r"^hash=([0-9a-f]{16})$", conventions, flags=re.M)
    if not match:
        errors.append("CONVENTIONS.txt: no hash line")
    else:
        fixtures = sorted((root / "tests" / "fixtures").glob("*.json"))
        if not fixtures:
            errors.append("tests/fixtures: no fixtures")
        for path in fixtures:
            stored = json.loads(path.read_text()).get("conventions_hash")
            if stored != match.group(1):
                errors.append(f"{path.name}: conventions hash {stored} != {match.group(1)}")

    for e in errors:
        print(f"doc-coverage: {e}")
    print(f"doc-coverage: {len(defined)} decisions, {len(referenced)} referenced, {len(errors)} problems")
    return 1 if errors else 0


if __name__ == "__main__":
    sys.exit(main(Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent))
