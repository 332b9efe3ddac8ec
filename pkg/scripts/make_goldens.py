#!/usr/bin/env python3
"""Regenerate the committed golden API responses under tests/golden/.

Run from the repository root after an intentional output-format change:

    python scripts/make_goldens.py
"""

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))

from goldens_spec import GOLDEN_DIR, collect_golden_bytes  # noqa: E402


def main():
    GOLDEN_DIR.mkdir(exist_ok=True)
    for name, payload in collect_golden_bytes(ROOT / "fixtures"):
        target = GOLDEN_DIR / f"{name}.json"
        target.write_bytes(payload)
        print(f"wrote {target.relative_to(ROOT)} ({len(payload)} bytes)")


if __name__ == "__main__":
    main()
