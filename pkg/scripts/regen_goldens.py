"""Rewrite the CLI golden files in tests/golden from the current code.

Review the diff before committing: goldens are the byte-stability contract.
"""

import sys
from pathlib import Path

TESTS = Path(__file__).resolve().parent.parent / "tests"
sys.path.insert(0, str(TESTS))

from test_acceptance import GOLDEN, cli_outputs  # noqa: E402


def main():
    GOLDEN.mkdir(exist_ok=True)
    for name, data in cli_outputs().items():
        (GOLDEN / f"{name}.txt").write_bytes(data)
        print(f"wrote {name}.txt ({len(data)} bytes)")


if __name__ == "__main__":
    main()
