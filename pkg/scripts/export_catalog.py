#!/usr/bin/env python3
"""Write every catalog algebra to a directory as schema JSON files.

Files are canonical: re-exporting over an existing tree is a no-op unless
the catalog itself changed.
"""

from __future__ import annotations

import argparse
from pathlib import Path

from leibnizalg import dump_algebra_json
from leibnizalg.catalog import standard_catalog


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("outdir", type=Path, help="target directory")
    args = parser.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)
    for label, alg, levi in standard_catalog():
        path = args.outdir / f"{label}.json"
        path.write_text(dump_algebra_json(alg, levi), encoding="utf-8")
        print(f"{path}  (dim {alg.dim})")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
