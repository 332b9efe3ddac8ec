#!/usr/bin/env python3
"""Stub downloader for larger public demo datasets.

The repository ships small hand-built fixtures under fixtures/; this script
is the place to pull real LOD dumps (DBpedia extracts, Eurostat, World Bank
linked data, ...) into a data directory for demos. Network access and the
exact dump URLs are deployment-specific, so the catalog below is left empty
on purpose.

Usage:
    python scripts/fetch_demo_datasets.py --data-dir ./synopsviz-data
"""

import argparse
import sys

CATALOG = {
    # "dbpedia-cities": "https://.../cities.nt.gz",
    # "eurostat-gdp": "https://.../gdp.ttl",
}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--data-dir", default="./synopsviz-data")
    parser.add_argument("name", nargs="?", help="catalog entry to fetch")
    args = parser.parse_args()
    if not CATALOG:
        print(
            "No demo dataset URLs are configured. Add entries to CATALOG in\n"
            f"{__file__} and re-run; meanwhile the fixtures/ directory works\n"
            "with every command, e.g.:\n\n"
            f"    synopsviz ingest fixtures/countries.nt --data-dir {args.data_dir}"
        )
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
