"""Document round trips, tamper detection, and the command-line surface.

Run:  python3 demos/documents_and_cli.py
"""

import argparse
import json
import tempfile
from pathlib import Path

from spheremap import (
    DegreeMismatch,
    ValidationError,
    construct,
    load_certificate,
    parse,
    serialize,
)
from spheremap.cli import main as cli


def main() -> None:
    argparse.ArgumentParser(description=__doc__).parse_args()

    print("-- canonical serialization ---------------------------------------")
    cert = construct(2, 3)
    text = serialize(cert)
    print(f"document: {len(text)} bytes, "
          f"{len(json.loads(text)['facets'])} facets")
    print(f"byte-identical round trip: {serialize(load_certificate(text)) == text}")
    print()

    print("-- parsing re-validates everything --------------------------------")
    doc = json.loads(text)
    doc["metadata"]["claimed_degree"] = 9
    try:
        parse(json.dumps(doc))
    except DegreeMismatch as e:
        print(f"tampered claim rejected: {e}")
    doc = json.loads(text)
    doc["facets"].append([1, 2, 99])
    try:
        parse(json.dumps(doc))
    except ValidationError as e:
        print(f"broken complex rejected: {e}")
    print()

    print("-- the same flows through the CLI ---------------------------------")
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "sphere.json"
        for argv in (
            ["construct", "--n", "2", "--d", "3", "--out", str(path)],
            ["verify", str(path)],
            ["insert", str(path), "--facet", "1,2,3", "--out", str(path)],
            ["verify", str(path)],
            ["search", "--n", "1", "--d", "2", "--max-vertices", "6"],
        ):
            print(f"$ spheremap {' '.join(argv)}")
            code = cli(argv)
            print(f"(exit {code})")
            print()


if __name__ == "__main__":
    main()
