#!/usr/bin/env python3
"""Pretty-print an emitted CSV table and confirm its provenance checksum."""

import argparse
import sys

PREFIX = "# checksum: fnv1a64:"


def fnv1a64(data: bytes) -> int:
    h = 0xCBF29CE484222325
    for b in data:
        h ^= b
        h = (h * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return h


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("table", help="CSV file produced by sgsim")
    ap.add_argument("--no-verify", action="store_true", help="skip the checksum")
    args = ap.parse_args()

    with open(args.table, "rb") as f:
        raw = f.read()

    nl = raw.find(b"\n")
    first = raw[:nl].decode()
    if not first.startswith(PREFIX):
        print(f"error: {args.table} has no checksum line", file=sys.stderr)
        return 1
    if not args.no_verify:
        actual = f"{fnv1a64(raw[nl + 1:]):016x}"
        claimed = first[len(PREFIX):]
        if claimed != actual:
            print(f"error: checksum mismatch ({claimed} != {actual})", file=sys.stderr)
            return 1

    meta, header, rows = [], None, []
    for line in raw[nl + 1:].decode().splitlines():
        if line.startswith("#"):
            meta.append(line[1:].strip())
        elif header is None:
            header = line.split(",")
        else:
            rows.append(line.split(","))

    for m in meta:
        print(m)
    if header is None:
        print("error: no column header", file=sys.stderr)
        return 1
    widths = [
        max(len(header[i]), *(len(r[i]) for r in rows)) if rows else len(header[i])
        for i in range(len(header))
    ]
    print()
    print("  ".join(h.ljust(w) for h, w in zip(header, widths)))
    print("  ".join("-" * w for w in widths))
    for r in rows:
        print("  ".join(v.ljust(w) for v, w in zip(r, widths)))
    print(f"\n{len(rows)} rows, checksum {'skipped' if args.no_verify else 'ok'}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
