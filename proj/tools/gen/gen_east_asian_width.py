#!/usr/bin/env python3
"""Emits core/src/east_asian_width.inc: codepoint intervals whose East Asian
Width property is Wide (W) or Fullwidth (F), using Python's unicodedata."""

import sys
import unicodedata


# Unassigned codepoints default to N, except the ideograph planes and
# blocks that UAX #11 reserves as W. unicodedata reports them as F.
DEFAULT_WIDE = [(0x3400, 0x4DBF), (0x4E00, 0x9FFF), (0xF900, 0xFAFF),
                (0x20000, 0x2FFFD), (0x30000, 0x3FFFD)]


def is_wide(cp):
    ch = chr(cp)
    if unicodedata.category(ch) == "Cn":
        return any(lo <= cp <= hi for lo, hi in DEFAULT_WIDE)
    return unicodedata.east_asian_width(ch) in ("W", "F")


def wide_intervals():
    intervals = []
    start = None
    for cp in range(0x110000):
        wide = is_wide(cp)
        if wide and start is None:
            start = cp
        elif not wide and start is not None:
            intervals.append((start, cp - 1))
            start = None
    if start is not None:
        intervals.append((start, 0x10FFFF))
    return intervals


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else "core/src/east_asian_width.inc"
    with open(out, "w", encoding="utf-8", newline="\n") as f:
        f.write("// Generated by tools/gen/gen_east_asian_width.py from Unicode %s.\n"
                % unicodedata.unidata_version)
        f.write("// East Asian Width W and F ranges, sorted, non-overlapping.\n")
        for lo, hi in wide_intervals():
            f.write("    {0x%05X, 0x%05X},\n" % (lo, hi))


if __name__ == "__main__":
    main()
