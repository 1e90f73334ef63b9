#!/usr/bin/env python3
"""Regenerates include/acd/unicode_data.hpp from Python's unicodedata.

Punctuation = Unicode general categories Pd, Ps, Pe, Pi, Pf, Po.
Connector punctuation (Pc, e.g. underscore) is deliberately excluded so
tokens such as emoji replacement words survive punctuation stripping.
Emoji ranges are the common pictographic blocks plus sequence components.
"""

import sys
import unicodedata

PUNCT_CATS = {"Pd", "Ps", "Pe", "Pi", "Pf", "Po"}

# Pictographic blocks a social-media cleaner should treat as emoji.
EMOJI_BASE_RANGES = [
    (0x231A, 0x231B),    # watch, hourglass
    (0x23E9, 0x23FA),    # AV symbols
    (0x25FD, 0x25FE),    # small squares
    (0x2600, 0x27BF),    # misc symbols + dingbats
    (0x2B1B, 0x2B1C),    # large squares
    (0x2B50, 0x2B50),    # star
    (0x2B55, 0x2B55),    # heavy circle
    (0x1F000, 0x1F0FF),  # mahjong, dominoes, cards
    (0x1F100, 0x1F1FF),  # enclosed alphanumerics, regional indicators
    (0x1F200, 0x1F2FF),  # enclosed ideographic
    (0x1F300, 0x1F5FF),  # misc symbols and pictographs
    (0x1F600, 0x1F64F),  # emoticons
    (0x1F680, 0x1F6FF),  # transport
    (0x1F7E0, 0x1F7FF),  # colored shapes
    (0x1F900, 0x1F9FF),  # supplemental symbols
    (0x1FA70, 0x1FAFF),  # symbols ext-A
]

# Invisible codepoints that extend an emoji cluster but are not emoji alone.
EMOJI_COMPONENTS = [
    (0x200D, 0x200D),    # zero width joiner
    (0x20E3, 0x20E3),    # combining keycap
    (0xFE0E, 0xFE0F),    # variation selectors 15/16
]


def punct_ranges():
    ranges = []
    start = None
    prev = None
    for cp in range(0x110000):
        ch = chr(cp)
        if unicodedata.category(ch) in PUNCT_CATS:
            if start is None:
                start = cp
            prev = cp
        else:
            if start is not None:
                ranges.append((start, prev))
                start = None
    if start is not None:
        ranges.append((start, prev))
    return ranges


def emit(out):
    pr = punct_ranges()
    out.write("// Generated by scripts/gen_unicode_tables.py — do not edit by hand.\n")
    out.write("#pragma once\n\n#include <cstdint>\n\nnamespace acd::uni {\n\n")
    out.write("struct CpRange { uint32_t lo; uint32_t hi; };\n\n")
    out.write("// General categories Pd, Ps, Pe, Pi, Pf, Po (Pc excluded).\n")
    out.write(f"inline constexpr CpRange kPunctRanges[{len(pr)}] = {{\n")
    for lo, hi in pr:
        out.write(f"    {{0x{lo:04X}, 0x{hi:04X}}},\n")
    out.write("};\n\n")
    out.write(f"inline constexpr CpRange kEmojiRanges[{len(EMOJI_BASE_RANGES)}] = {{\n")
    for lo, hi in EMOJI_BASE_RANGES:
        out.write(f"    {{0x{lo:04X}, 0x{hi:04X}}},\n")
    out.write("};\n\n")
    out.write(f"inline constexpr CpRange kEmojiComponentRanges[{len(EMOJI_COMPONENTS)}] = {{\n")
    for lo, hi in EMOJI_COMPONENTS:
        out.write(f"    {{0x{lo:04X}, 0x{hi:04X}}},\n")
    out.write("};\n\n")
    out.write("}  // namespace acd::uni\n")


if __name__ == "__main__":
    with open(sys.argv[1], "w", encoding="utf-8") as f:
        emit(f)
