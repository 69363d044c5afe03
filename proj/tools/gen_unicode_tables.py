#!/usr/bin/env python3
"""Generate include/dicoder/detail/unicode_tables.hpp.

Three tables drive text normalization:
  * token ranges: code points that form tokens (general categories L* and Nd)
  * dropped ranges: code points removed outright (M* marks and Cf format chars)
  * fold map: token code points whose normalized form differs from themselves,
    computed as casefold -> NFD -> drop marks, iterated to a fixed point
    (Hangul syllables excluded, see hangul_jamo)

Everything else becomes a single space.

Usage: gen_unicode_tables.py > include/dicoder/detail/unicode_tables.hpp
"""

import sys
import unicodedata

MAX_CP = 0x10FFFF

# Ligatures that canonical decomposition leaves intact but French text
# routinely spells out ("coeur" / "cœur").
EXTRA_FOLDS = {"œ": "oe", "æ": "ae"}

# Precomposed Hangul syllables decompose algorithmically; the C++ side
# reproduces hangul_jamo() instead of carrying 11k table rows.
HANGUL_FIRST, HANGUL_LAST = 0xAC00, 0xD7A3


def hangul_jamo(cp):
    s = cp - HANGUL_FIRST
    lead, vowel, trail = 0x1100 + s // 588, 0x1161 + (s % 588) // 28, s % 28
    out = chr(lead) + chr(vowel)
    if trail:
        out += chr(0x11A7 + trail)
    return out


def is_token(ch):
    cat = unicodedata.category(ch)
    return cat.startswith("L") or cat == "Nd"


def is_dropped(ch):
    cat = unicodedata.category(ch)
    return cat.startswith("M") or cat == "Cf"


def fold_once(s):
    s = s.casefold()
    s = "".join(EXTRA_FOLDS.get(c, c) for c in s)
    s = unicodedata.normalize("NFD", s)
    return "".join(c for c in s if not is_dropped(c))


def fold(ch):
    cur = ch
    for _ in range(8):
        nxt = fold_once(cur)
        if nxt == cur:
            return cur
        cur = nxt
    raise RuntimeError(f"no fixed point for U+{ord(ch):04X}")


def ranges(pred):
    out = []
    start = None
    for cp in range(MAX_CP + 2):
        ok = cp <= MAX_CP and not (0xD800 <= cp <= 0xDFFF) and pred(chr(cp))
        if ok and start is None:
            start = cp
        elif not ok and start is not None:
            out.append((start, cp - 1))
            start = None
    return out


def main():
    token_ranges = ranges(is_token)
    dropped_ranges = ranges(is_dropped)

    folds = []
    max_len = 0
    for cp in range(MAX_CP + 1):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        ch = chr(cp)
        if not is_token(ch):
            continue
        f = fold(ch)
        if HANGUL_FIRST <= cp <= HANGUL_LAST:
            assert f == hangul_jamo(cp), f"U+{cp:04X}"
            continue
        if f == ch:
            continue
        assert f, f"U+{cp:04X} folds to nothing"
        for c in f:
            assert is_token(c), f"U+{cp:04X} folds to non-token U+{ord(c):04X}"
            assert fold(c) == c
        folds.append((cp, f))
        max_len = max(max_len, len(f))

    w = sys.stdout.write
    w("// Generated by tools/gen_unicode_tables.py from Unicode ")
    w(unicodedata.unidata_version + ". Do not edit.\n")
    w("#pragma once\n\n#include <array>\n#include <cstdint>\n\n")
    w("namespace dicoder::detail {\n\n")
    w("struct CodeRange {\n  char32_t first;\n  char32_t last;\n};\n\n")
    w(f"inline constexpr std::size_t kMaxFoldLength = {max_len};\n\n")
    w("struct FoldEntry {\n  char32_t from;\n  std::uint8_t length;\n")
    w("  std::array<char32_t, kMaxFoldLength> to;\n};\n\n")

    def emit_ranges(name, rs):
        w(f"inline constexpr std::array<CodeRange, {len(rs)}> {name} = {{{{\n")
        for a, b in rs:
            w(f"    {{0x{a:04X}, 0x{b:04X}}},\n")
        w("}};\n\n")

    emit_ranges("kTokenRanges", token_ranges)
    emit_ranges("kDroppedRanges", dropped_ranges)

    w(f"inline constexpr std::array<FoldEntry, {len(folds)}> kFoldTable = {{{{\n")
    for cp, f in folds:
        to = ", ".join(f"0x{ord(c):04X}" for c in f)
        w(f"    {{0x{cp:04X}, {len(f)}, {{{to}}}}},\n")
    w("}};\n\n")
    w("}  // namespace dicoder::detail\n")


if __name__ == "__main__":
    main()
