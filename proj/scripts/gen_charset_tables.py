#!/usr/bin/env python3
"""Regenerates the large character-folding tables under data/tables/.

Handwritten tables (ligatures, symbols, abbreviations, ...) are edited
directly; this script only produces the inventories that are mechanical
functions of the Unicode database:

  letters.tsv       Arabic-variant and presentation forms -> Persian letters,
                    decorated/enclosed/accented Latin -> ASCII letters
  digits.tsv        digit variants -> Persian digits
  punctuation.tsv   punctuation variants -> canonical marks, vulgar fractions
  entities.tsv      HTML5 named character references

Usage: python3 scripts/gen_charset_tables.py [data_dir]
"""

import html.entities
import os
import sys
import unicodedata

PERSIAN_DIGITS = "۰۱۲۳۴۵۶۷۸۹"

# Arabic-script letters that have a distinct canonical Persian form.
ARABIC_TO_PERSIAN = {
    "ي": "ی", "ى": "ی", "ے": "ی", "ۓ": "ی",
    "ې": "ی", "ۍ": "ی", "ێ": "ی", "ۑ": "ی",
    "ك": "ک", "ڪ": "ک", "ػ": "ک", "ؼ": "ک",
    "ڬ": "ک", "ڭ": "ک", "ڮ": "ک",
    "ة": "ه", "ە": "ه", "ھ": "ه", "ہ": "ه",
    "ۃ": "ه", "ۂ": "ۀ",
    "ٱ": "ا", "إ": "ا", "ٲ": "ا", "ٳ": "ا",
    "ٵ": "ا",
    "ۆ": "و", "ۇ": "و", "ۈ": "و", "ۉ": "و",
    "ۊ": "و", "ۋ": "و", "ۏ": "و",
    "ٶ": "ؤ", "ٷ": "ؤ",
    "ـ": "",  # tatweel
}


def esc(s):
    out = []
    for ch in s:
        cp = ord(ch)
        if ch == "\\":
            out.append("\\\\")
        elif ch == "\t":
            out.append("\\t")
        elif cp < 0x20 or unicodedata.category(ch) in ("Zs", "Cf", "Mn", "Zl",
                                                        "Zp", "Cc", "Co"):
            out.append("\\u%04X" % cp if cp < 0x10000 else "\\U%08X" % cp)
        elif ch == "#" and not out:
            out.append("\\u0023")
        else:
            out.append(ch)
    return "".join(out)


def fold_arabic(s):
    return "".join(ARABIC_TO_PERSIAN.get(c, c) for c in s)


def write(path, header, rows):
    with open(path, "w", encoding="utf-8") as f:
        f.write(header)
        for surface, replacement, note in rows:
            f.write("%s\t%s\t%s\n" % (esc(surface), esc(replacement), note))


def name(ch):
    return unicodedata.name(ch, "U+%04X" % ord(ch))


def letters():
    rows = []
    seen = set()

    def add(src, dst):
        if src in seen or src == dst:
            return
        seen.add(src)
        rows.append((src, dst, name(src)))

    for src, dst in ARABIC_TO_PERSIAN.items():
        add(src, dst)

    # Arabic presentation forms. The honorific block FDF0-FDFF is spelled
    # out by hand in ligatures.tsv; FE70-FE7F are isolated harakat.
    for cp in list(range(0xFB50, 0xFDF0)) + list(range(0xFE80, 0xFEFD)):
        ch = chr(cp)
        if unicodedata.category(ch) == "Cn":
            continue
        nfkc = unicodedata.normalize("NFKC", ch)
        if nfkc == ch or not nfkc.strip() or nfkc[0] == " ":
            continue
        add(ch, fold_arabic(nfkc))

    # Latin: fullwidth, mathematical alphanumerics, circled/squared/
    # parenthesized letters, and accented Latin-1 / Latin Extended-A.
    ranges = [(0xFF21, 0xFF3A), (0xFF41, 0xFF5A), (0x1D400, 0x1D6A3),
              (0x24B6, 0x24E9), (0x249C, 0x24B5), (0x1F110, 0x1F129),
              (0x1F130, 0x1F149)]
    for lo, hi in ranges:
        for cp in range(lo, hi + 1):
            ch = chr(cp)
            if unicodedata.category(ch) == "Cn":
                continue
            letters_only = [c for c in unicodedata.normalize("NFKC", ch)
                            if c.isascii() and c.isalpha()]
            if len(letters_only) == 1:
                add(ch, letters_only[0])
    # Negative circled / negative squared capitals have no decomposition.
    for base in (0x1F150, 0x1F170):
        for k in range(26):
            add(chr(base + k), chr(ord("A") + k))
    for cp in list(range(0xC0, 0x100)) + list(range(0x100, 0x180)):
        ch = chr(cp)
        base = unicodedata.normalize("NFD", ch)[0]
        if base.isascii() and base.isalpha() and base != ch:
            add(ch, base)
    return rows


def digits():
    rows = []
    for d in range(10):
        rows.append((str(d), PERSIAN_DIGITS[d], "DIGIT %d" % d))
        rows.append((chr(0x0660 + d), PERSIAN_DIGITS[d], name(chr(0x0660 + d))))
    ranges = [(0xFF10, 0xFF19), (0x1D7CE, 0x1D7FF), (0x2460, 0x249B),
              (0x24EA, 0x24FF), (0x2776, 0x2793), (0x3251, 0x325F),
              (0x32B1, 0x32BF), (0x1F100, 0x1F10C), (0x1FBF0, 0x1FBF9)]
    for lo, hi in ranges:
        for cp in range(lo, hi + 1):
            ch = chr(cp)
            if unicodedata.category(ch) == "Cn":
                continue
            value = unicodedata.numeric(ch, None)
            if value is None:
                # U+1F10B/C (dingbat circled sans-serif zero) predate the
                # numeric property in older databases.
                if cp in (0x1F10B, 0x1F10C):
                    value = 0
                else:
                    continue
            text = "".join(PERSIAN_DIGITS[int(c)] for c in str(int(value)))
            rows.append((ch, text, name(ch)))
    return rows


def punctuation():
    pairs = {
        "٪": "%", "﹪": "%", "％": "%", "℅": "%",
        "٫": ".", "٬": ",", "۔": ".",
        "٭": "*", "⁎": "*", "∗": "*",
        "“": '"', "”": '"', "„": '"', "‟": '"',
        "〝": '"', "〞": '"',
        "‘": "'", "’": "'", "‚": "'", "‛": "'",
        "‐": "-", "‑": "-", "‒": "-", "–": "-",
        "—": "-", "―": "-", "−": "-",
        "…": "...",
        "\u200b": "", "\ufeff": "",
    }
    for cp in list(range(0x2000, 0x200B)) + [0x00A0, 0x202F, 0x205F, 0x3000]:
        pairs[chr(cp)] = " "
    # Fullwidth ASCII punctuation and small form variants.
    for cp in range(0xFF01, 0xFF5F):
        ch = chr(cp)
        target = unicodedata.normalize("NFKC", ch)
        if len(target) == 1 and target.isascii() and not target.isalnum():
            pairs.setdefault(ch, target)
    for cp in range(0xFE50, 0xFE6C):
        ch = chr(cp)
        if unicodedata.category(ch) == "Cn":
            continue
        target = unicodedata.normalize("NFKC", ch)
        if len(target) == 1 and target.isascii():
            pairs.setdefault(ch, target)
    rows = [(k, v, name(k)) for k, v in pairs.items()]
    # Vulgar fractions -> Persian-digit fraction notation.
    for cp in list(range(0x2150, 0x215F)) + list(range(0x00BC, 0x00BF)) + [0x2189]:
        ch = chr(cp)
        nfkc = unicodedata.normalize("NFKC", ch)
        if "⁄" not in nfkc:
            continue
        num, den = nfkc.split("⁄")
        to_fa = lambda s: "".join(PERSIAN_DIGITS[int(c)] for c in s)
        rows.append((ch, to_fa(num) + "/" + to_fa(den), name(ch)))
    return rows


def entities():
    rows = []
    for key, value in sorted(html.entities.html5.items()):
        rows.append(("&" + key, value, ""))
    return rows


def main():
    data = sys.argv[1] if len(sys.argv) > 1 else os.path.join(
        os.path.dirname(__file__), "..", "data")
    tables = os.path.join(data, "tables")
    gen = ("# Generated by scripts/gen_charset_tables.py (Unicode %s).\n"
           % unicodedata.unidata_version)
    write(os.path.join(tables, "letters.tsv"),
          gen + "# surface\tcanonical letter\tnote\n", letters())
    write(os.path.join(tables, "digits.tsv"),
          gen + "# surface\tPersian digits\tnote\n", digits())
    write(os.path.join(tables, "punctuation.tsv"),
          gen + "# surface\tcanonical mark\tnote\n", punctuation())
    write(os.path.join(tables, "entities.tsv"),
          gen + "# entity (with or without ';')\tcharacter\n", entities())


if __name__ == "__main__":
    main()
