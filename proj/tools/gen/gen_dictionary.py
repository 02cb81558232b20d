#!/usr/bin/env python3
"""Builds data/dict/codeintl.tsv from the compact table in dictionary_words.txt.

Each table row is `en|es|zh|ar`. A cell is a plain target, `-` for an
empty target (the word is dropped), `v:INF/IMP` for a Spanish verb,
`v:IMP` for an Arabic verb, and `n:X` for an extra noun reading. `+`
joins several readings.

Usage: python3 tools/gen/gen_dictionary.py data/dict/codeintl.tsv
"""

import sys
from pathlib import Path

LANGS = ("es", "zh", "ar")
HEADER = """# from\tto\tsource\ttarget\tpos\ttense
# Small offline translation dictionary for the bundled corpus and tests.
# An empty target drops the word. Verb rows carry a tense so method names
# can prefer the form usual in the target language.
"""


def readings(lang, cell):
    for part in cell.split("+"):
        if part == "-":
            yield "", "", ""
        elif part.startswith("v:"):
            forms = part[2:].split("/")
            if lang == "es":
                yield forms[0], "verb", "infinitive"
                yield forms[1], "verb", "imperative"
            else:
                yield forms[0], "verb", "imperative"
        elif part.startswith("n:"):
            yield part[2:], "noun", ""
        else:
            yield part, "", ""


def main(out_path):
    source = Path(__file__).with_name("dictionary_words.txt")
    rows = {lang: [] for lang in LANGS}
    seen = set()
    for line in source.read_text(encoding="utf-8").splitlines():
        if not line or line.startswith("#"):
            continue
        cells = line.split("|")
        if len(cells) != 4:
            raise SystemExit(f"bad row: {line}")
        word = cells[0]
        if word in seen:
            raise SystemExit(f"duplicate headword: {word}")
        seen.add(word)
        for lang, cell in zip(LANGS, cells[1:]):
            for target, pos, tense in readings(lang, cell):
                cols = ["en", lang, word, target, pos, tense]
                while len(cols) > 4 and cols[-1] == "":
                    cols.pop()
                rows[lang].append("\t".join(cols))
    with open(out_path, "w", encoding="utf-8", newline="\n") as out:
        out.write(HEADER)
        for lang in LANGS:
            out.write("\n".join(rows[lang]) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/dict/codeintl.tsv")
