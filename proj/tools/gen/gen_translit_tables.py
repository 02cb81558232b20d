#!/usr/bin/env python3
"""Regenerates the romanization tables under data/translit/.

Chinese readings come from pypinyin's single-character dictionary (first,
most common reading, tone marks removed). Japanese kanji readings come from
pykakasi. Kana and Hangul tables are produced algorithmically. Arabic,
Hebrew and Russian tables are written out by hand below.

Usage: python3 tools/gen/gen_translit_tables.py data/translit
"""

import sys
import unicodedata
from pathlib import Path


def strip_tones(syllable):
    out = []
    for ch in unicodedata.normalize("NFD", syllable):
        if unicodedata.combining(ch):
            continue
        out.append(ch)
    text = "".join(out).replace("ü", "v").replace("ê", "e")
    return text.lower()


def write_table(path, header, rows):
    # Longest sequences first; ties ordered by codepoint for stable diffs.
    rows = sorted(set(rows), key=lambda r: (-len(r[0]), r[0]))
    for seq, ascii_out in rows:
        assert all(c.isascii() and c.isalnum() for c in ascii_out), (seq, ascii_out)
        assert seq and not seq.isascii(), seq
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for line in header:
            f.write("# " + line + "\n")
        for seq, ascii_out in rows:
            f.write(seq + "\t" + ascii_out + "\n")


def chinese_rows():
    from pypinyin.pinyin_dict import pinyin_dict

    rows = []
    for cp, readings in pinyin_dict.items():
        in_block = 0x4E00 <= cp <= 0x9FFF or 0x3400 <= cp <= 0x4DBF or 0xF900 <= cp <= 0xFAFF
        if not in_block:
            continue
        first = readings.split(",")[0]
        ascii_out = strip_tones(first)
        if ascii_out.isascii() and ascii_out.isalpha():
            rows.append((chr(cp), ascii_out))
    return rows


KANA_BASE = {
    "あ": "a", "い": "i", "う": "u", "え": "e", "お": "o",
    "か": "ka", "き": "ki", "く": "ku", "け": "ke", "こ": "ko",
    "が": "ga", "ぎ": "gi", "ぐ": "gu", "げ": "ge", "ご": "go",
    "さ": "sa", "し": "shi", "す": "su", "せ": "se", "そ": "so",
    "ざ": "za", "じ": "ji", "ず": "zu", "ぜ": "ze", "ぞ": "zo",
    "た": "ta", "ち": "chi", "つ": "tsu", "て": "te", "と": "to",
    "だ": "da", "ぢ": "ji", "づ": "zu", "で": "de", "ど": "do",
    "な": "na", "に": "ni", "ぬ": "nu", "ね": "ne", "の": "no",
    "は": "ha", "ひ": "hi", "ふ": "fu", "へ": "he", "ほ": "ho",
    "ば": "ba", "び": "bi", "ぶ": "bu", "べ": "be", "ぼ": "bo",
    "ぱ": "pa", "ぴ": "pi", "ぷ": "pu", "ぺ": "pe", "ぽ": "po",
    "ま": "ma", "み": "mi", "む": "mu", "め": "me", "も": "mo",
    "や": "ya", "ゆ": "yu", "よ": "yo",
    "ら": "ra", "り": "ri", "る": "ru", "れ": "re", "ろ": "ro",
    "わ": "wa", "ゐ": "i", "ゑ": "e", "を": "o", "ん": "n",
    "ぁ": "a", "ぃ": "i", "ぅ": "u", "ぇ": "e", "ぉ": "o",
    "ゃ": "ya", "ゅ": "yu", "ょ": "yo", "ゎ": "wa", "ゔ": "vu",
}

YOON = {"ゃ": "a", "ゅ": "u", "ょ": "o"}


def kana_rows():
    base = dict(KANA_BASE)
    digraphs = {}
    for kana, roma in KANA_BASE.items():
        if roma.endswith("i") and len(roma) >= 2 and kana not in "ぃゐ":
            stem = roma[:-1]
            for small, vowel in YOON.items():
                if stem in ("sh", "ch", "j"):
                    digraphs[kana + small] = stem + vowel
                else:
                    digraphs[kana + small] = stem + "y" + vowel
    base.update(digraphs)

    rows = {}
    for kana, roma in base.items():
        rows[kana] = roma
        if roma[0] not in "aeioun":
            doubled = ("t" + roma) if roma.startswith("ch") else (roma[0] + roma)
            rows["っ" + kana] = doubled
        if roma[-1] in "aeiou":
            rows[kana + "ー"] = roma + roma[-1]

    out = []
    for seq, roma in rows.items():
        out.append((seq, roma))
        kata = "".join(chr(ord(c) + 0x60) if 0x3041 <= ord(c) <= 0x3096 else c for c in seq)
        out.append((kata, roma))
    out.append(("ー", ""))
    return out


def japanese_rows():
    rows = kana_rows()
    try:
        import pykakasi
    except ImportError:
        return rows
    kks = pykakasi.kakasi()
    for cp in range(0x4E00, 0xA000):
        ch = chr(cp)
        conv = kks.convert(ch)
        if not conv:
            continue
        roma = conv[0].get("hepburn", "")
        if conv[0].get("orig") == roma or not roma:
            continue
        roma = "".join(c for c in roma.lower() if c.isascii() and c.isalnum())
        if roma:
            rows.append((ch, roma))
    return rows


HANGUL_INITIAL = ["g", "kk", "n", "d", "tt", "r", "m", "b", "pp", "s", "ss", "",
                  "j", "jj", "ch", "k", "t", "p", "h"]
HANGUL_MEDIAL = ["a", "ae", "ya", "yae", "eo", "e", "yeo", "ye", "o", "wa", "wae",
                 "oe", "yo", "u", "wo", "we", "wi", "yu", "eu", "ui", "i"]
HANGUL_FINAL = ["", "k", "k", "k", "n", "n", "n", "t", "l", "k", "m", "l", "l", "l",
                "p", "l", "m", "p", "p", "t", "t", "ng", "t", "t", "k", "t", "p", "t"]


def korean_rows():
    rows = []
    for index in range(11172):
        initial = index // (21 * 28)
        medial = (index % (21 * 28)) // 28
        final = index % 28
        roma = HANGUL_INITIAL[initial] + HANGUL_MEDIAL[medial] + HANGUL_FINAL[final]
        rows.append((chr(0xAC00 + index), roma))
    return rows


ARABIC = {
    "ا": "a", "أ": "a", "إ": "e", "آ": "aa", "ٱ": "a", "ء": "2", "ؤ": "2", "ئ": "2",
    "ب": "b", "ت": "t", "ث": "th", "ج": "j", "ح": "7", "خ": "kh", "د": "d",
    "ذ": "dh", "ر": "r", "ز": "z", "س": "s", "ش": "sh", "ص": "s", "ض": "d",
    "ط": "t", "ظ": "z", "ع": "3", "غ": "gh", "ف": "f", "ق": "q", "ك": "k",
    "ل": "l", "م": "m", "ن": "n", "ه": "h", "ة": "a", "و": "w", "ي": "y",
    "ى": "a", "پ": "p", "چ": "ch", "ژ": "zh", "گ": "g", "ک": "k", "ی": "y",
    "َ": "a", "ِ": "i", "ُ": "u", "ً": "an", "ٍ": "in",
    "ٌ": "un", "ْ": "", "ّ": "", "ـ": "", "لا": "la",
    "٠": "0", "١": "1", "٢": "2", "٣": "3", "٤": "4", "٥": "5", "٦": "6",
    "٧": "7", "٨": "8", "٩": "9",
}

HEBREW = {
    "א": "a", "ב": "b", "ג": "g", "ד": "d", "ה": "h", "ו": "v", "ז": "z",
    "ח": "ch", "ט": "t", "י": "y", "כ": "k", "ך": "k", "ל": "l", "מ": "m",
    "ם": "m", "נ": "n", "ן": "n", "ס": "s", "ע": "a", "פ": "p", "ף": "f",
    "צ": "ts", "ץ": "ts", "ק": "k", "ר": "r", "ש": "sh", "ת": "t",
    "וו": "v", "יי": "y", "ַ": "a", "ָ": "a", "ֶ": "e",
    "ֵ": "e", "ִ": "i", "ֹ": "o", "ֻ": "u", "ְ": "e",
    "ּ": "", "ׁ": "", "ׂ": "",
}

RUSSIAN = {
    "а": "a", "б": "b", "в": "v", "г": "g", "д": "d", "е": "e", "ё": "yo",
    "ж": "zh", "з": "z", "и": "i", "й": "y", "к": "k", "л": "l", "м": "m",
    "н": "n", "о": "o", "п": "p", "р": "r", "с": "s", "т": "t", "у": "u",
    "ф": "f", "х": "kh", "ц": "ts", "ч": "ch", "ш": "sh", "щ": "shch",
    "ъ": "", "ы": "y", "ь": "", "э": "e", "ю": "yu", "я": "ya",
    "і": "i", "ї": "yi", "є": "ye", "ґ": "g",
}


def russian_rows():
    rows = []
    for lower, roma in RUSSIAN.items():
        rows.append((lower, roma))
        upper = lower.upper()
        if upper != lower:
            rows.append((upper, roma[:1].upper() + roma[1:]))
    return rows


def main():
    out_dir = Path(sys.argv[1] if len(sys.argv) > 1 else "data/translit")
    out_dir.mkdir(parents=True, exist_ok=True)
    write_table(out_dir / "chinese.tsv",
                ["Chinese: Hanyu Pinyin, most common reading, tones dropped, u-umlaut as v."],
                chinese_rows())
    write_table(out_dir / "japanese.tsv",
                ["Japanese: modified Hepburn for kana; kanji use a single pykakasi reading."],
                japanese_rows())
    write_table(out_dir / "korean.tsv",
                ["Korean: Revised Romanization, syllable-by-syllable, no assimilation rules."],
                korean_rows())
    write_table(out_dir / "arabic.tsv",
                ["Arabic: chat-alphabet (Arabizi) convention, digits for 7=ha, 3=ain, 2=hamza.",
                 "Long and short vowels both emit the short vowel letter."],
                ARABIC.items())
    write_table(out_dir / "hebrew.tsv",
                ["Hebrew: simplified popular romanization (not ISO 259); niqqud optional."],
                HEBREW.items())
    write_table(out_dir / "russian.tsv",
                ["Russian: simplified BGN/PCGN-style scheme, hard and soft signs dropped."],
                russian_rows())


if __name__ == "__main__":
    main()
