#!/usr/bin/env python3
"""Regenerate the static mapping tables shipped in src/translipi/data/.

The Devanagari and Telugu Unicode blocks are laid out in parallel: a Telugu
letter usually sits exactly 0x0300 above its Devanagari counterpart and its
character name differs only in the script word.  We exploit that to derive the
Telugu tables from one hand-written Devanagari core, then patch the handful of
rows where the parallelism breaks (the short/long e and o vowels).

Outputs (TSV, UTF-8, '#' comments):
  charclass.tsv   codepoint(hex) <TAB> script <TAB> class
  deva_g2p.tsv    grapheme sequence <TAB> phoneme ids
  telu_g2p.tsv    grapheme sequence <TAB> phoneme ids
  deva_p2g.tsv    phoneme id <TAB> independent form <TAB> dependent form|-
  telu_p2g.tsv    phoneme id <TAB> independent form <TAB> dependent form|-
  crossmap.tsv    source id <TAB> pivot id
  matra_map.tsv   dependent vowel sign <TAB> independent vowel letter

Run from the repository root:  python tools/gen_tables.py
"""

import sys
import unicodedata
from pathlib import Path

DATA_DIR = Path(__file__).resolve().parent.parent / "src" / "translipi" / "data"

TELUGU_OFFSET = 0x0300

# ---------------------------------------------------------------------------
# Character classes, by block range.  Unassigned code points are skipped.
# ---------------------------------------------------------------------------

# (start, end_inclusive, class)
DEVANAGARI_CLASS_RANGES = [
    (0x0900, 0x0903, "Modifier"),            # candrabindu variants, anusvara, visarga
    (0x0904, 0x0914, "IndependentVowel"),
    (0x0915, 0x0939, "Consonant"),
    (0x093A, 0x093B, "DependentVowelSign"),  # oe, ooe
    (0x093C, 0x093C, "Nukta"),
    (0x093D, 0x093D, "Unknown"),             # avagraha: carried verbatim
    (0x093E, 0x094C, "DependentVowelSign"),
    (0x094D, 0x094D, "Virama"),
    (0x094E, 0x094E, "Modifier"),            # prishthamatra: no independent counterpart
    (0x094F, 0x094F, "DependentVowelSign"),  # aw
    (0x0950, 0x0950, "Unknown"),             # om
    (0x0951, 0x0954, "Modifier"),            # stress/accent marks
    (0x0955, 0x0955, "Modifier"),            # candra long e: no independent counterpart
    (0x0956, 0x0957, "DependentVowelSign"),  # ue, uue
    (0x0958, 0x095F, "Consonant"),           # precomposed nukta letters
    (0x0960, 0x0961, "IndependentVowel"),
    (0x0962, 0x0963, "DependentVowelSign"),
    (0x0964, 0x0965, "Punctuation"),         # danda, double danda
    (0x0966, 0x096F, "Digit"),
    (0x0970, 0x0970, "Punctuation"),
    (0x0971, 0x0971, "Unknown"),
    (0x0972, 0x0977, "IndependentVowel"),
    (0x0978, 0x097F, "Consonant"),
]

TELUGU_CLASS_RANGES = [
    (0x0C00, 0x0C04, "Modifier"),
    (0x0C05, 0x0C14, "IndependentVowel"),
    (0x0C15, 0x0C39, "Consonant"),
    (0x0C3A, 0x0C3B, "Unknown"),
    (0x0C3C, 0x0C3C, "Nukta"),
    (0x0C3D, 0x0C3D, "Unknown"),             # avagraha
    (0x0C3E, 0x0C4C, "DependentVowelSign"),
    (0x0C4D, 0x0C4D, "Virama"),
    (0x0C55, 0x0C56, "Modifier"),            # length marks: composed away by NFC
    (0x0C58, 0x0C5A, "Consonant"),           # tsa, dza, rrra
    (0x0C5D, 0x0C5D, "Consonant"),           # nakaara pollu
    (0x0C60, 0x0C61, "IndependentVowel"),
    (0x0C62, 0x0C63, "DependentVowelSign"),
    (0x0C66, 0x0C6F, "Digit"),
    (0x0C77, 0x0C77, "Punctuation"),
    (0x0C78, 0x0C7E, "Unknown"),             # fraction digits, not decimal
    (0x0C7F, 0x0C7F, "Unknown"),             # tuumu
]

JOIN_CONTROLS = [(0x200C, "Common", "JoinControl"), (0x200D, "Common", "JoinControl")]

# ---------------------------------------------------------------------------
# Devanagari core grapheme -> phoneme mapping (the hand-written part).
# ---------------------------------------------------------------------------

DEVA_VOWEL_LETTERS = {
    0x0905: "a", 0x0906: "aa", 0x0907: "i", 0x0908: "ii",
    0x0909: "u", 0x090A: "uu", 0x090B: "ru", 0x090C: "lu",
    0x090D: "ec", 0x090E: "es", 0x090F: "e", 0x0910: "ai",
    0x0911: "oc", 0x0912: "os", 0x0913: "o", 0x0914: "au",
    0x0960: "ruu", 0x0961: "luu",
}

DEVA_VOWEL_SIGNS = {
    0x093E: "aa", 0x093F: "i", 0x0940: "ii", 0x0941: "u", 0x0942: "uu",
    0x0943: "ru", 0x0944: "ruu", 0x0945: "ec", 0x0946: "es", 0x0947: "e",
    0x0948: "ai", 0x0949: "oc", 0x094A: "os", 0x094B: "o", 0x094C: "au",
    0x0962: "lu", 0x0963: "luu",
}

DEVA_CONSONANTS = {
    0x0915: "k", 0x0916: "kh", 0x0917: "g", 0x0918: "gh", 0x0919: "ng",
    0x091A: "c", 0x091B: "ch", 0x091C: "j", 0x091D: "jh", 0x091E: "ny",
    0x091F: "tt", 0x0920: "tth", 0x0921: "dd", 0x0922: "ddh", 0x0923: "nn",
    0x0924: "t", 0x0925: "th", 0x0926: "d", 0x0927: "dh", 0x0928: "n",
    0x0929: "nnn",
    0x092A: "p", 0x092B: "ph", 0x092C: "b", 0x092D: "bh", 0x092E: "m",
    0x092F: "y", 0x0930: "r", 0x0931: "rr", 0x0932: "l", 0x0933: "ll",
    0x0934: "zh", 0x0935: "v", 0x0936: "sh", 0x0937: "ss", 0x0938: "s",
    0x0939: "h",
}

DEVA_MODIFIERS = {0x0901: "cb", 0x0902: "am", 0x0903: "vh"}

# Consonant + nukta digraphs.  NFC keeps these decomposed (the precomposed
# letters U+0958..U+095E are composition exclusions), so the two-code-point
# sequence is the canonical spelling.
DEVA_NUKTA_DIGRAPHS = {
    0x0915: "q", 0x0916: "kx", 0x0917: "gx", 0x091C: "z",
    0x0921: "rd", 0x0922: "rdh", 0x092B: "f",
}
PRECOMPOSED_NUKTA = {
    0x0958: "q", 0x0959: "kx", 0x095A: "gx", 0x095B: "z",
    0x095C: "rd", 0x095D: "rdh", 0x095E: "f",
}

NUKTA_CP = 0x093C
JOIN_IDS = {0x200C: "zwnj", 0x200D: "zwj"}

# Telugu rows that the +0x0300 offset cannot produce: the Telugu e/o system
# distinguishes short and long where the names disagree with Devanagari.
TELU_PATCH_LETTERS = {0x0C0E: "es", 0x0C0F: "e", 0x0C12: "os", 0x0C13: "o"}
TELU_PATCH_SIGNS = {0x0C46: "es", 0x0C47: "e", 0x0C4A: "os", 0x0C4B: "o"}

# Short e/o are folded into their long counterparts when projecting into the
# pivot script: the acoustically-similar many-to-one rows.
CROSSMAP_MERGES = {"es": "e", "os": "o"}


def uname(cp: int) -> str | None:
    try:
        return unicodedata.name(chr(cp))
    except ValueError:
        return None


def build_charclass() -> dict[int, tuple[str, str]]:
    table: dict[int, tuple[str, str]] = {}
    for ranges, script in ((DEVANAGARI_CLASS_RANGES, "Devanagari"),
                           (TELUGU_CLASS_RANGES, "Telugu")):
        for start, end, cls in ranges:
            for cp in range(start, end + 1):
                if uname(cp) is None:
                    continue
                if cp in table:
                    raise SystemExit(f"duplicate class assignment for U+{cp:04X}")
                table[cp] = (script, cls)
    for cp, script, cls in JOIN_CONTROLS:
        table[cp] = (script, cls)
    return table


def check_parallel_layout(table: dict[int, tuple[str, str]]) -> None:
    """Classes must agree wherever the two blocks are name-parallel."""
    checked = 0
    for cp, (script, cls) in sorted(table.items()):
        if script != "Devanagari":
            continue
        if cls not in {"Consonant", "IndependentVowel", "DependentVowelSign", "Virama"}:
            continue
        twin = cp + TELUGU_OFFSET
        name, twin_name = uname(cp), uname(twin)
        if not name or not twin_name:
            continue
        if twin_name != name.replace("DEVANAGARI", "TELUGU"):
            continue
        if twin not in table or table[twin][1] != cls:
            raise SystemExit(
                f"layout check failed: U+{cp:04X} is {cls} but U+{twin:04X} "
                f"is {table.get(twin)}")
        checked += 1
    print(f"parallel-layout check passed for {checked} code points")


def build_deva_g2p() -> dict[str, str]:
    rows: dict[str, str] = {}
    for cp, pid in {**DEVA_VOWEL_LETTERS, **DEVA_VOWEL_SIGNS,
                    **DEVA_CONSONANTS, **DEVA_MODIFIERS}.items():
        rows[chr(cp)] = pid
    for cp, pid in DEVA_NUKTA_DIGRAPHS.items():
        rows[chr(cp) + chr(NUKTA_CP)] = pid
    for cp, pid in PRECOMPOSED_NUKTA.items():
        # tolerated on input even though NFC never produces them
        rows[chr(cp)] = pid
    return rows


def build_telu_g2p(deva: dict[str, str]) -> dict[str, str]:
    rows: dict[str, str] = {}
    for key, pid in deva.items():
        if len(key) != 1:
            continue  # nukta digraphs have no Telugu counterpart
        cp = ord(key)
        twin = cp + TELUGU_OFFSET
        name, twin_name = uname(cp), uname(twin)
        if not name or not twin_name:
            continue
        if twin_name == name.replace("DEVANAGARI", "TELUGU"):
            rows[chr(twin)] = pid
    for cp, pid in {**TELU_PATCH_LETTERS, **TELU_PATCH_SIGNS}.items():
        rows[chr(cp)] = pid
    return rows


def build_p2g(g2p: dict[str, str], charclass: dict[int, tuple[str, str]],
              script: str) -> dict[str, tuple[str, str]]:
    """Invert a g2p table into id -> (independent form, dependent form)."""
    independent: dict[str, str] = {}
    dependent: dict[str, str] = {}
    for key, pid in sorted(g2p.items()):
        cls = charclass[ord(key[0])][1]
        if cls == "DependentVowelSign":
            dependent.setdefault(pid, key)
        elif len(key) == 2 or ord(key[0]) not in PRECOMPOSED_NUKTA:
            # prefer the NFC spelling (digraph) over the precomposed letter
            independent.setdefault(pid, key)
    for cp, pid in JOIN_IDS.items():
        independent[pid] = chr(cp)
    return {pid: (form, dependent.get(pid, ""))
            for pid, form in sorted(independent.items())}


def build_matra_map(charclass: dict[int, tuple[str, str]]) -> dict[int, int]:
    """Pair every Devanagari vowel sign with its letter, by character name."""
    letters = {}
    for cp, (script, cls) in charclass.items():
        if script == "Devanagari" and cls == "IndependentVowel":
            letters[uname(cp)] = cp
    pairs = {}
    for cp, (script, cls) in sorted(charclass.items()):
        if script != "Devanagari" or cls != "DependentVowelSign":
            continue
        name = uname(cp)
        letter_name = name.replace("VOWEL SIGN", "LETTER")
        if letter_name not in letters:
            raise SystemExit(f"no independent counterpart for U+{cp:04X} {name}")
        pairs[cp] = letters[letter_name]
    if len(set(pairs.values())) != len(pairs):
        raise SystemExit("matra map is not injective")
    return pairs


def write_tsv(name: str, header: str, lines: list[str]) -> None:
    path = DATA_DIR / name
    body = "\n".join([f"# {header}", "# generated by tools/gen_tables.py"] + lines)
    path.write_text(body + "\n", encoding="utf-8")
    print(f"wrote {path} ({len(lines)} rows)")


def main() -> int:
    DATA_DIR.mkdir(parents=True, exist_ok=True)

    charclass = build_charclass()
    check_parallel_layout(charclass)
    write_tsv("charclass.tsv", "codepoint\tscript\tclass",
              [f"{cp:04X}\t{script}\t{cls}"
               for cp, (script, cls) in sorted(charclass.items())])

    deva_g2p = build_deva_g2p()
    telu_g2p = build_telu_g2p(deva_g2p)
    for name, rows in (("deva_g2p.tsv", deva_g2p), ("telu_g2p.tsv", telu_g2p)):
        write_tsv(name, "grapheme sequence\tphoneme ids",
                  [f"{key}\t{pid}" for key, pid in sorted(rows.items())])

    deva_p2g = build_p2g(deva_g2p, charclass, "Devanagari")
    telu_p2g = build_p2g(telu_g2p, charclass, "Telugu")
    for name, rows in (("deva_p2g.tsv", deva_p2g), ("telu_p2g.tsv", telu_p2g)):
        write_tsv(name, "phoneme id\tindependent\tdependent|-",
                  [f"{pid}\t{ind}\t{dep or '-'}" for pid, (ind, dep) in rows.items()])

    ids = sorted(set(deva_g2p.values()) | set(telu_g2p.values()) | set(JOIN_IDS.values()))
    write_tsv("crossmap.tsv", "source id\tpivot id",
              [f"{pid}\t{CROSSMAP_MERGES.get(pid, pid)}" for pid in ids])

    matra = build_matra_map(charclass)
    write_tsv("matra_map.tsv", "vowel sign\tindependent letter",
              [f"{chr(sign)}\t{chr(letter)}" for sign, letter in sorted(matra.items())])
    return 0


if __name__ == "__main__":
    sys.exit(main())
