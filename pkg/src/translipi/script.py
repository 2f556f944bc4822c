"""Code point classification and akshara segmentation.

Every later stage works on aksharas: the orthographic syllables of the
Devanagari and Telugu scripts.  The classification for the two Indic blocks
comes from a static table shipped with the package (``data/charclass.tsv``);
everything outside those blocks is classified by fixed ranges so the result
is a pure function of the code point, independent of the Python Unicode
database version.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from importlib import resources


class ScriptTag(str, Enum):
    DEVANAGARI = "Devanagari"
    TELUGU = "Telugu"
    LATIN = "Latin"
    COMMON = "Common"
    OTHER = "Other"


class CharClass(str, Enum):
    CONSONANT = "Consonant"
    INDEPENDENT_VOWEL = "IndependentVowel"
    DEPENDENT_VOWEL_SIGN = "DependentVowelSign"
    VIRAMA = "Virama"
    NUKTA = "Nukta"
    MODIFIER = "Modifier"
    DIGIT = "Digit"
    WHITESPACE = "Whitespace"
    PUNCTUATION = "Punctuation"
    JOIN_CONTROL = "JoinControl"
    UNKNOWN = "Unknown"


def _load_charclass() -> dict[int, tuple[ScriptTag, CharClass]]:
    table: dict[int, tuple[ScriptTag, CharClass]] = {}
    text = (resources.files(__package__) / "data" / "charclass.tsv").read_text("utf-8")
    for line in text.splitlines():
        if not line or line.startswith("#"):
            continue
        cp_hex, script, cls = line.split("\t")
        table[int(cp_hex, 16)] = (ScriptTag(script), CharClass(cls))
    return table


_CHARCLASS = _load_charclass()

_LATIN_RANGES = ((0x41, 0x5A), (0x61, 0x7A), (0xC0, 0x2AF))
_ASCII_PUNCT = ((0x21, 0x2F), (0x3A, 0x40), (0x5B, 0x60), (0x7B, 0x7E))


def classify(ch: str) -> tuple[ScriptTag, CharClass]:
    """Classify a single character. Total: unclassifiable input is (Other, Unknown)."""
    cp = ord(ch)
    entry = _CHARCLASS.get(cp)
    if entry is not None:
        return entry
    if ch.isspace():
        return (ScriptTag.COMMON, CharClass.WHITESPACE)
    if 0x30 <= cp <= 0x39:
        return (ScriptTag.COMMON, CharClass.DIGIT)
    for lo, hi in _LATIN_RANGES:
        if lo <= cp <= hi:
            return (ScriptTag.LATIN, CharClass.UNKNOWN)
    for lo, hi in _ASCII_PUNCT:
        if lo <= cp <= hi:
            return (ScriptTag.COMMON, CharClass.PUNCTUATION)
    if 0x2000 <= cp <= 0x206F:  # general punctuation (join controls are in-table)
        return (ScriptTag.COMMON, CharClass.PUNCTUATION)
    return (ScriptTag.OTHER, CharClass.UNKNOWN)


def char_class(ch: str) -> CharClass:
    return classify(ch)[1]


def script_of(ch: str) -> ScriptTag:
    return classify(ch)[0]


@dataclass(frozen=True)
class Akshara:
    """One orthographic syllable, or a degenerate single-unit slot.

    ``text`` is the exact source slice covered by ``span``; concatenating the
    texts of a segmentation reproduces the input.  ``consonants`` holds the
    cluster units in order, each a consonant optionally followed by its nukta.
    Degenerate units (bare vowels, digits, punctuation, orphan marks) carry
    their character in ``base`` and leave ``consonants`` empty.
    """

    text: str
    span: tuple[int, int]
    consonants: tuple[str, ...] = ()
    joiners: tuple[str, ...] = ()
    vowel_sign: str = ""
    modifiers: tuple[str, ...] = ()
    base: str = ""
    trailing_virama: bool = False

    @property
    def is_cluster(self) -> bool:
        return bool(self.consonants)

    @property
    def is_vowel_unit(self) -> bool:
        return bool(self.base) and char_class(self.base) is CharClass.INDEPENDENT_VOWEL

    @property
    def is_orphan_mark(self) -> bool:
        """An isolated matra, virama, nukta or modifier with no base letter."""
        return bool(self.base) and char_class(self.base) in (
            CharClass.DEPENDENT_VOWEL_SIGN, CharClass.VIRAMA,
            CharClass.NUKTA, CharClass.MODIFIER)


def segment_aksharas(text: str) -> list[Akshara]:
    """Split text into aksharas, losslessly and deterministically.

    Consonant+virama+consonant runs fuse into one akshara; a trailing virama
    stays inside its akshara; join controls attach to the preceding akshara.
    Unknown or orphaned code points become degenerate single-unit aksharas.
    """
    out: list[Akshara] = []
    n = len(text)
    i = 0
    while i < n:
        start = i
        cls = char_class(text[i])

        if cls is CharClass.CONSONANT:
            consonants: list[str] = []
            joiners: list[str] = []
            trailing = False
            while True:
                unit = text[i]
                i += 1
                if i < n and char_class(text[i]) is CharClass.NUKTA:
                    unit += text[i]
                    i += 1
                consonants.append(unit)
                if i < n and char_class(text[i]) is CharClass.VIRAMA:
                    j = i + 1
                    joins: list[str] = []
                    while j < n and char_class(text[j]) is CharClass.JOIN_CONTROL:
                        joins.append(text[j])
                        j += 1
                    if j < n and char_class(text[j]) is CharClass.CONSONANT:
                        joiners.append(text[i])
                        joiners.extend(joins)
                        i = j
                        continue
                    joiners.append(text[i])
                    i += 1
                    trailing = True
                break
            vowel_sign = ""
            if not trailing and i < n and char_class(text[i]) is CharClass.DEPENDENT_VOWEL_SIGN:
                vowel_sign = text[i]
                i += 1
            modifiers, trail_joins, i = _consume_marks(text, i)
            out.append(Akshara(
                text=text[start:i], span=(start, i),
                consonants=tuple(consonants),
                joiners=tuple(joiners) + trail_joins,
                vowel_sign=vowel_sign, modifiers=modifiers,
                trailing_virama=trailing))

        elif cls is CharClass.INDEPENDENT_VOWEL:
            base = text[i]
            i += 1
            modifiers, trail_joins, i = _consume_marks(text, i)
            out.append(Akshara(
                text=text[start:i], span=(start, i),
                joiners=trail_joins, modifiers=modifiers, base=base))

        else:
            # degenerate single-unit slot: digit, punctuation, whitespace,
            # orphan matra/virama/nukta/modifier, join control, unknown
            i += 1
            out.append(Akshara(text=text[start:i], span=(start, i), base=text[start]))

    return out


def _consume_marks(text: str, i: int) -> tuple[tuple[str, ...], tuple[str, ...], int]:
    """Collect trailing modifiers and join controls, in either order."""
    modifiers: list[str] = []
    joins: list[str] = []
    n = len(text)
    while i < n:
        cls = char_class(text[i])
        if cls is CharClass.MODIFIER:
            modifiers.append(text[i])
        elif cls is CharClass.JOIN_CONTROL:
            joins.append(text[i])
        else:
            break
        i += 1
    return tuple(modifiers), tuple(joins), i


def detect_script(text: str) -> Counter[ScriptTag]:
    """Histogram of script tags over all code points."""
    counts: Counter[ScriptTag] = Counter()
    for ch in text:
        counts[script_of(ch)] += 1
    return counts
