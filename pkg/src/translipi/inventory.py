"""The ASCII phoneme inventory shared by all mapping tables.

Ids are short, unambiguous ASCII tokens in an ISO 15919 flavor: long vowels
double the letter (aa, ii), retroflex consonants double the stop letter
(tt, dd), vocalic liquids take a -u suffix (ru, lu).  Sequences are lists of
these ids, never concatenated strings, so multi-letter ids cannot collide.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class PhonemeKind(str, Enum):
    VOWEL = "Vowel"
    CONSONANT = "Consonant"
    MODIFIER = "Modifier"


@dataclass(frozen=True)
class Phoneme:
    id: str
    kind: PhonemeKind
    attrs: frozenset[str] = frozenset()


#: The inherent vowel carried by a bare consonant letter.
INHERENT_VOWEL = "a"

_VOWELS = (
    "a", "aa", "i", "ii", "u", "uu",
    "ru", "ruu", "lu", "luu",          # vocalic r/l letters
    "e", "ai", "o", "au",
    "ec", "oc",                        # candra e/o (loanword vowels)
    "es", "os",                        # short e/o, Telugu side only
)

_CONSONANTS = (
    "k", "kh", "g", "gh", "ng",
    "c", "ch", "j", "jh", "ny",
    "tt", "tth", "dd", "ddh", "nn",
    "t", "th", "d", "dh", "n", "nnn",
    "p", "ph", "b", "bh", "m",
    "y", "r", "rr", "l", "ll", "zh", "v",
    "sh", "ss", "s", "h",
    "q", "kx", "gx", "z", "rd", "rdh", "f",   # nukta letters
)

_MODIFIERS = ("am", "vh", "cb", "zwj", "zwnj")

_ASPIRATED = frozenset(("kh", "gh", "ch", "jh", "tth", "ddh", "th", "dh", "ph", "bh", "rdh"))
_LONG = frozenset(("aa", "ii", "uu", "ruu", "luu"))
_RETROFLEX = frozenset(("tt", "tth", "dd", "ddh", "nn", "ss", "ll", "zh", "rd", "rdh"))


def _attrs(pid: str) -> frozenset[str]:
    flags = set()
    if pid in _ASPIRATED:
        flags.add("aspirated")
    if pid in _LONG:
        flags.add("long")
    if pid in _RETROFLEX:
        flags.add("retroflex")
    return frozenset(flags)


INVENTORY: dict[str, Phoneme] = {}
for _pid in _VOWELS:
    INVENTORY[_pid] = Phoneme(_pid, PhonemeKind.VOWEL, _attrs(_pid))
for _pid in _CONSONANTS:
    INVENTORY[_pid] = Phoneme(_pid, PhonemeKind.CONSONANT, _attrs(_pid))
for _pid in _MODIFIERS:
    INVENTORY[_pid] = Phoneme(_pid, PhonemeKind.MODIFIER)


def phoneme_kind(pid: str) -> PhonemeKind | None:
    ph = INVENTORY.get(pid)
    return ph.kind if ph else None
