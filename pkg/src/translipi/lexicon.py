"""Pronunciation lexicon for native and foreign words.

Backs four things: pronunciation overrides during forward transliteration,
Latin-token handling in code-mixed text, compound splitting, and
disambiguation of merged phonemes on the inverse path.  A lexicon is
immutable after load/build and safe to share across workers.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import LexiconError, UnmappedGrapheme
from .inventory import INVENTORY
from .phonemics import MappingTables, PhonemeSeq, g2p
from .script import CharClass, ScriptTag, classify

_ORIGINS = ("native", "foreign")


class Pronunciation(NamedTuple):
    phonemes: PhonemeSeq
    origin: str  # "native" or "foreign"


def _has_latin(word: str) -> bool:
    return any(classify(ch)[0] is ScriptTag.LATIN for ch in word)


def _normalize_headword(word: str) -> str:
    # Latin headwords are case-folded; Indic headwords are kept verbatim.
    return word.casefold() if _has_latin(word) else word


class Lexicon:
    """Immutable map from headword to its pronunciations."""

    def __init__(self, entries: Mapping[str, Sequence[Pronunciation]] | None = None):
        self._entries: dict[str, tuple[Pronunciation, ...]] = {
            word: tuple(prons) for word, prons in (entries or {}).items()}

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Lexicon) and self._entries == other._entries

    def __contains__(self, word: str) -> bool:
        return (word in self._entries
                or (_has_latin(word) and word.casefold() in self._entries))

    def lookup(self, word: str) -> tuple[Pronunciation, ...]:
        """Pronunciations for a token; empty when absent or a bare stub."""
        hit = self._entries.get(word)
        if hit is None and _has_latin(word):
            hit = self._entries.get(word.casefold())
        return hit or ()

    def headwords(self) -> tuple[str, ...]:
        return tuple(sorted(self._entries))

    def items(self) -> Iterable[tuple[str, tuple[Pronunciation, ...]]]:
        return self._entries.items()

    def save(self, path: str | Path) -> None:
        lines = ["# word\tphoneme ids\tnative|foreign"]
        for word in sorted(self._entries):
            prons = self._entries[word]
            if not prons:
                lines.append(f"{word}\t\tforeign")
            for seq, origin in prons:
                lines.append(f"{word}\t{' '.join(seq)}\t{origin}")
        Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_lexicon(path: str | Path) -> Lexicon:
    """Load a TSV lexicon: ``word <TAB> phoneme ids <TAB> native|foreign``.

    An empty phoneme field marks a headword-only stub awaiting manual
    completion.  Duplicate identical rows collapse; distinct pronunciations
    of one word accumulate in file order.
    """
    path = Path(path)
    try:
        text = path.read_text("utf-8")
    except OSError as exc:
        raise LexiconError(f"cannot read lexicon: {exc}", str(path)) from exc

    entries: dict[str, list[Pronunciation]] = {}
    seen: set[tuple[str, PhonemeSeq, str]] = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise LexiconError(
                f"expected 3 tab-separated fields, got {len(parts)}",
                str(path), lineno)
        word, ids, origin = parts
        if not word:
            raise LexiconError("empty headword", str(path), lineno)
        if origin not in _ORIGINS:
            raise LexiconError(f"origin must be native or foreign, got {origin!r}",
                               str(path), lineno)
        seq = tuple(ids.split())
        for pid in seq:
            if pid not in INVENTORY:
                raise LexiconError(f"unknown phoneme id {pid!r}", str(path), lineno)
        word = _normalize_headword(word)
        key = (word, seq, origin)
        if key in seen:
            continue
        seen.add(key)
        bucket = entries.setdefault(word, [])
        if seq:
            bucket.append(Pronunciation(seq, origin))
    return Lexicon(entries)


def build_from_corpus(lines: Iterable[str], script: ScriptTag,
                      tables: MappingTables,
                      unmappable: list[str] | None = None) -> Lexicon:
    """Derive a lexicon from transcript lines.

    Indic tokens get rule pronunciations tagged native; Latin tokens become
    headword-only stubs tagged foreign, listed for manual completion.
    Tokens that map to neither land in ``unmappable`` when provided.
    The result is independent of line order.
    """
    tokens: set[str] = set()
    for line in lines:
        for token in line.split():
            token = _strip_edge_symbols(token)
            if token:
                tokens.add(token)

    entries: dict[str, list[Pronunciation]] = {}
    for token in sorted(tokens):
        tags = {classify(ch)[0] for ch in token}
        indic = tags & {ScriptTag.DEVANAGARI, ScriptTag.TELUGU}
        if len(indic) == 1 and tags <= indic | {ScriptTag.COMMON}:
            try:
                seq = g2p(token, next(iter(indic)), tables)
            except UnmappedGrapheme:
                if unmappable is not None:
                    unmappable.append(token)
                continue
            if seq:
                entries[token] = [Pronunciation(seq, "native")]
            elif unmappable is not None:
                unmappable.append(token)
        elif tags <= {ScriptTag.LATIN, ScriptTag.COMMON} and ScriptTag.LATIN in tags:
            entries.setdefault(token.casefold(), [])
        elif unmappable is not None:
            unmappable.append(token)
    return Lexicon(entries)


def _strip_edge_symbols(token: str) -> str:
    """Drop leading/trailing punctuation and digits from a corpus token."""
    start, end = 0, len(token)
    while start < end and classify(token[start])[1] in (CharClass.PUNCTUATION, CharClass.DIGIT):
        start += 1
    while end > start and classify(token[end - 1])[1] in (CharClass.PUNCTUATION, CharClass.DIGIT):
        end -= 1
    return token[start:end]
