"""Edit-distance scoring and grapheme-inventory analysis.

WER counts whitespace tokens, CER counts code points after collapsing
whitespace runs to single spaces and trimming the ends (the space between
words still counts as a character).  Corpus aggregates are ratios of sums:
total edit operations over total reference length, never a mean of
per-utterance ratios.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping, Sequence

from ._alignment import BACKEND, align_counts
from .script import CharClass, char_class

__all__ = [
    "Alignment", "EvalReport", "InventoryReport", "UtteranceScore",
    "align", "cer", "grapheme_inventory", "relative_reduction",
    "score_corpus", "wer", "BACKEND",
]


@dataclass(frozen=True)
class Alignment:
    """Counts of a minimum-edit alignment against a reference."""

    hits: int
    substitutions: int
    deletions: int
    insertions: int

    @property
    def ref_len(self) -> int:
        return self.hits + self.substitutions + self.deletions

    @property
    def errors(self) -> int:
        return self.substitutions + self.deletions + self.insertions

    def __add__(self, other: "Alignment") -> "Alignment":
        return Alignment(
            self.hits + other.hits,
            self.substitutions + other.substitutions,
            self.deletions + other.deletions,
            self.insertions + other.insertions)

    def to_dict(self) -> dict[str, int]:
        return {"hits": self.hits, "substitutions": self.substitutions,
                "deletions": self.deletions, "insertions": self.insertions}


def align(ref: Sequence[Hashable], hyp: Sequence[Hashable]) -> Alignment:
    """Minimum-edit alignment with unit costs and a deterministic tie-break
    (substitution preferred over insertion, insertion over deletion)."""
    codes: dict[Hashable, int] = {}
    enc_ref = [codes.setdefault(t, len(codes)) for t in ref]
    enc_hyp = [codes.setdefault(t, len(codes)) for t in hyp]
    hits, subs, dels, ins = align_counts(enc_ref, enc_hyp)
    return Alignment(hits, subs, dels, ins)


def _rate(alignment: Alignment) -> float:
    if alignment.ref_len == 0:
        # insertions against an empty reference, reported as-is
        return float(alignment.insertions)
    return alignment.errors / alignment.ref_len


def wer(ref: str, hyp: str) -> float:
    """Word error rate over whitespace tokens."""
    return _rate(align(ref.split(), hyp.split()))


def _char_tokens(text: str) -> list[str]:
    return list(" ".join(text.split()))


def cer(ref: str, hyp: str) -> float:
    """Character error rate over code points, whitespace runs collapsed."""
    return _rate(align(_char_tokens(ref), _char_tokens(hyp)))


def relative_reduction(base: float, new: float) -> float:
    """(base - new) / base; how much of the baseline rate was removed."""
    if base == 0:
        raise ValueError("relative reduction is undefined for a zero baseline")
    return (base - new) / base


# ---------------------------------------------------------------------------
# Corpus scoring
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UtteranceScore:
    utt_id: str
    wer: float
    cer: float
    words: Alignment
    chars: Alignment

    def to_dict(self) -> dict:
        return {"id": self.utt_id, "wer": self.wer, "cer": self.cer,
                "words": self.words.to_dict(), "chars": self.chars.to_dict()}


@dataclass(frozen=True)
class EvalReport:
    utterances: tuple[UtteranceScore, ...]
    words: Alignment
    chars: Alignment

    @property
    def wer(self) -> float:
        return _rate(self.words)

    @property
    def cer(self) -> float:
        return _rate(self.chars)

    def to_dict(self) -> dict:
        return {
            "aggregate": {
                "wer": self.wer, "cer": self.cer,
                "words": self.words.to_dict(), "chars": self.chars.to_dict(),
                "utterances": len(self.utterances),
            },
            "utterances": [u.to_dict() for u in self.utterances],
        }


def score_corpus(pairs: Iterable[tuple[str, str, str]]) -> EvalReport:
    """Score (utterance id, reference, hypothesis) triples."""
    scores = []
    total_words = Alignment(0, 0, 0, 0)
    total_chars = Alignment(0, 0, 0, 0)
    for utt_id, ref, hyp in pairs:
        words = align(ref.split(), hyp.split())
        chars = align(_char_tokens(ref), _char_tokens(hyp))
        scores.append(UtteranceScore(utt_id, _rate(words), _rate(chars), words, chars))
        total_words = total_words + words
        total_chars = total_chars + chars
    return EvalReport(tuple(scores), total_words, total_chars)


# ---------------------------------------------------------------------------
# Grapheme inventory
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InventoryReport:
    """Distinct graphemes of a corpus with per-class distinct counts."""

    counts: Mapping[str, int]  # occurrences per grapheme, whitespace excluded
    matras: int
    consonants: int
    vowels: int
    other: int

    @property
    def total_distinct(self) -> int:
        return len(self.counts)

    def to_dict(self) -> dict:
        return {
            "total_distinct": self.total_distinct,
            "subtotals": {"matras": self.matras, "consonants": self.consonants,
                          "vowels": self.vowels, "other": self.other},
            "graphemes": {ch: self.counts[ch] for ch in sorted(self.counts)},
        }


def grapheme_inventory(lines: Iterable[str]) -> InventoryReport:
    """Count distinct non-whitespace code points over a corpus."""
    counts: Counter[str] = Counter()
    for line in lines:
        counts.update(ch for ch in line if not ch.isspace())
    matras = consonants = vowels = 0
    for ch in counts:
        cls = char_class(ch)
        if cls is CharClass.DEPENDENT_VOWEL_SIGN:
            matras += 1
        elif cls is CharClass.CONSONANT:
            consonants += 1
        elif cls is CharClass.INDEPENDENT_VOWEL:
            vowels += 1
    other = len(counts) - matras - consonants - vowels
    return InventoryReport(dict(counts), matras, consonants, vowels, other)
