"""The two-stage projection into the reduced Devanagari grapheme space.

Stage 1 rewrites each token of the source script as a Devanagari word by
going through the phoneme pivot (lexicon pronunciation if available, rule
conversion otherwise).  Stage 2 then rewrites every dependent vowel sign as
virama + independent vowel, so the output alphabet contains no matras at
all.  Both stages are reversible: ``inverse_stage2`` restores the matras and
``inverse_stage1`` maps a Devanagari word back to the source script, exactly
where the phoneme projection was one-to-one and flagged where it merged.

Tokens that cannot be converted (Latin words without a lexicon entry, stray
symbols) pass through verbatim by default and are collected in a
:class:`TranslitReport`; strict mode turns them into errors instead.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import NoPreimage, UnknownPhoneme, UnmappedGrapheme
from .lexicon import Lexicon
from .phonemics import (VIRAMA, MappingTables, cross_map, g2p, load_tables, p2g)
from .script import CharClass, ScriptTag, char_class, classify, segment_aksharas

_DEVA_VIRAMA = VIRAMA[ScriptTag.DEVANAGARI]

_INDIC = frozenset((ScriptTag.DEVANAGARI, ScriptTag.TELUGU))
_PHONEMIC = frozenset((
    CharClass.CONSONANT, CharClass.INDEPENDENT_VOWEL,
    CharClass.DEPENDENT_VOWEL_SIGN, CharClass.VIRAMA,
    CharClass.NUKTA, CharClass.MODIFIER,
))
_LITERAL = frozenset((CharClass.DIGIT, CharClass.PUNCTUATION))


@lru_cache(maxsize=1)
def default_tables() -> MappingTables:
    return load_tables()


@dataclass
class TranslitReport:
    """Per-run provenance: what converted, what passed through, what merged."""

    words_total: int = 0
    words_converted: int = 0
    unmapped: list[dict] = field(default_factory=list)
    passthrough_tokens: list[dict] = field(default_factory=list)
    merges_applied: Counter = field(default_factory=Counter)
    orphan_matras: list[dict] = field(default_factory=list)
    preexisting_triples: int = 0
    noncanonical_matras: int = 0
    ambiguous: list[dict] = field(default_factory=list)
    oov_compounds: list[dict] = field(default_factory=list)
    inventory_before: Counter = field(default_factory=Counter)
    inventory_after: Counter = field(default_factory=Counter)
    current_line: int = 0  # annotates entries; not serialized on its own

    def note_converted(self) -> None:
        self.words_converted += 1

    def note_passthrough(self, token: str, position: int) -> None:
        self.passthrough_tokens.append(
            {"token": token, "line": self.current_line, "position": position})

    def note_unmapped(self, token: str, position: int, reason: str) -> None:
        self.unmapped.append(
            {"token": token, "line": self.current_line, "position": position,
             "reason": reason})

    def merge(self, other: "TranslitReport") -> None:
        self.words_total += other.words_total
        self.words_converted += other.words_converted
        self.unmapped.extend(other.unmapped)
        self.passthrough_tokens.extend(other.passthrough_tokens)
        self.merges_applied.update(other.merges_applied)
        self.orphan_matras.extend(other.orphan_matras)
        self.preexisting_triples += other.preexisting_triples
        self.noncanonical_matras += other.noncanonical_matras
        self.ambiguous.extend(other.ambiguous)
        self.oov_compounds.extend(other.oov_compounds)
        self.inventory_before.update(other.inventory_before)
        self.inventory_after.update(other.inventory_after)

    def to_dict(self) -> dict:
        def inv(counter: Counter) -> dict:
            return {"distinct": len(counter),
                    "graphemes": {ch: counter[ch] for ch in sorted(counter)}}

        return {
            "words_total": self.words_total,
            "words_converted": self.words_converted,
            "words_passthrough": len(self.passthrough_tokens),
            "words_unmapped": len(self.unmapped),
            "unmapped": self.unmapped,
            "passthrough_tokens": self.passthrough_tokens,
            "merges_applied": [
                {"source": src, "pivot": dst, "count": count}
                for (src, dst), count in sorted(self.merges_applied.items())],
            "orphan_matras": self.orphan_matras,
            "preexisting_triples": self.preexisting_triples,
            "noncanonical_matras": self.noncanonical_matras,
            "ambiguous": self.ambiguous,
            "oov_compounds": self.oov_compounds,
            "inventory_before": inv(self.inventory_before),
            "inventory_after": inv(self.inventory_after),
        }


def _indic_tags(word: str) -> set[ScriptTag]:
    """Indic scripts contributing phonemic characters to this token."""
    tags = set()
    for ch in word:
        tag, cls = classify(ch)
        if cls in _PHONEMIC and tag in _INDIC:
            tags.add(tag)
    return tags


# ---------------------------------------------------------------------------
# Stage 1
# ---------------------------------------------------------------------------

def stage1_word(word: str, script: ScriptTag, tables: MappingTables,
                lexicon: Lexicon | None = None, *, strict: bool = False,
                report: TranslitReport | None = None, position: int = 0,
                _split: bool = True) -> str:
    """Rewrite one whitespace-free token as a Devanagari word.

    A lexicon pronunciation wins over rule conversion.  Devanagari tokens
    run through the same pipe, which canonicalizes their spelling.  Tokens
    without Indic letters (Latin words, bare symbols) pass through verbatim
    and are reported; in strict mode an unconvertible Indic token raises
    :class:`UnmappedGrapheme` instead of passing through.
    """
    if not word:
        return ""
    merges = report.merges_applied if report is not None else None

    if lexicon is not None:
        prons = lexicon.lookup(word)
        if prons:
            out = p2g(cross_map(prons[0].phonemes, tables, merges), tables)
            if report is not None:
                report.note_converted()
            return out

    tags = _indic_tags(word)
    if not tags:
        if report is not None:
            report.note_passthrough(word, position)
        return word

    if _split and lexicon is not None and tags == {ScriptTag.DEVANAGARI}:
        parts = split_compounds(word, lexicon, report=report, position=position)
        if len(parts) > 1:
            return " ".join(
                stage1_word(part, script, tables, lexicon, strict=strict,
                            report=report, position=position, _split=False)
                for part in parts)

    try:
        out = _convert_runs(word, tables, merges)
    except UnmappedGrapheme as exc:
        if strict:
            raise
        if report is not None:
            report.note_unmapped(word, position, exc.reason)
        return word
    if report is not None:
        report.note_converted()
    return out


def _convert_runs(word: str, tables: MappingTables,
                  merges: Counter | None) -> str:
    """Convert Indic runs of a token; digits and punctuation copy through."""
    out: list[str] = []
    i, n = 0, len(word)
    while i < n:
        tag, cls = classify(word[i])
        if cls in _LITERAL:
            out.append(word[i])
            i += 1
            continue
        if cls not in _PHONEMIC and cls is not CharClass.JOIN_CONTROL:
            raise UnmappedGrapheme(word[i], i, "foreign character")
        # extend a maximal run of one Indic script (join controls ride along)
        run_tag: ScriptTag | None = None
        j = i
        while j < n:
            t2, c2 = classify(word[j])
            if c2 is CharClass.JOIN_CONTROL:
                j += 1
                continue
            if c2 not in _PHONEMIC:
                break
            if t2 not in _INDIC:
                raise UnmappedGrapheme(word[j], j, "mark outside supported scripts")
            if run_tag is None:
                run_tag = t2
            elif t2 is not run_tag:
                break
            j += 1
        run = word[i:j]
        if run_tag is None:
            out.append(run)  # bare join controls
        else:
            converted = p2g(cross_map(g2p(run, run_tag, tables), tables, merges), tables)
            if not converted:
                raise UnmappedGrapheme(run[0], i, "orphan mark")
            out.append(converted)
        i = j
    return "".join(out)


# ---------------------------------------------------------------------------
# Compound splitting
# ---------------------------------------------------------------------------

def split_compounds(word: str, lexicon: Lexicon | None, *,
                    min_aksharas: int = 2,
                    report: TranslitReport | None = None,
                    position: int = 0) -> list[str]:
    """Split a concatenated word into the fewest lexicon words.

    Every part must be a lexicon headword of at least ``min_aksharas``
    aksharas; among minimal splits the longest first part wins, then the
    longest second part, and so on.  A word that is itself in the lexicon
    stays whole; a word with no full split is returned whole and flagged.
    """
    if lexicon is None or word in lexicon:
        return [word]
    aksharas = segment_aksharas(word)
    k = len(aksharas)
    starts = [a.span[0] for a in aksharas] + [len(word)]

    unreachable = k + 1
    best = [unreachable] * (k + 1)
    best[k] = 0
    for i in range(k - min_aksharas, -1, -1):
        for j in range(i + min_aksharas, k + 1):
            if best[j] < unreachable and word[starts[i]:starts[j]] in lexicon:
                if 1 + best[j] < best[i]:
                    best[i] = 1 + best[j]

    if best[0] >= unreachable:
        if report is not None:
            report.oov_compounds.append(
                {"token": word, "line": report.current_line, "position": position})
        return [word]

    parts: list[str] = []
    i = 0
    while i < k:
        for j in range(k, i + min_aksharas - 1, -1):
            part = word[starts[i]:starts[j]]
            if best[j] == best[i] - 1 and part in lexicon:
                parts.append(part)
                i = j
                break
        else:  # unreachable once best[0] is finite; guards the loop anyway
            parts.append(word[starts[i]:])
            break
    return parts


# ---------------------------------------------------------------------------
# Stage 2 and its inverse
# ---------------------------------------------------------------------------

def stage2(text: str, *, tables: MappingTables | None = None,
           report: TranslitReport | None = None) -> str:
    """Rewrite every Devanagari matra as virama + independent vowel.

    The base consonant keeps its exact phonemic reading, which is what makes
    the rewrite invertible.  Orphan matras (no base consonant) become the
    bare independent vowel and are reported.  Input sequences that already
    look like rewrite output are counted as pre-existing collisions.
    """
    tables = tables or default_tables()
    to_independent = tables.matra.to_independent
    if report is not None:
        report.preexisting_triples += _count_triples(text, tables)
    out: list[str] = []
    for idx, ch in enumerate(text):
        independent = to_independent.get(ch)
        if independent is None:
            out.append(ch)
            continue
        prev = out[-1] if out else ""
        if prev and char_class(prev) in (CharClass.CONSONANT, CharClass.NUKTA):
            out.append(_DEVA_VIRAMA)
            out.append(independent)
        else:
            if report is not None:
                report.orphan_matras.append(
                    {"sign": ch, "line": report.current_line, "offset": idx})
            out.append(independent)
    return "".join(out)


def _count_triples(text: str, tables: MappingTables) -> int:
    """Count native consonant+virama+independent-vowel runs in the input."""
    to_sign = tables.matra.to_sign
    count = 0
    for i in range(1, len(text) - 1):
        if (text[i] == _DEVA_VIRAMA
                and char_class(text[i - 1]) in (CharClass.CONSONANT, CharClass.NUKTA)
                and text[i + 1] in to_sign):
            count += 1
    return count


def inverse_stage2(text: str, *, tables: MappingTables | None = None,
                   report: TranslitReport | None = None) -> str:
    """Restore matras: consonant + virama + independent vowel collapses back.

    Viramas forming true conjuncts (followed by a consonant) are untouched.
    Matras already present mark non-canonical input; they are kept verbatim
    and counted in the report.
    """
    tables = tables or default_tables()
    to_sign = tables.matra.to_sign
    to_independent = tables.matra.to_independent
    out: list[str] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if (ch == _DEVA_VIRAMA and i + 1 < n and text[i + 1] in to_sign
                and out and char_class(out[-1]) in (CharClass.CONSONANT, CharClass.NUKTA)):
            out.append(to_sign[text[i + 1]])
            i += 2
            continue
        if report is not None and ch in to_independent:
            report.noncanonical_matras += 1
        out.append(ch)
        i += 1
    return "".join(out)


# ---------------------------------------------------------------------------
# Full pipeline
# ---------------------------------------------------------------------------

def full_transliterate(text: str, script: ScriptTag, tables: MappingTables,
                       lexicon: Lexicon | None = None, *, strict: bool = False,
                       report: TranslitReport | None = None
                       ) -> tuple[str, TranslitReport]:
    """Apply stage 1 token-wise, then stage 2; whitespace runs collapse."""
    if report is None:
        report = TranslitReport()
    report.inventory_before.update(ch for ch in text if not ch.isspace())
    tokens = text.split()
    report.words_total += len(tokens)
    first = " ".join(
        stage1_word(token, script, tables, lexicon, strict=strict,
                    report=report, position=idx)
        for idx, token in enumerate(tokens))
    out = stage2(first, tables=tables, report=report)
    report.inventory_after.update(ch for ch in out if not ch.isspace())
    return out, report


# ---------------------------------------------------------------------------
# Inverse stage 1
# ---------------------------------------------------------------------------

def inverse_stage1(word: str, target: ScriptTag, tables: MappingTables,
                   lexicon: Lexicon | None = None, *, strict: bool = False,
                   report: TranslitReport | None = None,
                   position: int = 0) -> str:
    """Map a Devanagari word back to the target script.

    One-to-one phonemes invert exactly.  For merged phonemes the lexicon is
    consulted first: the entry whose forward transliteration matches wins.
    Otherwise each merged phoneme falls back to its designated default
    preimage and the word is flagged as ambiguous.  Raises
    :class:`NoPreimage` (strict) or passes through verbatim (default) when
    the target script cannot write the result.
    """
    if not word:
        return ""
    tags = _indic_tags(word)
    if not tags:
        if report is not None:
            report.note_passthrough(word, position)
        return word
    inverse = tables.crossmap_inverse

    try:
        if tags != {ScriptTag.DEVANAGARI}:
            raise UnmappedGrapheme(word[0], 0, "not a Devanagari word")
        seq = g2p(word, ScriptTag.DEVANAGARI, tables)
        ambiguous = [pid for pid in seq if len(inverse.get(pid, (pid,))) > 1]

        if ambiguous and lexicon is not None:
            candidates = _forward_index(lexicon, tables).get(word, ())
            candidates = [w for w in candidates
                          if _headword_matches_target(w, target)]
            if candidates:
                if report is not None:
                    report.note_converted()
                    if len(candidates) > 1:
                        report.ambiguous.append(
                            {"token": word, "line": report.current_line,
                             "position": position,
                             "candidates": list(candidates)})
                return candidates[0]

        preimages = tuple(inverse.get(pid, (pid,))[0] for pid in seq)
        try:
            out = p2g(preimages, tables, script=target)
        except UnknownPhoneme as exc:
            raise NoPreimage(word, str(exc)) from exc
        if ambiguous and report is not None:
            report.ambiguous.append(
                {"token": word, "line": report.current_line,
                 "position": position, "phonemes": sorted(set(ambiguous))})
        if report is not None:
            report.note_converted()
        return out
    except (UnmappedGrapheme, NoPreimage) as exc:
        if strict:
            raise
        if report is not None:
            reason = exc.reason if isinstance(exc, UnmappedGrapheme) else "no preimage"
            report.note_unmapped(word, position, reason)
        return word


def _headword_matches_target(word: str, target: ScriptTag) -> bool:
    tags = {classify(ch)[0] for ch in word}
    return target in tags or ScriptTag.LATIN in tags


# cache entries hold strong references, so object ids stay valid while cached
_FORWARD_INDEX_CACHE: list[tuple[Lexicon, MappingTables, dict[str, tuple[str, ...]]]] = []


def _forward_index(lexicon: Lexicon, tables: MappingTables) -> dict[str, tuple[str, ...]]:
    """Map forward transliterations of lexicon entries to their headwords."""
    for cached_lex, cached_tables, cached_index in _FORWARD_INDEX_CACHE:
        if cached_lex is lexicon and cached_tables is tables:
            return cached_index
    index: dict[str, list[str]] = {}
    for word, prons in sorted(lexicon.items()):
        for pron in prons:
            try:
                forward = p2g(cross_map(pron.phonemes, tables), tables)
            except (UnknownPhoneme, KeyError):
                continue
            bucket = index.setdefault(forward, [])
            if word not in bucket:
                bucket.append(word)
    frozen = {k: tuple(v) for k, v in index.items()}
    if len(_FORWARD_INDEX_CACHE) > 4:
        del _FORWARD_INDEX_CACHE[0]
    _FORWARD_INDEX_CACHE.append((lexicon, tables, frozen))
    return frozen


def inverse_transliterate(text: str, target: ScriptTag, tables: MappingTables,
                          lexicon: Lexicon | None = None, *,
                          strict: bool = False,
                          report: TranslitReport | None = None
                          ) -> tuple[str, TranslitReport]:
    """Invert the full pipeline: restore matras, then re-script each token."""
    if report is None:
        report = TranslitReport()
    report.inventory_before.update(ch for ch in text if not ch.isspace())
    restored = inverse_stage2(text, tables=tables, report=report)
    tokens = restored.split()
    report.words_total += len(tokens)
    out = " ".join(
        inverse_stage1(token, target, tables, lexicon, strict=strict,
                       report=report, position=idx)
        for idx, token in enumerate(tokens))
    report.inventory_after.update(ch for ch in out if not ch.isspace())
    return out, report
