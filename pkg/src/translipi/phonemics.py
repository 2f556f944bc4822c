"""Table-driven grapheme/phoneme conversion.

Three operations form the word pipeline: ``g2p`` reads a source-script word
into a phoneme sequence, ``cross_map`` projects that sequence into the pivot
(Devanagari) inventory, and ``p2g`` writes a pivot sequence back out as a
word, applying the vowel-consonant composition rules of the target script.

All three are pure functions over an immutable :class:`MappingTables` value,
so a loaded table set can be shared freely across threads or processes.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

from .errors import TableError, UnknownPhoneme, UnmappedGrapheme
from .inventory import INHERENT_VOWEL, INVENTORY, PhonemeKind
from .script import CharClass, ScriptTag, char_class, classify

PhonemeSeq = tuple[str, ...]

#: Environment variable overriding the default table directory.
TABLE_DIR_ENV = "TRANSLIPI_TABLES"

VIRAMA = {ScriptTag.DEVANAGARI: "्", ScriptTag.TELUGU: "్"}

_JOIN_CONTROL_IDS = {"‌": "zwnj", "‍": "zwj"}

_TABLE_FILES = {
    ScriptTag.DEVANAGARI: ("deva_g2p.tsv", "deva_p2g.tsv"),
    ScriptTag.TELUGU: ("telu_g2p.tsv", "telu_p2g.tsv"),
}


@dataclass(frozen=True)
class GraphemeForms:
    """Written forms of one phoneme: letter shape and attached (matra) shape."""

    independent: str
    dependent: str = ""  # empty when the phoneme has no attached form


@dataclass(frozen=True)
class MatraMap:
    """Bijection between dependent vowel signs and independent vowel letters."""

    to_independent: Mapping[str, str]
    to_sign: Mapping[str, str]

    def __len__(self) -> int:
        return len(self.to_independent)


@dataclass(frozen=True)
class MappingTables:
    """Validated, immutable table set for both scripts plus the cross map."""

    g2p: Mapping[ScriptTag, Mapping[str, PhonemeSeq]]
    p2g: Mapping[ScriptTag, Mapping[str, GraphemeForms]]
    crossmap: Mapping[str, str]
    crossmap_inverse: Mapping[str, tuple[str, ...]]
    matra: MatraMap
    merges: tuple[tuple[str, str], ...]  # many-to-one crossmap rows (src, pivot)

    def scripts(self) -> tuple[ScriptTag, ...]:
        return tuple(self.g2p)


def default_table_dir() -> Path:
    env = os.environ.get(TABLE_DIR_ENV)
    if env:
        return Path(env)
    return Path(str(resources.files(__package__) / "data"))


def _read_rows(path: Path, columns: int) -> Iterator[tuple[int, list[str]]]:
    try:
        text = path.read_text("utf-8")
    except OSError as exc:
        raise TableError(f"cannot read table: {exc}", str(path)) from exc
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != columns:
            raise TableError(
                f"expected {columns} tab-separated fields, got {len(parts)}",
                str(path), lineno)
        yield lineno, parts


def _load_g2p(path: Path) -> dict[str, PhonemeSeq]:
    table: dict[str, PhonemeSeq] = {}
    for lineno, (key, ids) in _read_rows(path, 2):
        if key in table:
            raise TableError(f"duplicate grapheme key {key!r}", str(path), lineno)
        seq = tuple(ids.split())
        if not seq:
            raise TableError(f"empty phoneme list for {key!r}", str(path), lineno)
        for pid in seq:
            if pid not in INVENTORY:
                raise TableError(f"unknown phoneme id {pid!r}", str(path), lineno)
        table[key] = seq
    if not table:
        raise TableError("empty table", str(path))
    return table


def _load_p2g(path: Path) -> dict[str, GraphemeForms]:
    table: dict[str, GraphemeForms] = {}
    for lineno, (pid, independent, dependent) in _read_rows(path, 3):
        if pid in table:
            raise TableError(f"duplicate phoneme id {pid!r}", str(path), lineno)
        if pid not in INVENTORY:
            raise TableError(f"unknown phoneme id {pid!r}", str(path), lineno)
        table[pid] = GraphemeForms(independent, "" if dependent == "-" else dependent)
    if not table:
        raise TableError("empty table", str(path))
    return table


def _load_crossmap(path: Path) -> dict[str, str]:
    table: dict[str, str] = {}
    for lineno, (src, dst) in _read_rows(path, 2):
        if src in table:
            raise TableError(f"duplicate crossmap source {src!r}", str(path), lineno)
        for pid in (src, dst):
            if pid not in INVENTORY:
                raise TableError(f"unknown phoneme id {pid!r}", str(path), lineno)
        table[src] = dst
    if not table:
        raise TableError("empty table", str(path))
    return table


def _load_matra_map(path: Path) -> MatraMap:
    to_independent: dict[str, str] = {}
    to_sign: dict[str, str] = {}
    for lineno, (sign, letter) in _read_rows(path, 2):
        if sign in to_independent:
            raise TableError(f"duplicate vowel sign {sign!r}", str(path), lineno)
        if letter in to_sign:
            raise TableError(f"vowel letter {letter!r} mapped twice", str(path), lineno)
        if char_class(sign) is not CharClass.DEPENDENT_VOWEL_SIGN:
            raise TableError(f"{sign!r} is not a dependent vowel sign", str(path), lineno)
        if char_class(letter) is not CharClass.INDEPENDENT_VOWEL:
            raise TableError(f"{letter!r} is not an independent vowel", str(path), lineno)
        to_independent[sign] = letter
        to_sign[letter] = sign
    if not to_independent:
        raise TableError("empty table", str(path))
    return MatraMap(MappingProxyType(to_independent), MappingProxyType(to_sign))


def load_tables(table_dir: str | Path | None = None) -> MappingTables:
    """Load and validate the full table set from a directory.

    With no argument the shipped tables are used, unless the directory is
    overridden via the ``TRANSLIPI_TABLES`` environment variable.
    """
    base = Path(table_dir) if table_dir is not None else default_table_dir()

    g2p: dict[ScriptTag, Mapping[str, PhonemeSeq]] = {}
    p2g: dict[ScriptTag, Mapping[str, GraphemeForms]] = {}
    for script, (g2p_name, p2g_name) in _TABLE_FILES.items():
        g2p[script] = MappingProxyType(_load_g2p(base / g2p_name))
        p2g[script] = MappingProxyType(_load_p2g(base / p2g_name))

    crossmap = _load_crossmap(base / "crossmap.tsv")
    matra = _load_matra_map(base / "matra_map.tsv")

    # Totality: every id any g2p table can produce, plus the inherent vowel
    # and the join-control ids, must cross-map.
    producible = {INHERENT_VOWEL, *_JOIN_CONTROL_IDS.values()}
    for table in g2p.values():
        for seq in table.values():
            producible.update(seq)
    for pid in sorted(producible):
        if pid not in crossmap:
            raise TableError(f"crossmap is missing producible phoneme {pid!r}",
                             str(base / "crossmap.tsv"))

    # Kind preservation across the cross map.
    for src, dst in crossmap.items():
        if INVENTORY[src].kind is not INVENTORY[dst].kind:
            raise TableError(
                f"crossmap changes phoneme kind: {src!r} -> {dst!r}",
                str(base / "crossmap.tsv"))

    # Pivot-side completeness: every crossmap target must be writable in
    # Devanagari, and every vowel except the inherent one needs a matra.
    deva_p2g = p2g[ScriptTag.DEVANAGARI]
    for dst in sorted(set(crossmap.values())):
        if dst not in deva_p2g:
            raise TableError(f"pivot p2g has no entry for {dst!r}",
                             str(base / _TABLE_FILES[ScriptTag.DEVANAGARI][1]))
    for script, table in p2g.items():
        for pid, forms in table.items():
            if (INVENTORY[pid].kind is PhonemeKind.VOWEL
                    and pid != INHERENT_VOWEL and not forms.dependent):
                raise TableError(
                    f"vowel {pid!r} lacks a dependent form in {script.value}",
                    str(base / _TABLE_FILES[script][1]))

    # Consistency: writing any phoneme and reading it back must round-trip.
    for script, table in p2g.items():
        reader = g2p[script]
        for pid, forms in table.items():
            for form in (forms.independent, forms.dependent):
                if not form or form in _JOIN_CONTROL_IDS:
                    continue
                got = _lookup_form(reader, form)
                if got != (pid,):
                    raise TableError(
                        f"p2g/g2p mismatch for {pid!r}: form {form!r} reads as {got}",
                        str(base / _TABLE_FILES[script][1]))

    merges = tuple((src, dst) for src, dst in sorted(crossmap.items()) if src != dst)
    inverse: dict[str, list[str]] = {}
    for src, dst in crossmap.items():
        inverse.setdefault(dst, []).append(src)
    crossmap_inverse = {dst: tuple(sorted(srcs, key=lambda s: (s != dst, s)))
                        for dst, srcs in inverse.items()}

    return MappingTables(
        g2p=MappingProxyType(g2p),
        p2g=MappingProxyType(p2g),
        crossmap=MappingProxyType(crossmap),
        crossmap_inverse=MappingProxyType(crossmap_inverse),
        matra=matra,
        merges=merges,
    )


def _lookup_form(reader: Mapping[str, PhonemeSeq], form: str) -> PhonemeSeq | None:
    return reader.get(form)


# ---------------------------------------------------------------------------
# g2p
# ---------------------------------------------------------------------------

def g2p(word: str, script: ScriptTag, tables: MappingTables) -> PhonemeSeq:
    """Read a single-script word into its phoneme sequence.

    A bare consonant emits its inherent vowel unless a vowel sign or virama
    follows; independent vowels, vowel signs and modifiers emit their table
    ids; join controls pass through as modifier phonemes.  Raises
    :class:`UnmappedGrapheme` for anything without an entry.
    """
    if script not in tables.g2p:
        raise UnmappedGrapheme(word[:1] or "?", 0, f"unsupported script {script.value}")
    table = tables.g2p[script]
    out: list[str] = []
    pending = False  # a consonant still owed its vowel
    n = len(word)
    i = 0
    while i < n:
        ch = word[i]
        cls = char_class(ch)
        if cls is CharClass.CONSONANT:
            unit = ch
            if i + 1 < n and char_class(word[i + 1]) is CharClass.NUKTA:
                unit += word[i + 1]
            seq = table.get(unit)
            if seq is None:
                raise UnmappedGrapheme(ch, i)
            if pending:
                out.append(INHERENT_VOWEL)
            out.extend(seq)
            pending = True
            i += len(unit)
            continue
        if cls is CharClass.DEPENDENT_VOWEL_SIGN:
            seq = table.get(ch)
            if seq is None:
                raise UnmappedGrapheme(ch, i)
            out.extend(seq)
            pending = False
        elif cls is CharClass.VIRAMA:
            pending = False
        elif cls is CharClass.INDEPENDENT_VOWEL:
            seq = table.get(ch)
            if seq is None:
                raise UnmappedGrapheme(ch, i)
            if pending:
                out.append(INHERENT_VOWEL)
            out.extend(seq)
            pending = False
        elif cls is CharClass.MODIFIER:
            seq = table.get(ch)
            if seq is None:
                raise UnmappedGrapheme(ch, i)
            if pending:
                out.append(INHERENT_VOWEL)
                pending = False
            out.extend(seq)
        elif cls is CharClass.JOIN_CONTROL:
            if pending:
                out.append(INHERENT_VOWEL)
                pending = False
            out.append(_JOIN_CONTROL_IDS[ch])
        elif cls is CharClass.NUKTA:
            raise UnmappedGrapheme(ch, i, "orphan nukta")
        else:
            raise UnmappedGrapheme(ch, i, "not a letter of the script")
        i += 1
    if pending:
        out.append(INHERENT_VOWEL)
    return tuple(out)


# ---------------------------------------------------------------------------
# cross map
# ---------------------------------------------------------------------------

def cross_map(seq: Iterable[str], tables: MappingTables,
              merges: Counter[tuple[str, str]] | None = None) -> PhonemeSeq:
    """Project a source phoneme sequence into the pivot inventory.

    Element-wise and length-preserving.  When ``merges`` is given, applied
    many-to-one rows are counted into it.
    """
    crossmap = tables.crossmap
    out = []
    for pid in seq:
        dst = crossmap.get(pid)
        if dst is None:
            raise UnknownPhoneme(pid)
        if merges is not None and dst != pid:
            merges[(pid, dst)] += 1
        out.append(dst)
    return tuple(out)


# ---------------------------------------------------------------------------
# p2g
# ---------------------------------------------------------------------------

def p2g(seq: Iterable[str], tables: MappingTables,
        script: ScriptTag = ScriptTag.DEVANAGARI) -> str:
    """Write a phoneme sequence as a word of ``script``.

    Composition rules: a vowel at word start or after a vowel takes its
    letter form; the inherent vowel after a consonant writes nothing; any
    other vowel after a consonant attaches as a matra; consonant clusters
    take a virama between members; a final bare consonant takes a trailing
    virama, as does one directly followed by a modifier.
    """
    table = tables.p2g.get(script)
    if table is None:
        raise UnknownPhoneme(f"no p2g table for script {script.value}")
    virama = VIRAMA[script]
    out: list[str] = []
    prev_consonant = False
    for pid in seq:
        forms = table.get(pid)
        if forms is None:
            raise UnknownPhoneme(pid)
        kind = INVENTORY[pid].kind
        if kind is PhonemeKind.CONSONANT:
            if prev_consonant:
                out.append(virama)
            out.append(forms.independent)
            prev_consonant = True
        elif kind is PhonemeKind.VOWEL:
            if prev_consonant:
                if pid != INHERENT_VOWEL:
                    out.append(forms.dependent)
            else:
                out.append(forms.independent)
            prev_consonant = False
        else:  # modifier
            if prev_consonant:
                out.append(virama)
            out.append(forms.independent)
            prev_consonant = False
    if prev_consonant:
        out.append(virama)
    return "".join(out)
