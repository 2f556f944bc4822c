"""Exception types raised across the package."""


class TranslipiError(Exception):
    """Base class for all package errors."""


class TableError(TranslipiError):
    """A mapping table failed to load or validate."""

    def __init__(self, message: str, path: str | None = None, line: int | None = None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f" [{path}" + (f":{line}" if line is not None else "") + "]"
        super().__init__(message + where)


class UnmappedGrapheme(TranslipiError):
    """A code point has no grapheme-to-phoneme entry."""

    def __init__(self, grapheme: str, position: int, reason: str = "no g2p entry"):
        self.grapheme = grapheme
        self.position = position
        self.reason = reason
        super().__init__(
            f"unmapped grapheme {grapheme!r} (U+{ord(grapheme[0]):04X}) "
            f"at position {position}: {reason}")


class UnknownPhoneme(TranslipiError):
    """A phoneme id has no phoneme-to-grapheme entry."""

    def __init__(self, phoneme_id: str):
        self.phoneme_id = phoneme_id
        super().__init__(f"unknown phoneme id {phoneme_id!r}")


class NoPreimage(TranslipiError):
    """Inverse transliteration found no source-script spelling."""

    def __init__(self, word: str, detail: str):
        self.word = word
        super().__init__(f"no source-script preimage for {word!r}: {detail}")


class LexiconError(TranslipiError):
    """A lexicon file failed to load or validate."""

    def __init__(self, message: str, path: str | None = None, line: int | None = None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f" [{path}" + (f":{line}" if line is not None else "") + "]"
        super().__init__(message + where)
