"""Tokenization and the 16 preprocessing combinations.

Four independent stages (Turkish-aware lowercasing, non-alphabetic
character stripping, suffix stemming, stopword removal) can each be
switched on or off. A combination is identified by a 4-character code of
``{0,1}`` in the fixed order (lowercase, strip_nonalpha, stem,
remove_stopwords); stages always compose in that same order.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib.resources import files

from .errors import ConfigurationError

# 'I' and dotted 'İ' do not follow the default Unicode lowercase mapping
# in Turkish; everything else does.
_TURKISH_LOWER = {ord("I"): "ı", ord("İ"): "i"}
_TURKISH_UPPER = {ord("ı"): "I", ord("i"): "İ"}

STAGE_NAMES = ("lowercase", "strip_nonalpha", "stem", "remove_stopwords")


def turkish_lower(text: str) -> str:
    """Lowercase a string with Turkish I/İ handling."""
    return text.translate(_TURKISH_LOWER).lower()


def turkish_upper(text: str) -> str:
    """Uppercase a string with Turkish ı/i handling."""
    return text.translate(_TURKISH_UPPER).upper()


@dataclass(frozen=True)
class PreprocessConfig:
    """Which of the four stages are enabled."""

    lowercase: bool = False
    strip_nonalpha: bool = False
    stem: bool = False
    remove_stopwords: bool = False

    @property
    def code(self) -> str:
        """4-bit code, one character per stage in STAGE_NAMES order."""
        bits = (self.lowercase, self.strip_nonalpha, self.stem, self.remove_stopwords)
        return "".join("1" if b else "0" for b in bits)

    @classmethod
    def from_code(cls, code: str) -> "PreprocessConfig":
        if len(code) != 4 or any(c not in "01" for c in code):
            raise ConfigurationError(f"invalid preprocessing code {code!r}: expected 4 chars of 0/1")
        return cls(*(c == "1" for c in code))


def enumerate_configs() -> list[PreprocessConfig]:
    """All 16 combinations in ascending binary-code order (0000 .. 1111)."""
    return [PreprocessConfig.from_code(format(i, "04b")) for i in range(16)]


def tokenize(text: str) -> list[str]:
    """Split on Unicode whitespace. Never merges or reorders tokens."""
    return text.split()


def lowercase_turkish(tokens: list[str]) -> list[str]:
    """Apply Turkish-aware case folding to every token."""
    return [turkish_lower(t) for t in tokens]


def strip_nonalpha(tokens: list[str]) -> list[str]:
    """Remove non-alphabetic characters from each token; drop emptied tokens."""
    out = []
    for t in tokens:
        kept = "".join(c for c in t if c.isalpha())
        if kept:
            out.append(kept)
    return out


@dataclass(frozen=True)
class StopwordList:
    """A set of lowercase stopwords plus where it came from."""

    words: frozenset[str]
    source: str = "bundled"

    def __contains__(self, token: str) -> bool:
        return token in self.words


def load_stopwords(path=None) -> StopwordList:
    """Load a stopword file (UTF-8, one word per line, '#' comments ignored).

    With no path, loads the bundled Turkish list. Entries are case-folded
    so the list invariant (all lowercase) holds regardless of the file.
    """
    if path is None:
        text = (files("embedbench") / "data" / "stopwords_tr.txt").read_text("utf-8")
        source = "bundled"
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
        source = str(path)
    words = frozenset(
        turkish_lower(line.strip())
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    )
    return StopwordList(words=words, source=source)


def remove_stopwords(tokens: list[str], stopwords: StopwordList) -> list[str]:
    """Drop tokens whose case-folded form is a stopword.

    Matching is folded independently of the lowercase stage, so combos
    that skip lowercasing still remove capitalized stopwords.
    """
    if not stopwords.words:
        raise ConfigurationError("stopword list is empty")
    return [t for t in tokens if turkish_lower(t) not in stopwords]


class SuffixStemmer:
    """Iterative longest-match-first suffix stripper.

    At each round the longest table suffix matching the (case-folded) end
    of the token is cut off, provided at least ``min_stem_len`` characters
    remain; rounds repeat until nothing matches. Matching is case-folded
    but the returned stem keeps the original characters.
    """

    def __init__(self, suffixes, min_stem_len: int = 2):
        if min_stem_len < 1:
            raise ConfigurationError("min_stem_len must be >= 1")
        cleaned = {turkish_lower(s) for s in suffixes if s}
        if not cleaned:
            raise ConfigurationError("suffix table is empty")
        # longest first; ties alphabetical for a deterministic scan order
        self.suffixes = tuple(sorted(cleaned, key=lambda s: (-len(s), s)))
        self.min_stem_len = min_stem_len

    def __call__(self, token: str) -> str:
        current = token
        folded = turkish_lower(token)
        while True:
            for suffix in self.suffixes:
                cut = len(folded) - len(suffix)
                if cut >= self.min_stem_len and folded.endswith(suffix):
                    current = current[:cut]
                    folded = folded[:cut]
                    break
            else:
                return current


def load_stemmer(path=None, min_stem_len: int = 2) -> SuffixStemmer:
    """Build a SuffixStemmer from a suffix file (UTF-8, one suffix per line).

    With no path, loads the bundled Turkish table.
    """
    if path is None:
        text = (files("embedbench") / "data" / "suffixes_tr.txt").read_text("utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    suffixes = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    return SuffixStemmer(suffixes, min_stem_len=min_stem_len)


def stem(tokens: list[str], stemmer) -> list[str]:
    """Replace each token by its stem; a stem that comes back empty keeps the token."""
    out = []
    for t in tokens:
        s = stemmer(t)
        out.append(s if s else t)
    return out


def default_resources() -> tuple[StopwordList, SuffixStemmer]:
    """The bundled stopword list and stemmer."""
    return load_stopwords(), load_stemmer()


def apply_pipeline(text: str, config: PreprocessConfig, stopwords=None, stemmer=None) -> list[str]:
    """Tokenize and run the enabled stages in the fixed code order.

    Code "0000" is tokenization only. An enabled stage whose resource is
    missing raises ConfigurationError.
    """
    tokens = tokenize(text)
    if config.lowercase:
        tokens = lowercase_turkish(tokens)
    if config.strip_nonalpha:
        tokens = strip_nonalpha(tokens)
    if config.stem:
        if stemmer is None:
            raise ConfigurationError(f"code {config.code} enables stemming but no stemmer was given")
        tokens = stem(tokens, stemmer)
    if config.remove_stopwords:
        if stopwords is None:
            raise ConfigurationError(f"code {config.code} enables stopword removal but no list was given")
        tokens = remove_stopwords(tokens, stopwords)
    return tokens
