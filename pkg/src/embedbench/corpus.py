"""Labeled document collections: loading, validation, splitting, synthesis.

A corpus is an ordered list of (id, text, label) documents over a closed
label set. Since the original benchmark data cannot be redistributed, a
deterministic synthetic-corpus generator is included so every experiment
in this package can run end to end; any CSV/JSONL corpus with the same
shape can be dropped in instead.
"""

from __future__ import annotations

import csv
import json
import unicodedata
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import preprocess
from .errors import ConfigurationError, CorpusError

MAX_LABELS = 64  # guards against a swapped text/label column


@dataclass(frozen=True)
class Document:
    id: str
    text: str
    label: str


@dataclass(frozen=True)
class LabeledCorpus:
    """Immutable corpus; ``labels`` is the closed label set, sorted."""

    documents: tuple[Document, ...]
    labels: tuple[str, ...]
    provenance: str = "unknown"

    def __post_init__(self):
        seen_ids = set()
        label_set = set(self.labels)
        for doc in self.documents:
            if doc.id in seen_ids:
                raise CorpusError(f"duplicate document id {doc.id!r}")
            seen_ids.add(doc.id)
            if doc.label not in label_set:
                raise CorpusError(f"document {doc.id!r} has label {doc.label!r} outside the label set")

    def __len__(self) -> int:
        return len(self.documents)

    def texts(self) -> list[str]:
        return [d.text for d in self.documents]

    def doc_labels(self) -> list[str]:
        return [d.label for d in self.documents]

    @classmethod
    def from_documents(cls, documents, provenance="unknown") -> "LabeledCorpus":
        docs = tuple(documents)
        labels = tuple(sorted({d.label for d in docs}))
        return cls(documents=docs, labels=labels, provenance=provenance)


def _normalize_record(raw_id, raw_text, raw_label, line):
    if raw_id is None or not str(raw_id).strip():
        raise CorpusError("missing or empty 'id' field", line=line)
    if raw_label is None or not str(raw_label).strip():
        raise CorpusError("missing or empty 'label' field", line=line)
    if raw_text is None:
        raise CorpusError("missing 'text' field", line=line)
    text = unicodedata.normalize("NFC", str(raw_text))
    if not text.strip():
        raise CorpusError("text is empty after normalization", line=line)
    return Document(id=str(raw_id), text=text, label=str(raw_label))


def _infer_format(path, format):
    if format is not None:
        if format not in ("csv", "jsonl"):
            raise ConfigurationError(f"unknown corpus format {format!r}")
        return format
    suffix = Path(path).suffix.lower()
    if suffix == ".csv":
        return "csv"
    if suffix in (".jsonl", ".ndjson"):
        return "jsonl"
    raise ConfigurationError(f"cannot infer corpus format from {path!r}; pass format='csv' or 'jsonl'")


def load_corpus(path, format=None) -> LabeledCorpus:
    """Load a corpus from CSV (header ``id,text,label``) or JSONL.

    Record-level problems raise CorpusError naming the offending line;
    an empty file or an implausibly large label set is rejected outright.
    Input order is preserved and texts are NFC-normalized.
    """
    fmt = _infer_format(path, format)
    documents = []
    if fmt == "csv":
        with open(path, encoding="utf-8", newline="") as fh:
            reader = csv.DictReader(fh)
            if reader.fieldnames is None:
                raise CorpusError(f"{path}: empty file")
            missing = {"id", "text", "label"} - set(reader.fieldnames)
            if missing:
                raise CorpusError(f"{path}: header is missing columns {sorted(missing)}")
            for row in reader:
                documents.append(
                    _normalize_record(row.get("id"), row.get("text"), row.get("label"), reader.line_num)
                )
    else:
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                if not line.strip():
                    continue
                try:
                    obj = json.loads(line)
                except json.JSONDecodeError as exc:
                    raise CorpusError(f"invalid JSON: {exc.msg}", line=lineno) from exc
                documents.append(_normalize_record(obj.get("id"), obj.get("text"), obj.get("label"), lineno))
    if not documents:
        raise CorpusError(f"{path}: corpus is empty")
    labels = {d.label for d in documents}
    if len(labels) > MAX_LABELS:
        raise ConfigurationError(
            f"{path}: {len(labels)} distinct labels exceeds {MAX_LABELS}; is the label column correct?"
        )
    return LabeledCorpus(documents=tuple(documents), labels=tuple(sorted(labels)), provenance=str(path))


def save_corpus(corpus: LabeledCorpus, path, format=None) -> None:
    """Write a corpus as CSV or JSONL; load_corpus(save_corpus(c)) == c."""
    fmt = _infer_format(path, format)
    if fmt == "csv":
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["id", "text", "label"])
            for d in corpus.documents:
                writer.writerow([d.id, d.text, d.label])
    else:
        with open(path, "w", encoding="utf-8") as fh:
            for d in corpus.documents:
                fh.write(json.dumps({"id": d.id, "text": d.text, "label": d.label}, ensure_ascii=False))
                fh.write("\n")


@dataclass(frozen=True)
class SplitSpec:
    test_fraction: float = 0.2
    seed: int = 42
    stratified: bool = True

    def __post_init__(self):
        if not 0.0 < self.test_fraction < 1.0:
            raise ConfigurationError(f"test_fraction must be in (0,1), got {self.test_fraction}")


def _subcorpus(corpus, indices, tag):
    docs = tuple(corpus.documents[i] for i in sorted(indices))
    return LabeledCorpus(documents=docs, labels=corpus.labels, provenance=f"{corpus.provenance}#{tag}")


def stratified_split(corpus: LabeledCorpus, spec: SplitSpec) -> tuple[LabeledCorpus, LabeledCorpus]:
    """Deterministic train/test partition.

    Stratified mode keeps each label's test share within one document of
    ``test_fraction`` and guarantees at least one train and one test
    document per label (hence every label needs >= 2 documents).
    """
    rng = np.random.default_rng(spec.seed)
    test_idx: list[int] = []
    if spec.stratified:
        for label in corpus.labels:
            idxs = [i for i, d in enumerate(corpus.documents) if d.label == label]
            if len(idxs) < 2:
                raise CorpusError(f"label {label!r} has {len(idxs)} document(s); stratified split needs >= 2")
            n_test = int(round(len(idxs) * spec.test_fraction))
            n_test = min(max(n_test, 1), len(idxs) - 1)
            perm = rng.permutation(len(idxs))
            test_idx.extend(idxs[j] for j in perm[:n_test])
    else:
        n = len(corpus.documents)
        if n < 2:
            raise CorpusError("split needs at least 2 documents")
        n_test = min(max(int(round(n * spec.test_fraction)), 1), n - 1)
        perm = rng.permutation(n)
        test_idx = list(perm[:n_test])
    test_set = set(test_idx)
    train_idx = [i for i in range(len(corpus.documents)) if i not in test_set]
    return _subcorpus(corpus, train_idx, "train"), _subcorpus(corpus, test_idx, "test")


# --- synthetic corpus ------------------------------------------------------

KEYWORDS_PER_LABEL = 12
NOISE_WORDS = 40

# agglutinative suffix forms the generator attaches when morphology=True,
# split by vowel harmony class; all are strippable by the bundled stemmer
SYNTH_SUFFIXES_BACK = ("lar", "dan", "da", "ları")
SYNTH_SUFFIXES_FRONT = ("ler", "den", "de", "leri")
SYNTH_SUFFIXES = SYNTH_SUFFIXES_BACK + SYNTH_SUFFIXES_FRONT

# function words sprinkled into every document; all on the bundled stopword list
_FUNCTION_WORDS = ("ve", "bir", "bu", "da", "de", "için", "çok", "gibi", "ama", "sonra")

_PUNCT = (",", ".", "!", "?")
_CONSONANTS = "bdgklmnprstvyz"
_VOWELS_BACK = "aıou"
_VOWELS_FRONT = "eiöü"

_bundled_stemmer = None


def _stemmer():
    global _bundled_stemmer
    if _bundled_stemmer is None:
        _bundled_stemmer = preprocess.load_stemmer()
    return _bundled_stemmer


def _suffix_choices(root: str) -> tuple[str, ...]:
    for c in reversed(root):
        if c in _VOWELS_BACK:
            return SYNTH_SUFFIXES_BACK
        if c in _VOWELS_FRONT:
            return SYNTH_SUFFIXES_FRONT
    return SYNTH_SUFFIXES_BACK


def _make_root(rng) -> str:
    # CVC or CVCVC with one harmony class per root, always consonant-final
    vowels = _VOWELS_BACK if rng.integers(2) else _VOWELS_FRONT
    n_syll = int(rng.integers(1, 3))
    parts = []
    for _ in range(n_syll):
        parts.append(_CONSONANTS[rng.integers(len(_CONSONANTS))])
        parts.append(vowels[rng.integers(len(vowels))])
    parts.append(_CONSONANTS[rng.integers(len(_CONSONANTS))])
    return "".join(parts)


def _stem_stable(root: str) -> bool:
    # the stemmer must leave the bare root alone and recover it from
    # every suffixed form, otherwise stemming would not fold the variants
    st = _stemmer()
    if st(root) != root:
        return False
    return all(st(root + s) == root for s in _suffix_choices(root))


def _generate_roots(rng, count: int) -> list[str]:
    roots: list[str] = []
    seen = set()
    while len(roots) < count:
        root = _make_root(rng)
        if root in seen or not _stem_stable(root):
            continue
        seen.add(root)
        roots.append(root)
    return roots


def synth_keywords(n_labels: int, seed: int) -> list[list[str]]:
    """The disjoint per-label keyword roots synth_corpus(seed=seed) uses."""
    rng = np.random.default_rng(seed)
    pool = _generate_roots(rng, n_labels * KEYWORDS_PER_LABEL + NOISE_WORDS)
    return [
        pool[i * KEYWORDS_PER_LABEL : (i + 1) * KEYWORDS_PER_LABEL]
        for i in range(n_labels)
    ]


def _decorate(rng, token: str) -> str:
    r = rng.random()
    if r < 0.12:
        token = token + _PUNCT[rng.integers(len(_PUNCT))]
    elif r < 0.24:
        token = preprocess.turkish_upper(token[0]) + token[1:]
    elif r < 0.27:
        token = preprocess.turkish_upper(token)
    return token


def synth_corpus(n_docs: int, n_labels: int, seed: int, morphology: bool = False) -> LabeledCorpus:
    """Generate a deterministic labeled corpus with disjoint keyword cores.

    Each label owns a private set of keyword roots; all labels share noise
    roots, function words, numbers and punctuation, so every preprocessing
    stage has something to act on. With morphology=True, keyword and noise
    roots appear under the suffix forms in SYNTH_SUFFIXES, which makes
    stemming fold surface variants back together.
    """
    if n_labels < 2:
        raise ConfigurationError("synth_corpus needs n_labels >= 2")
    if n_docs < 2 * n_labels:
        raise ConfigurationError(f"n_docs={n_docs} is below 2*n_labels={2 * n_labels}")
    rng = np.random.default_rng(seed)
    pool = _generate_roots(rng, n_labels * KEYWORDS_PER_LABEL + NOISE_WORDS)
    keywords = [pool[i * KEYWORDS_PER_LABEL : (i + 1) * KEYWORDS_PER_LABEL] for i in range(n_labels)]
    noise = pool[n_labels * KEYWORDS_PER_LABEL :]
    labels = [f"label{i:02d}" for i in range(n_labels)]

    def emit(root: str) -> str:
        if morphology and rng.random() < 0.6:
            choices = _suffix_choices(root)
            root = root + choices[rng.integers(len(choices))]
        return _decorate(rng, root)

    documents = []
    for i in range(n_docs):
        label_i = i % n_labels
        tokens = []
        for _ in range(int(rng.integers(8, 15))):
            tokens.append(emit(keywords[label_i][rng.integers(KEYWORDS_PER_LABEL)]))
        for _ in range(int(rng.integers(8, 15))):
            tokens.append(emit(noise[rng.integers(NOISE_WORDS)]))
        for _ in range(int(rng.integers(4, 9))):
            tokens.append(_decorate(rng, _FUNCTION_WORDS[rng.integers(len(_FUNCTION_WORDS))]))
        for _ in range(int(rng.integers(0, 3))):
            tokens.append(str(rng.integers(1900, 2030)))
        rng.shuffle(tokens)
        documents.append(Document(id=f"synth-{i:05d}", text=" ".join(tokens), label=labels[label_i]))
    provenance = f"synth(n_docs={n_docs},n_labels={n_labels},seed={seed},morphology={morphology})"
    return LabeledCorpus(documents=tuple(documents), labels=tuple(labels), provenance=provenance)
