"""Valence lexicon and tagged-context handling.

The lexicon maps lemma forms to affective valence ratings on a 0..10 scale.
Context texts arrive pre-tagged (token, lemma, part-of-speech per line,
grouped per document); this module reduces them to the content-word lemmas
that valence lookups operate on.
"""

from __future__ import annotations

import random
import re
import unicodedata
from dataclasses import dataclass

from .errors import ParseError, ValidationError

# STTS tags counted as content words: common nouns, adjectives, full verbs.
CONTENT_POS_TAGS = frozenset(
    {"NN", "ADJA", "ADJD", "VVFIN", "VVIMP", "VVINF", "VVIZU", "VVPP"})

VALENCE_MIN = 0.0
VALENCE_MAX = 10.0

DUPLICATE_POLICIES = ("first_wins", "seeded_random")

# noise stripped from raw text before tagging: URLs, then the marker
# characters of hashtags and user mentions (keeping the word itself)
DEFAULT_STRIP_PATTERNS = (
    r"https?://\S+",
    r"(?<!\w)[#@](?=\w)",
)


def _norm_key(form: str) -> str:
    return unicodedata.normalize("NFC", form).lower()


class ValenceLexicon:
    """Lemma -> valence mapping with case-insensitive, NFC-normalized lookup."""

    def __init__(self, entries: dict[str, float]):
        self._entries = {_norm_key(k): float(v) for k, v in entries.items()}

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, form: str) -> bool:
        return _norm_key(form) in self._entries

    def get(self, form: str) -> float | None:
        return self._entries.get(_norm_key(form))

    def items(self):
        return self._entries.items()


def load_lexicon(path: str, duplicate_policy: str = "first_wins",
                 seed: int | None = None) -> ValenceLexicon:
    """Load a two-column TSV (form, valence score in 0..10).

    Keys are lowercased and NFC-normalized, which can collide distinct input
    rows; duplicate_policy picks the survivor. "first_wins" keeps the first
    occurrence. "seeded_random" draws one of the collected scores per key
    with random.Random(seed), visiting keys in first-appearance order, so a
    fixed seed yields a fixed lexicon.
    """
    if duplicate_policy not in DUPLICATE_POLICIES:
        raise ValidationError(
            f"unknown duplicate_policy {duplicate_policy!r}; expected one of {DUPLICATE_POLICIES}")
    collected: dict[str, list[float]] = {}
    order: list[str] = []
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise ParseError(f"expected 2 tab-separated fields, got {len(parts)}",
                                 path=path, line=line_no)
            form, raw_score = parts
            key = _norm_key(form.strip())
            if not key:
                raise ParseError("empty form", path=path, line=line_no)
            try:
                score = float(raw_score)
            except ValueError as exc:
                raise ParseError(f"non-numeric score {raw_score!r}",
                                 path=path, line=line_no) from exc
            if not VALENCE_MIN <= score <= VALENCE_MAX:
                raise ParseError(f"score {score} outside [0, 10]", path=path, line=line_no)
            if key not in collected:
                collected[key] = []
                order.append(key)
            collected[key].append(score)

    if not collected:
        raise ParseError("lexicon holds no entries", path=path)

    entries: dict[str, float] = {}
    if duplicate_policy == "first_wins":
        for key in order:
            entries[key] = collected[key][0]
    else:
        rng = random.Random(seed)
        for key in order:
            entries[key] = rng.choice(collected[key])
    return ValenceLexicon(entries)


@dataclass(frozen=True)
class TaggedToken:
    surface: str
    lemma: str
    pos: str

    def effective_lemma(self) -> str:
        """Lemma form used for lookups; falls back to the surface when the
        tagger produced no usable lemma."""
        if self.lemma and self.lemma != "<unknown>":
            return self.lemma
        return self.surface


@dataclass(frozen=True)
class TaggedContext:
    doc_id: str
    tokens: tuple[TaggedToken, ...]


def read_tagged_contexts(path: str) -> list[TaggedContext]:
    """Parse pre-tagged contexts.

    Format: a "#doc:<doc_id>" line starts a context, each following line is
    surface<TAB>lemma<TAB>pos, and a blank line (or the next header, or end
    of file) terminates it.
    """
    contexts: list[TaggedContext] = []
    seen: set[str] = set()
    doc_id: str | None = None
    tokens: list[TaggedToken] = []

    def flush():
        nonlocal doc_id, tokens
        if doc_id is not None:
            contexts.append(TaggedContext(doc_id=doc_id, tokens=tuple(tokens)))
        doc_id = None
        tokens = []

    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if line.startswith("#doc:"):
                flush()
                doc_id = line[len("#doc:"):].strip()
                if not doc_id:
                    raise ParseError("empty doc id in header", path=path, line=line_no)
                if doc_id in seen:
                    raise ParseError(f"duplicate context for doc {doc_id!r}",
                                     path=path, line=line_no)
                seen.add(doc_id)
                continue
            if not line.strip():
                flush()
                continue
            if doc_id is None:
                raise ParseError("token line outside any #doc: block", path=path, line=line_no)
            parts = line.split("\t")
            if len(parts) != 3:
                raise ParseError(f"expected 3 tab-separated fields, got {len(parts)}",
                                 path=path, line=line_no)
            tokens.append(TaggedToken(surface=parts[0], lemma=parts[1], pos=parts[2]))
    flush()
    return contexts


def filter_content_tokens(context: TaggedContext) -> list[TaggedToken]:
    """Tokens whose part-of-speech marks a content word."""
    return [t for t in context.tokens if t.pos in CONTENT_POS_TAGS]


def lookup_valence(token: TaggedToken, lexicon: ValenceLexicon) -> float | None:
    """Valence for a token's effective lemma, or None when out of vocabulary."""
    return lexicon.get(token.effective_lemma())


def prepare_text_for_tagging(text: str,
                             strip_patterns: tuple[str, ...] = DEFAULT_STRIP_PATTERNS) -> str:
    """Light cleanup applied before handing text to an external tagger:
    drop URLs and hashtag/mention markers, collapse whitespace."""
    cleaned = unicodedata.normalize("NFC", text)
    for pattern in strip_patterns:
        cleaned = re.sub(pattern, "", cleaned)
    return " ".join(cleaned.split())
