"""Target ingestion, orthographic search variants, and context matching.

A target is a personal name compound (modifier + name head, e.g.
"Willkommens-Merkel") tied to the referent's full name. To maximize recall
against noisy social-media text, each compound is expanded into a set of
search variants (umlaut/eszett transliteration, German linking-element
toggles, singular/plural toggles, user-supplied alternative spellings, and
a bounded-gap wildcard between modifier and head). Matching is plain
substring/pattern search over NFC-normalized text; spans are reported in
bytes of the normalized UTF-8 text.
"""

from __future__ import annotations

import csv
import json
import logging
import re
import unicodedata
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import ParseError, ValidationError

logger = logging.getLogger(__name__)

DOMAINS = ("politics", "sports", "show_business", "others")
DOC_SOURCES = ("tweet", "news_sentence", "other")
UNIT_POLICIES = ("whole_document", "per_sentence")

# variant heuristics, in generation order
H_ORIGINAL = "original"
H_UMLAUT = "umlaut"
H_ESZETT = "eszett"
H_INTERFIX_ADD = "interfix_add"
H_INTERFIX_DROP = "interfix_drop"
H_NUMBER = "number"
H_ALT_SPELLING = "alt_spelling"
H_WILDCARD = "wildcard_pattern"

HEURISTICS = (H_ORIGINAL, H_UMLAUT, H_ESZETT, H_INTERFIX_ADD, H_INTERFIX_DROP,
              H_NUMBER, H_ALT_SPELLING, H_WILDCARD)

_UMLAUT_FOLD = {"ä": "ae", "ö": "oe", "ü": "ue", "Ä": "Ae", "Ö": "Oe", "Ü": "Ue"}
_ESZETT_FOLD = {"ß": "ss"}

# German linking elements toggled between modifier and head ("Hoffnungs-" vs
# "Hoffnung-"), and the final letters toggled for singular/plural pairs
# ("Tore-" vs "Tor-").
INTERFIXES = ("s", "es", "n", "en")
NUMBER_SUFFIXES = ("e", "en", "n", "s")

# wildcard between modifier and head: 0-2 arbitrary non-newline characters
# (hyphen, space, hashtag, nothing, ...)
WILDCARD_GAP = ".{0,2}"


def nfc(s: str) -> str:
    return unicodedata.normalize("NFC", s)


@dataclass(frozen=True)
class TargetSpec:
    """A personal name compound linked to a full name and a domain."""

    target_id: str
    pnc_surface: str
    modifier_surface: str
    head_surface: str
    first_name: str
    last_name: str
    domain: str
    alt_spellings: tuple[str, ...] = ()
    modifier_lemma: str | None = None

    @property
    def full_name(self) -> str:
        return f"{self.first_name} {self.last_name}"


@dataclass(frozen=True)
class Document:
    """One context unit: a tweet, an already-sentence-split news line, or other."""

    doc_id: str
    source: str
    text: str
    url: str | None = None
    date: str | None = None


@dataclass(frozen=True)
class VariantSet:
    """Ordered, deduplicated search variants for one target.

    variants[0] is always the original surface. Wildcard entries hold a
    regex pattern string encoding "modifier <0-2 any chars> head"; all other
    entries are literal strings.
    """

    target_id: str
    variants: tuple[tuple[str, str], ...]  # (variant_string, heuristic_tag)

    def strings(self) -> list[str]:
        return [v for v, _ in self.variants]


@dataclass(frozen=True)
class ContextMatch:
    """One occurrence of a target (as compound or full name) in a document."""

    target_id: str
    doc_id: str
    kind: str  # "pnc" | "full_name"
    matched_variant: str
    byte_start: int
    byte_end: int


def fold_chars(s: str, table: dict[str, str]) -> tuple[str, list[tuple[int, str]]]:
    """Replace every mapped character, returning the folded string plus edit sites.

    Each site is (index into the folded string, original character); all
    mappings in this module replace one character with two, so the sites are
    enough to reverse the fold exactly.
    """
    out: list[str] = []
    sites: list[tuple[int, str]] = []
    pos = 0
    for ch in s:
        repl = table.get(ch)
        if repl is None:
            out.append(ch)
            pos += 1
        else:
            sites.append((pos, ch))
            out.append(repl)
            pos += len(repl)
    return "".join(out), sites


def unfold_chars(folded: str, sites: list[tuple[int, str]]) -> str:
    """Invert fold_chars: restore the original characters at the edit sites."""
    out: list[str] = []
    i = 0
    for pos, original in sorted(sites):
        out.append(folded[i:pos])
        out.append(original)
        i = pos + 2  # every fold in this module is 1 -> 2 characters
    out.append(folded[i:])
    return "".join(out)


def split_compound(target: TargetSpec) -> tuple[str, str, str]:
    """Resolve (modifier, separator, head) for a target.

    The compound surface must either consist of explicitly given modifier and
    head joined by exactly one separator character, or contain exactly one
    hyphen to split on.
    """
    pnc = nfc(target.pnc_surface)
    mod = nfc(target.modifier_surface) if target.modifier_surface else ""
    head = nfc(target.head_surface) if target.head_surface else ""
    if mod and head:
        if (len(pnc) == len(mod) + len(head) + 1
                and pnc.startswith(mod) and pnc.endswith(head)):
            return mod, pnc[len(mod)], head
        raise ValidationError(
            f"target {target.target_id!r}: modifier {mod!r} and head {head!r} "
            f"do not concatenate (with one separator) to {pnc!r}")
    if pnc.count("-") == 1:
        mod, head = pnc.split("-")
        if mod and head:
            return mod, "-", head
    raise ValidationError(
        f"target {target.target_id!r}: cannot separate modifier and head in {pnc!r}")


def generate_variants(target: TargetSpec) -> VariantSet:
    """Expand a target into its ordered, deduplicated search variant set.

    Heuristics are applied to the original one at a time (never composed):
    umlaut and eszett transliteration on modifier and head independently and
    jointly, linking-element and singular/plural toggles on the modifier,
    user-supplied alternative spellings, and a single bounded-gap wildcard
    pattern. Deterministic: repeated calls yield identical sets.
    """
    mod, sep, head = split_compound(target)
    original = mod + sep + head

    entries: list[tuple[str, str]] = []
    seen: set[str] = set()

    def add(variant: str, tag: str) -> None:
        if variant not in seen:
            seen.add(variant)
            entries.append((variant, tag))

    add(original, H_ORIGINAL)

    for table, tag in ((_UMLAUT_FOLD, H_UMLAUT), (_ESZETT_FOLD, H_ESZETT)):
        mod_f, mod_sites = fold_chars(mod, table)
        head_f, head_sites = fold_chars(head, table)
        if mod_sites:
            add(mod_f + sep + head, tag)
        if head_sites:
            add(mod + sep + head_f, tag)
        if mod_sites and head_sites:
            add(mod_f + sep + head_f, tag)

    for suffix in INTERFIXES:
        add(mod + suffix + sep + head, H_INTERFIX_ADD)
    for suffix in INTERFIXES:
        if mod.endswith(suffix) and len(mod) > len(suffix):
            add(mod[: -len(suffix)] + sep + head, H_INTERFIX_DROP)

    for suffix in NUMBER_SUFFIXES:
        add(mod + suffix + sep + head, H_NUMBER)
    for suffix in NUMBER_SUFFIXES:
        if mod.endswith(suffix) and len(mod) > len(suffix):
            add(mod[: -len(suffix)] + sep + head, H_NUMBER)

    for alt in target.alt_spellings:
        alt = nfc(alt)
        if alt:
            add(alt, H_ALT_SPELLING)

    add(re.escape(mod) + WILDCARD_GAP + re.escape(head), H_WILDCARD)

    return VariantSet(target_id=target.target_id, variants=tuple(entries))


def _byte_offsets(text: str) -> list[int]:
    """Cumulative UTF-8 byte offsets for each character position (len+1 entries)."""
    offsets = [0]
    total = 0
    for ch in text:
        total += len(ch.encode("utf-8"))
        offsets.append(total)
    return offsets


@dataclass(frozen=True)
class _CompiledTarget:
    target_id: str
    pnc_patterns: tuple[tuple[re.Pattern, str], ...]  # (compiled, variant_string)
    name_pattern: re.Pattern
    name_string: str


def _compile_targets(targets: Sequence[TargetSpec],
                     variant_sets: Sequence[VariantSet] | None,
                     case_insensitive: bool) -> list[_CompiledTarget]:
    flags = re.IGNORECASE if case_insensitive else 0
    if variant_sets is None:
        variant_sets = [generate_variants(t) for t in targets]
    by_id = {vs.target_id: vs for vs in variant_sets}
    compiled = []
    for target in targets:
        vs = by_id.get(target.target_id)
        if vs is None:
            vs = generate_variants(target)
        patterns = []
        for variant, tag in vs.variants:
            source = variant if tag == H_WILDCARD else re.escape(variant)
            patterns.append((re.compile(source, flags), variant))
        name = nfc(target.full_name)
        compiled.append(_CompiledTarget(
            target_id=target.target_id,
            pnc_patterns=tuple(patterns),
            name_pattern=re.compile(re.escape(name), flags),
            name_string=name,
        ))
    return compiled


def _match_document(doc: Document, compiled: list[_CompiledTarget],
                    include_overlaps: bool) -> list[ContextMatch]:
    text = nfc(doc.text)
    offsets = _byte_offsets(text)
    found: list[ContextMatch] = []
    for target in compiled:
        taken: set[tuple[int, int]] = set()
        pnc_hit = False
        for pattern, variant in target.pnc_patterns:
            for m in pattern.finditer(text):
                span = (m.start(), m.end())
                if span in taken:
                    continue  # earlier variant already claimed this occurrence
                taken.add(span)
                pnc_hit = True
                found.append(ContextMatch(
                    target_id=target.target_id, doc_id=doc.doc_id, kind="pnc",
                    matched_variant=variant,
                    byte_start=offsets[span[0]], byte_end=offsets[span[1]]))
        name_matches = [
            ContextMatch(
                target_id=target.target_id, doc_id=doc.doc_id, kind="full_name",
                matched_variant=target.name_string,
                byte_start=offsets[m.start()], byte_end=offsets[m.end()])
            for m in target.name_pattern.finditer(text)
        ]
        if name_matches and (include_overlaps or not pnc_hit):
            found.extend(name_matches)
    return found


def match_contexts(corpus: Sequence[Document], targets: Sequence[TargetSpec],
                   unit_policy: str = "whole_document", *,
                   variant_sets: Sequence[VariantSet] | None = None,
                   case_insensitive: bool = False,
                   include_overlaps: bool = True,
                   workers: int = 1) -> list[ContextMatch]:
    """Find every compound and full-name occurrence of each target in the corpus.

    unit_policy is "whole_document" for tweet-like corpora and "per_sentence"
    for news corpora whose documents already arrive as single sentences; the
    scan itself is identical, the policy names the context unit. With
    include_overlaps=False, full-name matches are dropped from documents that
    also contain the compound for the same target. Matching may run across
    several worker threads; output order is fixed by the final sort.
    """
    if unit_policy not in UNIT_POLICIES:
        raise ValidationError(f"unknown unit_policy {unit_policy!r}; expected one of {UNIT_POLICIES}")
    if workers < 1:
        raise ValidationError("workers must be >= 1")
    compiled = _compile_targets(targets, variant_sets, case_insensitive)

    if workers == 1:
        per_doc = [_match_document(doc, compiled, include_overlaps) for doc in corpus]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            per_doc = list(pool.map(
                lambda d: _match_document(d, compiled, include_overlaps), corpus))

    matches = [m for doc_matches in per_doc for m in doc_matches]
    matches.sort(key=lambda m: (m.target_id, m.doc_id, m.byte_start, m.byte_end, m.kind))
    return matches


def dedupe_documents(corpus: Sequence[Document]) -> list[Document]:
    """Drop retweet-style duplicates: keep the first document per distinct URL.

    Documents without a URL never collide and are always kept. Order is stable.
    """
    seen: set[str] = set()
    kept = []
    for doc in corpus:
        if doc.url is not None:
            if doc.url in seen:
                continue
            seen.add(doc.url)
        kept.append(doc)
    return kept


def pnc_match_counts(matches: Iterable[ContextMatch]) -> Counter:
    """Count kind="pnc" matches per target."""
    counts: Counter = Counter()
    for m in matches:
        if m.kind == "pnc":
            counts[m.target_id] += 1
    return counts


def frequency_filter(matches: Iterable[ContextMatch], min_freq: int,
                     targets: Sequence[TargetSpec] | None = None,
                     ) -> tuple[list[str], list[str]]:
    """Partition targets into (retained, dropped) by compound match count.

    A target is retained iff it has at least min_freq kind="pnc" matches.
    When the full target list is supplied, targets without any match appear
    in the dropped set as well. Both lists are sorted.
    """
    if min_freq < 1:
        raise ValidationError(f"min_freq must be >= 1, got {min_freq}")
    counts = pnc_match_counts(matches)
    ids = set(counts)
    if targets is not None:
        ids |= {t.target_id for t in targets}
    retained = sorted(t for t in ids if counts.get(t, 0) >= min_freq)
    dropped = sorted(t for t in ids if counts.get(t, 0) < min_freq)
    return retained, dropped


# ---------------------------------------------------------------------------
# file interfaces

TARGETS_FIELDS = ("target_id", "pnc_surface", "modifier_surface", "head_surface",
                  "first_name", "last_name", "domain", "alt_spellings")
MATCHES_FIELDS = ("target_id", "doc_id", "kind", "matched_variant",
                  "byte_start", "byte_end")


def read_targets_csv(path: str) -> list[TargetSpec]:
    """Load the target list. Header columns per TARGETS_FIELDS; an optional
    trailing modifier_lemma column carries manually determined modifier lemmas.
    alt_spellings are semicolon-joined."""
    targets: list[TargetSpec] = []
    seen_ids: set[str] = set()
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(_skip_comments(fh))
        if reader.fieldnames is None:
            raise ParseError("empty targets file", path=path)
        missing = [c for c in TARGETS_FIELDS if c not in reader.fieldnames]
        if missing:
            raise ParseError(f"targets file missing columns: {', '.join(missing)}", path=path)
        for line_no, row in enumerate(reader, start=2):
            target_id = (row["target_id"] or "").strip()
            if not target_id:
                raise ParseError("empty target_id", path=path, line=line_no)
            if target_id in seen_ids:
                raise ParseError(f"duplicate target_id {target_id!r}", path=path, line=line_no)
            seen_ids.add(target_id)
            domain = (row["domain"] or "").strip()
            if domain not in DOMAINS:
                raise ParseError(f"unknown domain {domain!r} for target {target_id!r}",
                                 path=path, line=line_no)
            alts = tuple(a.strip() for a in (row["alt_spellings"] or "").split(";") if a.strip())
            lemma = (row.get("modifier_lemma") or "").strip() or None
            target = TargetSpec(
                target_id=target_id,
                pnc_surface=nfc((row["pnc_surface"] or "").strip()),
                modifier_surface=nfc((row["modifier_surface"] or "").strip()),
                head_surface=nfc((row["head_surface"] or "").strip()),
                first_name=nfc((row["first_name"] or "").strip()),
                last_name=nfc((row["last_name"] or "").strip()),
                domain=domain,
                alt_spellings=alts,
                modifier_lemma=nfc(lemma) if lemma else None,
            )
            split_compound(target)  # validate separability up front
            targets.append(target)
    if not targets:
        raise ParseError("targets file holds no rows", path=path)
    return targets


def read_corpus_jsonl(path: str) -> list[Document]:
    """Load a corpus: one Document JSON object per line."""
    docs: list[Document] = []
    seen: set[str] = set()
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(f"invalid JSON: {exc}", path=path, line=line_no) from exc
            doc_id = str(obj.get("doc_id", "")).strip()
            if not doc_id:
                raise ParseError("missing doc_id", path=path, line=line_no)
            if doc_id in seen:
                raise ParseError(f"duplicate doc_id {doc_id!r}", path=path, line=line_no)
            seen.add(doc_id)
            source = obj.get("source", "other")
            if source not in DOC_SOURCES:
                raise ParseError(f"unknown source {source!r}", path=path, line=line_no)
            text = obj.get("text", "")
            if not text:
                raise ParseError(f"empty text for doc {doc_id!r}", path=path, line=line_no)
            docs.append(Document(doc_id=doc_id, source=source, text=text,
                                 url=obj.get("url"), date=obj.get("date")))
    return docs


def write_matches_csv(matches: Sequence[ContextMatch], path: str,
                      header_comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        if header_comment:
            fh.write(f"# {header_comment}\n")
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(MATCHES_FIELDS)
        for m in matches:
            writer.writerow([m.target_id, m.doc_id, m.kind, m.matched_variant,
                             m.byte_start, m.byte_end])


def read_matches_csv(path: str) -> list[ContextMatch]:
    matches: list[ContextMatch] = []
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(_skip_comments(fh))
        for line_no, row in enumerate(reader, start=2):
            try:
                matches.append(ContextMatch(
                    target_id=row["target_id"], doc_id=row["doc_id"], kind=row["kind"],
                    matched_variant=row["matched_variant"],
                    byte_start=int(row["byte_start"]), byte_end=int(row["byte_end"])))
            except (KeyError, TypeError, ValueError) as exc:
                raise ParseError(f"bad match row: {exc}", path=path, line=line_no) from exc
    return matches


def _skip_comments(fh):
    for line in fh:
        if not line.startswith("#"):
            yield line
