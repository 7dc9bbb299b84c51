"""Context valence scores and compound-vs-name comparisons.

The lexicon-based valence of a target is the mean rating of all content-word
lemmas found in the lexicon across the target's matched contexts:

    v(t) = (1 / |W_t|) * sum(valence(w) for w in W_t)

where W_t is the bag of resolved content lemmas. A target with an empty bag
is unscorable and yields no record. The evaluative shift of a compound is
the difference between its score and the score of the bare full name,
delta = v(pnc) - v(name); for the lexicon-based approach the shift of the
modifier itself, delta_mod = v(modifier) - v(pnc), is reported too.
"""

from __future__ import annotations

import logging
import math
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .corpus import ContextMatch, TargetSpec
from .errors import ValidationError
from .lexicon import TaggedContext, ValenceLexicon, filter_content_tokens

logger = logging.getLogger(__name__)

KINDS = ("pnc", "full_name")
POOLING_MODES = ("bag", "per_context_mean")


@dataclass(frozen=True)
class ScoreRecord:
    """Valence score for one (target, kind) under one scoring approach.

    approach is "norms" for lexicon-based scores, "plm:<model_id>" for scores
    derived from a classifier's label distribution, or "human" for scores
    from pooled manual annotation. For label-distribution scores,
    n_context_lemmas is 0 and n_contexts is the number of labeled contexts.
    """

    target_id: str
    kind: str
    approach: str
    valence: float
    n_contexts: int
    n_context_lemmas: int


@dataclass(frozen=True)
class DeltaRecord:
    """Compound-minus-name valence shift for one target under one approach."""

    target_id: str
    approach: str
    pnc_valence: float
    name_valence: float
    delta: float
    modifier_valence: float | None = None
    modifier_delta: float | None = None


def _resolved_valences(context: TaggedContext, lexicon: ValenceLexicon) -> list[float]:
    out = []
    for token in filter_content_tokens(context):
        v = lexicon.get(token.effective_lemma())
        if v is not None:
            out.append(v)
    return out


def target_valence_from_contexts(target_id: str, kind: str,
                                 contexts: Sequence[TaggedContext],
                                 lexicon: ValenceLexicon,
                                 pooling: str = "bag") -> ScoreRecord | None:
    """Score one (target, kind) from its matched contexts; None when no
    content lemma resolves in the lexicon.

    pooling="bag" averages over the pooled lemma bag of all contexts (the
    default measure). pooling="per_context_mean" averages per-context means
    instead, weighting each context equally regardless of length.
    """
    if kind not in KINDS:
        raise ValidationError(f"unknown kind {kind!r}; expected one of {KINDS}")
    if pooling not in POOLING_MODES:
        raise ValidationError(f"unknown pooling {pooling!r}; expected one of {POOLING_MODES}")

    per_context = [_resolved_valences(c, lexicon) for c in contexts]
    n_lemmas = sum(len(vs) for vs in per_context)
    if n_lemmas == 0:
        return None
    if pooling == "bag":
        valence = math.fsum(v for vs in per_context for v in vs) / n_lemmas
    else:
        means = [math.fsum(vs) / len(vs) for vs in per_context if vs]
        valence = math.fsum(means) / len(means)
    return ScoreRecord(target_id=target_id, kind=kind, approach="norms",
                       valence=valence, n_contexts=len(contexts),
                       n_context_lemmas=n_lemmas)


def target_valence(targets: Sequence[TargetSpec], matches: Iterable[ContextMatch],
                   tagged: Mapping[str, TaggedContext], lexicon: ValenceLexicon,
                   pooling: str = "bag") -> tuple[list[ScoreRecord], list[str]]:
    """Score every (target, kind) pair that has matches and tagged contexts.

    tagged maps doc_id to its tagged context; matched documents without an
    entry are skipped with a warning. Returns the records sorted by
    (target_id, kind) plus a list of notes on unscorable pairs.
    """
    docs_by_pair: dict[tuple[str, str], list[str]] = defaultdict(list)
    for m in matches:
        key = (m.target_id, m.kind)
        if m.doc_id not in docs_by_pair[key]:
            docs_by_pair[key].append(m.doc_id)

    records: list[ScoreRecord] = []
    notes: list[str] = []
    missing_docs: set[str] = set()
    for (target_id, kind) in sorted(docs_by_pair):
        contexts = []
        for doc_id in docs_by_pair[(target_id, kind)]:
            ctx = tagged.get(doc_id)
            if ctx is None:
                missing_docs.add(doc_id)
                continue
            contexts.append(ctx)
        rec = target_valence_from_contexts(target_id, kind, contexts, lexicon, pooling)
        if rec is None:
            notes.append(f"{target_id}/{kind}: no content lemma found in lexicon; unscorable")
        else:
            records.append(rec)
    if missing_docs:
        logger.warning("no tagged context for %d matched document(s): %s",
                       len(missing_docs), ", ".join(sorted(missing_docs)[:5]))
    _ = targets  # accepted for interface symmetry; scoring needs only matches
    return records, notes


def modifier_valence(target: TargetSpec, lexicon: ValenceLexicon) -> float | None:
    """Lexicon rating of the compound's modifier lemma, when one is given
    and present in the lexicon."""
    if target.modifier_lemma is None:
        return None
    return lexicon.get(target.modifier_lemma)


def compute_deltas(scores: Sequence[ScoreRecord],
                   targets: Sequence[TargetSpec] | None = None,
                   lexicon: ValenceLexicon | None = None,
                   ) -> tuple[list[DeltaRecord], list[str]]:
    """Pair pnc and full_name scores per (target, approach) and take the
    difference. Targets lacking either side are reported in the notes, not
    silently dropped. For the lexicon-based approach, when targets and the
    lexicon are supplied, modifier valence and its shift against the
    compound are attached.
    """
    by_pair: dict[tuple[str, str], dict[str, ScoreRecord]] = defaultdict(dict)
    for rec in scores:
        slot = by_pair[(rec.target_id, rec.approach)]
        if rec.kind in slot:
            raise ValidationError(
                f"duplicate score for target {rec.target_id!r} kind {rec.kind!r} "
                f"approach {rec.approach!r}")
        slot[rec.kind] = rec

    target_by_id = {t.target_id: t for t in targets} if targets else {}
    deltas: list[DeltaRecord] = []
    notes: list[str] = []
    for (target_id, approach) in sorted(by_pair):
        slot = by_pair[(target_id, approach)]
        if "pnc" not in slot or "full_name" not in slot:
            have = ", ".join(sorted(slot))
            notes.append(f"{target_id}/{approach}: only {have} scored; no delta")
            continue
        pnc_v = slot["pnc"].valence
        name_v = slot["full_name"].valence
        mod_v = None
        mod_delta = None
        if approach == "norms" and lexicon is not None and target_id in target_by_id:
            mod_v = modifier_valence(target_by_id[target_id], lexicon)
            if mod_v is not None:
                mod_delta = mod_v - pnc_v
        deltas.append(DeltaRecord(
            target_id=target_id, approach=approach,
            pnc_valence=pnc_v, name_valence=name_v, delta=pnc_v - name_v,
            modifier_valence=mod_v, modifier_delta=mod_delta))
    return deltas, notes


@dataclass(frozen=True)
class GroupSummary:
    group: str
    n: int
    n_negative: int
    n_positive: int
    n_zero: int
    mean_delta: float
    pct_negative: float
    pct_positive: float


def summarize_deltas(deltas: Sequence[DeltaRecord], group: str) -> GroupSummary:
    if not deltas:
        raise ValidationError(f"group {group!r} holds no deltas")
    n = len(deltas)
    n_neg = sum(1 for d in deltas if d.delta < 0)
    n_pos = sum(1 for d in deltas if d.delta > 0)
    n_zero = n - n_neg - n_pos
    return GroupSummary(
        group=group, n=n, n_negative=n_neg, n_positive=n_pos, n_zero=n_zero,
        mean_delta=math.fsum(d.delta for d in deltas) / n,
        pct_negative=100.0 * n_neg / n, pct_positive=100.0 * n_pos / n)


def domain_summary(deltas: Sequence[DeltaRecord], targets: Sequence[TargetSpec],
                   ) -> tuple[list[GroupSummary], list[str]]:
    """Delta sign breakdown per domain (plus an 'all' row), for one approach's
    deltas. Targets missing from the target list are noted and skipped."""
    target_by_id = {t.target_id: t for t in targets}
    by_domain: dict[str, list[DeltaRecord]] = defaultdict(list)
    notes: list[str] = []
    known: list[DeltaRecord] = []
    for d in deltas:
        t = target_by_id.get(d.target_id)
        if t is None:
            notes.append(f"{d.target_id}: not in target list; skipped in domain summary")
            continue
        by_domain[t.domain].append(d)
        known.append(d)
    summaries = [summarize_deltas(known, "all")] if known else []
    for domain in sorted(by_domain):
        summaries.append(summarize_deltas(by_domain[domain], domain))
    return summaries, notes


def frequent_context_words(target_id: str, kind: str,
                           matches: Iterable[ContextMatch],
                           tagged: Mapping[str, TaggedContext],
                           k: int = 10,
                           lexicon: ValenceLexicon | None = None,
                           ) -> list[tuple[str, int, float | None]]:
    """Top-k most frequent content lemmas (lowercased) in one target's
    matched contexts of the given kind, with their lexicon valence when a
    lexicon is supplied. Ties break lexicographically."""
    if k < 1:
        raise ValidationError("k must be >= 1")
    doc_ids = []
    for m in matches:
        if m.target_id == target_id and m.kind == kind and m.doc_id not in doc_ids:
            doc_ids.append(m.doc_id)
    counts: Counter = Counter()
    for doc_id in doc_ids:
        ctx = tagged.get(doc_id)
        if ctx is None:
            continue
        for token in filter_content_tokens(ctx):
            counts[token.effective_lemma().lower()] += 1
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))[:k]
    return [(w, c, lexicon.get(w) if lexicon is not None else None) for w, c in ranked]
