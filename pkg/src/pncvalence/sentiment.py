"""Sentiment-label handling: classifier client, label stores, and the
label-distribution valence measure.

Besides lexicon lookups, contexts can be scored by sentiment labels from
pretrained classifiers or human annotators. A target's valence under a label
source is derived from the label distribution over its contexts:

    v(t) = (n_positive + 0.5 * n_neutral) / L_t * 10

with L_t the number of labeled contexts, so all-negative maps to 0,
all-positive to 10, and all-neutral to 5, commensurable with lexicon scores.
"""

from __future__ import annotations

import json
import logging
import time
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import requests

from .corpus import ContextMatch
from .errors import ClassificationError, ParseError, UndefinedCorrelationError, ValidationError
from .stats import spearman
from .valence import DeltaRecord, ScoreRecord

logger = logging.getLogger(__name__)

LABELS = ("negative", "neutral", "positive")
_LABEL_RANK = {"negative": 0, "neutral": 1, "positive": 2}

COMPARE_MODES = ("sign_class", "numeric_epsilon")


@dataclass(frozen=True)
class LabelRecord:
    """One sentiment label for one context of one target, from one source
    (a classifier model id or an annotator id)."""

    target_id: str
    context_id: str
    label: str
    source_id: str


@dataclass(frozen=True)
class LabelHistogram:
    target_id: str
    source_id: str
    n_negative: int
    n_neutral: int
    n_positive: int

    @property
    def total(self) -> int:
        return self.n_negative + self.n_neutral + self.n_positive


@dataclass(frozen=True)
class ContextItem:
    """One text to classify, keyed back to its target and document."""

    target_id: str
    context_id: str
    text: str


@dataclass(frozen=True)
class ServiceConfig:
    """Connection settings for a sentiment classification HTTP service.

    The service takes POST <base_url>/classify with {"texts": [...]} and
    answers {"labels": [...]} of equal length.
    """

    base_url: str
    batch_size: int = 32
    timeout: float = 30.0
    max_retries: int = 3
    backoff_base: float = 0.5
    backoff_cap: float = 8.0


def classify_contexts(items: Sequence[ContextItem], config: ServiceConfig,
                      source_id: str,
                      session: requests.Session | None = None,
                      ) -> tuple[list[LabelRecord], list[str]]:
    """Label every context via the HTTP service.

    Transient failures (connection errors, 5xx) are retried per batch with
    bounded exponential backoff; a batch that stays down raises
    ClassificationError naming its context ids. A single unknown label in an
    otherwise valid response is recorded as a per-item error and the run
    continues. Returns (records, per-item error messages).
    """
    if config.batch_size < 1:
        raise ValidationError("batch_size must be >= 1")
    own_session = session is None
    sess = session or requests.Session()
    url = config.base_url.rstrip("/") + "/classify"
    records: list[LabelRecord] = []
    errors: list[str] = []
    try:
        for start in range(0, len(items), config.batch_size):
            batch = items[start:start + config.batch_size]
            labels = _classify_batch(sess, url, batch, config)
            for item, label in zip(batch, labels):
                if label not in LABELS:
                    errors.append(
                        f"{item.target_id}/{item.context_id}: unknown label {label!r}")
                    continue
                records.append(LabelRecord(
                    target_id=item.target_id, context_id=item.context_id,
                    label=label, source_id=source_id))
    finally:
        if own_session:
            sess.close()
    return records, errors


def _classify_batch(sess: requests.Session, url: str,
                    batch: Sequence[ContextItem], config: ServiceConfig) -> list[str]:
    ids = [item.context_id for item in batch]
    payload = {"texts": [item.text for item in batch]}
    last_error = None
    for attempt in range(config.max_retries + 1):
        if attempt:
            delay = min(config.backoff_base * 2 ** (attempt - 1), config.backoff_cap)
            logger.info("retrying batch of %d after %.1fs (attempt %d)",
                        len(batch), delay, attempt + 1)
            time.sleep(delay)
        try:
            resp = sess.post(url, json=payload, timeout=config.timeout)
        except requests.RequestException as exc:
            last_error = f"request failed: {exc}"
            continue
        if resp.status_code >= 500:
            last_error = f"server error {resp.status_code}"
            continue
        if resp.status_code != 200:
            raise ClassificationError(
                f"classification rejected with status {resp.status_code}",
                context_ids=ids)
        try:
            labels = resp.json()["labels"]
        except (ValueError, KeyError) as exc:
            raise ClassificationError(f"malformed response: {exc}", context_ids=ids) from exc
        if not isinstance(labels, list) or len(labels) != len(batch):
            raise ClassificationError(
                f"expected {len(batch)} labels, got "
                f"{len(labels) if isinstance(labels, list) else type(labels).__name__}",
                context_ids=ids)
        return labels
    raise ClassificationError(
        f"batch failed after {config.max_retries + 1} attempts: {last_error}",
        context_ids=ids)


def read_label_jsonl(path: str) -> list[LabelRecord]:
    """Load label records, one JSON object per line. A (target, context,
    source) triple may appear only once."""
    records: list[LabelRecord] = []
    seen: set[tuple[str, str, str]] = set()
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(f"invalid JSON: {exc}", path=path, line=line_no) from exc
            try:
                rec = LabelRecord(
                    target_id=str(obj["target_id"]), context_id=str(obj["context_id"]),
                    label=str(obj["label"]), source_id=str(obj["source_id"]))
            except KeyError as exc:
                raise ParseError(f"missing field {exc}", path=path, line=line_no) from exc
            if rec.label not in LABELS:
                raise ParseError(f"unknown label {rec.label!r}", path=path, line=line_no)
            key = (rec.target_id, rec.context_id, rec.source_id)
            if key in seen:
                raise ParseError(f"duplicate label for {key}", path=path, line=line_no)
            seen.add(key)
            records.append(rec)
    return records


def build_histograms(records: Iterable[LabelRecord]) -> list[LabelHistogram]:
    """Aggregate label records into per-(target, source) histograms, sorted
    by (target_id, source_id)."""
    counts: dict[tuple[str, str], dict[str, int]] = defaultdict(
        lambda: {label: 0 for label in LABELS})
    for rec in records:
        counts[(rec.target_id, rec.source_id)][rec.label] += 1
    return [
        LabelHistogram(target_id=t, source_id=s,
                       n_negative=c["negative"], n_neutral=c["neutral"],
                       n_positive=c["positive"])
        for (t, s), c in sorted(counts.items())
    ]


def pool_annotators(records: Iterable[LabelRecord], annotators: Sequence[str],
                    pooled_id: str = "human") -> list[LabelRecord]:
    """Merge several annotators' labels into one pooled source: every label
    from a listed annotator is re-attributed to pooled_id, so the pooled
    histogram counts each individual judgement."""
    pool = set(annotators)
    return [
        LabelRecord(target_id=r.target_id, context_id=r.context_id,
                    label=r.label, source_id=pooled_id)
        for r in records if r.source_id in pool
    ]


def kind_index(matches: Iterable[ContextMatch]) -> dict[tuple[str, str], frozenset[str]]:
    """Map (target_id, doc_id) to the set of match kinds found there, for
    joining label records back to compound vs full-name contexts."""
    kinds: dict[tuple[str, str], set[str]] = defaultdict(set)
    for m in matches:
        kinds[(m.target_id, m.doc_id)].add(m.kind)
    return {k: frozenset(v) for k, v in kinds.items()}


def filter_records_by_kind(records: Iterable[LabelRecord],
                           kinds: Mapping[tuple[str, str], frozenset[str]],
                           kind: str) -> list[LabelRecord]:
    """Keep the label records whose (target, context) matched as the given
    kind. A context matching as both kinds counts for both."""
    return [r for r in records if kind in kinds.get((r.target_id, r.context_id), frozenset())]


def eq2_valence(hist: LabelHistogram, kind: str, approach: str) -> ScoreRecord | None:
    """Label-distribution valence for one histogram, or None when it is
    empty (unscorable)."""
    total = hist.total
    if total == 0:
        return None
    valence = (hist.n_positive + 0.5 * hist.n_neutral) / total * 10.0
    return ScoreRecord(target_id=hist.target_id, kind=kind, approach=approach,
                       valence=valence, n_contexts=total, n_context_lemmas=0)


@dataclass(frozen=True)
class SignBreakdown:
    """Delta sign shares for one approach."""

    approach: str
    n: int
    n_negative: int
    n_positive: int
    n_zero: int
    pct_negative: float
    pct_positive: float
    pct_zero: float


def sign_breakdown(deltas: Sequence[DeltaRecord]) -> list[SignBreakdown]:
    """Share of negative/positive/zero compound-name shifts per approach."""
    by_approach: dict[str, list[DeltaRecord]] = defaultdict(list)
    for d in deltas:
        by_approach[d.approach].append(d)
    out = []
    for approach in sorted(by_approach):
        group = by_approach[approach]
        n = len(group)
        n_neg = sum(1 for d in group if d.delta < 0)
        n_pos = sum(1 for d in group if d.delta > 0)
        n_zero = n - n_neg - n_pos
        out.append(SignBreakdown(
            approach=approach, n=n, n_negative=n_neg, n_positive=n_pos,
            n_zero=n_zero, pct_negative=100.0 * n_neg / n,
            pct_positive=100.0 * n_pos / n, pct_zero=100.0 * n_zero / n))
    return out


@dataclass(frozen=True)
class CompareResult:
    """Per-target classification of one label-based approach's deltas against
    the lexicon-based deltas, plus aggregate shares."""

    plm_approach: str
    mode: str
    epsilon: float
    n_common: int
    n_agree: int
    n_plm_more_negative: int
    n_plm_more_positive: int
    pct_agree: float
    pct_plm_more_negative: float
    pct_plm_more_positive: float
    per_target: tuple[tuple[str, str], ...] = field(repr=False)  # (target_id, class)


def _sign(x: float) -> int:
    return -1 if x < 0 else (1 if x > 0 else 0)


def compare_approaches(plm_deltas: Sequence[DeltaRecord],
                       norm_deltas: Sequence[DeltaRecord],
                       mode: str = "sign_class",
                       epsilon: float = 0.0) -> CompareResult:
    """Classify each shared target as agree / plm_more_negative /
    plm_more_positive between a label-based and the lexicon-based approach.

    mode "sign_class" compares delta signs: equal signs agree, a smaller
    sign on the label side is more negative, a larger one more positive
    (zeros order between the signs, keeping the three classes a partition).
    mode "numeric_epsilon" compares values: within epsilon agrees, below is
    more negative, above more positive.
    """
    if mode not in COMPARE_MODES:
        raise ValidationError(f"unknown mode {mode!r}; expected one of {COMPARE_MODES}")
    if epsilon < 0:
        raise ValidationError("epsilon must be >= 0")
    plm_approaches = {d.approach for d in plm_deltas}
    if len(plm_approaches) > 1:
        raise ValidationError(
            f"compare expects one label-based approach at a time, got {sorted(plm_approaches)}")
    plm_by_id = {d.target_id: d for d in plm_deltas}
    norm_by_id = {d.target_id: d for d in norm_deltas}
    common = sorted(set(plm_by_id) & set(norm_by_id))
    if not common:
        raise ValidationError("no target scored by both approaches; nothing to compare")

    per_target: list[tuple[str, str]] = []
    n_agree = n_more_neg = n_more_pos = 0
    for target_id in common:
        p = plm_by_id[target_id].delta
        n = norm_by_id[target_id].delta
        if mode == "sign_class":
            sp, sn = _sign(p), _sign(n)
            if sp == sn:
                cls = "agree"
            elif sp < sn:
                cls = "plm_more_negative"
            else:
                cls = "plm_more_positive"
        else:
            if abs(p - n) <= epsilon:
                cls = "agree"
            elif p < n:
                cls = "plm_more_negative"
            else:
                cls = "plm_more_positive"
        per_target.append((target_id, cls))
        if cls == "agree":
            n_agree += 1
        elif cls == "plm_more_negative":
            n_more_neg += 1
        else:
            n_more_pos += 1

    n_common = len(common)
    return CompareResult(
        plm_approach=next(iter(plm_approaches)) if plm_approaches else "",
        mode=mode, epsilon=epsilon, n_common=n_common, n_agree=n_agree,
        n_plm_more_negative=n_more_neg, n_plm_more_positive=n_more_pos,
        pct_agree=100.0 * n_agree / n_common,
        pct_plm_more_negative=100.0 * n_more_neg / n_common,
        pct_plm_more_positive=100.0 * n_more_pos / n_common,
        per_target=tuple(per_target))


@dataclass(frozen=True)
class PairAgreement:
    annotator_a: str
    annotator_b: str
    n_shared: int
    rho: float | None  # None when agreement is undefined for the pair


@dataclass(frozen=True)
class AgreementResult:
    pairs: tuple[PairAgreement, ...]
    mean_rho: float | None


def pairwise_iaa(records: Sequence[LabelRecord],
                 exclude: Sequence[str] = ()) -> AgreementResult:
    """Inter-annotator agreement: Spearman correlation per annotator pair
    over their shared items, labels encoded ordinally (negative < neutral <
    positive). Pairs with fewer than two shared items, or whose shared
    labels are all tied on either side, have undefined agreement. mean_rho
    averages the defined pairs; excluding an annotator recomputes without
    their labels."""
    excluded = set(exclude)
    by_annotator: dict[str, dict[tuple[str, str], str]] = defaultdict(dict)
    for rec in records:
        if rec.source_id in excluded:
            continue
        by_annotator[rec.source_id][(rec.target_id, rec.context_id)] = rec.label
    annotators = sorted(by_annotator)
    if len(annotators) < 2:
        raise ValidationError("pairwise agreement needs at least two annotators")

    pairs: list[PairAgreement] = []
    defined: list[float] = []
    for i, a in enumerate(annotators):
        for b in annotators[i + 1:]:
            shared = sorted(set(by_annotator[a]) & set(by_annotator[b]))
            rho = None
            if len(shared) >= 2:
                xa = [float(_LABEL_RANK[by_annotator[a][item]]) for item in shared]
                xb = [float(_LABEL_RANK[by_annotator[b][item]]) for item in shared]
                try:
                    rho = spearman(xa, xb).coefficient
                except UndefinedCorrelationError:
                    rho = None
            pairs.append(PairAgreement(annotator_a=a, annotator_b=b,
                                       n_shared=len(shared), rho=rho))
            if rho is not None:
                defined.append(rho)
    mean_rho = sum(defined) / len(defined) if defined else None
    return AgreementResult(pairs=tuple(pairs), mean_rho=mean_rho)
