"""Evaluation suite: WER, BLEU, optional cosine similarity, error labels.

Pinned metric configuration (every reported number uses exactly this):

* WER: NFC normalization, whitespace tokenization, word-level Levenshtein,
  corpus-pooled (total edits / total reference tokens x 100). A
  sentence-averaged variant is also reported.
* BLEU: corpus-level, n-grams 1..4, 13a-style tokenization, case-sensitive,
  brevity penalty, exponential smoothing of zero n-gram counts.
* Cosine: mean pairwise similarity x 100 through a pluggable embedder;
  absent (never an error) when no embedder is configured.
"""

from __future__ import annotations

import math
import re
import unicodedata
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

NGRAM_ORDER = 4


class EvalError(Exception):
    pass


def _nfc(s: str) -> str:
    return unicodedata.normalize("NFC", s)


# ---------------------------------------------------------------- WER


def _levenshtein(a: list[str], b: list[str]) -> int:
    if not a:
        return len(b)
    prev = list(range(len(b) + 1))
    for i, x in enumerate(a, start=1):
        cur = [i]
        for j, y in enumerate(b, start=1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (x != y)))
        prev = cur
    return prev[-1]


def wer(hypotheses: list[str], references: list[str]) -> float:
    """Corpus WER as a percentage (pooled edit operations over pooled
    reference length)."""
    if len(hypotheses) != len(references):
        raise EvalError(
            f"hypothesis/reference length mismatch: {len(hypotheses)} vs {len(references)}"
        )
    edits = 0
    ref_len = 0
    for hyp, ref in zip(hypotheses, references):
        h = _nfc(hyp).split()
        r = _nfc(ref).split()
        edits += _levenshtein(h, r)
        ref_len += len(r)
    if ref_len == 0:
        return 0.0
    return 100.0 * edits / ref_len


def wer_sentence_average(hypotheses: list[str], references: list[str]) -> float:
    if len(hypotheses) != len(references):
        raise EvalError("hypothesis/reference length mismatch")
    rates = []
    for hyp, ref in zip(hypotheses, references):
        h = _nfc(hyp).split()
        r = _nfc(ref).split()
        if not r:
            rates.append(0.0 if not h else 100.0)
        else:
            rates.append(100.0 * _levenshtein(h, r) / len(r))
    return sum(rates) / len(rates) if rates else 0.0


# ---------------------------------------------------------------- BLEU


def tokenize_13a(line: str) -> list[str]:
    """Minimal WMT-style tokenization: split punctuation from words, keep
    digit-internal periods/commas attached."""
    norm = _nfc(line)
    norm = norm.replace("<skipped>", "").replace("-\n", "").replace("\n", " ")
    norm = f" {norm} "
    norm = re.sub(r"([\{-\~\[-\` -\&\(-\+\:-\@\/])", r" \1 ", norm)
    norm = re.sub(r"([^0-9])([\.,])", r"\1 \2 ", norm)
    norm = re.sub(r"([\.,])([^0-9])", r" \1 \2", norm)
    norm = re.sub(r"([0-9])(-)", r"\1 \2 ", norm)
    return norm.split()


def _ngrams(tokens: list[str], max_order: int = NGRAM_ORDER) -> Counter:
    counts: Counter = Counter()
    for n in range(1, max_order + 1):
        for i in range(len(tokens) - n + 1):
            counts[tuple(tokens[i : i + n])] += 1
    return counts


def bleu(hypotheses: list[str], references: list[str]) -> float:
    """Corpus BLEU (0..100) with the pinned configuration."""
    if len(hypotheses) != len(references):
        raise EvalError(
            f"hypothesis/reference length mismatch: {len(hypotheses)} vs {len(references)}"
        )
    correct = [0] * NGRAM_ORDER
    total = [0] * NGRAM_ORDER
    hyp_len = 0
    ref_len = 0
    for hyp, ref in zip(hypotheses, references):
        h = tokenize_13a(hyp)
        r = tokenize_13a(ref)
        hyp_len += len(h)
        ref_len += len(r)
        ref_counts = _ngrams(r)
        for ngram, count in _ngrams(h).items():
            n = len(ngram)
            total[n - 1] += count
            correct[n - 1] += min(count, ref_counts.get(ngram, 0))
    precisions = []
    smooth = 1.0
    for n in range(1, NGRAM_ORDER + 1):
        if total[n - 1] == 0:
            break  # corpus too short for this order: effective order stops here
        if correct[n - 1] == 0:
            smooth *= 2
            precisions.append(100.0 / (smooth * total[n - 1]))
        else:
            precisions.append(100.0 * correct[n - 1] / total[n - 1])
    if not precisions or min(precisions) <= 0.0:
        return 0.0
    brevity = 1.0
    if hyp_len < ref_len:
        brevity = math.exp(1 - ref_len / hyp_len) if hyp_len > 0 else 0.0
    return brevity * math.exp(sum(math.log(p) for p in precisions) / len(precisions))


# ---------------------------------------------------------------- cosine


class PrecomputedEmbedder:
    """Embedder backed by a TSV of ``text<TAB>v1 v2 ...`` rows."""

    def __init__(self, path):
        self.vectors: dict[str, np.ndarray] = {}
        with open(path, encoding="utf-8") as f:
            for line in f:
                line = line.rstrip("\n")
                if not line:
                    continue
                text, _, values = line.partition("\t")
                self.vectors[_nfc(text)] = np.asarray(
                    [float(v) for v in values.split()], dtype=float
                )

    def embed(self, sentences: list[str]) -> np.ndarray:
        rows = []
        for s in sentences:
            key = _nfc(s)
            if key not in self.vectors:
                raise EvalError(f"no precomputed vector for {s!r}")
            rows.append(self.vectors[key])
        return np.stack(rows)


def cosine_eval(hypotheses: list[str], references: list[str], embedder) -> float | None:
    """Mean pairwise cosine similarity x 100; None when the embedder is
    unavailable or fails (the metric is marked absent, never fatal)."""
    if len(hypotheses) != len(references):
        raise EvalError("hypothesis/reference length mismatch")
    if embedder is None:
        return None
    try:
        h = np.asarray(embedder.embed(hypotheses), dtype=float)
        r = np.asarray(embedder.embed(references), dtype=float)
    except Exception:
        return None
    num = (h * r).sum(axis=1)
    denom = np.linalg.norm(h, axis=1) * np.linalg.norm(r, axis=1)
    sims = np.divide(num, denom, out=np.zeros_like(num), where=denom != 0)
    return float(sims.mean() * 100.0)


# ---------------------------------------------------------------- report


@dataclass
class EvalReport:
    wer: float
    wer_sentence_avg: float
    bleu: float
    cosine: float | None
    n_sentences: int
    rows: list[dict] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "n_sentences": self.n_sentences,
            "wer": round(self.wer, 4),
            "wer_sentence_avg": round(self.wer_sentence_avg, 4),
            "bleu": round(self.bleu, 4),
            "cosine": None if self.cosine is None else round(self.cosine, 4),
        }


def evaluate(
    hypotheses: list[str],
    references: list[str],
    embedder=None,
    per_sentence: bool = False,
) -> EvalReport:
    report = EvalReport(
        wer=wer(hypotheses, references),
        wer_sentence_avg=wer_sentence_average(hypotheses, references),
        bleu=bleu(hypotheses, references),
        cosine=cosine_eval(hypotheses, references, embedder),
        n_sentences=len(hypotheses),
    )
    if per_sentence:
        for i, (h, r) in enumerate(zip(hypotheses, references)):
            report.rows.append(
                {
                    "index": i,
                    "wer": round(wer([h], [r]), 4),
                    "bleu": round(bleu([h], [r]), 4),
                }
            )
    return report


def read_eval_dataset(path) -> tuple[list[str], list[str]]:
    """Evaluation dataset: TSV ``source<TAB>gold``, one pair per line."""
    sources, golds = [], []
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, start=1):
            line = line.rstrip("\n")
            if not line.strip():
                continue
            source, sep, gold = line.partition("\t")
            if not sep:
                raise EvalError(f"{path}:{lineno}: expected 'source<TAB>gold'")
            sources.append(source)
            golds.append(gold)
    return sources, golds


# ---------------------------------------------------------------- labels

ERROR_CODES = (
    "ADJ",
    "CASE",
    "DET",
    "DET_COREF",
    "ELISION",
    "GEN_FAILURE",
    "MISID_NOUN",
    "PREP",
    "PRON_COREF",
    "PUNCT",
    "SEM",
    "SPECIAL_CHAR",
    "UNREPLACED",
    "VERB",
)

ERROR_CATEGORY = {
    "ADJ": "morphosyntax",
    "DET": "morphosyntax",
    "VERB": "morphosyntax",
    "ELISION": "morphosyntax",
    "PREP": "morphosyntax",
    "DET_COREF": "collective_coref",
    "PRON_COREF": "collective_coref",
    "MISID_NOUN": "collective_coref",
    "UNREPLACED": "collective_coref",
    "SEM": "semantics",
    "CASE": "other",
    "GEN_FAILURE": "other",
    "PUNCT": "other",
    "SPECIAL_CHAR": "other",
}

assert set(ERROR_CATEGORY) == set(ERROR_CODES)


def read_label_file(path) -> dict[str, set[str]]:
    """Label file: TSV ``sentence_id<TAB>CODE[,CODE...]`` (codes may be
    empty). Unknown codes are an error naming the code."""
    labels: dict[str, set[str]] = {}
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, start=1):
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            sent_id, _, codes_s = line.partition("\t")
            codes = {c.strip() for c in codes_s.split(",") if c.strip()}
            for code in codes:
                if code not in ERROR_CODES:
                    raise EvalError(f"{path}:{lineno}: unknown error code {code!r}")
            labels.setdefault(sent_id, set()).update(codes)
    return labels


def label_distribution(labels: dict[str, set[str]]) -> dict:
    per_code = {code: 0 for code in ERROR_CODES}
    for codes in labels.values():
        for code in codes:
            per_code[code] += 1
    per_category: dict[str, int] = {}
    for code, count in per_code.items():
        cat = ERROR_CATEGORY[code]
        per_category[cat] = per_category.get(cat, 0) + count
    return {
        "n_sentences": len(labels),
        "n_assignments": sum(per_code.values()),
        "per_code": per_code,
        "per_category": per_category,
    }


def label_agreement(a: dict[str, set[str]], b: dict[str, set[str]]) -> dict:
    """Per-code raw agreement between two annotation files.

    For each code: ``agree`` counts sentences labeled by both annotators,
    ``disagree`` sentences labeled by exactly one; the rate is
    agree / (agree + disagree) x 100.
    """
    ids = set(a) | set(b)
    out = {}
    for code in ERROR_CODES:
        agree = sum(1 for i in ids if code in a.get(i, set()) and code in b.get(i, set()))
        disagree = sum(
            1 for i in ids if (code in a.get(i, set())) != (code in b.get(i, set()))
        )
        rate = 100.0 * agree / (agree + disagree) if agree + disagree else None
        out[code] = {
            "agree": agree,
            "disagree": disagree,
            "rate": None if rate is None else round(rate, 2),
        }
    return out
