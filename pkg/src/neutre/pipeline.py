"""End-to-end plumbing: tagged text + CoNLL-U in, rewrites and scores out.

The rewrite pipeline consumes two aligned inputs: a tagged-text file (one
sentence per line, ``<n-ID>`` span tags) and a CoNLL-U file with one parse
per line, in the same order. Parses are produced upstream (any CoNLL-U
exporting parser works); the engine never runs a parser itself.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .annotation import AnnotatedSentence, bind_spans, iter_conllu, strip_tags
from .dependencies import detect, detect_baseline, score_corpus
from .dictionary import CnDictionary
from .generation import RewriteResult, compute_dependencies, rewrite
from .morphology import MorphLexicon


class PipelineError(Exception):
    pass


def bind_corpus(
    tagged_lines: list[str],
    conllu_text: str,
    dictionary: CnDictionary,
) -> list[AnnotatedSentence]:
    """Bind every tagged line to its parse; inputs must align 1:1."""
    sentences = iter_conllu(conllu_text)
    if len(sentences) != len(tagged_lines):
        raise PipelineError(
            f"{len(tagged_lines)} tagged lines but {len(sentences)} CoNLL-U sentences"
        )
    return [
        bind_spans(sent, line, dictionary)
        for sent, line in zip(sentences, tagged_lines)
    ]


def rewrite_corpus(
    tagged_lines: list[str],
    conllu_text: str,
    dictionary: CnDictionary,
    lexicon: MorphLexicon,
    mode: str = "first_variant",
) -> list[tuple[str, list[RewriteResult]]]:
    """(source text, rewrite variants) per input line, input order."""
    out = []
    for sent in bind_corpus(tagged_lines, conllu_text, dictionary):
        deps = compute_dependencies(sent)
        out.append((sent.text, rewrite(sent, deps, dictionary, lexicon, mode)))
    return out


@dataclass
class PairStats:
    lines: int = 0
    pairs: int = 0
    skipped_failures: int = 0
    skipped_unchanged: int = 0


def training_pairs(
    tagged_lines: list[str],
    conllu_text: str,
    dictionary: CnDictionary,
    lexicon: MorphLexicon,
    max_per_entry: int | None = None,
    seed: int | None = None,
) -> tuple[list[tuple[str, str]], PairStats]:
    """(original, variant) pairs for every candidate collective.

    ``max_per_entry`` caps pairs per dictionary entry; with a seed the cap
    is filled by reservoir sampling, otherwise first come first kept.
    """
    stats = PairStats()
    candidates: list[tuple[int, int, str, str]] = []  # (order, entry, src, var)
    order = 0
    for sent in bind_corpus(tagged_lines, conllu_text, dictionary):
        stats.lines += 1
        try:
            deps = compute_dependencies(sent)
            results = rewrite(sent, deps, dictionary, lexicon, mode="all_variants")
        except Exception:
            stats.skipped_failures += 1
            continue
        for res in results:
            if res.unchanged:
                stats.skipped_unchanged += 1
                continue
            key = res.variant_entry_id[0] if res.variant_entry_id else 0
            candidates.append((order, key, sent.text, res.text))
            order += 1
    if max_per_entry is None:
        kept = candidates
    elif seed is None:
        seen: dict[int, int] = {}
        kept = []
        for item in candidates:
            if seen.get(item[1], 0) < max_per_entry:
                seen[item[1]] = seen.get(item[1], 0) + 1
                kept.append(item)
    else:
        rng = random.Random(seed)
        reservoirs: dict[int, list[tuple[int, int, str, str]]] = {}
        counts: dict[int, int] = {}
        for item in candidates:
            entry = item[1]
            counts[entry] = counts.get(entry, 0) + 1
            pool = reservoirs.setdefault(entry, [])
            if len(pool) < max_per_entry:
                pool.append(item)
            else:
                j = rng.randrange(counts[entry])
                if j < max_per_entry:
                    pool[j] = item
        kept = sorted((x for pool in reservoirs.values() for x in pool))
    stats.pairs = len(kept)
    return [(src, var) for _, _, src, var in sorted(kept)], stats


# ------------------------------------------------------- detection scoring


def read_deps_tsv(path) -> dict[tuple[str, int], set[int]]:
    """Gold/prediction file: ``sentence_id<TAB>span_index<TAB>i,j,k``."""
    table: dict[tuple[str, int], set[int]] = {}
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, start=1):
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            cols = line.split("\t")
            if len(cols) == 2:
                cols.append("")  # empty index set (nothing needs re-inflection)
            if len(cols) != 3:
                raise PipelineError(f"{path}:{lineno}: expected 3 columns")
            sent_id, span_s, indices_s = cols
            indices = {int(i) for i in indices_s.split(",") if i.strip()}
            table[(sent_id, int(span_s))] = indices
    return table


def write_deps_tsv(path, table: dict[tuple[str, int], set[int]]) -> None:
    with open(path, "w", encoding="utf-8") as f:
        for (sent_id, span_i), indices in table.items():
            f.write(f"{sent_id}\t{span_i}\t{','.join(str(i) for i in sorted(indices))}\n")


def detect_corpus(
    tagged_lines: list[str],
    conllu_text: str,
    dictionary: CnDictionary,
    baseline: bool = False,
) -> dict[tuple[str, int], set[int]]:
    """Dependency predictions for every span of every sentence."""
    table = {}
    for sent in bind_corpus(tagged_lines, conllu_text, dictionary):
        for i, span in enumerate(sent.spans):
            deps = detect_baseline(sent, span) if baseline else detect(sent, span)
            table[(sent.source_id, i)] = deps.indices()
    return table


def score_deps_tables(
    predicted: dict[tuple[str, int], set[int]],
    gold: dict[tuple[str, int], set[int]],
) -> dict:
    missing = set(gold) - set(predicted)
    if missing:
        raise PipelineError(f"predictions missing for {sorted(missing)[:5]} ...")
    keys = sorted(gold)
    p, r, f1 = score_corpus([predicted[k] for k in keys], [gold[k] for k in keys])
    return {
        "n_spans": len(keys),
        "precision": round(p, 4),
        "recall": round(r, 4),
        "f1": round(f1, 4),
    }


def check_tag_integrity(input_lines: list[str], tagged_lines: list[str]) -> None:
    """Every emitted line must reproduce its input once tags are stripped."""
    by_plain = {strip_tags(t) for t in tagged_lines}
    inputs = set(input_lines)
    stray = by_plain - inputs
    if stray:
        raise PipelineError(f"tagged line does not match any input line: {next(iter(stray))!r}")
