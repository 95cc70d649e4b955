"""Command line entry point.

Subcommands: extract, rewrite, eval, score-deps, pairs, dict-check.
Exit codes: 0 success, 1 usage error, 2 data error. ``--stats PATH`` writes
machine-readable JSON next to the main output; ``NEUTRE_DATA`` points at a
directory holding default ``dictionary.tsv`` / ``lexicon.tsv`` resources.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import resources
from multiprocessing import Pool

from . import evaluation, pipeline
from .annotation import ConlluError, SpanBindingError, iter_conllu
from .dictionary import DictionaryError, load_dictionary
from .extraction import ExtractConfig, Extractor
from .evaluation import EvalError
from .morphology import LexiconError, load_lexicon


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _data_path(name: str) -> str:
    root = os.environ.get("NEUTRE_DATA")
    if root:
        return os.path.join(root, name)
    return str(resources.files("neutre").joinpath("data", name))


def _read_config(path) -> dict[str, str]:
    """Flat TOML-style ``key = value`` file; flags win over config."""
    values = {}
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected 'key = value'")
            key, _, raw = line.partition("=")
            values[key.strip().replace("-", "_")] = raw.strip().strip("\"'")
    return values


def _apply_config(args: argparse.Namespace, parser_defaults: dict) -> None:
    if not getattr(args, "config", None):
        return
    for key, raw in _read_config(args.config).items():
        if not hasattr(args, key):
            raise UsageError(f"config key {key!r} matches no flag")
        current = getattr(args, key)
        if current != parser_defaults.get(key):
            continue  # flag explicitly set, flags win
        default = parser_defaults.get(key)
        if isinstance(default, bool):
            setattr(args, key, raw.lower() in ("1", "true", "yes"))
        elif isinstance(default, int) or (default is None and raw.isdigit()):
            setattr(args, key, int(raw))
        else:
            setattr(args, key, raw)


def _write_stats(args, payload: dict) -> None:
    if getattr(args, "stats", None):
        with open(args.stats, "w", encoding="utf-8") as f:
            json.dump(payload, f, ensure_ascii=False, indent=2)
            f.write("\n")


def build_parser() -> Parser:
    parser = Parser(prog="neutre", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("extract", help="tag member nouns in a corpus")
    p.add_argument("--dict", dest="dict_path", default=None)
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--max-per-entry", type=int, default=None)
    p.add_argument("--require-pos", action="store_true")
    p.add_argument("--conllu", default=None, help="annotations for the POS check")
    p.add_argument("--stats", default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--config", default=None)

    p = sub.add_parser("rewrite", help="rewrite tagged sentences with collectives")
    p.add_argument("--dict", dest="dict_path", default=None)
    p.add_argument("--lexicon", dest="lexicon_path", default=None)
    p.add_argument("--input", required=True, help="tagged text, one sentence per line")
    p.add_argument("--conllu", required=True)
    p.add_argument("--mode", choices=("first", "all"), default="first")
    p.add_argument("--output", required=True)
    p.add_argument("--deps-out", default=None, help="write detected dependencies TSV")
    p.add_argument("--stats", default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--config", default=None)

    p = sub.add_parser("eval", help="score hypotheses against references")
    p.add_argument("--hyp", required=True)
    p.add_argument("--ref", required=True)
    p.add_argument("--metrics", default="wer,bleu")
    p.add_argument("--vectors", default=None, help="precomputed embedding TSV")
    p.add_argument("--labels", default=None, help="error-label file to summarize")
    p.add_argument("--labels2", default=None, help="second label file: agreement report")
    p.add_argument("--per-sentence", action="store_true")
    p.add_argument("--stats", default=None)
    p.add_argument("--config", default=None)

    p = sub.add_parser("score-deps", help="score dependency detection")
    p.add_argument("--pred", default=None)
    p.add_argument("--gold", required=True)
    p.add_argument("--tagged", default=None, help="compute predictions from these inputs")
    p.add_argument("--conllu", default=None)
    p.add_argument("--dict", dest="dict_path", default=None)
    p.add_argument("--detector", choices=("detect", "baseline"), default="detect")
    p.add_argument("--stats", default=None)
    p.add_argument("--config", default=None)

    p = sub.add_parser("pairs", help="emit (original, variant) training pairs")
    p.add_argument("--dict", dest="dict_path", default=None)
    p.add_argument("--lexicon", dest="lexicon_path", default=None)
    p.add_argument("--input", required=True, help="tagged text")
    p.add_argument("--conllu", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--max-per-entry", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--stats", default=None)
    p.add_argument("--config", default=None)

    p = sub.add_parser("dict-check", help="validate a dictionary file")
    p.add_argument("--dict", dest="dict_path", default=None)
    p.add_argument("--stats", default=None)
    p.add_argument("--config", default=None)

    return parser


def _load_dict(args):
    return load_dictionary(args.dict_path or _data_path("dictionary.tsv"))


def _load_lexicon(args):
    return load_lexicon(args.lexicon_path or _data_path("lexicon.tsv"))


# -------------------------------------------------------------- extract

_WORKER_EXTRACTOR = None


def _extract_init(dict_path, config):
    global _WORKER_EXTRACTOR
    _WORKER_EXTRACTOR = Extractor(load_dictionary(dict_path), config)


def _extract_line(line):
    return _WORKER_EXTRACTOR.tag_line(line)


def cmd_extract(args) -> int:
    dictionary = _load_dict(args)
    config = ExtractConfig(max_per_entry=args.max_per_entry, require_pos=args.require_pos)
    if args.require_pos and not args.conllu:
        raise UsageError("--require-pos needs --conllu annotations")
    per_line_nouns = _noun_offsets_from_conllu(args.conllu) if args.conllu else None
    extractor = Extractor(dictionary, config)
    with open(args.input, encoding="utf-8", errors="surrogateescape") as f:
        lines = [ln.rstrip("\n") for ln in f]
    if per_line_nouns is not None and len(per_line_nouns) != len(lines):
        raise pipeline.PipelineError(
            f"{len(lines)} corpus lines but {len(per_line_nouns)} CoNLL-U sentences"
        )
    kept = []
    if args.jobs > 1 and per_line_nouns is None and args.max_per_entry is None:
        dict_path = args.dict_path or _data_path("dictionary.tsv")
        with Pool(args.jobs, initializer=_extract_init, initargs=(dict_path, config)) as pool:
            for line, tagged in zip(lines, pool.map(_extract_line, lines, chunksize=256)):
                extractor.stats.lines_scanned += 1
                if tagged is not None:
                    extractor.stats.lines_kept += 1
                    kept.append(tagged)
    else:
        for lineno, line in enumerate(lines):
            extractor.stats.lines_scanned += 1
            try:
                line.encode("utf-8")
            except UnicodeEncodeError:
                extractor.stats.lines_skipped_undecodable += 1
                continue
            pos_ok = None
            if per_line_nouns is not None:
                nouns = per_line_nouns[lineno]
                pos_ok = lambda form, offset: (form, offset) in nouns  # noqa: B023,E731
            tagged = extractor.tag_line(line, pos_ok=pos_ok)
            if tagged is not None:
                extractor.stats.lines_kept += 1
                kept.append(tagged)
    with open(args.output, "w", encoding="utf-8") as f:
        for line in kept:
            f.write(line + "\n")
    _write_stats(args, extractor.stats.as_dict())
    print(f"{extractor.stats.lines_kept} lines tagged of {extractor.stats.lines_scanned}")
    return 0


def _noun_offsets_from_conllu(path) -> list[set[tuple[str, int]]]:
    """Per sentence: (surface form, char offset) pairs of its NOUN tokens."""
    per_line = []
    with open(path, encoding="utf-8") as f:
        for sent in iter_conllu(f.read()):
            offsets = set()
            pos = 0
            for tok in sent.tokens:
                start = sent.text.find(tok.surface, pos)
                if start < 0:
                    continue
                if tok.upos == "NOUN":
                    folded = tok.surface[:1].lower() + tok.surface[1:]
                    offsets.add((folded, start))
                pos = start + len(tok.surface)
            per_line.append(offsets)
    return per_line


# -------------------------------------------------------------- rewrite

_WORKER_REWRITE = None


def _rewrite_init(dict_path, lexicon_path, mode):
    global _WORKER_REWRITE
    _WORKER_REWRITE = (load_dictionary(dict_path), load_lexicon(lexicon_path), mode)


def _rewrite_one_line(item):
    from .annotation import bind_spans
    from .generation import compute_dependencies, rewrite

    tagged, conllu_block = item
    dictionary, lexicon, mode = _WORKER_REWRITE
    sent = bind_spans(iter_conllu(conllu_block)[0], tagged, dictionary)
    deps = compute_dependencies(sent)
    results = rewrite(sent, deps, dictionary, lexicon, mode)
    return sent.text, [
        (r.variant_id, r.text, r.change_log_json(), [m[1] for m in r.inflection_misses])
        for r in results
    ]


def cmd_rewrite(args) -> int:
    mode = "first_variant" if args.mode == "first" else "all_variants"
    with open(args.input, encoding="utf-8") as f:
        tagged_lines = [ln.rstrip("\n") for ln in f if ln.strip()]
    with open(args.conllu, encoding="utf-8") as f:
        conllu_text = f.read()
    n_misses = 0
    misses_by_role: dict[str, int] = {}
    n_variants = 0
    rows = []
    deps_table = {}

    def count_miss(reason: str) -> None:
        nonlocal n_misses
        n_misses += 1
        role = reason.split(":", 1)[0] if ":" in reason else "other"
        misses_by_role[role] = misses_by_role.get(role, 0) + 1

    if args.deps_out:
        args.jobs = 1  # the dependency dump needs the in-process path
    if args.jobs > 1:
        import re as _re

        blocks = [b for b in _re.split(r"\n\s*\n", conllu_text) if b.strip()]
        if len(blocks) != len(tagged_lines):
            raise pipeline.PipelineError(
                f"{len(tagged_lines)} tagged lines but {len(blocks)} CoNLL-U sentences"
            )
        dict_path = args.dict_path or _data_path("dictionary.tsv")
        lex_path = args.lexicon_path or _data_path("lexicon.tsv")
        with Pool(args.jobs, initializer=_rewrite_init, initargs=(dict_path, lex_path, mode)) as pool:
            for source, items in pool.map(
                _rewrite_one_line, list(zip(tagged_lines, blocks)), chunksize=64
            ):
                for variant_id, text, log, miss_reasons in items:
                    rows.append((source, variant_id, text, log))
                    for reason in miss_reasons:
                        count_miss(reason)
                    n_variants += 1
    else:
        dictionary = _load_dict(args)
        lexicon = _load_lexicon(args)
        sentences = pipeline.bind_corpus(tagged_lines, conllu_text, dictionary)
        from .generation import compute_dependencies, rewrite

        for sent in sentences:
            deps = compute_dependencies(sent)
            if args.deps_out:
                for i, span in enumerate(sent.spans):
                    deps_table[(sent.source_id, i)] = deps[i].indices()
            for r in rewrite(sent, deps, dictionary, lexicon, mode):
                rows.append((sent.text, r.variant_id, r.text, r.change_log_json()))
                for _, reason in r.inflection_misses:
                    count_miss(reason)
                n_variants += 1
    with open(args.output, "w", encoding="utf-8") as f:
        f.write("source\tvariant_id\trewritten\tchange_log\n")
        for source, variant_id, text, log in rows:
            f.write(f"{source}\t{variant_id}\t{text}\t{log}\n")
    if args.deps_out:
        pipeline.write_deps_tsv(args.deps_out, deps_table)
    _write_stats(
        args,
        {
            "sentences": len(tagged_lines),
            "variants": n_variants,
            "inflection_misses": n_misses,
            "inflection_misses_by_role": dict(sorted(misses_by_role.items())),
        },
    )
    print(f"{n_variants} variants written for {len(tagged_lines)} sentences")
    return 0


# -------------------------------------------------------------- eval


def cmd_eval(args) -> int:
    with open(args.hyp, encoding="utf-8") as f:
        hyps = [ln.rstrip("\n") for ln in f if ln.strip("\n")]
    with open(args.ref, encoding="utf-8") as f:
        refs = [ln.rstrip("\n") for ln in f if ln.strip("\n")]
    wanted = {m.strip() for m in args.metrics.split(",") if m.strip()}
    unknown = wanted - {"wer", "bleu", "cosine"}
    if unknown:
        raise UsageError(f"unknown metrics: {', '.join(sorted(unknown))}")
    embedder = None
    if "cosine" in wanted and args.vectors:
        embedder = evaluation.PrecomputedEmbedder(args.vectors)
    report = evaluation.evaluate(hyps, refs, embedder=embedder, per_sentence=args.per_sentence)
    payload = report.as_dict()
    if "wer" not in wanted:
        payload.pop("wer", None)
        payload.pop("wer_sentence_avg", None)
    if "bleu" not in wanted:
        payload.pop("bleu", None)
    if "cosine" not in wanted:
        payload.pop("cosine", None)
    if args.per_sentence:
        payload["rows"] = report.rows
    if args.labels:
        labels = evaluation.read_label_file(args.labels)
        payload["labels"] = evaluation.label_distribution(labels)
        if args.labels2:
            other = evaluation.read_label_file(args.labels2)
            payload["label_agreement"] = evaluation.label_agreement(labels, other)
    print(json.dumps(payload, ensure_ascii=False, indent=2))
    _write_stats(args, payload)
    return 0


# -------------------------------------------------------------- score-deps


def cmd_score_deps(args) -> int:
    gold = pipeline.read_deps_tsv(args.gold)
    if args.pred:
        pred = pipeline.read_deps_tsv(args.pred)
    else:
        if not (args.tagged and args.conllu):
            raise UsageError("score-deps needs --pred or both --tagged and --conllu")
        dictionary = _load_dict(args)
        with open(args.tagged, encoding="utf-8") as f:
            tagged_lines = [ln.rstrip("\n") for ln in f if ln.strip()]
        with open(args.conllu, encoding="utf-8") as f:
            conllu_text = f.read()
        pred = pipeline.detect_corpus(
            tagged_lines, conllu_text, dictionary, baseline=args.detector == "baseline"
        )
    payload = pipeline.score_deps_tables(pred, gold)
    print(json.dumps(payload, indent=2))
    _write_stats(args, payload)
    return 0


# -------------------------------------------------------------- pairs


def cmd_pairs(args) -> int:
    dictionary = _load_dict(args)
    lexicon = _load_lexicon(args)
    with open(args.input, encoding="utf-8") as f:
        tagged_lines = [ln.rstrip("\n") for ln in f if ln.strip()]
    with open(args.conllu, encoding="utf-8") as f:
        conllu_text = f.read()
    pairs, stats = pipeline.training_pairs(
        tagged_lines, conllu_text, dictionary, lexicon,
        max_per_entry=args.max_per_entry, seed=args.seed,
    )
    with open(args.output, "w", encoding="utf-8") as f:
        for original, variant in pairs:
            f.write(f"{original}\t{variant}\n")
    _write_stats(
        args,
        {
            "lines": stats.lines,
            "pairs": stats.pairs,
            "skipped_failures": stats.skipped_failures,
            "skipped_unchanged": stats.skipped_unchanged,
        },
    )
    print(f"{stats.pairs} pairs written")
    return 0


# -------------------------------------------------------------- dict-check


def cmd_dict_check(args) -> int:
    dictionary = _load_dict(args)
    n = len(dictionary)
    multi = sum(1 for ids in dictionary.member_index.values() if len(ids) > 1)
    _write_stats(
        args,
        {
            "entries": n,
            "member_forms": len(dictionary.member_index),
            "members_with_multiple_collectives": multi,
        },
    )
    print(f"{n} entries OK")
    return 0


COMMANDS = {
    "extract": cmd_extract,
    "rewrite": cmd_rewrite,
    "eval": cmd_eval,
    "score-deps": cmd_score_deps,
    "pairs": cmd_pairs,
    "dict-check": cmd_dict_check,
}

DATA_ERRORS = (
    DictionaryError,
    LexiconError,
    ConlluError,
    SpanBindingError,
    EvalError,
    pipeline.PipelineError,
    FileNotFoundError,
    ValueError,
)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        defaults = {
            a.dest: a.default
            for sp in parser._subparsers._group_actions
            for a in sp.choices[args.command]._actions
        }
        _apply_config(args, defaults)
        return COMMANDS[args.command](args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 1
    except DATA_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
