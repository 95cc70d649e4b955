"""
Measuring the dependency detector against its baseline
======================================================

The detector walks the tree with agreement rules; the baseline reports the
member noun's raw subtree, which over-predicts inside the noun phrase and
misses every governing verb. The shipped 40-sentence gold set shows the gap.
"""

from pathlib import Path

from neutre import (
    Extractor,
    bind_spans,
    detect,
    detect_baseline,
    iter_conllu,
    load_dictionary,
    score_corpus,
)
from neutre.cli import _data_path
from neutre.pipeline import read_deps_tsv

dictionary = load_dictionary(_data_path("dictionary.tsv"))
root = Path(__file__).resolve().parents[1] / "tests" / "data" / "depgold"

gold = read_deps_tsv(root / "depgold_gold.tsv")
extractor = Extractor(dictionary)

predicted, baseline, gold_sets = [], [], []
for sentence in iter_conllu((root / "depgold.conllu").read_text(encoding="utf-8")):
    bound = bind_spans(sentence, extractor.tag_line(sentence.text), dictionary)
    for i, span in enumerate(bound.spans):
        predicted.append(detect(bound, span).indices())
        baseline.append(detect_baseline(bound, span).indices())
        gold_sets.append(gold[(bound.source_id, i)])

for name, preds in [("rules", predicted), ("baseline", baseline)]:
    p, r, f1 = score_corpus(preds, gold_sets)
    print(f"{name:9s} P={p:.3f} R={r:.3f} F1={f1:.3f}")

# a single sentence, side by side
sentence = iter_conllu((root / "depgold.conllu").read_text(encoding="utf-8"))[2]
bound = bind_spans(sentence, extractor.tag_line(sentence.text), dictionary)
span = bound.spans[0]
print()
print(sentence.text)
print("  rules:   ", sorted(detect(bound, span).indices()))
print("  baseline:", sorted(detect_baseline(bound, span).indices()))
print("  gold:    ", sorted(gold[(bound.source_id, 0)]))
