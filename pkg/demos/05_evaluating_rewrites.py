"""
Scoring rewrites against gold references
========================================

Rewrites are scored with word error rate (corpus-pooled edit operations over
reference length) and corpus BLEU (1..4-grams, brevity penalty, exponential
smoothing). Error labels from manual or automatic annotation aggregate into
a 14-code taxonomy with per-category rollups and inter-annotator agreement.
"""

from neutre.evaluation import (
    ERROR_CATEGORY,
    bleu,
    evaluate,
    label_agreement,
    label_distribution,
    wer,
)

hypotheses = [
    "Le lectorat assidu finance le journal chaque mois.",
    "La citoyenneté seront en contact direct avec la Commission.",
    "L'armée arriva avec une lance à eau.",
]
references = [
    "Le lectorat assidu finance le journal chaque mois.",
    "La citoyenneté sera en contact direct avec la Commission.",
    "L'armée arriva avec une lance à eau.",
]

print(f"WER  = {wer(hypotheses, references):.3f}%")
print(f"BLEU = {bleu(hypotheses, references):.3f}")

report = evaluate(hypotheses, references, per_sentence=True)
for row in report.rows:
    print("  sentence", row["index"], "->", row)

# error labels: multiple codes per sentence, categories roll up
annotator_a = {"s1": set(), "s2": {"VERB"}, "s3": set()}
annotator_b = {"s1": set(), "s2": {"VERB", "ADJ"}, "s3": set()}
print()
print("distribution:", label_distribution(annotator_a)["per_category"])
agreement = label_agreement(annotator_a, annotator_b)
print("VERB agreement:", agreement["VERB"])
print("ADJ agreement:", agreement["ADJ"])
print("categories:", sorted(set(ERROR_CATEGORY.values())))
