"""
Analyzing and re-inflecting French forms
========================================

The full-form lexicon answers two questions: what can this surface form be
(analysis), and how is this lemma written with those features (inflection)?
Re-inflection composes the two, which is how agreement is repaired after a
member noun becomes a collective noun.
"""

from neutre import MorphFeatures, load_lexicon
from neutre.cli import _data_path

lexicon = load_lexicon(_data_path("lexicon.tsv"))
print(f"{lexicon.n_rows} readings loaded")

# every reading of an ambiguous form
for reading in lexicon.analyze("finance"):
    print(f"  finance = {reading.lemma} [{reading.features.pos}]")

# lemma + target features -> surface form
target = MorphFeatures(pos="verb", number="sg", person="3", verbform="fin", tense_mood="pres")
print("vouloir, 3sg present:", lexicon.inflect("vouloir", target))
print("financer, 3sg present:", lexicon.inflect("financer", target))

# re-inflection: override gender/number, keep everything else
print("seront -> singular:", lexicon.reinflect("seront", number="sg", pos_hint="verb").text)
print("chargés -> masc sg:", lexicon.reinflect("chargés", gender="m", number="sg", pos_hint="adj").text)
print("arrivés -> fem sg:", lexicon.reinflect("arrivés", gender="f", number="sg", pos_hint="verb").text)

# unknown forms pass through with a miss flag instead of failing
out = lexicon.reinflect("smartphone", gender="f", number="sg")
print(f"unknown form kept: {out.text!r} (missed={out.missed})")
