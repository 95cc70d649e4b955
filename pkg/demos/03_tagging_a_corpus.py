"""
Tagging member nouns in raw text
================================

The extractor scans a corpus line by line and wraps every member phrase in
<n-ID> tags carrying the dictionary ids of its collective candidates. Lines
without member nouns are dropped; stripping the tags always reproduces the
input line byte for byte.
"""

from neutre import ExtractConfig, Extractor, load_dictionary, strip_tags
from neutre.cli import _data_path

dictionary = load_dictionary(_data_path("dictionary.tsv"))

corpus = [
    "Les soldats traversèrent le pont avant la nuit.",
    "Il fait un temps magnifique aujourd'hui.",
    "Un historique permet de lister les auteurs et de consulter les modifications "
    "successives de l'article par ses rédacteurs.",
    "On entendit les jeunes soldats chanter au loin.",
    "Les policiers et les gendarmes surveillaient la place.",
]

extractor = Extractor(dictionary)
for line in extractor.extract(corpus):
    print(line)
    assert strip_tags(line) in corpus  # the tags are pure additions

print()
print("stats:", extractor.stats.as_dict())

# a per-entry cap balances training data extracted from huge corpora
capped = Extractor(dictionary, ExtractConfig(max_per_entry=1))
kept = capped.extract(["Les soldats dorment.", "Les soldats marchent."])
print(f"\nwith --max-per-entry 1: {len(kept)} of 2 lines kept")
