"""
Looking up collective nouns for member nouns
============================================

The dictionary maps masculine plural "member nouns" (soldats, lecteurs,
policiers...) to collective nouns with a fixed grammatical gender (l'armée,
le lectorat, la police...). One member noun may have several collective
counterparts.
"""

from neutre import load_dictionary
from neutre.cli import _data_path

# the packaged dictionary ships with the library
dictionary = load_dictionary(_data_path("dictionary.tsv"))
print(f"{len(dictionary)} entries loaded")

# a member noun with several collective counterparts
for entry in dictionary.lookup_member("soldats"):
    article = "l'" if entry.elision_onset else ("le " if entry.cn_gender == "m" else "la ")
    print(f"  soldats -> {article}{entry.collective_form}  (id {entry.id})")

# lookups fold the first character, so sentence-initial forms work too
print([e.collective_form for e in dictionary.lookup_member("Policiers")])

# entries are addressable by their stable id (corpus span tags reference these)
print(dictionary.entry_by_id(126))

# a few overview statistics
multi = {m: ids for m, ids in dictionary.member_index.items() if len(ids) > 1}
print(f"{len(dictionary.member_index)} distinct member forms, {len(multi)} with several collectives")
feminine = sum(1 for e in dictionary if e.cn_gender == "f")
print(f"{feminine} feminine collectives, {len(dictionary) - feminine} masculine")
elision = sum(1 for e in dictionary if e.elision_onset)
print(f"{elision} collectives take the elided article (l')")
