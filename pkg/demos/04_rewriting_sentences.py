"""
Rewriting a sentence with its collective noun
=============================================

The full pipeline: a tagged sentence plus its dependency parse go in, one
rewritten variant per candidate collective comes out. The engine adjusts the
determiner (with elision), re-inflects agreeing adjectives, participles and
verbs, and leaves every other byte of the sentence alone.
"""

from neutre import (
    Extractor,
    bind_spans,
    compute_dependencies,
    load_dictionary,
    load_lexicon,
    parse_conllu,
    rewrite,
)
from neutre.cli import _data_path

dictionary = load_dictionary(_data_path("dictionary.tsv"))
lexicon = load_lexicon(_data_path("lexicon.tsv"))

# a dependency parse in CoNLL-U (any French UD parser produces this)
BLOCK = """# text = Les soldats sont arrivés dans la ville.
1\tLes\tle\tDET\t_\tNumber=Plur\t2\tdet\t_\t_
2\tsoldats\tsoldat\tNOUN\t_\tGender=Masc|Number=Plur\t4\tnsubj\t_\t_
3\tsont\têtre\tAUX\t_\tMood=Ind|Number=Plur|Person=3|Tense=Pres|VerbForm=Fin\t4\taux:tense\t_\t_
4\tarrivés\tarriver\tVERB\t_\tGender=Masc|Number=Plur|Tense=Past|VerbForm=Part\t0\troot\t_\t_
5\tdans\tdans\tADP\t_\t_\t7\tcase\t_\t_
6\tla\tle\tDET\t_\tGender=Fem|Number=Sing\t7\tdet\t_\t_
7\tville\tville\tNOUN\t_\tGender=Fem|Number=Sing\t4\tobl:mod\t_\tSpaceAfter=No
8\t.\t.\tPUNCT\t_\t_\t4\tpunct\t_\t_
"""

sentence = parse_conllu(BLOCK)

# tag the member phrase, then align the tags onto token indices
tagged = Extractor(dictionary).tag_line(sentence.text)
print("tagged:", tagged)
bound = bind_spans(sentence, tagged, dictionary)

# which tokens must change when "soldats" becomes a collective noun?
deps = compute_dependencies(bound)
for item in deps[0].items:
    print(f"  token {item.index} ({bound.token(item.index).surface}): {item.role}")

# one variant per candidate collective, in dictionary order
for result in rewrite(bound, deps, dictionary, lexicon, mode="all_variants"):
    print(f"[{result.variant_id}] {result.text}")

# the per-token change log records exactly what moved
first = rewrite(bound, deps, dictionary, lexicon)[0]
for change in first.changes:
    print(f"  {change.before!r} -> {change.after!r}  ({change.role})")
