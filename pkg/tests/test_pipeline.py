import pytest

from neutre.pipeline import (
    PipelineError,
    bind_corpus,
    check_tag_integrity,
    detect_corpus,
    read_deps_tsv,
    rewrite_corpus,
    score_deps_tables,
    training_pairs,
    write_deps_tsv,
)

ONE_SOLDATS = """# text = Les soldats arrivèrent.
1\tLes\tle\tDET\t_\tNumber=Plur\t2\tdet\t_\t_
2\tsoldats\tsoldat\tNOUN\t_\tGender=Masc|Number=Plur\t3\tnsubj\t_\t_
3\tarrivèrent\tarriver\tVERB\t_\tMood=Ind|Number=Plur|Person=3|Tense=Past|VerbForm=Fin\t0\troot\t_\tSpaceAfter=No
4\t.\t.\tPUNCT\t_\t_\t3\tpunct\t_\t_
"""

ONE_POLICIERS = """# text = Les policiers arrivèrent.
1\tLes\tle\tDET\t_\tNumber=Plur\t2\tdet\t_\t_
2\tpoliciers\tpolicier\tNOUN\t_\tGender=Masc|Number=Plur\t3\tnsubj\t_\t_
3\tarrivèrent\tarriver\tVERB\t_\tMood=Ind|Number=Plur|Person=3|Tense=Past|VerbForm=Fin\t0\troot\t_\tSpaceAfter=No
4\t.\t.\tPUNCT\t_\t_\t3\tpunct\t_\t_
"""

NO_MEMBER = """# text = Il pleut fort.
1\tIl\til\tPRON\t_\tGender=Masc|Number=Sing|Person=3\t2\texpl\t_\t_
2\tpleut\tpleuvoir\tVERB\t_\tMood=Ind|Number=Sing|Person=3|Tense=Pres|VerbForm=Fin\t0\troot\t_\t_
3\tfort\tfort\tADV\t_\t_\t2\tadvmod\t_\tSpaceAfter=No
4\t.\t.\tPUNCT\t_\t_\t2\tpunct\t_\t_
"""


def test_bind_corpus_alignment_error(dictionary):
    with pytest.raises(PipelineError, match="tagged lines"):
        bind_corpus(["Les soldats arrivèrent.", "extra"], ONE_SOLDATS, dictionary)


def test_rewrite_corpus_order(dictionary, lexicon):
    tagged = [
        "<n-2,3,4,5>Les soldats</n> arrivèrent.",
        "<n-10>Les policiers</n> arrivèrent.",
    ]
    out = rewrite_corpus(tagged, ONE_SOLDATS + "\n" + ONE_POLICIERS, dictionary, lexicon)
    assert [src for src, _ in out] == ["Les soldats arrivèrent.", "Les policiers arrivèrent."]
    assert out[0][1][0].text == "L'armée arriva."
    assert out[1][1][0].text == "La police arriva."


def test_training_pairs_four_candidates(dictionary, lexicon):
    tagged = ["<n-2,3,4,5>Les soldats</n> arrivèrent."]
    pairs, stats = training_pairs(tagged, ONE_SOLDATS, dictionary, lexicon)
    assert stats.pairs == 4
    assert [p[1] for p in pairs] == [
        "L'armée arriva.",
        "Le bataillon arriva.",
        "L'infanterie arriva.",
        "Le régiment arriva.",
    ]
    assert all(p[0] == "Les soldats arrivèrent." for p in pairs)


def test_training_pairs_single_candidate(dictionary, lexicon):
    tagged = ["<n-10>Les policiers</n> arrivèrent."]
    pairs, stats = training_pairs(tagged, ONE_POLICIERS, dictionary, lexicon)
    assert stats.pairs == 1


def test_training_pairs_no_span_yields_nothing(dictionary, lexicon):
    pairs, stats = training_pairs(["Il pleut fort."], NO_MEMBER, dictionary, lexicon)
    assert pairs == []
    assert stats.skipped_unchanged == 1


def test_training_pairs_cap_first_come(dictionary, lexicon):
    tagged = ["<n-10>Les policiers</n> arrivèrent."] * 3
    conllu = "\n".join([ONE_POLICIERS] * 3)
    pairs, stats = training_pairs(tagged, conllu, dictionary, lexicon, max_per_entry=2)
    assert stats.pairs == 2


def test_training_pairs_seeded_sampling_deterministic(dictionary, lexicon):
    tagged = ["<n-10>Les policiers</n> arrivèrent."] * 5
    conllu = "\n".join([ONE_POLICIERS] * 5)
    a, _ = training_pairs(tagged, conllu, dictionary, lexicon, max_per_entry=2, seed=11)
    b, _ = training_pairs(tagged, conllu, dictionary, lexicon, max_per_entry=2, seed=11)
    c, _ = training_pairs(tagged, conllu, dictionary, lexicon, max_per_entry=2, seed=12)
    assert a == b
    assert len(a) == len(c) == 2


def test_deps_tsv_round_trip(tmp_path):
    table = {("s1", 0): {1, 3}, ("s2", 0): set()}
    path = tmp_path / "deps.tsv"
    write_deps_tsv(path, table)
    assert read_deps_tsv(path) == table


def test_score_deps_tables(dictionary, depgold_conllu, depgold_gold):
    from neutre.extraction import Extractor
    from neutre.annotation import iter_conllu

    ex = Extractor(dictionary)
    tagged = [ex.tag_line(s.text) for s in iter_conllu(depgold_conllu)]
    pred = detect_corpus(tagged, depgold_conllu, dictionary)
    report = score_deps_tables(pred, depgold_gold)
    assert report["n_spans"] == len(depgold_gold)
    assert report["f1"] >= 0.95


def test_score_deps_missing_prediction(depgold_gold):
    with pytest.raises(PipelineError, match="missing"):
        score_deps_tables({}, depgold_gold)


def test_check_tag_integrity(dictionary):
    check_tag_integrity(
        ["Les soldats arrivèrent."], ["<n-2,3,4,5>Les soldats</n> arrivèrent."]
    )
    with pytest.raises(PipelineError):
        check_tag_integrity(["Autre chose."], ["<n-10>Les policiers</n> arrivèrent."])
