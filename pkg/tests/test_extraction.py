import random

from hypothesis import given, settings
from hypothesis import strategies as st

from neutre.annotation import strip_tags
from neutre.extraction import ExtractConfig, Extractor


def test_tags_member_phrase_with_determiner(dictionary):
    ex = Extractor(dictionary)
    line = "Un historique permet de lister les auteurs et de consulter les modifications successives de l'article par ses rédacteurs."
    tagged = ex.tag_line(line)
    assert "<n-126>les auteurs</n>" in tagged
    assert "<n-68>ses rédacteurs</n>" in tagged
    assert strip_tags(tagged) == line


def test_no_member_noun_line_dropped(dictionary):
    ex = Extractor(dictionary)
    assert ex.tag_line("Il fait beau aujourd'hui.") is None


def test_noun_alone_without_determiner(dictionary):
    ex = Extractor(dictionary)
    tagged = ex.tag_line("Deux cents soldats arrivèrent.")
    assert tagged == "Deux cents <n-2,3,4,5>soldats</n> arrivèrent."


def test_intervening_adjective_in_phrase(dictionary):
    ex = Extractor(dictionary)
    tagged = ex.tag_line("On entendit les jeunes soldats chanter.")
    assert "<n-2,3,4,5>les jeunes soldats</n>" in tagged


def test_nearest_member_wins_over_longer_window(dictionary):
    ex = Extractor(dictionary)
    tagged = ex.tag_line("Les marins du vieux chalutier rentrèrent.")
    assert tagged.startswith("<n-42>Les marins</n>")


def test_no_match_inside_longer_word(dictionary):
    ex = Extractor(dictionary)
    # "entresoldatsable" must not match "soldats"
    assert ex.tag_line("Le mot entresoldatsable n'existe pas.") is None


def test_sentence_initial_capitalized_member(dictionary):
    ex = Extractor(dictionary)
    tagged = ex.tag_line("Soldats et civils fraternisèrent.")
    assert tagged.startswith("<n-2,3,4,5>Soldats</n>")


def test_prenominal_member_form_yields_single_phrase(dictionary):
    ex = Extractor(dictionary)
    tagged = ex.tag_line("Les jeunes enfants jouaient dehors.")
    # "jeunes" doubles as a member noun but here modifies "enfants"
    assert tagged == "<n-64,67,133>Les jeunes enfants</n> jouaient dehors."


def test_ambiguous_form_flagged_as_misid_risk(dictionary):
    ex = Extractor(dictionary)
    tagged = ex.tag_line("Les jeunes jouaient dehors.")
    assert tagged == "<n-16>Les jeunes</n> jouaient dehors."
    assert ex.stats.misid_risk_tags >= 1


def test_pos_check_vetoes_with_require_pos(dictionary):
    config = ExtractConfig(require_pos=True)
    ex = Extractor(dictionary, config)
    line = "Les jeunes enfants jouaient dehors."
    assert ex.tag_line(line, pos_ok=lambda form, offset: False) is None


def test_pos_check_soft_veto_flags(dictionary):
    ex = Extractor(dictionary)
    line = "Les jeunes enfants jouaient dehors."
    tagged = ex.tag_line(line, pos_ok=lambda form, offset: False)
    assert tagged is not None
    assert ex.stats.misid_risk_tags >= 1


def test_strip_round_trip_on_varied_lines(dictionary):
    ex = Extractor(dictionary)
    rng = random.Random(7)
    members = [e.member_plural_form for e in dictionary]
    fillers = ["hier", "dans la rue", "avec force", "sans attendre", "à midi"]
    for _ in range(200):
        words = ["Les", rng.choice(members), rng.choice(fillers) + "."]
        line = " ".join(words)
        tagged = ex.tag_line(line)
        assert tagged is not None
        assert strip_tags(tagged) == line


@settings(max_examples=60, deadline=None)
@given(
    st.lists(
        st.sampled_from(
            ["les", "des", "aux", "soldats", "auteurs", "jeunes", "ville", "et",
             "la", "grande", "hier", "policiers", "»", ",", "3,5"]
        ),
        min_size=1,
        max_size=12,
    )
)
def test_tagging_inserts_only_tags(dictionary_words):
    # module-level fixture unavailable under @given: load once, cached below
    dictionary = _dict_cache()
    line = " ".join(dictionary_words) + "."
    tagged = Extractor(dictionary).tag_line(line)
    if tagged is not None:
        assert strip_tags(tagged) == line


_DICT = None


def _dict_cache():
    global _DICT
    if _DICT is None:
        from neutre.cli import _data_path
        from neutre.dictionary import load_dictionary

        _DICT = load_dictionary(_data_path("dictionary.tsv"))
    return _DICT


def test_extract_deterministic(dictionary):
    lines = [
        "Les soldats marchent.",
        "Les auteurs écrivent.",
        "Rien ici.",
        "Les policiers enquêtent.",
    ]
    a = Extractor(dictionary).extract(lines)
    b = Extractor(dictionary).extract(lines)
    assert a == b
    assert len(a) == 3


def test_stats_counting(dictionary):
    ex = Extractor(dictionary)
    ex.extract(["Les soldats marchent.", "Il pleut.", "Les policiers enquêtent."])
    stats = ex.stats
    assert stats.lines_scanned == 3
    assert stats.lines_kept == 2
    assert stats.tags_emitted == 2
    assert stats.per_entry[10] == 1  # police
    assert stats.per_entry[2] == 1  # armée (soldats candidate)


def test_max_per_entry_cap(dictionary):
    config = ExtractConfig(max_per_entry=1)
    ex = Extractor(dictionary, config)
    kept = ex.extract(["Les policiers enquêtent.", "Les policiers reviennent."])
    assert len(kept) == 1


def test_undecodable_bytes_skipped(dictionary):
    ex = Extractor(dictionary)
    kept = ex.extract([b"Les soldats marchent.", b"\xff\xfe broken", b"Les auteurs lisent."])
    assert len(kept) == 2
    assert ex.stats.lines_skipped_undecodable == 1
