#!/usr/bin/env python3
"""Build the shipped full-form lexicon TSV (trimmed Delaf-style subset).

Covers: every dictionary collective and member noun, determiners, pronouns,
the adjectives and verbs used by the shipped corpora and fixtures, and a
stock of common nouns. Third-person verb forms only; the engine never
re-inflects first or second person.

The builder enforces the inflection round-trip: for every emitted row,
looking the lemma up with the row's own features must return the row's
surface. Run: python tools/build_lexicon.py (after build_dictionary.py).
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from neutre.dictionary import load_dictionary  # noqa: E402
from neutre.morphology import MorphFeatures, load_lexicon  # noqa: E402

DATA = Path(__file__).resolve().parents[1] / "src" / "neutre" / "data"
OUT = DATA / "lexicon.tsv"

# member nouns with one form for both genders
EPICENE_MEMBERS = {
    "aristocrate", "journaliste", "secrétaire", "choriste", "proche", "jeune",
    "garde", "pirate", "rebelle", "domestique", "actionnaire", "notaire",
    "prolétaire", "cadre", "universitaire", "juge", "légionnaire", "volontaire",
    "bénévole", "interprète", "mécène", "sociétaire", "ministre", "diplomate",
    "noble", "gendarme", "diacre", "précaire", "notable",
}

ROWS: list[tuple] = []


def row(surface, lemma, pos, gender="", number="", person="", verbform="", tense_mood=""):
    ROWS.append((surface, lemma, pos, gender, number, person, verbform, tense_mood))


def noun(surface, lemma, gender, number):
    row(surface, lemma, "noun", gender, number)


# ----------------------------------------------------------- adjectives


def adj_forms(base: str) -> tuple[str, str, str, str]:
    """(m sg, f sg, m pl, f pl) for a regular adjective."""
    if base.endswith("eux"):
        return base, base[:-1] + "se", base, base[:-1] + "ses"
    if base.endswith("eau"):
        return base, base[:-3] + "elle", base + "x", base[:-3] + "elles"
    if base.endswith("al"):
        return base, base + "e", base[:-2] + "aux", base + "es"
    if base.endswith(("en", "on")):
        return base, base + "ne", base + "s", base + "nes"
    if base.endswith("el"):
        return base, base + "le", base + "s", base + "les"
    if base.endswith("er"):
        return base, base[:-2] + "ère", base + "s", base[:-2] + "ères"
    if base.endswith("f"):
        return base, base[:-1] + "ve", base + "s", base[:-1] + "ves"
    if base.endswith(("s", "x")):
        return base, base + "e", base, base + "es"
    return base, base + "e", base + "s", base + "es"


def adjective(base: str, forms: tuple[str, str, str, str] | None = None):
    ms, fs, mp, fp = forms or adj_forms(base)
    seen = set()
    for surface, gender, number in ((ms, "m", "sg"), (fs, "f", "sg"), (mp, "m", "pl"), (fp, "f", "pl")):
        if (surface, gender, number) not in seen:
            seen.add((surface, gender, number))
            row(surface, base, "adj", gender, number)


def epicene_adjective(base: str):
    row(base, base, "adj", "", "sg")
    row(base + "s", base, "adj", "", "pl")


REGULAR_ADJ = [
    "assidu", "local", "européen", "direct", "correspondant", "protestant",
    "agressif", "nigérien", "allemand", "caché", "grand", "petit", "ancien",
    "important", "premier", "dernier", "seul", "certain", "fort", "lourd",
    "culminant", "successif", "armé", "blindé", "étranger", "commercial",
    "indépendant", "entier", "international", "national", "royal", "social",
    "actuel", "officiel", "régional", "rural", "urbain", "central",
    "oriental", "occidental", "civil", "légal", "médical", "municipal",
    "général", "spécial", "principal", "présent", "absent", "content",
    "prudent", "violent", "récent", "précis", "prêt", "méchant", "charmant",
    "brillant", "savant", "vivant", "puissant", "satisfait", "surpris",
    "nombreux", "courageux", "heureux", "sérieux", "curieux", "dangereux",
    "victorieux", "religieux", "fameux", "furieux", "joyeux", "malheureux",
    "nouveau", "chargé", "apporté", "élu", "recommandé", "vaincu",
    "mécontent", "poli", "déçu", "fatigué",
]

EPICENE_ADJ = [
    "considérable", "propre", "jeune", "britannique", "kurde", "fidèle",
    "célèbre", "moderne", "rapide", "politique", "militaire", "économique",
    "historique", "deuxième", "troisième", "utile", "facile", "possible",
    "rouge", "magnifique", "agricole",
]

IRREGULAR_ADJ = {
    "vieux": ("vieux", "vieille", "vieux", "vieilles"),
    "public": ("public", "publique", "publics", "publiques"),
    "long": ("long", "longue", "longs", "longues"),
    "blanc": ("blanc", "blanche", "blancs", "blanches"),
    "faux": ("faux", "fausse", "faux", "fausses"),
    "doux": ("doux", "douce", "doux", "douces"),
    "gros": ("gros", "grosse", "gros", "grosses"),
    "frais": ("frais", "fraîche", "frais", "fraîches"),
}

# ----------------------------------------------------------- verbs


def _soften(stem: str, ending: str) -> str:
    """-cer/-ger softening before a/o endings (finançait, chargeait)."""
    if ending[:1] in "ao":
        if stem.endswith("c"):
            return stem[:-1] + "ç" + ending
        if stem.endswith("g"):
            return stem + "e" + ending
    return stem + ending


def verb_rows(lemma, pres3s, pres3p, impf3s, impf3p, fut3s, fut3p, ps3s, ps3p,
              cond3s, cond3p, subj3s, subj3p, pp, pprs, pp_invariable=False):
    row(lemma, lemma, "verb", verbform="inf")
    for surface, number, tense in (
        (pres3s, "sg", "pres"), (pres3p, "pl", "pres"),
        (impf3s, "sg", "impf"), (impf3p, "pl", "impf"),
        (fut3s, "sg", "fut"), (fut3p, "pl", "fut"),
        (ps3s, "sg", "ps"), (ps3p, "pl", "ps"),
        (cond3s, "sg", "cond"), (cond3p, "pl", "cond"),
        (subj3s, "sg", "subj"), (subj3p, "pl", "subj"),
    ):
        row(surface, lemma, "verb", "", number, "3", "fin", tense)
    row(pprs, lemma, "verb", verbform="pprs")
    if pp_invariable:
        row(pp, lemma, "verb", verbform="ppart")
    else:
        mp = pp if pp.endswith("s") else pp + "s"
        row(pp, lemma, "verb", "m", "sg", "", "ppart")
        row(pp + "e", lemma, "verb", "f", "sg", "", "ppart")
        row(mp, lemma, "verb", "m", "pl", "", "ppart")
        row(pp + "es", lemma, "verb", "f", "pl", "", "ppart")


def regular_er(lemma: str):
    stem = lemma[:-2]
    verb_rows(
        lemma,
        _soften(stem, "e"), _soften(stem, "ent"),
        _soften(stem, "ait"), _soften(stem, "aient"),
        lemma + "a", lemma + "ont",
        _soften(stem, "a"), _soften(stem, "èrent"),
        lemma + "ait", lemma + "aient",
        _soften(stem, "e"), _soften(stem, "ent"),
        _soften(stem, "é"), _soften(stem, "ant"),
    )


def regular_ir(lemma: str):
    stem = lemma[:-2]
    verb_rows(
        lemma,
        stem + "it", stem + "issent",
        stem + "issait", stem + "issaient",
        lemma + "a", lemma + "ont",
        stem + "it", stem + "irent",
        lemma + "ait", lemma + "aient",
        stem + "isse", stem + "issent",
        stem + "i", stem + "issant",
    )


def regular_re(lemma: str):
    stem = lemma[:-2]
    verb_rows(
        lemma,
        stem, stem + "ent",
        stem + "ait", stem + "aient",
        lemma[:-1] + "a", lemma[:-1] + "ont",
        stem + "it", stem + "irent",
        lemma[:-1] + "ait", lemma[:-1] + "aient",
        stem + "e", stem + "ent",
        stem + "u", stem + "ant",
    )


ER_VERBS = [
    "arriver", "rester", "demeurer", "marcher", "travailler", "manifester",
    "protester", "chanter", "jouer", "gagner", "attaquer", "défiler",
    "voter", "accuser", "apporter", "charger", "informer", "participer",
    "disperser", "surveiller", "exprimer", "adresser", "écouter",
    "regarder", "parler", "penser", "porter", "monter", "entrer",
    "sembler", "donner", "trouver", "demander", "passer", "occuper",
    "décider", "refuser", "accepter", "organiser", "constituer",
    "continuer", "déplorer", "inviter", "concerner", "déclarer",
    "annoncer", "avancer", "commencer", "financer", "lancer", "manger",
    "changer", "diriger", "voyager", "affirmer", "rentrer", "garder",
    "arrêter", "saluer", "copier", "admirer", "terroriser", "réclamer",
    "adorer", "condamner", "capturer", "épuiser", "acclamer", "convoquer",
    "critiquer", "présenter", "mériter", "menacer", "consulter", "traverser",
]

IR_VERBS = ["finir", "choisir", "réussir", "applaudir", "envahir", "réunir"]

RE_VERBS = ["défendre", "répondre", "attendre", "entendre", "vendre", "perdre", "descendre", "rendre"]

IRREGULAR_VERBS = [
    # lemma, pres3s/3p, impf3s/3p, fut3s/3p, ps3s/3p, cond3s/3p, subj3s/3p, pp, pprs, inv
    ("être", "est", "sont", "était", "étaient", "sera", "seront", "fut", "furent",
     "serait", "seraient", "soit", "soient", "été", "étant", True),
    ("avoir", "a", "ont", "avait", "avaient", "aura", "auront", "eut", "eurent",
     "aurait", "auraient", "ait", "aient", "eu", "ayant", False),
    ("aller", "va", "vont", "allait", "allaient", "ira", "iront", "alla", "allèrent",
     "irait", "iraient", "aille", "aillent", "allé", "allant", False),
    ("faire", "fait", "font", "faisait", "faisaient", "fera", "feront", "fit", "firent",
     "ferait", "feraient", "fasse", "fassent", "fait", "faisant", False),
    ("satisfaire", "satisfait", "satisfont", "satisfaisait", "satisfaisaient",
     "satisfera", "satisferont", "satisfit", "satisfirent", "satisferait",
     "satisferaient", "satisfasse", "satisfassent", "satisfait", "satisfaisant", False),
    ("dire", "dit", "disent", "disait", "disaient", "dira", "diront", "dit", "dirent",
     "dirait", "diraient", "dise", "disent", "dit", "disant", False),
    ("vouloir", "veut", "veulent", "voulait", "voulaient", "voudra", "voudront",
     "voulut", "voulurent", "voudrait", "voudraient", "veuille", "veuillent",
     "voulu", "voulant", False),
    ("pouvoir", "peut", "peuvent", "pouvait", "pouvaient", "pourra", "pourront",
     "put", "purent", "pourrait", "pourraient", "puisse", "puissent", "pu",
     "pouvant", True),
    ("devoir", "doit", "doivent", "devait", "devaient", "devra", "devront",
     "dut", "durent", "devrait", "devraient", "doive", "doivent", "dû", "devant", True),
    ("savoir", "sait", "savent", "savait", "savaient", "saura", "sauront",
     "sut", "surent", "saurait", "sauraient", "sache", "sachent", "su", "sachant", False),
    ("venir", "vient", "viennent", "venait", "venaient", "viendra", "viendront",
     "vint", "vinrent", "viendrait", "viendraient", "vienne", "viennent",
     "venu", "venant", False),
    ("tenir", "tient", "tiennent", "tenait", "tenaient", "tiendra", "tiendront",
     "tint", "tinrent", "tiendrait", "tiendraient", "tienne", "tiennent",
     "tenu", "tenant", False),
    ("prendre", "prend", "prennent", "prenait", "prenaient", "prendra", "prendront",
     "prit", "prirent", "prendrait", "prendraient", "prenne", "prennent",
     "pris", "prenant", False),
    ("mettre", "met", "mettent", "mettait", "mettaient", "mettra", "mettront",
     "mit", "mirent", "mettrait", "mettraient", "mette", "mettent", "mis",
     "mettant", False),
    ("partir", "part", "partent", "partait", "partaient", "partira", "partiront",
     "partit", "partirent", "partirait", "partiraient", "parte", "partent",
     "parti", "partant", False),
    ("sortir", "sort", "sortent", "sortait", "sortaient", "sortira", "sortiront",
     "sortit", "sortirent", "sortirait", "sortiraient", "sorte", "sortent",
     "sorti", "sortant", False),
    ("suivre", "suit", "suivent", "suivait", "suivaient", "suivra", "suivront",
     "suivit", "suivirent", "suivrait", "suivraient", "suive", "suivent",
     "suivi", "suivant", False),
    ("vivre", "vit", "vivent", "vivait", "vivaient", "vivra", "vivront",
     "vécut", "vécurent", "vivrait", "vivraient", "vive", "vivent", "vécu",
     "vivant", False),
    ("écrire", "écrit", "écrivent", "écrivait", "écrivaient", "écrira", "écriront",
     "écrivit", "écrivirent", "écrirait", "écriraient", "écrive", "écrivent",
     "écrit", "écrivant", False),
    ("lire", "lit", "lisent", "lisait", "lisaient", "lira", "liront", "lut",
     "lurent", "lirait", "liraient", "lise", "lisent", "lu", "lisant", False),
    ("croire", "croit", "croient", "croyait", "croyaient", "croira", "croiront",
     "crut", "crurent", "croirait", "croiraient", "croie", "croient", "cru",
     "croyant", False),
    ("voir", "voit", "voient", "voyait", "voyaient", "verra", "verront", "vit",
     "virent", "verrait", "verraient", "voie", "voient", "vu", "voyant", False),
    ("recevoir", "reçoit", "reçoivent", "recevait", "recevaient", "recevra",
     "recevront", "reçut", "reçurent", "recevrait", "recevraient", "reçoive",
     "reçoivent", "reçu", "recevant", False),
    ("connaître", "connaît", "connaissent", "connaissait", "connaissaient",
     "connaîtra", "connaîtront", "connut", "connurent", "connaîtrait",
     "connaîtraient", "connaisse", "connaissent", "connu", "connaissant", False),
    ("paraître", "paraît", "paraissent", "paraissait", "paraissaient",
     "paraîtra", "paraîtront", "parut", "parurent", "paraîtrait",
     "paraîtraient", "paraisse", "paraissent", "paru", "paraissant", False),
    ("rejoindre", "rejoint", "rejoignent", "rejoignait", "rejoignaient",
     "rejoindra", "rejoindront", "rejoignit", "rejoignirent", "rejoindrait",
     "rejoindraient", "rejoigne", "rejoignent", "rejoint", "rejoignant", False),
    ("devenir", "devient", "deviennent", "devenait", "devenaient", "deviendra",
     "deviendront", "devint", "devinrent", "deviendrait", "deviendraient",
     "devienne", "deviennent", "devenu", "devenant", False),
    ("dormir", "dort", "dorment", "dormait", "dormaient", "dormira", "dormiront",
     "dormit", "dormirent", "dormirait", "dormiraient", "dorme", "dorment",
     "dormi", "dormant", True),
    ("prévoir", "prévoit", "prévoient", "prévoyait", "prévoyaient", "prévoira",
     "prévoiront", "prévit", "prévirent", "prévoirait", "prévoiraient",
     "prévoie", "prévoient", "prévu", "prévoyant", False),
    ("plaindre", "plaint", "plaignent", "plaignait", "plaignaient", "plaindra",
     "plaindront", "plaignit", "plaignirent", "plaindrait", "plaindraient",
     "plaigne", "plaignent", "plaint", "plaignant", False),
    # é/è stem alternation in the present and subjunctive
    ("répéter", "répète", "répètent", "répétait", "répétaient", "répétera",
     "répéteront", "répéta", "répétèrent", "répéterait", "répéteraient",
     "répète", "répètent", "répété", "répétant", False),
]

# ----------------------------------------------------------- closed classes


def determiners():
    for surface, lemma, gender, number in [
        ("le", "le", "m", "sg"), ("la", "le", "f", "sg"), ("l'", "l'", "", "sg"),
        ("les", "le", "", "pl"),
        ("un", "un", "m", "sg"), ("une", "un", "f", "sg"), ("des", "un", "", "pl"),
        ("du", "du", "m", "sg"), ("au", "au", "m", "sg"), ("aux", "au", "", "pl"),
        ("ce", "ce", "m", "sg"), ("cet", "cet", "m", "sg"), ("cette", "ce", "f", "sg"),
        ("ces", "ce", "", "pl"),
        ("son", "son", "m", "sg"), ("sa", "son", "f", "sg"), ("ses", "son", "", "pl"),
        ("leur", "leur", "", "sg"), ("leurs", "leur", "", "pl"),
        ("mon", "mon", "m", "sg"), ("ma", "mon", "f", "sg"), ("mes", "mon", "", "pl"),
        ("ton", "ton", "m", "sg"), ("ta", "ton", "f", "sg"), ("tes", "ton", "", "pl"),
        ("notre", "notre", "", "sg"), ("nos", "notre", "", "pl"),
        ("votre", "votre", "", "sg"), ("vos", "votre", "", "pl"),
        ("chaque", "chaque", "", "sg"),
        ("quelques", "quelque", "", "pl"), ("plusieurs", "plusieurs", "", "pl"),
        ("tout", "tout", "m", "sg"), ("toute", "tout", "f", "sg"),
        ("tous", "tout", "m", "pl"), ("toutes", "tout", "f", "pl"),
    ]:
        row(surface, lemma, "det", gender, number)


def pronouns():
    for surface, lemma, gender, number, person in [
        ("il", "il", "m", "sg", "3"), ("ils", "il", "m", "pl", "3"),
        ("elle", "elle", "f", "sg", "3"), ("elles", "elle", "f", "pl", "3"),
        ("le", "le", "m", "sg", "3"), ("la", "le", "f", "sg", "3"),
        ("les", "le", "", "pl", "3"), ("l'", "l'", "", "sg", "3"),
        ("lui", "lui", "", "sg", "3"), ("leur", "leur", "", "pl", "3"),
        ("eux", "lui", "m", "pl", "3"),
        ("on", "on", "", "sg", "3"), ("se", "se", "", "", "3"),
        ("qui", "qui", "", "", ""), ("que", "que", "", "", ""),
        ("ce", "ce", "", "sg", "3"), ("cela", "cela", "m", "sg", "3"),
        ("ça", "ça", "m", "sg", "3"),
        ("je", "je", "", "sg", "1"), ("tu", "tu", "", "sg", "2"),
        ("nous", "nous", "", "pl", "1"), ("vous", "vous", "", "pl", "2"),
    ]:
        row(surface, lemma, "pron", gender, number, person)


COMMON_NOUNS = [
    # (lemma, gender, plural); plural None -> lemma + s
    ("journal", "m", "journaux"), ("mois", "m", "mois"), ("ville", "f", None),
    ("lance", "f", None), ("eau", "f", "eaux"), ("détenu", "m", None),
    ("dossier", "m", None), ("négociation", "f", None), ("avancement", "m", None),
    ("soutien", "m", None), ("élément", "m", None), ("programme", "m", None),
    ("source", "f", None), ("financement", "m", None), ("accès", "m", "accès"),
    ("droit", "m", None), ("démarche", "f", None), ("intermédiaire", "m", None),
    ("contact", "m", None), ("légitimité", "f", None), ("maison", "f", None),
    ("place", "f", None), ("pays", "m", "pays"), ("monde", "m", None),
    ("réponse", "f", None), ("accusation", "f", None), ("bâtiment", "m", None),
    ("réfection", "f", None), ("grève", "f", None), ("local", "m", "locaux"),
    ("article", "m", None), ("modification", "f", None), ("historique", "m", None),
    ("ordre", "m", None), ("rue", "f", None), ("marché", "m", None),
    ("débat", "m", None), ("loi", "f", None), ("projet", "m", None),
    ("texte", "m", None), ("rapport", "m", None), ("séance", "f", None),
    ("discours", "m", "discours"), ("victoire", "f", None), ("défaite", "f", None),
    ("bataille", "f", None), ("guerre", "f", None), ("paix", "f", "paix"),
    ("combat", "m", None), ("film", "m", None), ("scène", "f", None),
    ("théâtre", "m", None), ("concert", "m", None), ("musée", "m", None),
    ("école", "f", None), ("livre", "m", None), ("journée", "f", None),
    ("semaine", "f", None), ("année", "f", None), ("jour", "m", None),
    ("nuit", "f", None), ("matin", "m", None), ("soir", "m", None),
    ("campagne", "f", None), ("région", "f", None), ("quartier", "m", None),
    ("centre", "m", None), ("gare", "f", None), ("hôpital", "m", "hôpitaux"),
    ("église", "f", None), ("château", "m", "châteaux"), ("pont", "m", None),
    ("fleuve", "m", None), ("montagne", "f", None), ("forêt", "f", None),
    ("chemin", "m", None), ("route", "f", None), ("voiture", "f", None),
    ("train", "m", None), ("avion", "m", None), ("bateau", "m", "bateaux"),
    ("navire", "m", None), ("port", "m", None), ("mer", "f", None),
    ("côte", "f", None), ("île", "f", None), ("lettre", "f", None),
    ("courrier", "m", None), ("mari", "m", None), ("femme", "f", None),
    ("homme", "m", None), ("personne", "f", None), ("groupe", "m", None),
    ("membre", "m", None), ("vote", "m", None), ("décision", "f", None),
    ("réforme", "f", None), ("colère", "f", None),
]


def dictionary_nouns():
    d = load_dictionary(DATA / "dictionary.tsv")
    for entry in d:
        noun(entry.collective_form, entry.collective_form, entry.cn_gender, entry.cn_number)
        epicene = entry.member_lemma in EPICENE_MEMBERS or entry.member_lemma.endswith("phone")
        member_gender = "" if epicene else "m"
        noun(entry.member_plural_form, entry.member_lemma, member_gender, "pl")
        noun(entry.member_lemma, entry.member_lemma, member_gender, "sg")


def main():
    dictionary_nouns()
    determiners()
    pronouns()
    for lemma, gender, plural in COMMON_NOUNS:
        noun(lemma, lemma, gender, "sg")
        noun(plural if plural else lemma + "s", lemma, gender, "pl")
    for base in REGULAR_ADJ:
        adjective(base)
    for base in EPICENE_ADJ:
        epicene_adjective(base)
    for base, forms in IRREGULAR_ADJ.items():
        adjective(base, forms)
    for lemma in ER_VERBS:
        regular_er(lemma)
    for lemma in IR_VERBS:
        regular_ir(lemma)
    for lemma in RE_VERBS:
        regular_re(lemma)
    for spec in IRREGULAR_VERBS:
        verb_rows(*spec[:15], pp_invariable=spec[15])

    # dedupe identical rows (members shared across entries etc.)
    unique = []
    seen = set()
    for r in ROWS:
        if r not in seen:
            seen.add(r)
            unique.append(r)

    OUT.parent.mkdir(parents=True, exist_ok=True)
    with open(OUT, "w", encoding="utf-8") as f:
        f.write("surface\tlemma\tpos\tgender\tnumber\tperson\tverbform\ttense_mood\n")
        for r in unique:
            f.write("\t".join(r) + "\n")

    lex = load_lexicon(OUT)
    failures = []
    for readings in lex.by_surface.values():
        for reading in readings:
            got = lex.inflect(reading.lemma, reading.features)
            if got != reading.surface:
                failures.append((reading, got))
    if failures:
        for reading, got in failures[:20]:
            print(f"round-trip failure: {reading} -> {got!r}")
        raise SystemExit(f"{len(failures)} round-trip failures")
    print(f"wrote {OUT} with {lex.n_rows} rows, round-trip clean")


if __name__ == "__main__":
    main()
