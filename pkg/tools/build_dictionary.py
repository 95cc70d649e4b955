#!/usr/bin/env python3
"""Build the shipped collective-noun dictionary TSV.

One-off curation script, not part of the runtime engine. Entries come in
three blocks: a core of well-established human collective nouns, additional
pairs collected from media usage, and the productive "-phonie"/"-phone"
series for speaker communities. Run from the repository root:

    python tools/build_dictionary.py
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from neutre.dictionary import expected_elision, load_dictionary  # noqa: E402

OUT = Path(__file__).resolve().parents[1] / "src" / "neutre" / "data" / "dictionary.tsv"

# (collective, gender, member_plural, member_lemma, notes)
CORE = [
    ("académie", "f", "académiciens", "académicien", ""),
    ("armée", "f", "soldats", "soldat", ""),
    ("bataillon", "m", "soldats", "soldat", ""),
    ("infanterie", "f", "soldats", "soldat", ""),
    ("régiment", "m", "soldats", "soldat", ""),
    ("milice", "f", "miliciens", "milicien", ""),
    ("artillerie", "f", "artilleurs", "artilleur", ""),
    ("auditoire", "m", "auditeurs", "auditeur", ""),
    ("ballet", "m", "danseurs", "danseur", ""),
    ("police", "f", "policiers", "policier", ""),
    ("lectorat", "m", "lecteurs", "lecteur", ""),
    ("électorat", "m", "électeurs", "électeur", ""),
    ("citoyenneté", "f", "citoyens", "citoyen", ""),
    ("parlement", "m", "députés", "député", ""),
    ("actorat", "m", "acteurs", "acteur", ""),
    ("jeunesse", "f", "jeunes", "jeune", "member form also an adjective"),
    ("noblesse", "f", "nobles", "noble", "member form also an adjective"),
    ("bourgeoisie", "f", "bourgeois", "bourgeois", ""),
    ("aristocratie", "f", "aristocrates", "aristocrate", ""),
    ("clergé", "m", "clercs", "clerc", ""),
    ("clientèle", "f", "clients", "client", ""),
    ("direction", "f", "directeurs", "directeur", ""),
    ("administration", "f", "administrateurs", "administrateur", ""),
    ("magistrature", "f", "magistrats", "magistrat", ""),
    ("professorat", "m", "professeurs", "professeur", ""),
    ("patronat", "m", "patrons", "patron", ""),
    ("salariat", "m", "salariés", "salarié", ""),
    ("paysannerie", "f", "paysans", "paysan", ""),
    ("chevalerie", "f", "chevaliers", "chevalier", ""),
    ("gendarmerie", "f", "gendarmes", "gendarme", ""),
    ("cavalerie", "f", "cavaliers", "cavalier", ""),
    ("délégation", "f", "délégués", "délégué", ""),
    ("population", "f", "habitants", "habitant", ""),
    ("personnel", "m", "employés", "employé", ""),
    ("prêtrise", "f", "prêtres", "prêtre", ""),
    ("épiscopat", "m", "évêques", "évêque", ""),
    ("jury", "m", "jurés", "juré", ""),
    ("orchestre", "m", "musiciens", "musicien", ""),
    ("chorale", "f", "choristes", "choriste", ""),
    ("chœur", "m", "choristes", "choriste", ""),
    ("équipage", "m", "matelots", "matelot", ""),
    ("marine", "f", "marins", "marin", ""),
    ("négoce", "m", "marchands", "marchand", ""),
    ("commerce", "m", "commerçants", "commerçant", ""),
    ("rébellion", "f", "rebelles", "rebelle", ""),
    ("résistance", "f", "résistants", "résistant", ""),
    ("insurrection", "f", "insurgés", "insurgé", ""),
    ("légion", "f", "légionnaires", "légionnaire", ""),
    ("confrérie", "f", "confrères", "confrère", ""),
    ("fratrie", "f", "frères", "frère", ""),
    ("domesticité", "f", "domestiques", "domestique", ""),
    ("valetaille", "f", "valets", "valet", ""),
    ("actionnariat", "m", "actionnaires", "actionnaire", ""),
    ("artisanat", "m", "artisans", "artisan", ""),
    ("notariat", "m", "notaires", "notaire", ""),
    ("secrétariat", "m", "secrétaires", "secrétaire", ""),
    ("mandarinat", "m", "mandarins", "mandarin", ""),
    ("prolétariat", "m", "prolétaires", "prolétaire", ""),
    ("intelligentsia", "f", "intellectuels", "intellectuel", ""),
    ("voisinage", "m", "voisins", "voisin", ""),
    ("entourage", "m", "proches", "proche", "member form also an adjective"),
    ("parentèle", "f", "parents", "parent", ""),
    ("descendance", "f", "descendants", "descendant", ""),
    ("progéniture", "f", "enfants", "enfant", ""),
    ("postérité", "f", "descendants", "descendant", ""),
    ("ascendance", "f", "ascendants", "ascendant", ""),
    ("marmaille", "f", "enfants", "enfant", ""),
    ("rédaction", "f", "rédacteurs", "rédacteur", ""),
    ("parterre", "m", "spectateurs", "spectateur", ""),
    ("plèbe", "f", "plébéiens", "plébéien", ""),
    ("patriciat", "m", "patriciens", "patricien", ""),
    ("sénat", "m", "sénateurs", "sénateur", ""),
    ("conclave", "m", "cardinaux", "cardinal", ""),
    ("encadrement", "m", "cadres", "cadre", ""),
    ("main-d’œuvre", "f", "ouvriers", "ouvrier", ""),
    ("horde", "f", "pillards", "pillard", "aspirated h, no elision"),
    ("humanité", "f", "humains", "humain", "mute h, elision"),
    ("hôtellerie", "f", "hôteliers", "hôtelier", "mute h, elision"),
    ("escadron", "m", "cavaliers", "cavalier", ""),
    ("barreau", "m", "avocats", "avocat", ""),
    ("médecine", "f", "médecins", "médecin", ""),
    ("audience", "f", "téléspectateurs", "téléspectateur", ""),
    ("banque", "f", "banquiers", "banquier", ""),
    ("finance", "f", "financiers", "financier", ""),
    ("presse", "f", "journalistes", "journaliste", ""),
    ("édition", "f", "éditeurs", "éditeur", ""),
    ("université", "f", "universitaires", "universitaire", ""),
    ("justice", "f", "juges", "juge", ""),
    ("état-major", "m", "officiers", "officier", ""),
    ("aviation", "f", "aviateurs", "aviateur", ""),
    ("douane", "f", "douaniers", "douanier", ""),
    ("poste", "f", "facteurs", "facteur", ""),
    ("chasse", "f", "chasseurs", "chasseur", ""),
    ("ennemi", "m", "ennemis", "ennemi", "collective singular of its own member noun"),
    ("paroisse", "f", "paroissiens", "paroissien", ""),
    ("couvent", "m", "religieux", "religieux", "member form also an adjective"),
    ("monastère", "m", "moines", "moine", ""),
    ("papauté", "f", "papes", "pape", ""),
    ("diaconat", "m", "diacres", "diacre", ""),
    ("chapitre", "m", "chanoines", "chanoine", ""),
    ("consistoire", "m", "pasteurs", "pasteur", ""),
    ("franc-maçonnerie", "f", "francs-maçons", "franc-maçon", ""),
    ("maçonnerie", "f", "maçons", "maçon", ""),
    ("public", "m", "spectateurs", "spectateur", ""),
    ("assistance", "f", "spectateurs", "spectateur", ""),
]

COLLECTED = [
    ("blogosphère", "f", "blogueurs", "blogueur", ""),
    ("colonat", "m", "colons", "colon", ""),
    ("volontariat", "m", "volontaires", "volontaire", ""),
    ("bénévolat", "m", "bénévoles", "bénévole", ""),
    ("interprétariat", "m", "interprètes", "interprète", ""),
    ("mécénat", "m", "mécènes", "mécène", ""),
    ("sociétariat", "m", "sociétaires", "sociétaire", ""),
    ("garde", "f", "gardes", "garde", "member form also a verb form"),
    ("escorte", "f", "gardes", "garde", ""),
    ("pègre", "f", "malfaiteurs", "malfaiteur", ""),
    ("banditisme", "m", "bandits", "bandit", ""),
    ("piraterie", "f", "pirates", "pirate", ""),
    ("flibuste", "f", "flibustiers", "flibustier", ""),
    ("gueuserie", "f", "gueux", "gueux", ""),
    ("moinerie", "f", "moines", "moine", ""),
    ("prélature", "f", "prélats", "prélat", ""),
    ("curie", "f", "cardinaux", "cardinal", ""),
    ("rabbinat", "m", "rabbins", "rabbin", ""),
    ("imamat", "m", "imams", "imam", ""),
    ("pastorat", "m", "pasteurs", "pasteur", ""),
    ("autorat", "m", "auteurs", "auteur", ""),
    ("figuration", "f", "figurants", "figurant", ""),
    ("distribution", "f", "acteurs", "acteur", ""),
    ("claque", "f", "claqueurs", "claqueur", ""),
    ("kop", "m", "supporters", "supporter", ""),
    ("hooliganisme", "m", "hooligans", "hooligan", "aspirated h, no elision"),
    ("vieillesse", "f", "vieux", "vieux", "member form also an adjective"),
    ("enfance", "f", "enfants", "enfant", ""),
    ("adolescence", "f", "adolescents", "adolescent", ""),
    ("étudiantat", "m", "étudiants", "étudiant", ""),
    ("précariat", "m", "précaires", "précaire", ""),
    ("paysannat", "m", "paysans", "paysan", ""),
    ("compagnonnage", "m", "compagnons", "compagnon", ""),
    ("rectorat", "m", "recteurs", "recteur", ""),
    ("commandement", "m", "commandants", "commandant", ""),
    ("diplomatie", "f", "diplomates", "diplomate", ""),
    ("préfectorale", "f", "préfets", "préfet", ""),
    ("gouvernement", "m", "ministres", "ministre", ""),
    ("opposition", "f", "opposants", "opposant", ""),
    ("maquis", "m", "maquisards", "maquisard", ""),
    ("guérilla", "f", "guérilleros", "guérillero", ""),
    ("chouannerie", "f", "chouans", "chouan", ""),
    ("canaille", "f", "voyous", "voyou", ""),
    ("gotha", "m", "notables", "notable", ""),
    ("représentation", "f", "représentants", "représentant", ""),
    ("manifestation", "f", "manifestants", "manifestant", ""),
]

# speaker-community series: <stem>phonie / <stem>phones
PHONE_STEMS = [
    "akano", "albano", "allo", "alsaco", "amazigho", "amharo", "anglo",
    "arabo", "aragono", "arméno", "arpitano", "aymaro", "azéro", "bambara",
    "bantou", "baoulé", "basco", "béarno", "bemba", "bengalo", "berbéro",
    "biélorusso", "birmano", "bosno", "bretonno", "bulgaro", "cantono",
    "catalano", "celto", "cinghalo", "comoro", "coréano", "corso", "créolo",
    "croato", "dano", "dioula", "douala", "espéranto", "estono", "finno",
    "fono", "franco", "frisono", "gaélo", "gallégo", "gallo", "géorgo",
    "germano", "gréco", "guarani", "gujarato", "hakka", "haoussa", "hébréo",
    "helléno", "hindo", "hispano", "hongro", "iakouto", "igbo", "indonéso",
    "inuktituto", "italo", "japono", "javano", "kabylo", "kachoubo",
    "kalmouko", "kannado", "kashmiro", "kazakho", "khméro", "kikongo",
    "kinyarwando", "kirghizo", "kurdo", "ladino", "lapono", "laoto",
    "latino", "letto", "lingala", "lituano", "lombardo", "luso",
    "luxembourgo", "macédono", "magyaro", "malayalo", "malgacho", "malto",
    "mandarino", "mandingo", "maratho", "maya", "mongolo", "mooré",
    "nahuatlo", "néerlando", "népalo", "normanno", "norvégo", "occitano",
    "oromo", "ossèto", "ouïghouro", "ourdo", "ouzbéko", "pachto",
    "papiamento", "pendjabo", "persano", "peulo", "picardo", "polono",
    "provençalo", "quechua", "romancho", "roumano", "rundo", "russo",
    "ruthéno", "sango", "sanskrito", "sardo", "serbo", "sérèro", "shona",
    "sicilo", "sindho", "sino", "slavo", "slovaco", "slovéno", "somalo",
    "soninko", "sorabo", "sotho", "souahélo", "suédo", "tadjiko", "tagalo",
    "tahitiano", "tamoulo", "tataro", "tchéco", "tchétchéno", "télougo",
    "thaïo", "tibéto", "tigrino", "tswana", "turco", "turkméno", "ukraino",
    "vietnamo", "wallono", "wolofo", "xhosa", "yiddisho", "yorubo", "zarma",
    "zoulou",
]

# ids referenced by shipped corpora and fixtures; kept stable across builds
PINNED_IDS = {
    "rédaction/rédacteurs": 68,
    "autorat/auteurs": 126,
}


def build_rows():
    rows = []
    for i, (coll, gender, member, lemma, notes) in enumerate(CORE + COLLECTED, start=1):
        rows.append((i, coll, gender, "sg", member, lemma, notes))
    next_id = len(rows) + 1
    for stem in PHONE_STEMS:
        rows.append(
            (next_id, stem + "phonie", "f", "sg", stem + "phones", stem + "phone", "")
        )
        next_id += 1
    return rows


def main():
    rows = build_rows()
    assert len(rows) == 315, f"expected 315 entries, built {len(rows)}"
    by_pair = {f"{r[1]}/{r[4]}": r[0] for r in rows}
    for pair, wanted in PINNED_IDS.items():
        assert by_pair.get(pair) == wanted, f"{pair} must have id {wanted}, got {by_pair.get(pair)}"
    assert len(PHONE_STEMS) == len(set(PHONE_STEMS)) == 164

    OUT.parent.mkdir(parents=True, exist_ok=True)
    with open(OUT, "w", encoding="utf-8") as f:
        f.write("id\tcollective\tcn_gender\tcn_number\tmember_plural\tmember_lemma\telision\tnotes\n")
        for entry_id, coll, gender, number, member, lemma, notes in rows:
            flag = "1" if expected_elision(coll) else "0"
            f.write(f"{entry_id}\t{coll}\t{gender}\t{number}\t{member}\t{lemma}\t{flag}\t{notes}\n")

    d = load_dictionary(OUT)
    assert len(d) == 315
    assert [e.collective_form for e in d.lookup_member("soldats")] == [
        "armée", "bataillon", "infanterie", "régiment",
    ]
    assert d.entry_by_id(126).member_plural_form == "auteurs"
    assert d.entry_by_id(68).member_plural_form == "rédacteurs"
    print(f"wrote {OUT} with {len(d)} entries")


if __name__ == "__main__":
    main()
