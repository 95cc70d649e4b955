"""Full-form morphological lexicon: analysis and re-inflection.

The lexicon is a Delaf-style table, one reading per row:

    surface	lemma	pos	gender	number	person	verbform	tense_mood

Unspecified cells are empty. ``analyze`` returns every reading of a surface
form; ``inflect`` maps a lemma plus target features back to a surface form.
The shipped file is a trimmed subset; a full Delaf export in the same format
loads unchanged.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field, replace

POS_VALUES = ("noun", "adj", "verb", "det", "pron", "other")
VERBFORM_VALUES = ("fin", "ppart", "inf", "pprs")

LEXICON_HEADER = [
    "surface",
    "lemma",
    "pos",
    "gender",
    "number",
    "person",
    "verbform",
    "tense_mood",
]


class LexiconError(Exception):
    """Raised when the lexicon file is malformed."""


class InflectionMiss(Exception):
    """No surface form matches the requested lemma + features."""

    def __init__(self, lemma: str, target: "MorphFeatures"):
        super().__init__(lemma, target)
        self.lemma = lemma
        self.target = target

    def __str__(self) -> str:
        return f"no form of {self.lemma!r} matching {self.target}"


@dataclass(frozen=True)
class MorphFeatures:
    pos: str = ""
    gender: str = ""  # "m" | "f" | "" (unspecified)
    number: str = ""  # "sg" | "pl" | ""
    person: str = ""  # "1" | "2" | "3" | ""
    verbform: str = ""  # "fin" | "ppart" | "inf" | "pprs" | ""
    tense_mood: str = ""  # "pres" | "impf" | "fut" | "ps" | "cond" | "subj" | ""

    def subsumes(self, other: "MorphFeatures") -> bool:
        """True when every feature specified here matches ``other``.

        An unspecified feature on either side counts as compatible, so an
        epicene lexicon row (gender "") satisfies a gendered target.
        """
        for name in ("pos", "gender", "number", "person", "verbform", "tense_mood"):
            a = getattr(self, name)
            b = getattr(other, name)
            if a and b and a != b:
                return False
        return True


@dataclass(frozen=True)
class MorphAnalysis:
    surface: str
    lemma: str
    features: MorphFeatures


@dataclass(frozen=True)
class ReinflectResult:
    text: str
    missed: bool = False
    reason: str | None = None


APOSTROPHES = ("’", "ʼ")


def _norm(form: str) -> str:
    form = unicodedata.normalize("NFC", form)
    for a in APOSTROPHES:
        form = form.replace(a, "'")
    return form


@dataclass
class MorphLexicon:
    by_surface: dict[str, list[MorphAnalysis]] = field(default_factory=dict)
    by_lemma: dict[tuple[str, str], list[MorphAnalysis]] = field(default_factory=dict)
    n_rows: int = 0

    def analyze(self, form: str) -> list[MorphAnalysis]:
        """All lexicon readings of the NFC-normalized form; [] if unknown."""
        key = _norm(form)
        readings = self.by_surface.get(key)
        if readings is None and key[:1].isupper():
            readings = self.by_surface.get(key[:1].lower() + key[1:])
        return list(readings) if readings else []

    def inflect(self, lemma: str, target: MorphFeatures) -> str:
        """Surface form of ``lemma`` matching ``target``.

        ``target.pos`` must be specified. When several rows match, the
        shortest surface wins, then the lexicographically smallest.

        Raises:
            InflectionMiss: no row matches; callers typically keep the
                original form and log the failure.
        """
        if not target.pos:
            raise ValueError("inflection target must specify pos")
        rows = self.by_lemma.get((_norm(lemma), target.pos), [])
        candidates = [r for r in rows if target.subsumes(r.features)]
        if not candidates:
            raise InflectionMiss(lemma, target)
        return min(candidates, key=lambda r: (len(r.surface), r.surface)).surface

    def reinflect(
        self,
        form: str,
        gender: str = "",
        number: str = "",
        pos_hint: str = "",
        verbform_hint: str = "",
    ) -> ReinflectResult:
        """Re-inflect ``form`` with gender/number overridden.

        Chooses the analysis whose pos (and verbform, when hinted) matches
        the dependency role, keeps its other features, and swaps in the
        requested gender/number. Unanalyzable forms pass through with
        ``missed=True``.
        """
        analyses = self.analyze(form)
        if pos_hint:
            preferred = [a for a in analyses if a.features.pos == pos_hint]
            if preferred:
                analyses = preferred
        if verbform_hint:
            preferred = [a for a in analyses if a.features.verbform == verbform_hint]
            if preferred:
                analyses = preferred
        if not analyses:
            return ReinflectResult(form, missed=True, reason="unknown form")
        last_reason = None
        first_success: str | None = None
        for analysis in analyses:
            target = replace(
                analysis.features,
                gender=gender or analysis.features.gender,
                number=number or analysis.features.number,
            )
            try:
                result = self.inflect(analysis.lemma, target)
            except InflectionMiss as miss:
                last_reason = str(miss)
                continue
            if result == _norm(form):
                # some reading already satisfies the target: the form stands
                # (keeps re-inflection idempotent across ambiguous readings)
                return ReinflectResult(result)
            if first_success is None:
                first_success = result
        if first_success is not None:
            return ReinflectResult(first_success)
        return ReinflectResult(form, missed=True, reason=last_reason)


def load_lexicon(path) -> MorphLexicon:
    """Load the lexicon TSV; see module docstring for the format."""
    lex = MorphLexicon()
    with open(path, encoding="utf-8") as f:
        lines = f.read().splitlines()
    if not lines:
        raise LexiconError(f"{path}: empty lexicon file")
    if lines[0].split("\t") != LEXICON_HEADER:
        raise LexiconError(f"{path}:1: bad header")
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        cols = line.split("\t")
        if len(cols) != len(LEXICON_HEADER):
            raise LexiconError(
                f"{path}:{lineno}: expected {len(LEXICON_HEADER)} columns, got {len(cols)}"
            )
        surface, lemma, pos, gender, number, person, verbform, tense_mood = (
            _norm(c.strip()) for c in cols
        )
        if not surface or not lemma or pos not in POS_VALUES:
            raise LexiconError(f"{path}:{lineno}: bad row {line!r}")
        if verbform and verbform not in VERBFORM_VALUES:
            raise LexiconError(f"{path}:{lineno}: bad verbform {verbform!r}")
        analysis = MorphAnalysis(
            surface=surface,
            lemma=lemma,
            features=MorphFeatures(
                pos=pos,
                gender=gender,
                number=number,
                person=person,
                verbform=verbform,
                tense_mood=tense_mood,
            ),
        )
        lex.by_surface.setdefault(surface, []).append(analysis)
        lex.by_lemma.setdefault((lemma, pos), []).append(analysis)
        lex.n_rows += 1
    return lex
