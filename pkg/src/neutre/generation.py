"""Rewriting member phrases into collective-noun phrases.

For every candidate collective noun of every bound span, the generator
swaps in the collective form, maps the determiner (contraction and elision
included), and re-inflects the detected dependencies: finite verbs change
number only, adjectives and past participles change gender and number,
pronouns and possessives go through a suppletive table. Everything else,
whitespace and punctuation included, is reproduced byte-exactly.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from .annotation import AnnotatedSentence, MemberSpan, _surface_pieces
from .dependencies import DependencySet, detect
from .dictionary import CnDictionary, CnEntry
from .morphology import MorphLexicon

VOWELS = "aeiouàâäéèêëîïôöùûüœ"

# verbs whose initial h blocks clitic elision ("il les hait", never *"il l'hait")
ASPIRATED_H_ONSETS = ("haï", "hais", "hait", "harc", "haranc", "hurl", "hoch",
                      "hant", "hât", "hauss", "heurt", "hiss")

INDEFINITE_QUANTIFIERS = {"quelques", "plusieurs"}


@dataclass(frozen=True)
class Change:
    token_index: int
    before: str
    after: str
    role: str


@dataclass
class RewriteResult:
    variant_entry_id: tuple[int, ...]
    text: str
    changes: list[Change] = field(default_factory=list)
    inflection_misses: list[tuple[int, str]] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    unchanged: bool = False

    @property
    def variant_id(self) -> str:
        return ",".join(str(i) for i in self.variant_entry_id)

    def change_log_json(self) -> str:
        return json.dumps(
            [
                {"token": c.token_index, "before": c.before, "after": c.after, "role": c.role}
                for c in self.changes
            ],
            ensure_ascii=False,
        )


def _starts_with_vowel(word: str) -> bool:
    w = word.lower()
    if not w:
        return False
    if w[0] in VOWELS:
        return True
    if w[0] == "h":
        return not w.startswith(ASPIRATED_H_ONSETS)
    return False


def _match_case(before: str, after: str) -> str:
    if before[:1].isupper() and after:
        return after[0].upper() + after[1:]
    return after


def _apostrophe_for(text: str) -> str:
    # reuse the source's apostrophe codepoint for new elisions
    return "’" if "’" in text and "'" not in text else "'"


def map_determiner(
    surface: str, entry: CnEntry, apostrophe: str, lemma: str = ""
) -> tuple[str | None, str | None]:
    """New determiner surface for the member phrase's own determiner.

    ``lemma`` disambiguates surface "des": the indefinite article (lemma
    "un", "des soldats") becomes un/une, the de+les contraction ("les droits
    des citoyens") becomes du / de la / de l'. Returns (replacement,
    warning); replacement is None when the determiner is not in the mapping
    table (left untouched, warning set).
    """
    low = surface.lower()
    gender = entry.cn_gender
    el = entry.elision_onset
    art = {
        "les": ("l" + apostrophe) if el else ("le" if gender == "m" else "la"),
        "des": ("de l" + apostrophe) if el else ("du" if gender == "m" else "de la"),
        "aux": ("à l" + apostrophe) if el else ("au" if gender == "m" else "à la"),
        "ces": ("cet" if el else "ce") if gender == "m" else "cette",
        "ses": "son" if (gender == "m" or el) else "sa",
        "mes": "mon" if (gender == "m" or el) else "ma",
        "tes": "ton" if (gender == "m" or el) else "ta",
        "leurs": "leur",
        "nos": "notre",
        "vos": "votre",
        "de": ("d" + apostrophe) if el else "de",
    }
    if entry.cn_number == "pl":
        return surface, None  # plural collective keeps a plural determiner
    if low in INDEFINITE_QUANTIFIERS:
        repl = ("l" + apostrophe) if el else ("le" if gender == "m" else "la")
        return _match_case(surface, repl), "specificity: indefinite quantifier replaced by definite article"
    if low == "des" and lemma == "un":
        return _match_case(surface, "un" if gender == "m" else "une"), None
    if low in art:
        warning = "partitive 'de' kept before collective" if low == "de" else None
        return _match_case(surface, art[low]), warning
    return None, f"no determiner mapping for {surface!r}"


def map_possessive(surface: str, possessed_gender: str, possessed_onset_vowel: bool,
                   possessed_number: str) -> str | None:
    """Possessor plural -> singular for coreferent possessives (rule 5):
    leurs -> ses, leur -> son/sa (son before a vowel onset)."""
    low = surface.lower()
    if low == "leurs" or (low == "leur" and possessed_number == "pl"):
        return _match_case(surface, "ses")
    if low == "leur":
        repl = "son" if (possessed_gender == "m" or possessed_onset_vowel) else "sa"
        return _match_case(surface, repl)
    return None


def map_pronoun(
    surface: str, deprel: str, entry: CnEntry, next_word: str | None, apostrophe: str
) -> str | None:
    """Suppletive pronoun table: ils/elles -> il/elle, object clitic
    les -> le/la/l', dative leur -> lui, tonic eux/elles -> lui/elle."""
    low = surface.lower()
    gender = entry.cn_gender
    if entry.cn_number == "pl":
        return surface
    if low in ("ils", "elles") and deprel.startswith("nsubj"):
        return _match_case(surface, "il" if gender == "m" else "elle")
    if low == "les":
        if next_word and _starts_with_vowel(next_word):
            return _match_case(surface, "l" + apostrophe)
        return _match_case(surface, "le" if gender == "m" else "la")
    if low == "leur":
        return _match_case(surface, "lui")
    if low in ("eux", "elles"):
        return _match_case(surface, "lui" if gender == "m" else "elle")
    return None


def compute_dependencies(
    sentence: AnnotatedSentence, next_sentence: AnnotatedSentence | None = None
) -> dict[int, DependencySet]:
    """Run detection for every span; keyed by span position."""
    return {
        i: detect(sentence, span, next_sentence)
        for i, span in enumerate(sentence.spans)
    }


def rewrite(
    sentence: AnnotatedSentence,
    deps_by_span: dict[int, DependencySet],
    dictionary: CnDictionary,
    lexicon: MorphLexicon,
    mode: str = "first_variant",
) -> list[RewriteResult]:
    """Produce rewritten variants of a sentence.

    ``first_variant`` picks the lowest dictionary id per span and returns a
    single result; ``all_variants`` returns the cross product of candidate
    collectives over spans, in dictionary order. A sentence with no spans is
    already considered gender-neutral and comes back unchanged.
    """
    if mode not in ("first_variant", "all_variants"):
        raise ValueError(f"unknown mode {mode!r}")
    source = sentence.text
    if not sentence.spans:
        return [RewriteResult(variant_entry_id=(), text=source, unchanged=True)]
    per_span_candidates = []
    for span in sentence.spans:
        ids = sorted(span.entry_ids)
        if mode == "first_variant":
            ids = ids[:1]
        per_span_candidates.append([dictionary.entry_by_id(i) for i in ids])
    results = []
    for combo in itertools.product(*per_span_candidates):
        results.append(_rewrite_one(sentence, deps_by_span, combo, lexicon))
    return results


def _rewrite_one(
    sentence: AnnotatedSentence,
    deps_by_span: dict[int, DependencySet],
    combo: tuple[CnEntry, ...],
    lexicon: MorphLexicon,
) -> RewriteResult:
    apostrophe = _apostrophe_for(sentence.text)
    changes: list[Change] = []
    misses: list[tuple[int, str]] = []
    warnings: list[str] = []
    replaced_piece: dict[int, str] = {}  # token index -> new surface

    for span_i, (span, entry) in enumerate(zip(sentence.spans, combo)):
        deps = deps_by_span.get(span_i) or DependencySet(span=span)
        noun = sentence.token(span.noun_token)
        changes.append(
            Change(noun.index, noun.surface, _match_case(noun.surface, entry.collective_form),
                   "collective_noun")
        )
        span_has_det = False
        for item in deps.items:
            if item.in_next_sentence:
                warnings.append(
                    f"token {item.index} in following sentence needs agreement "
                    f"({item.role}); not rewritten here"
                )
                continue
            tok = sentence.token(item.index)
            if item.role == "determiner":
                span_has_det = True
                mwt = sentence.mwt_covering(tok.index)
                det_surface = mwt.surface if mwt is not None else tok.surface
                det_lemma = "le" if mwt is not None else tok.lemma
                repl, warning = map_determiner(det_surface, entry, apostrophe, det_lemma)
                if warning:
                    warnings.append(f"token {tok.index}: {warning}")
                if repl is not None and repl != det_surface:
                    changes.append(Change(tok.index, det_surface, repl, item.role))
                elif repl is None:
                    misses.append((tok.index, f"{item.role}: unmapped {det_surface!r}"))
            elif item.role in ("adjective", "past_participle"):
                hint = "adj" if item.role == "adjective" else "verb"
                vf_hint = "ppart" if item.role == "past_participle" else ""
                out = lexicon.reinflect(
                    tok.surface.lower(), gender=entry.cn_gender, number=entry.cn_number,
                    pos_hint=hint, verbform_hint=vf_hint,
                )
                if out.missed:
                    # miss reasons carry the role so accuracy is measurable
                    # per category downstream
                    misses.append((tok.index, f"{item.role}: {out.reason or 'inflection miss'}"))
                elif out.text != tok.surface.lower():
                    changes.append(
                        Change(tok.index, tok.surface, _match_case(tok.surface, out.text),
                               item.role)
                    )
            elif item.role == "finite_verb":
                out = lexicon.reinflect(
                    tok.surface.lower(), number=entry.cn_number,
                    pos_hint="verb", verbform_hint="fin",
                )
                if out.missed:
                    misses.append((tok.index, f"{item.role}: {out.reason or 'inflection miss'}"))
                elif out.text != tok.surface.lower():
                    changes.append(
                        Change(tok.index, tok.surface, _match_case(tok.surface, out.text),
                               item.role)
                    )
            elif item.role == "possessive_determiner":
                head = sentence.token(tok.head) if tok.head else None
                repl = map_possessive(
                    tok.surface,
                    head.features.gender if head else "",
                    _starts_with_vowel(head.surface) if head else False,
                    head.features.number if head else "",
                )
                if repl is None:
                    misses.append((tok.index, f"{item.role}: unmapped {tok.surface!r}"))
                elif repl != tok.surface:
                    changes.append(Change(tok.index, tok.surface, repl, item.role))
            elif item.role in ("coref_pronoun", "object_pronoun"):
                repl = map_pronoun(
                    tok.surface, tok.deprel, entry, _next_word(sentence, tok.index), apostrophe
                )
                if repl is None:
                    misses.append((tok.index, f"{item.role}: unmapped {tok.surface!r}"))
                elif repl != tok.surface:
                    changes.append(Change(tok.index, tok.surface, repl, item.role))
        if not span_has_det:
            warnings.append(
                f"span at token {span.noun_token}: no determiner to adjust (bare noun)"
            )
        warnings.extend(deps.warnings)

    for c in changes:
        replaced_piece[c.token_index] = c.after
    text = _render(sentence, replaced_piece)
    unchanged = text == sentence.text
    return RewriteResult(
        variant_entry_id=tuple(e.id for e in combo),
        text=text,
        changes=[] if unchanged else changes,
        inflection_misses=misses,
        warnings=warnings,
        unchanged=unchanged,
    )


def _next_word(sentence: AnnotatedSentence, index: int) -> str | None:
    for tok in sentence.tokens[index:]:
        if tok.upos != "PUNCT":
            return tok.surface
    return None


def _render(sentence: AnnotatedSentence, replacements: dict[int, str]) -> str:
    """Detokenize with per-token surface replacements.

    A replacement ending in an apostrophe binds to the next word (elision);
    everything else keeps the source whitespace.
    """
    pieces = _surface_pieces(sentence)
    out: list[str] = []
    for i, (first, last, surface, space) in enumerate(pieces):
        new = None
        for idx in range(first, last + 1):
            if idx in replacements:
                new = replacements[idx]
                break
        surface_out = new if new is not None else surface
        if i == len(pieces) - 1:
            space_out = ""
        elif new is not None and new.endswith(("'", "’")):
            space_out = ""
        else:
            space_out = space
        out.append(surface_out + space_out)
    return "".join(out)


def detokenize(sentence: AnnotatedSentence, changes: list[Change]) -> str:
    """Surface string for a sentence with a set of changes applied."""
    return _render(sentence, {c.token_index: c.after for c in changes})
