"""Detection of the tokens that must be re-inflected with a member noun.

Given a sentence and a bound member span, ``detect`` walks the dependency
tree and collects every word whose form depends on the member noun's gender
or number: its determiner, agreeing adjectives and participles, the finite
verb it governs as subject, coreferent possessives and pronouns. Each rule
can be switched off individually for ablation. ``detect_baseline`` returns
the noun's raw dependents (children) instead, punctuation excluded, and only
exists as the evaluation baseline.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .annotation import AnnotatedSentence, MemberSpan, Token

ROLES = (
    "determiner",
    "adjective",
    "past_participle",
    "finite_verb",
    "coref_pronoun",
    "possessive_determiner",
    "object_pronoun",
)

DEFAULT_RULES = (
    "determiner",
    "adjective",
    "subject_verb",
    "copula",
    "relative_clause",
    "possessive",
    "coreference",
    "coordination_guard",
)

SUBJECT_PRONOUNS = {"ils", "elles"}
OBJECT_PRONOUNS = {"les", "leur", "eux"}


@dataclass(frozen=True)
class DepItem:
    index: int
    role: str
    in_next_sentence: bool = False


@dataclass
class DependencySet:
    span: MemberSpan
    items: list[DepItem] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def indices(self) -> set[int]:
        return {i.index for i in self.items if not i.in_next_sentence}

    def add(self, index: int, role: str, in_next: bool = False) -> None:
        if any(i.index == index and i.in_next_sentence == in_next for i in self.items):
            return
        self.items.append(DepItem(index, role, in_next))


def _is_past_participle(tok: Token) -> bool:
    return tok.upos in ("VERB", "AUX", "ADJ") and tok.features.verbform == "ppart"


def _is_finite(tok: Token) -> bool:
    return tok.upos in ("VERB", "AUX") and tok.features.verbform == "fin"


def _in_other_span(sentence: AnnotatedSentence, span: MemberSpan, index: int) -> bool:
    for other in sentence.spans:
        if other is span:
            continue
        if other.start_token <= index <= other.end_token:
            return True
    return False


def _noun_in_coordination(sentence: AnnotatedSentence, noun: Token) -> bool:
    if noun.deprel == "conj":
        return True
    return any(
        c.deprel == "conj" and c.upos in ("NOUN", "PROPN", "PRON")
        for c in sentence.children(noun.index)
    )


def detect(
    sentence: AnnotatedSentence,
    span: MemberSpan,
    next_sentence: AnnotatedSentence | None = None,
    rules: tuple[str, ...] = DEFAULT_RULES,
) -> DependencySet:
    """Collect the agreement targets of a member span.

    Deterministic; ambiguity resolves to the nearest candidate and, when in
    doubt, to the smaller set (precision over recall). Items flagged
    ``in_next_sentence`` refer to ``next_sentence`` token indices. A
    structure the rules cannot walk degrades to the noun's direct
    dependents instead of failing.
    """
    try:
        return _detect_rules(sentence, span, next_sentence, rules)
    except Exception as err:  # fallback, never fatal
        deps = DependencySet(span=span)
        for c in sentence.children(span.noun_token):
            if c.upos != "PUNCT":
                deps.add(c.index, _baseline_role(c))
        deps.warnings.append(f"rule walk failed ({err}); direct dependents kept")
        deps.items.sort(key=lambda i: i.index)
        return deps


def _detect_rules(
    sentence: AnnotatedSentence,
    span: MemberSpan,
    next_sentence: AnnotatedSentence | None,
    rules: tuple[str, ...],
) -> DependencySet:
    noun = sentence.token(span.noun_token)
    deps = DependencySet(span=span)
    active = set(rules)
    children = sentence.children(noun.index)

    coordinated = "coordination_guard" in active and _noun_in_coordination(sentence, noun)
    if coordinated:
        deps.warnings.append(
            f"token {noun.index}: coordinated subject, verb agreement kept plural"
        )

    if "determiner" in active:
        for c in children:
            if c.deprel in ("det", "det:poss"):
                deps.add(c.index, "determiner")

    if "adjective" in active:
        for c in children:
            if c.deprel == "amod" and c.upos == "ADJ":
                deps.add(c.index, "adjective")
            elif c.deprel.startswith("acl") and not c.deprel.startswith("acl:relcl"):
                if _is_past_participle(c):
                    deps.add(c.index, "past_participle")

    if "subject_verb" in active and not coordinated:
        if noun.deprel in ("nsubj", "nsubj:pass") and noun.head > 0:
            _mark_predicate(sentence, deps, sentence.token(noun.head), noun.deprel)

    if "copula" in active and not coordinated:
        if noun.deprel in ("nsubj", "nsubj:pass") and noun.head > 0:
            pred = sentence.token(noun.head)
            has_cop = any(c.deprel == "cop" for c in sentence.children(pred.index))
            if has_cop:
                for c in sentence.children(pred.index):
                    if c.deprel == "cop" and _is_finite(c):
                        deps.add(c.index, "finite_verb")
                if pred.upos == "ADJ" or _is_past_participle(pred):
                    role = "past_participle" if _is_past_participle(pred) else "adjective"
                    deps.add(pred.index, role)

    if "relative_clause" in active:
        for c in children:
            if c.deprel == "acl:relcl":
                rel_subjects = [
                    g
                    for g in sentence.children(c.index)
                    if g.deprel in ("nsubj", "nsubj:pass")
                    and g.upos == "PRON"
                    and g.lemma in ("qui", "lequel")
                ]
                if rel_subjects:
                    _mark_predicate(sentence, deps, c, rel_subjects[0].deprel)

    # misidentified spans (parser calls the member form ADJ or VERB) get no
    # coreference treatment: an adjective has no coreferent pronouns
    if "possessive" in active and noun.upos == "NOUN":
        _mark_possessives(sentence, deps, noun, span)

    if "coreference" in active and noun.upos == "NOUN":
        _mark_coreferent_pronouns(sentence, deps, noun, span, next_sentence)

    deps.items = [
        i
        for i in deps.items
        if i.in_next_sentence
        or (
            i.index != span.noun_token
            and not _in_other_span(sentence, span, i.index)
            and sentence.token(i.index).upos != "PUNCT"
        )
    ]
    deps.items.sort(key=lambda i: (i.in_next_sentence, i.index))
    return deps


def _mark_predicate(
    sentence: AnnotatedSentence, deps: DependencySet, verb: Token, subj_rel: str
) -> None:
    """Mark a verbal head for agreement: the finite element always, the past
    participle only where French agrees it with the subject (être chains and
    passives, never avoir)."""
    if any(c.deprel == "cop" for c in sentence.children(verb.index)):
        return  # copular predicates are handled by the copula rule
    auxes = [c for c in sentence.children(verb.index) if c.deprel.startswith("aux")]
    if _is_finite(verb):
        deps.add(verb.index, "finite_verb")
    for aux in auxes:
        if _is_finite(aux):
            deps.add(aux.index, "finite_verb")
    if _is_past_participle(verb):
        agrees = (
            subj_rel == "nsubj:pass"
            or any(c.deprel == "aux:pass" for c in sentence.children(verb.index))
            or any(a.lemma == "être" for a in auxes)
        )
        if agrees:
            deps.add(verb.index, "past_participle")


def _mark_possessives(
    sentence: AnnotatedSentence, deps: DependencySet, noun: Token, span: MemberSpan
) -> None:
    """Rule 5: later third-person plural possessives (leur/leurs) whose
    possessor is the member noun; nearest candidate, blocked by any
    intervening plural noun."""
    for tok in sentence.tokens[noun.index :]:
        if tok.index <= span.end_token:
            continue
        if tok.upos == "NOUN" and tok.features.number == "pl":
            break  # a closer plural antecedent takes over
        if tok.deprel in ("det", "det:poss") and tok.lemma == "leur":
            deps.add(tok.index, "possessive_determiner")
            break


def _mark_coreferent_pronouns(
    sentence: AnnotatedSentence,
    deps: DependencySet,
    noun: Token,
    span: MemberSpan,
    next_sentence: AnnotatedSentence | None,
) -> None:
    """Rule 6: first subsequent third-person plural pronoun agreeing with the
    original (masculine plural) noun, in this or the following sentence, with
    no closer plural noun in between."""
    candidates: list[tuple[bool, Token]] = [
        (False, t) for t in sentence.tokens[noun.index :]
    ]
    if next_sentence is not None:
        candidates += [(True, t) for t in next_sentence.tokens]
    for in_next, tok in candidates:
        if not in_next and tok.index <= span.end_token:
            continue
        if tok.upos == "NOUN" and tok.features.number == "pl":
            return  # closer plural candidate antecedent: stay conservative
        if tok.upos != "PRON" or tok.features.person not in ("", "3"):
            continue
        if tok.features.number != "pl" and tok.surface.lower() not in ("leur",):
            continue
        if tok.features.gender == "f" and tok.surface.lower() != "elles":
            continue
        surface = tok.surface.lower()
        host = next_sentence if in_next else sentence
        if surface in SUBJECT_PRONOUNS and tok.deprel.startswith("nsubj"):
            deps.add(tok.index, "coref_pronoun", in_next)
            if not in_next and tok.head > 0:
                # the pronoun's own verb changes number with it
                _mark_predicate(host, deps, host.token(tok.head), tok.deprel)
            return
        if surface in OBJECT_PRONOUNS and (
            tok.deprel in ("obj", "iobj") or tok.deprel.startswith("obl")
        ):
            deps.add(tok.index, "object_pronoun", in_next)
            if not in_next and surface == "les" and tok.deprel == "obj" and tok.head > 0:
                head = host.token(tok.head)
                # avoir participles agree with a preceding object clitic
                if _is_past_participle(head):
                    deps.add(head.index, "past_participle")
            return


def detect_baseline(sentence: AnnotatedSentence, span: MemberSpan) -> DependencySet:
    """Parser-reported dependencies of the member noun, punctuation excluded.

    This is the noun's full dependency subtree (all descendants), the raw
    output an off-the-shelf parser hands you before any agreement filtering;
    it exists only as the evaluation baseline. Verbs governing the noun are
    outside the subtree, so the baseline always misses them."""
    deps = DependencySet(span=span)
    stack = [span.noun_token]
    seen = set()
    while stack:
        head = stack.pop()
        for c in sentence.children(head):
            if c.index in seen:
                continue
            seen.add(c.index)
            stack.append(c.index)
            if c.upos == "PUNCT":
                continue
            deps.add(c.index, _baseline_role(c))
    deps.items.sort(key=lambda i: i.index)
    return deps


def _baseline_role(tok: Token) -> str:
    if tok.deprel.startswith("det"):
        return "determiner"
    if tok.upos == "ADJ":
        return "adjective"
    if _is_past_participle(tok):
        return "past_participle"
    if _is_finite(tok):
        return "finite_verb"
    return "adjective"


def score_detection(
    predicted: DependencySet | set[int], gold: DependencySet | set[int]
) -> tuple[float, float, float]:
    """Precision/recall/F1 over token indices; roles are ignored."""
    p_idx = predicted.indices() if isinstance(predicted, DependencySet) else set(predicted)
    g_idx = gold.indices() if isinstance(gold, DependencySet) else set(gold)
    tp = len(p_idx & g_idx)
    precision = tp / len(p_idx) if p_idx else (1.0 if not g_idx else 0.0)
    recall = tp / len(g_idx) if g_idx else 1.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return precision, recall, f1


def score_corpus(
    predicted: list[set[int]], gold: list[set[int]]
) -> tuple[float, float, float]:
    """Micro-averaged detection scores over many spans."""
    if len(predicted) != len(gold):
        raise ValueError("prediction and gold lists differ in length")
    tp = sum(len(p & g) for p, g in zip(predicted, gold))
    n_pred = sum(len(p) for p in predicted)
    n_gold = sum(len(g) for g in gold)
    precision = tp / n_pred if n_pred else 1.0
    recall = tp / n_gold if n_gold else 1.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return precision, recall, f1
