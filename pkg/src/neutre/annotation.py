"""Annotated sentences: CoNLL-U ingestion and member-span binding.

Sentences arrive as 10-column CoNLL-U blocks (``# text`` comment mandatory,
multiword-token ranges preserved). Member-noun spans arrive as a parallel
tagged-text line where ``<n-ID[,ID...]>`` ... ``</n>`` wraps each member
phrase; binding maps the character spans onto token indices.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .dictionary import CnDictionary
from .morphology import MorphFeatures

TAG_RE = re.compile(r"<n-(\d+(?:,\d+)*)>|</n>")


class ConlluError(Exception):
    """Malformed CoNLL-U input."""


class SpanBindingError(Exception):
    """Tagged text does not bind onto the sentence."""


@dataclass(frozen=True)
class Token:
    index: int  # 1-based
    surface: str
    lemma: str
    upos: str
    features: MorphFeatures
    head: int  # 0 = root
    deprel: str
    space_after: str | None  # None when covered by a multiword token
    misc: str = "_"


@dataclass(frozen=True)
class MultiwordToken:
    start: int
    end: int
    surface: str
    space_after: str


@dataclass(frozen=True)
class MemberSpan:
    entry_ids: tuple[int, ...]
    start_token: int
    end_token: int
    noun_token: int


@dataclass
class AnnotatedSentence:
    tokens: list[Token]
    mwts: list[MultiwordToken] = field(default_factory=list)
    spans: list[MemberSpan] = field(default_factory=list)
    source_id: str = ""
    text: str = ""

    def token(self, index: int) -> Token:
        return self.tokens[index - 1]

    def children(self, head: int) -> list[Token]:
        return [t for t in self.tokens if t.head == head]

    def mwt_covering(self, index: int) -> MultiwordToken | None:
        for m in self.mwts:
            if m.start <= index <= m.end:
                return m
        return None


_FEAT_MAP_GENDER = {"Masc": "m", "Fem": "f"}
_FEAT_MAP_NUMBER = {"Sing": "sg", "Plur": "pl"}
_FEAT_MAP_VERBFORM = {"Fin": "fin", "Part": "ppart", "Inf": "inf", "Ger": "pprs"}
_UPOS_POS = {
    "NOUN": "noun",
    "PROPN": "noun",
    "ADJ": "adj",
    "VERB": "verb",
    "AUX": "verb",
    "DET": "det",
    "PRON": "pron",
}
_TENSE_MOOD = {
    ("Ind", "Pres"): "pres",
    ("Ind", "Imp"): "impf",
    ("Ind", "Fut"): "fut",
    ("Ind", "Past"): "ps",
    ("Cnd", "Pres"): "cond",
    ("Sub", "Pres"): "subj",
}


def features_from_conllu(upos: str, feats: str) -> MorphFeatures:
    """Map a CoNLL-U FEATS string into lexicon feature space."""
    parsed: dict[str, str] = {}
    if feats and feats != "_":
        for item in feats.split("|"):
            if "=" in item:
                k, v = item.split("=", 1)
                parsed[k] = v
    verbform = _FEAT_MAP_VERBFORM.get(parsed.get("VerbForm", ""), "")
    tense_mood = ""
    if verbform == "fin":
        tense_mood = _TENSE_MOOD.get((parsed.get("Mood", "Ind"), parsed.get("Tense", "")), "")
    elif verbform == "ppart":
        pass  # past participles carry gender/number only
    return MorphFeatures(
        pos=_UPOS_POS.get(upos, "other"),
        gender=_FEAT_MAP_GENDER.get(parsed.get("Gender", ""), ""),
        number=_FEAT_MAP_NUMBER.get(parsed.get("Number", ""), ""),
        person=parsed.get("Person", ""),
        verbform=verbform,
        tense_mood=tense_mood,
    )


def _space_after(misc: str) -> str:
    if misc and misc != "_":
        for item in misc.split("|"):
            if item == "SpaceAfter=No":
                return ""
            if item.startswith("SpacesAfter="):
                return (
                    item.split("=", 1)[1]
                    .replace("\\s", " ")
                    .replace("\\t", "\t")
                    .replace("\\n", "\n")
                )
    return " "


def parse_conllu(block: str, source_id: str = "") -> AnnotatedSentence:
    """Parse one CoNLL-U sentence block.

    Raises:
        ConlluError: wrong column count, bad indices, missing ``# text``, or
            a ``# text`` that the tokens do not detokenize back to.
    """
    lines = [ln for ln in block.splitlines() if ln.strip()]
    if not lines:
        raise ConlluError("empty CoNLL-U block")
    text = ""
    sent_id = source_id
    tokens: list[Token] = []
    mwts: list[MultiwordToken] = []
    for lineno, line in enumerate(lines, start=1):
        if line.startswith("#"):
            if line.startswith("# text ="):
                text = line[len("# text =") :].strip()
            elif line.startswith("# sent_id ="):
                sent_id = line[len("# sent_id =") :].strip()
            continue
        cols = line.split("\t")
        if len(cols) != 10:
            raise ConlluError(f"line {lineno}: expected 10 columns, got {len(cols)}")
        ident, form, lemma, upos, _xpos, feats, head, deprel, _deps, misc = cols
        if "-" in ident:
            start_s, end_s = ident.split("-", 1)
            try:
                start, end = int(start_s), int(end_s)
            except ValueError:
                raise ConlluError(f"line {lineno}: bad multiword range {ident!r}") from None
            mwts.append(MultiwordToken(start, end, form, _space_after(misc)))
            continue
        if "." in ident:
            continue  # empty nodes (enhanced deps) are not addressable tokens
        try:
            index = int(ident)
            head_i = int(head)
        except ValueError:
            raise ConlluError(f"line {lineno}: non-integer index or head") from None
        tokens.append(
            Token(
                index=index,
                surface=form,
                lemma=lemma,
                upos=upos,
                features=features_from_conllu(upos, feats),
                head=head_i,
                deprel=deprel,
                space_after=_space_after(misc),
                misc=misc,
            )
        )
    if not tokens:
        raise ConlluError("block has no token lines")
    if not text:
        raise ConlluError("missing mandatory '# text' comment")
    for pos, tok in enumerate(tokens, start=1):
        if tok.index != pos:
            raise ConlluError(f"token indices not contiguous at {tok.index}")
        if not (0 <= tok.head <= len(tokens)):
            raise ConlluError(f"token {tok.index}: head {tok.head} out of range")
        if tok.head == tok.index:
            raise ConlluError(f"token {tok.index}: token is its own head")
    for m in mwts:
        if not (1 <= m.start <= m.end <= len(tokens)):
            raise ConlluError(f"multiword range {m.start}-{m.end} out of bounds")
    sent = AnnotatedSentence(tokens=tokens, mwts=mwts, source_id=sent_id, text=text)
    rebuilt = detokenize_sentence(sent)
    if rebuilt != text:
        raise ConlluError(
            f"tokens detokenize to {rebuilt!r}, but '# text' says {text!r}"
        )
    return sent


def iter_conllu(stream) -> "list[AnnotatedSentence]":
    """Split a CoNLL-U file object or string into parsed sentences."""
    data = stream if isinstance(stream, str) else stream.read()
    sentences = []
    for i, block in enumerate(re.split(r"\n\s*\n", data)):
        if block.strip():
            sentences.append(parse_conllu(block, source_id=f"s{i + 1}"))
    return sentences


def detokenize_sentence(sentence: AnnotatedSentence) -> str:
    """Rebuild surface text from tokens, honoring multiword tokens and
    recorded whitespace. Byte-exact against the source ``# text``."""
    out: list[str] = []
    covered = {m.start: m for m in sentence.mwts}
    skip_until = 0
    for tok in sentence.tokens:
        if tok.index <= skip_until:
            continue
        m = covered.get(tok.index)
        if m is not None:
            out.append(m.surface + m.space_after)
            skip_until = m.end
        else:
            space = tok.space_after if tok.space_after is not None else " "
            out.append(tok.surface + space)
    return "".join(out).rstrip(" ")


def _surface_pieces(sentence: AnnotatedSentence) -> list[tuple[int, int, str, str]]:
    """(first_token, last_token, surface, space_after) in surface order."""
    pieces = []
    covered = {m.start: m for m in sentence.mwts}
    skip_until = 0
    for tok in sentence.tokens:
        if tok.index <= skip_until:
            continue
        m = covered.get(tok.index)
        if m is not None:
            pieces.append((m.start, m.end, m.surface, m.space_after))
            skip_until = m.end
        else:
            space = tok.space_after if tok.space_after is not None else " "
            pieces.append((tok.index, tok.index, tok.surface, space))
    return pieces


def strip_tags(tagged_text: str) -> str:
    return TAG_RE.sub("", tagged_text)


def bind_spans(
    sentence: AnnotatedSentence, tagged_text: str, dictionary: CnDictionary
) -> AnnotatedSentence:
    """Attach ``<n-ID>`` span tags to token indices.

    The tagged text must equal the sentence's detokenization once tags are
    stripped. Returns a new sentence object; tokens are never altered.

    Raises:
        SpanBindingError: unbalanced tags, unknown entry id, tag boundary
            splitting a token, or overlapping spans.
    """
    if strip_tags(tagged_text) != detokenize_sentence(sentence):
        raise SpanBindingError(
            "tagged text does not match sentence text once tags are stripped"
        )
    events = []  # (char_offset_in_plain_text, kind, ids)
    plain_pos = 0
    last_end = 0
    for m in TAG_RE.finditer(tagged_text):
        plain_pos += m.start() - last_end
        last_end = m.end()
        if m.group(1):
            events.append((plain_pos, "open", tuple(int(i) for i in m.group(1).split(","))))
        else:
            events.append((plain_pos, "close", ()))

    # char offset -> token index at piece starts/ends
    starts: dict[int, int] = {}
    ends: dict[int, int] = {}
    offset = 0
    pieces = _surface_pieces(sentence)
    for i, (first, last, surface, space) in enumerate(pieces):
        starts[offset] = first
        ends[offset + len(surface)] = last
        offset += len(surface) + (len(space) if i < len(pieces) - 1 else 0)

    spans: list[MemberSpan] = []
    open_at: int | None = None
    open_ids: tuple[int, ...] = ()
    for pos, kind, ids in events:
        if kind == "open":
            if open_at is not None:
                raise SpanBindingError("nested or unbalanced '<n-...>' tags")
            if pos not in starts:
                raise SpanBindingError(f"tag at offset {pos} does not start a token")
            open_at, open_ids = starts[pos], ids
        else:
            if open_at is None:
                raise SpanBindingError("'</n>' with no matching opening tag")
            if pos not in ends:
                raise SpanBindingError(f"closing tag at offset {pos} splits a token")
            spans.append(_make_span(sentence, open_ids, open_at, ends[pos], dictionary))
            open_at = None
    if open_at is not None:
        raise SpanBindingError("unclosed '<n-...>' tag")
    spans.sort(key=lambda s: s.start_token)
    for a, b in zip(spans, spans[1:]):
        if b.start_token <= a.end_token:
            raise SpanBindingError(
                f"overlapping member spans at tokens {a.start_token}-{a.end_token}"
                f" and {b.start_token}-{b.end_token}"
            )
    return replace_spans(sentence, spans)


def _make_span(
    sentence: AnnotatedSentence,
    ids: tuple[int, ...],
    start: int,
    end: int,
    dictionary: CnDictionary,
) -> MemberSpan:
    member_forms = set()
    for entry_id in ids:
        try:
            member_forms.add(dictionary.entry_by_id(entry_id).member_plural_form)
        except KeyError:
            raise SpanBindingError(f"span references unknown dictionary id {entry_id}") from None
    noun = None
    # the token carrying the member surface form wins even when the parser
    # tagged it as something else (misidentified adjective readings)
    for tok in sentence.tokens[start - 1 : end]:
        folded = tok.surface[:1].lower() + tok.surface[1:]
        if folded in member_forms:
            noun = tok.index
    if noun is None:
        for tok in sentence.tokens[start - 1 : end]:
            if tok.upos == "NOUN":
                noun = tok.index
    if noun is None:
        raise SpanBindingError(f"span {start}-{end} contains no member noun token")
    return MemberSpan(entry_ids=ids, start_token=start, end_token=end, noun_token=noun)


def replace_spans(sentence: AnnotatedSentence, spans: list[MemberSpan]) -> AnnotatedSentence:
    return AnnotatedSentence(
        tokens=sentence.tokens,
        mwts=sentence.mwts,
        spans=spans,
        source_id=sentence.source_id,
        text=sentence.text,
    )


def spans_from_misc(
    sentence: AnnotatedSentence, dictionary: CnDictionary
) -> AnnotatedSentence:
    """Alternative span input: a ``CnIds=ID[,ID...]`` item in the member
    noun's MISC column. The span extends left to the noun's own determiner
    when one precedes it, mirroring the tagged-text phrase extent."""
    spans = []
    for tok in sentence.tokens:
        if not tok.misc or tok.misc == "_":
            continue
        for item in tok.misc.split("|"):
            if not item.startswith("CnIds="):
                continue
            ids = tuple(int(i) for i in item[len("CnIds="):].split(",") if i)
            start = tok.index
            for child in sentence.children(tok.index):
                if child.deprel in ("det", "det:poss") and child.index < tok.index:
                    start = min(start, child.index)
            spans.append(_make_span(sentence, ids, start, tok.index, dictionary))
    spans.sort(key=lambda s: s.start_token)
    for a, b in zip(spans, spans[1:]):
        if b.start_token <= a.end_token:
            raise SpanBindingError("overlapping member spans in MISC annotations")
    return replace_spans(sentence, spans)
