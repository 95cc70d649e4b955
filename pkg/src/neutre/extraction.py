"""Corpus scanning: find member nouns and emit tagged sentences.

Lines are matched with a token-boundary-aware regex over NFC text. When a
determiner directly precedes the member noun (adjectives may intervene), the
whole member phrase is wrapped: ``<n-ID[,ID...]>les jeunes auteurs</n>``;
otherwise the noun alone is tagged. Stripping tags always reproduces the
input line byte-exactly.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass, field

from .dictionary import CnDictionary

PHRASE_DETERMINERS = (
    "les", "des", "ces", "ses", "mes", "tes", "nos", "vos", "leurs", "aux",
    "quelques", "plusieurs",
)

_WORD = r"[a-zà-öø-ÿœ]+(?:-[a-zà-öø-ÿœ]+)*"


@dataclass
class ExtractConfig:
    max_per_entry: int | None = None
    require_pos: bool = False
    wrap_phrases: bool = True


@dataclass
class ExtractStats:
    lines_scanned: int = 0
    lines_kept: int = 0
    lines_skipped_undecodable: int = 0
    tags_emitted: int = 0
    misid_risk_tags: int = 0
    per_entry: dict[int, int] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "lines_scanned": self.lines_scanned,
            "lines_kept": self.lines_kept,
            "lines_skipped_undecodable": self.lines_skipped_undecodable,
            "tags_emitted": self.tags_emitted,
            "misid_risk_tags": self.misid_risk_tags,
            "per_entry": {str(k): v for k, v in sorted(self.per_entry.items())},
        }


def _first_upper_variant(word: str) -> str:
    return word[:1].upper() + word[1:]


def build_member_pattern(dictionary: CnDictionary, wrap_phrases: bool = True) -> re.Pattern:
    """One compiled alternation over every member plural form.

    Longer forms first so e.g. "francs-maçons" wins over a hypothetical
    shorter prefix entry. First-character case folding mirrors the
    dictionary lookup rule.
    """
    forms = sorted(dictionary.member_forms(), key=len, reverse=True)
    alts = []
    for form in forms:
        alts.append(re.escape(form))
        upper = _first_upper_variant(form)
        if upper != form:
            alts.append(re.escape(upper))
    members = "|".join(alts)
    dets = "|".join(
        [d for d in PHRASE_DETERMINERS] + [_first_upper_variant(d) for d in PHRASE_DETERMINERS]
    )
    # words that end a member phrase when they appear between the determiner
    # and the noun (a new article means a new phrase)
    blockers = dets + "|de|du|le|la|un|une|au"
    if wrap_phrases:
        # determiner + up to two intervening words (prenominal adjectives)
        # + member noun; greedy so "les jeunes soldats" stays one phrase
        pattern = (
            rf"(?:(?<![\w'’-])(?:{dets})\s+(?:(?!(?:{blockers})\s)(?:{_WORD})\s+){{0,2}})?"
            rf"(?<![\w'’-])({members})(?![\w-])"
        )
    else:
        pattern = rf"(?<![\w'’-])({members})(?![\w-])"
    return re.compile(pattern)


class Extractor:
    """Streaming member-noun tagger; constant memory, deterministic."""

    def __init__(self, dictionary: CnDictionary, config: ExtractConfig | None = None):
        self.dictionary = dictionary
        self.config = config or ExtractConfig()
        self.pattern = build_member_pattern(dictionary, self.config.wrap_phrases)
        self.stats = ExtractStats()
        self.ambiguous_forms = AMBIGUOUS_MEMBER_FORMS & set(dictionary.member_forms())

    def tag_line(self, line: str, pos_ok=None) -> str | None:
        """Tag one line; None when no member noun is found.

        ``pos_ok(member_form, char_offset)`` may veto a match (POS check
        against supplied annotations); vetoed matches are left untagged.
        """
        line = unicodedata.normalize("NFC", line)
        out = []
        last = 0
        n_tags = 0
        for m in self.pattern.finditer(line):
            member = m.group(1)
            folded = member[:1].lower() + member[1:]
            entries = self.dictionary.lookup_member(folded)
            if not entries:
                continue
            misid_risk = False
            if pos_ok is not None:
                if not pos_ok(folded, m.start(1)):
                    if self.config.require_pos:
                        continue
                    misid_risk = True
            elif folded in self.ambiguous_forms:
                misid_risk = True
            ids = [e.id for e in entries]
            if self.config.max_per_entry is not None:
                ids = [
                    i for i in ids
                    if self.stats.per_entry.get(i, 0) < self.config.max_per_entry
                ]
                if not ids:
                    continue
            for i in ids:
                self.stats.per_entry[i] = self.stats.per_entry.get(i, 0) + 1
            if misid_risk:
                self.stats.misid_risk_tags += 1
            id_str = ",".join(str(i) for i in ids)
            out.append(line[last : m.start()])
            out.append(f"<n-{id_str}>{m.group(0)}</n>")
            last = m.end()
            n_tags += 1
        if n_tags == 0:
            return None
        out.append(line[last:])
        self.stats.tags_emitted += n_tags
        return "".join(out)

    def extract(self, lines) -> "list[str]":
        """Tag an iterable of lines; returns the kept lines in input order."""
        kept = []
        for line in lines:
            self.stats.lines_scanned += 1
            if isinstance(line, bytes):
                try:
                    line = line.decode("utf-8")
                except UnicodeDecodeError:
                    self.stats.lines_skipped_undecodable += 1
                    continue
            tagged = self.tag_line(line.rstrip("\n"))
            if tagged is not None:
                self.stats.lines_kept += 1
                kept.append(tagged)
        return kept


# member forms that commonly double as adjectives or verbs; matches on these
# are counted as misidentification risks when no POS information is supplied
AMBIGUOUS_MEMBER_FORMS = {
    "jeunes",
    "nobles",
    "religieux",
    "proches",
    "vieux",
    "gardes",
    "pirates",
}
