"""Collective-noun / member-noun dictionary: loading, validation and lookup.

The dictionary is a TSV file with one row per (collective, member) pairing:

    id	collective	cn_gender	cn_number	member_plural	member_lemma	elision	notes

A member noun may appear in several rows (several collective counterparts);
``lookup_member`` returns them in file order.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field

HEADER = [
    "id",
    "collective",
    "cn_gender",
    "cn_number",
    "member_plural",
    "member_lemma",
    "elision",
    "notes",
]

ELISION_VOWELS = ("a", "e", "i", "o", "u", "é", "è", "ê")

# Mute-h collectives take elision ("l'humanité"); aspirated-h ones do not
# ("la horde"). Exact word list, extended as entries are added.
MUTE_H_COLLECTIVES = {
    "humanité",
    "hôtellerie",
}


class DictionaryError(Exception):
    """Raised when the dictionary file is malformed or inconsistent."""


class UnknownEntryError(KeyError):
    """Raised for an id with no dictionary entry."""

    def __init__(self, entry_id: int):
        super().__init__(entry_id)
        self.entry_id = entry_id

    def __str__(self) -> str:
        return f"no dictionary entry with id {self.entry_id}"


@dataclass(frozen=True)
class CnEntry:
    """One collective-noun sense paired with its member noun."""

    id: int
    collective_form: str
    cn_gender: str  # "m" | "f"
    cn_number: str  # "sg" | "pl"
    member_plural_form: str
    member_lemma: str
    elision_onset: bool
    notes: str = ""


@dataclass
class CnDictionary:
    entries: dict[int, CnEntry] = field(default_factory=dict)
    member_index: dict[str, list[int]] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries.values())

    def entry_by_id(self, entry_id: int) -> CnEntry:
        try:
            return self.entries[entry_id]
        except KeyError:
            raise UnknownEntryError(entry_id) from None

    def lookup_member(self, form: str) -> list[CnEntry]:
        """All entries whose member plural form equals ``form``.

        The input is NFC-normalized and its first character case-folded, so
        sentence-initial capitalized nouns ("Soldats") match. Returns [] for
        forms absent from the dictionary; order follows the file.
        """
        key = _fold_first(unicodedata.normalize("NFC", form))
        return [self.entries[i] for i in self.member_index.get(key, [])]

    def member_forms(self) -> list[str]:
        """Member plural forms in first-occurrence order."""
        return list(self.member_index)


def _fold_first(s: str) -> str:
    return s[:1].lower() + s[1:] if s else s


def expected_elision(collective: str) -> bool:
    """Whether a collective form should carry the elision flag."""
    first = collective[:1].lower()
    if first in ELISION_VOWELS:
        return True
    if first == "h":
        return collective.lower() in MUTE_H_COLLECTIVES
    return False


def load_dictionary(path) -> CnDictionary:
    """Load and validate the dictionary TSV.

    Raises:
        DictionaryError: empty file, bad header, malformed row (wrong column
            count, non-integer id, duplicate id, bad enum value, inconsistent
            elision flag), always naming the offending line number.
    """
    d = CnDictionary()
    with open(path, encoding="utf-8") as f:
        lines = f.read().splitlines()
    if not lines:
        raise DictionaryError(f"{path}: empty dictionary file")
    header = lines[0].split("\t")
    if header != HEADER:
        raise DictionaryError(f"{path}:1: bad header {header!r}")
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        cols = line.split("\t")
        if len(cols) != len(HEADER):
            raise DictionaryError(
                f"{path}:{lineno}: expected {len(HEADER)} columns, got {len(cols)}"
            )
        ident, collective, gender, number, member_pl, member_lemma, elision, notes = (
            unicodedata.normalize("NFC", c.strip()) for c in cols
        )
        try:
            entry_id = int(ident)
        except ValueError:
            raise DictionaryError(f"{path}:{lineno}: non-integer id {ident!r}") from None
        if entry_id <= 0:
            raise DictionaryError(f"{path}:{lineno}: id must be positive, got {entry_id}")
        if entry_id in d.entries:
            raise DictionaryError(f"{path}:{lineno}: duplicate id {entry_id}")
        if not collective or not member_pl:
            raise DictionaryError(f"{path}:{lineno}: empty collective or member form")
        if gender not in ("m", "f"):
            raise DictionaryError(f"{path}:{lineno}: cn_gender must be m or f, got {gender!r}")
        if number not in ("sg", "pl"):
            raise DictionaryError(f"{path}:{lineno}: cn_number must be sg or pl, got {number!r}")
        if elision not in ("0", "1"):
            raise DictionaryError(f"{path}:{lineno}: elision must be 0 or 1, got {elision!r}")
        if collective == member_pl:
            raise DictionaryError(
                f"{path}:{lineno}: collective equals member plural form {collective!r}"
            )
        elision_onset = elision == "1"
        if elision_onset != expected_elision(collective):
            raise DictionaryError(
                f"{path}:{lineno}: elision flag {elision} inconsistent with "
                f"onset of {collective!r}"
            )
        entry = CnEntry(
            id=entry_id,
            collective_form=collective,
            cn_gender=gender,
            cn_number=number,
            member_plural_form=member_pl,
            member_lemma=member_lemma,
            elision_onset=elision_onset,
            notes=notes,
        )
        d.entries[entry_id] = entry
        d.member_index.setdefault(member_pl, []).append(entry_id)
    if not d.entries:
        raise DictionaryError(f"{path}: dictionary has a header but no entries")
    return d


def dump_dictionary(d: CnDictionary, path) -> None:
    """Serialize back to TSV; load(dump(load(x))) is a fixed point."""
    with open(path, "w", encoding="utf-8") as f:
        f.write("\t".join(HEADER) + "\n")
        for entry in sorted(d.entries.values(), key=lambda e: e.id):
            f.write(
                "\t".join(
                    [
                        str(entry.id),
                        entry.collective_form,
                        entry.cn_gender,
                        entry.cn_number,
                        entry.member_plural_form,
                        entry.member_lemma,
                        "1" if entry.elision_onset else "0",
                        entry.notes,
                    ]
                )
                + "\n"
            )
