"""Phoneme inventory, voicing table, and the regular past-tense rule.

The inventory is the fixed token alphabet of the whole lab: forty IPA
segments (diphthongs and affricates are single segments, as in the CMU
dictionary's phone set).  The voicing classification drives the
three-way allomorphy of the regular suffix:

* /ɪd/ after a stem-final /t/ or /d/,
* /t/  after any other voiceless consonant,
* /d/  after voiced segments (vowels and voiced consonants).
"""

from __future__ import annotations

from .errors import DataError

VOWELS = (
    "i", "ɪ", "ɛ", "æ", "ə", "ʌ", "ɑ", "ɔ", "ʊ", "u", "ɝ",
    "aɪ", "aʊ", "ɔɪ", "eɪ", "oʊ",
)
VOICED_CONSONANTS = ("b", "d", "g", "v", "ð", "z", "ʒ", "dʒ", "m", "n", "ŋ", "l", "r", "w", "j")
VOICELESS_CONSONANTS = ("p", "t", "k", "f", "θ", "s", "ʃ", "tʃ", "h")

INVENTORY = VOWELS + VOICED_CONSONANTS + VOICELESS_CONSONANTS

_VOWEL_SET = frozenset(VOWELS)
_VOICED_SET = frozenset(VOICED_CONSONANTS)
_VOICELESS_SET = frozenset(VOICELESS_CONSONANTS)

# the three regular allomorph classes, keyed as they appear in lexicon files
ALLOMORPH_SUFFIX = {"d": ("d",), "t": ("t",), "id": ("ɪ", "d")}

REGULAR_CLASSES = ("d", "t", "id")
IRREGULAR_CLASSES = ("vc", "vc_t", "vc_d", "ruck", "weak", "level", "other")
VERB_CLASSES = REGULAR_CLASSES + IRREGULAR_CLASSES


def is_vowel(seg: str) -> bool:
    return seg in _VOWEL_SET


def is_known(seg: str) -> bool:
    return seg in _VOWEL_SET or seg in _VOICED_SET or seg in _VOICELESS_SET


def allomorph_for(stem) -> str:
    """Regular-suffix class ('d', 't' or 'id') conditioned on the stem-final segment."""
    if not stem:
        raise DataError("allomorph_for: empty stem")
    final = stem[-1]
    if final in ("t", "d"):
        return "id"
    if final in _VOICELESS_SET:
        return "t"
    if final in _VOICED_SET or final in _VOWEL_SET:
        return "d"
    raise DataError(f"unknown voicing for final phoneme {final!r}")


def regular_past(stem) -> tuple:
    """Stem plus the conditioned regular suffix; never alters stem segments."""
    return tuple(stem) + ALLOMORPH_SUFFIX[allomorph_for(stem)]
