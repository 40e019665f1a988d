"""Verb data model: lexicon/nonce file parsing, vocabulary, example encoding.

File formats (UTF-8, tab-separated, one header row):

* lexicon: lemma_orth, stem_ipa (space-separated segments), past_ipa,
  regularity in {reg, irreg}, verb_class in {d,t,id,vc,vc_t,vc_d,ruck,
  weak,level,other}, celex_freq.  Dual-form verbs occupy two rows that
  share lemma_orth (regular reading first).
* nonce: verb_ipa, regular_past_ipa, irregular_past_ipa_1,
  irregular_past_ipa_2 (may be empty), human_ppro_reg, human_ppro_irr1,
  human_ppro_irr2, rating_reg, rating_irr1, rating_irr2.
* test set: one lemma_orth per line.
"""

from __future__ import annotations

import warnings
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from . import phonology
from .errors import DataError, UsageError


class LabelScheme(str, Enum):
    base = "base"
    label_reg = "label_reg"
    label_vc = "label_vc"
    label_2 = "label_2"


REGULARITY_TOKENS = ("reg", "irreg")

# verb-class label tokens as they appear in decoder outputs; the regular
# classes surface as "+d"-style suffix markers
CLASS_LABEL_TOKEN = {
    "d": "+d", "t": "+t", "id": "+ɪd",
    "vc": "vc", "vc_t": "vc+t", "vc_d": "vc+d",
    "ruck": "ruck", "weak": "weak", "level": "level", "other": "other",
}
CLASS_FROM_LABEL_TOKEN = {v: k for k, v in CLASS_LABEL_TOKEN.items()}


@dataclass(frozen=True)
class PastForm:
    form: tuple
    regularity: str          # "reg" | "irreg"
    verb_class: str
    freq: int                # per-reading corpus frequency


@dataclass(frozen=True)
class VerbEntry:
    lemma_orth: str
    stem: tuple
    pasts: tuple             # 1 or 2 PastForm records

    @property
    def celex_freq(self) -> int:
        return sum(p.freq for p in self.pasts)

    @property
    def is_ambiguous(self) -> bool:
        return len(self.pasts) == 2

    @property
    def regularities(self) -> set:
        return {p.regularity for p in self.pasts}

    def past_index(self, regularity: str) -> int | None:
        for i, p in enumerate(self.pasts):
            if p.regularity == regularity:
                return i
        return None

    @property
    def gold_forms(self) -> tuple:
        return tuple(p.form for p in self.pasts)


@dataclass(frozen=True)
class NonceVerb:
    stem: tuple
    reg_form: tuple
    irr_forms: tuple                    # 1 or 2 forms
    human_ppro: dict = field(default_factory=dict)    # "reg"/"irr1"/"irr2" -> float
    human_rating: dict = field(default_factory=dict)

    @property
    def key(self) -> str:
        return " ".join(self.stem)


@dataclass(frozen=True)
class LexiconSummary:
    """Counts in the published convention: dual-form verbs tally under
    their irregular reading's class."""

    n_verbs: int
    n_regular: int
    n_irregular: int
    n_ambiguous: int
    class_counts: dict


def _parse_segments(text: str, where: str):
    segs = tuple(text.split())
    if not segs:
        raise DataError(f"{where}: empty phoneme sequence")
    for s in segs:
        if not phonology.is_known(s):
            raise DataError(f"{where}: unknown phoneme {s!r}")
    return segs


def load_lexicon(path) -> list[VerbEntry]:
    """Parse and validate a lexicon TSV; entries keep file order by lemma."""
    path = Path(path)
    rows = []
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().rstrip("\n").split("\t")
        if header[:6] != ["lemma_orth", "stem_ipa", "past_ipa", "regularity", "verb_class", "celex_freq"]:
            raise DataError(f"{path}: unexpected lexicon header {header}")
        for lineno, line in enumerate(fh, start=2):
            line = line.rstrip("\n")
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 6:
                raise DataError(f"{path}:{lineno}: expected 6 fields, got {len(parts)}")
            lemma, stem_s, past_s, regularity, vclass, freq_s = parts
            where = f"{path}:{lineno}"
            if regularity not in ("reg", "irreg"):
                raise DataError(f"{where}: bad regularity {regularity!r}")
            if vclass not in phonology.VERB_CLASSES:
                raise DataError(f"{where}: bad verb_class {vclass!r}")
            stem = _parse_segments(stem_s, where)
            past = _parse_segments(past_s, where)
            try:
                freq = int(freq_s)
            except ValueError:
                raise DataError(f"{where}: bad celex_freq {freq_s!r}") from None
            if freq < 0:
                raise DataError(f"{where}: negative celex_freq")
            if regularity == "reg":
                if vclass not in phonology.REGULAR_CLASSES:
                    raise DataError(f"{where}: regular reading with irregular class {vclass!r}")
                if vclass != phonology.allomorph_for(stem):
                    raise DataError(f"{where}: class {vclass!r} does not match the stem-final conditioning")
                if past != phonology.regular_past(stem):
                    raise DataError(f"{where}: regular past is not stem + conditioned suffix")
            elif vclass in phonology.REGULAR_CLASSES:
                raise DataError(f"{where}: irregular reading with regular class {vclass!r}")
            rows.append((lemma, stem, PastForm(past, regularity, vclass, freq), lineno))

    entries = []
    by_lemma: dict[str, list] = {}
    order = []
    for lemma, stem, pf, lineno in rows:
        if lemma not in by_lemma:
            order.append(lemma)
        by_lemma.setdefault(lemma, []).append((stem, pf, lineno))
    for lemma in order:
        readings = by_lemma[lemma]
        if len(readings) > 2:
            raise DataError(f"{path}: verb {lemma!r} has {len(readings)} rows; at most 2 allowed")
        stems = {r[0] for r in readings}
        if len(stems) != 1:
            raise DataError(f"{path}: verb {lemma!r} rows disagree on the stem")
        if len(readings) == 2:
            regs = sorted(r[1].regularity for r in readings)
            if regs != ["irreg", "reg"]:
                raise DataError(f"{path}: dual-form verb {lemma!r} must have one regular and one irregular row")
        pasts = tuple(sorted((r[1] for r in readings), key=lambda p: p.regularity != "reg"))
        entries.append(VerbEntry(lemma_orth=lemma, stem=readings[0][0], pasts=pasts))
    return entries


def summarize(entries) -> LexiconSummary:
    cls = Counter()
    n_reg = n_irr = n_amb = 0
    for e in entries:
        if e.is_ambiguous:
            n_amb += 1
            cls[e.pasts[e.past_index("irreg")].verb_class] += 1
        elif e.pasts[0].regularity == "reg":
            n_reg += 1
            cls[e.pasts[0].verb_class] += 1
        else:
            n_irr += 1
            cls[e.pasts[0].verb_class] += 1
    return LexiconSummary(
        n_verbs=len(entries), n_regular=n_reg, n_irregular=n_irr,
        n_ambiguous=n_amb, class_counts=dict(cls),
    )


def load_test_set(path) -> list[str]:
    lemmas = [l.strip() for l in Path(path).read_text(encoding="utf-8").splitlines() if l.strip()]
    if len(set(lemmas)) != len(lemmas):
        raise DataError(f"{path}: duplicate lemmas in test set")
    return lemmas


def load_nonce(path) -> list[NonceVerb]:
    """Parse the nonce TSV; warns (does not fail) if the file is not the
    full 58-verb / 16-double inventory, since tests may use subsets."""
    path = Path(path)
    verbs = []
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().rstrip("\n").split("\t")
        if header[0] != "verb_ipa" or len(header) != 10:
            raise DataError(f"{path}: unexpected nonce header")
        for lineno, line in enumerate(fh, start=2):
            line = line.rstrip("\n")
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 10:
                raise DataError(f"{path}:{lineno}: expected 10 fields, got {len(parts)}")
            where = f"{path}:{lineno}"
            stem = _parse_segments(parts[0], where)
            reg_form = _parse_segments(parts[1], where)
            irr1 = _parse_segments(parts[2], where)
            irr_forms = [irr1]
            if parts[3].strip():
                irr_forms.append(_parse_segments(parts[3], where))
            forms = [reg_form] + irr_forms
            if len(set(forms)) != len(forms):
                raise DataError(f"{where}: past-tense forms are not distinct")
            ppro, rating = {}, {}
            for key, raw in zip(("reg", "irr1", "irr2"), parts[4:7]):
                if raw.strip():
                    v = float(raw)
                    if not 0.0 <= v <= 1.0:
                        raise DataError(f"{where}: production probability {key} out of [0,1]")
                    ppro[key] = v
            for key, raw in zip(("reg", "irr1", "irr2"), parts[7:10]):
                if raw.strip():
                    rating[key] = float(raw)
            verbs.append(NonceVerb(stem=stem, reg_form=reg_form,
                                   irr_forms=tuple(irr_forms),
                                   human_ppro=ppro, human_rating=rating))
    n_double = sum(1 for v in verbs if len(v.irr_forms) == 2)
    if (len(verbs), n_double) != (58, 16):
        warnings.warn(
            f"{path}: expected 58 nonce verbs with 16 doubles, found {len(verbs)}/{n_double} "
            "(fine for subset files)",
            stacklevel=2,
        )
    return verbs


# ---------------------------------------------------------------------------
# vocabulary
# ---------------------------------------------------------------------------

PAD, START, END = "<pad>", "<s>", "</s>"


class Vocab:
    """Bidirectional token map with reserved ids 0/1/2 for Pad/Start/End."""

    def __init__(self, tokens):
        self.tokens = list(tokens)
        self.ids = {t: i for i, t in enumerate(self.tokens)}
        if len(self.ids) != len(self.tokens):
            raise DataError("vocabulary tokens are not unique")
        if self.tokens[:3] != [PAD, START, END]:
            raise DataError("vocabulary must start with Pad, Start, End")

    def __len__(self):
        return len(self.tokens)

    def __contains__(self, token):
        return token in self.ids

    @property
    def pad_id(self):
        return 0

    @property
    def start_id(self):
        return 1

    @property
    def end_id(self):
        return 2

    def encode(self, token: str) -> int:
        try:
            return self.ids[token]
        except KeyError:
            raise DataError(f"token {token!r} not in vocabulary") from None

    def encode_all(self, tokens) -> list:
        return [self.encode(t) for t in tokens]

    def decode(self, idx: int) -> str:
        if not 0 <= idx < len(self.tokens):
            raise DataError(f"token id {idx} out of range")
        return self.tokens[idx]

    def decode_all(self, ids) -> list:
        return [self.decode(i) for i in ids]


def label_tokens_for(scheme: LabelScheme) -> list:
    scheme = LabelScheme(scheme)
    if scheme == LabelScheme.base:
        return []
    if scheme == LabelScheme.label_reg:
        return list(REGULARITY_TOKENS)
    class_tokens = [CLASS_LABEL_TOKEN[c] for c in phonology.VERB_CLASSES]
    if scheme == LabelScheme.label_vc:
        return class_tokens
    return list(REGULARITY_TOKENS) + class_tokens


def build_vocab(entries, schemes=(LabelScheme.label_2,)) -> Vocab:
    """Reserved tokens, then label tokens for the requested schemes, then
    every phoneme of the lexicon sorted by codepoint."""
    labels = []
    for scheme in schemes:
        for t in label_tokens_for(scheme):
            if t not in labels:
                labels.append(t)
    phonemes = set()
    for e in entries:
        phonemes.update(e.stem)
        for p in e.pasts:
            phonemes.update(p.form)
    return Vocab([PAD, START, END] + labels + sorted(phonemes))


def encode_example(entry: VerbEntry, past_index: int, scheme: LabelScheme, vocab: Vocab):
    """(input ids, target ids) for one verb reading under a label scheme."""
    scheme = LabelScheme(scheme)
    past = entry.pasts[past_index]
    src = [START, *entry.stem, END]
    labels = []
    if scheme in (LabelScheme.label_reg, LabelScheme.label_2):
        labels.append(past.regularity)
    if scheme in (LabelScheme.label_vc, LabelScheme.label_2):
        labels.append(CLASS_LABEL_TOKEN[past.verb_class])
    tgt = [START, *labels, *past.form, END]
    return vocab.encode_all(src), vocab.encode_all(tgt)


def n_label_positions(scheme: LabelScheme) -> int:
    return {LabelScheme.base: 0, LabelScheme.label_reg: 1,
            LabelScheme.label_vc: 1, LabelScheme.label_2: 2}[LabelScheme(scheme)]


def gold_label_tokens(entry: VerbEntry, past_index: int, scheme: LabelScheme) -> list:
    """The label tokens a correctly-labelled output would carry."""
    scheme = LabelScheme(scheme)
    if scheme == LabelScheme.base:
        raise UsageError("the base scheme emits no labels")
    past = entry.pasts[past_index]
    out = []
    if scheme in (LabelScheme.label_reg, LabelScheme.label_2):
        out.append(past.regularity)
    if scheme in (LabelScheme.label_vc, LabelScheme.label_2):
        out.append(CLASS_LABEL_TOKEN[past.verb_class])
    return out
