"""Accuracy accounting, the deterministic error taxonomy, label accuracy,
and frequency-effect deltas.

The error classifier replaces manual linguistic annotation with a fixed
precedence procedure over five classes (double_suffix, classification,
inflection, copy, creative).  "Stem-preserving" throughout means the
consonant skeleton of the stem maps onto the output unchanged, i.e. a
minimum-cost alignment only ever edits vowels.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import ScoringError, UsageError
from .lexicon import VerbEntry
from .phonology import ALLOMORPH_SUFFIX, allomorph_for, is_vowel, regular_past

SUFFIXES = (("ɪ", "d"), ("d",), ("t",))  # longest first


class ErrorClass(str, Enum):
    classification = "classification"
    inflection = "inflection"
    copy = "copy"
    creative = "creative"
    double_suffix = "double_suffix"


@dataclass(frozen=True)
class Prediction:
    verb: VerbEntry
    predicted: tuple          # phoneme payload (labels already stripped)
    labels: tuple = ()
    malformed: bool = False
    seed: int = 0
    model_id: str = ""


def verb_regularity(verb: VerbEntry) -> str:
    """Grouping convention: dual-form verbs count as irregular, matching
    the published class table and the 60/20 test-set split."""
    return "irreg" if any(p.regularity == "irreg" for p in verb.pasts) else "reg"


def verb_group_class(verb: VerbEntry) -> str:
    for p in verb.pasts:
        if p.regularity == "irreg":
            return p.verb_class
    return verb.pasts[0].verb_class


def is_correct(pred: Prediction) -> bool:
    """Exact match against any listed gold past form."""
    if pred.malformed:
        return False
    return tuple(pred.predicted) in {tuple(f) for f in pred.verb.gold_forms}


# ---------------------------------------------------------------------------
# stem-preservation machinery
# ---------------------------------------------------------------------------


def _consonant_skeleton(seq):
    return tuple(s for s in seq if not is_vowel(s))


def _vowel_runs(seq):
    """Vowel subsequences between consecutive consonants (len(skel)+1 runs)."""
    runs, current = [], []
    for s in seq:
        if is_vowel(s):
            current.append(s)
        else:
            runs.append(tuple(current))
            current = []
    runs.append(tuple(current))
    return runs


def _levenshtein(a, b) -> int:
    m, n = len(a), len(b)
    prev = list(range(n + 1))
    for i in range(1, m + 1):
        cur = [i] + [0] * n
        for j in range(1, n + 1):
            cur[j] = min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] != b[j - 1]))
        prev = cur
    return prev[n]


def vowel_edit_cost(stem, seq):
    """Edit cost of an alignment that keeps every stem consonant in place
    and only substitutes/inserts/deletes vowels; None when the consonant
    skeletons differ (no such alignment exists)."""
    if _consonant_skeleton(stem) != _consonant_skeleton(seq):
        return None
    return sum(_levenshtein(a, b) for a, b in zip(_vowel_runs(stem), _vowel_runs(seq)))


def stem_preserving(stem, seq) -> bool:
    return vowel_edit_cost(stem, seq) is not None


def _strip_suffix(seq):
    """(base, suffix) for the longest trailing regular suffix, else None."""
    seq = tuple(seq)
    for suf in SUFFIXES:
        if len(seq) > len(suf) and seq[-len(suf):] == suf:
            return seq[: -len(suf)], suf
    return None


def _is_subsequence(short, long) -> bool:
    it = iter(long)
    return all(s in it for s in short)


# ---------------------------------------------------------------------------
# the classifier
# ---------------------------------------------------------------------------


def _double_suffix(stem, predicted) -> bool:
    first = _strip_suffix(predicted)
    if first is None:
        return False
    base1, _ = first
    second = _strip_suffix(base1)
    if second is not None and stem_preserving(stem, second[0]):
        return True
    # a vowel-changed base ending in /d/ or /t/ plus /ɪd/ carries two past
    # markings: the internal change and the suffix (abide -> /əbidɪd/)
    if predicted[-2:] == ("ɪ", "d"):
        base = predicted[:-2]
        if (base and base[-1] in ("d", "t") and base != tuple(stem)
                and stem_preserving(stem, base)):
            return True
    return False


def classify_error(verb: VerbEntry, predicted) -> ErrorClass:
    """Deterministic class for one incorrect prediction.

    Precedence: double_suffix first, then the regularity-specific clauses
    (classification, inflection, copy), with creative as the fallback.
    """
    stem = tuple(verb.stem)
    predicted = tuple(predicted)
    if _double_suffix(stem, predicted):
        return ErrorClass.double_suffix

    if verb_regularity(verb) == "reg":
        stripped = _strip_suffix(predicted)
        suffixed = stripped is not None and stem_preserving(stem, stripped[0])
        if not suffixed:
            cost = vowel_edit_cost(stem, predicted)
            if cost is not None and cost <= 1:
                return ErrorClass.classification
        if stripped is not None and stripped[0] == stem:
            return ErrorClass.inflection
        base = stripped[0] if stripped is not None else predicted
        if not stem_preserving(stem, base) and not stem_preserving(stem, predicted):
            return ErrorClass.copy
        return ErrorClass.creative

    # irregular verb
    correct_reg = regular_past(stem)
    if predicted == correct_reg:
        return ErrorClass.classification
    if _matches_irregular_template(stem, predicted):
        return ErrorClass.inflection
    if predicted != stem and (
        predicted == stem[: len(predicted)]
        or (len(predicted) < len(stem) and _is_subsequence(predicted, stem))
    ):
        return ErrorClass.copy
    return ErrorClass.creative


def _matches_irregular_template(stem, predicted) -> bool:
    """Does the output instantiate a known irregular pattern on this stem?

    Templates: bare vowel change, vowel change + /t/ or + /d/, level
    (output identical to the stem), weak (final /d/ devoiced to /t/).
    """
    cost = vowel_edit_cost(stem, predicted)
    if predicted == stem:
        return True  # level
    if cost is not None and cost >= 1:
        return True  # vowel change
    for suf in (("t",), ("d",)):
        if len(predicted) > 1 and predicted[-1:] == suf:
            base = predicted[:-1]
            base_cost = vowel_edit_cost(stem, base)
            if base_cost is not None and base_cost >= 1:
                return True  # vowel change + dental
    if stem and stem[-1] == "d" and predicted == stem[:-1] + ("t",):
        return True  # weak
    return False


# ---------------------------------------------------------------------------
# accuracy tables
# ---------------------------------------------------------------------------


@dataclass
class AccuracyTable:
    group_by: str
    rows: dict                       # (model_id, group) -> {"per_seed": {seed: pct}, "mean": pct}
    seeds: tuple

    def mean(self, model_id: str, group: str) -> float:
        return self.rows[(model_id, group)]["mean"]


def accuracy_table(preds, group_by: str = "regularity") -> AccuracyTable:
    """Per-seed accuracies and their mean, grouped by regularity or verb
    class.  Every verb must carry one prediction per (model, seed)."""
    if group_by not in ("regularity", "verb_class"):
        raise UsageError(f"unsupported group_by {group_by!r}")
    key_fn = verb_regularity if group_by == "regularity" else verb_group_class
    cells = defaultdict(lambda: defaultdict(list))
    seen = defaultdict(set)
    for p in preds:
        k = (p.model_id, p.seed, p.verb.lemma_orth)
        if k in seen[p.model_id]:
            raise ScoringError(f"duplicate prediction for verb {p.verb.lemma_orth!r} "
                               f"(model {p.model_id!r}, seed {p.seed})")
        seen[p.model_id].add(k)
        cells[(p.model_id, key_fn(p.verb))][p.seed].append(is_correct(p))
    all_seeds = sorted({p.seed for p in preds})
    verbs_by_model = defaultdict(set)
    for p in preds:
        verbs_by_model[p.model_id].add(p.verb.lemma_orth)
    for model_id, verbs in verbs_by_model.items():
        for seed in all_seeds:
            have = {p.verb.lemma_orth for p in preds if p.model_id == model_id and p.seed == seed}
            missing = verbs - have
            if missing:
                raise ScoringError(
                    f"model {model_id!r} seed {seed} is missing a prediction for "
                    f"verb {sorted(missing)[0]!r}"
                )
    rows = {}
    for cell, by_seed in cells.items():
        per_seed = {s: 100.0 * float(np.mean(v)) for s, v in sorted(by_seed.items())}
        rows[cell] = {"per_seed": per_seed, "mean": float(np.mean(list(per_seed.values())))}
    return AccuracyTable(group_by=group_by, rows=rows, seeds=tuple(all_seeds))


def error_summary(errors):
    """Counts and within-regularity percentages per error class.

    ``errors`` is an iterable of (regularity, ErrorClass) pairs pooled
    over all models and seeds.
    """
    counts = {"reg": defaultdict(int), "irreg": defaultdict(int)}
    for regularity, cls in errors:
        counts[regularity][ErrorClass(cls)] += 1
    out = {}
    for regularity, by_cls in counts.items():
        total = sum(by_cls.values())
        out[regularity] = {
            cls: {"count": by_cls.get(cls, 0),
                  "percent": (100.0 * by_cls.get(cls, 0) / total) if total else 0.0}
            for cls in ErrorClass
        }
        out[regularity]["total"] = total
    return out


def label_accuracy(preds, scheme) -> dict:
    """Fraction of predictions whose emitted regularity token matches the
    verb's regularity; malformed outputs count as wrong."""
    from .lexicon import LabelScheme

    scheme = LabelScheme(scheme)
    if scheme not in (LabelScheme.label_reg, LabelScheme.label_2):
        raise UsageError(f"scheme {scheme.value} does not emit a regularity label")
    by_group = defaultdict(lambda: defaultdict(list))
    for p in preds:
        group = verb_regularity(p.verb)
        ok = (not p.malformed and len(p.labels) >= 1
              and p.labels[0] in p.verb.regularities)
        by_group[group][p.seed].append(ok)
    out = {}
    for group, by_seed in by_group.items():
        per_seed = {s: 100.0 * float(np.mean(v)) for s, v in sorted(by_seed.items())}
        out[group] = {"per_seed": per_seed, "mean": float(np.mean(list(per_seed.values())))}
    return out


@dataclass(frozen=True)
class EffectReport:
    deltas: dict          # (model_id, group) -> float
    mean: float
    std: float            # population
    max_magnitude: float  # signed value of the largest |delta|


def frequency_effect(table_a: AccuracyTable, table_b: AccuracyTable) -> EffectReport:
    """Per-cell accuracy change A - B on unrounded per-seed-mean values."""
    if set(table_a.rows) != set(table_b.rows):
        raise UsageError("frequency_effect needs the same (model, group) grid on both sides")
    deltas = {k: table_a.rows[k]["mean"] - table_b.rows[k]["mean"] for k in sorted(table_a.rows)}
    vals = np.array(list(deltas.values()))
    signed_max = float(vals[np.argmax(np.abs(vals))]) if vals.size else 0.0
    return EffectReport(
        deltas=deltas,
        mean=float(vals.mean()) if vals.size else 0.0,
        std=float(vals.std()) if vals.size else 0.0,
        max_magnitude=signed_max,
    )
