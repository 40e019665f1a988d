"""Training-set construction, train/dev splitting, per-epoch resampling.

The four dataset kinds differ in how verb types and corpus frequencies
are turned into training tokens:

* ``type_reg``   every verb once; dual-form verbs use the regular past.
* ``type_irr``   every verb once; dual-form verbs use the irregular past.
* ``token_both`` every reading of every verb, repeated by its frequency.
* ``token_irr``  purely-irregular verbs repeated by frequency; everything
  with a regular reading (including dual-form verbs) appears once with
  the regular past.  This is the only reading of the construction under
  which both published token totals and both irregular shares come out
  right on the same lexicon.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DataError, ResampleError, SplitError, UsageError
from .lexicon import VerbEntry
from .rng import Rng


class DatasetKind(str, Enum):
    type_reg = "type_reg"
    type_irr = "type_irr"
    token_both = "token_both"
    token_irr = "token_irr"


class ResampleMethod(str, Enum):
    none = "none"
    balance = "balance"
    reg_ds = "reg_ds"
    irreg_ds = "irreg_ds"


PARENTS_IRR_RATIO = 0.726   # irregular token share of aggregated parents' speech
TOKEN_IRR_RATIO = 0.313     # irregular token share of the token_both corpus


@dataclass(frozen=True)
class Example:
    """One group of identical training tokens: a verb reading plus its
    multiplicity in the multiset."""

    entry: VerbEntry
    past_index: int
    count: int = 1

    @property
    def regularity(self) -> str:
        return self.entry.pasts[self.past_index].regularity


@dataclass(frozen=True)
class TrainingSet:
    examples: tuple          # run-length encoded multiset of Example
    kind: DatasetKind

    @property
    def total_tokens(self) -> int:
        return sum(ex.count for ex in self.examples)

    def tokens_by_regularity(self) -> dict:
        out = {"reg": 0, "irreg": 0}
        for ex in self.examples:
            out[ex.regularity] += ex.count
        return out

    def verb_types(self) -> list:
        seen, out = set(), []
        for ex in self.examples:
            if id(ex.entry) not in seen:
                seen.add(id(ex.entry))
                out.append(ex.entry)
        return out

    def irregular_share_percent(self) -> float:
        by = self.tokens_by_regularity()
        return 100.0 * by["irreg"] / max(1, self.total_tokens)


def build_training_set(entries, kind: DatasetKind) -> TrainingSet:
    """Construct the training multiset for ``kind``.

    ``entries`` must already exclude the held-out test verbs.
    """
    kind = DatasetKind(kind)
    examples = []
    if kind in (DatasetKind.type_reg, DatasetKind.type_irr):
        wanted = "reg" if kind == DatasetKind.type_reg else "irreg"
        for e in entries:
            idx = e.past_index(wanted)
            if idx is None:
                idx = 0
            examples.append(Example(e, idx, 1))
    elif kind == DatasetKind.token_both:
        for e in entries:
            for i, p in enumerate(e.pasts):
                if p.freq > 0:
                    examples.append(Example(e, i, p.freq))
    else:  # token_irr
        for e in entries:
            reg_idx = e.past_index("reg")
            if reg_idx is None:
                p = e.pasts[0]
                if p.freq > 0:
                    examples.append(Example(e, 0, p.freq))
            else:
                examples.append(Example(e, reg_idx, 1))
    ts = TrainingSet(tuple(examples), kind)
    if kind in (DatasetKind.token_both, DatasetKind.token_irr):
        if all(p.freq == 0 for e in entries for p in e.pasts):
            raise DataError(f"{kind.value} needs corpus frequencies, but every frequency is 0")
    return ts


def _stratum_of(entry: VerbEntry, per_verb_examples) -> str:
    return "irreg" if any(ex.regularity == "irreg" for ex in per_verb_examples) else "reg"


def split_train_dev(ts: TrainingSet, dev_fraction: float, rng: Rng):
    """Split by verb type, stratified by regularity.

    All tokens of one verb land on one side.  Within each stratum the
    train side gets floor(n * (1 - dev_fraction)) verbs and dev the
    remainder, so a stratum of 162 at 80-20 puts exactly 129 in train.
    """
    if not 0.0 < dev_fraction < 1.0:
        raise UsageError("dev_fraction must be in (0, 1)")
    per_verb: dict[str, list] = {}
    order = []
    for ex in ts.examples:
        key = ex.entry.lemma_orth
        if key not in per_verb:
            order.append(key)
        per_verb.setdefault(key, []).append(ex)
    strata = {"reg": [], "irreg": []}
    for key in sorted(order):
        strata[_stratum_of(per_verb[key][0].entry, per_verb[key])].append(key)
    shuffle = rng.substream("split")
    train_keys, dev_keys = [], []
    for name in ("reg", "irreg"):
        verbs = strata[name]
        if not verbs:
            continue
        if len(verbs) < 2:
            raise SplitError(f"stratum {name!r} has fewer than 2 verbs; cannot split")
        perm = shuffle.permutation(len(verbs))
        n_train = math.floor(len(verbs) * (1.0 - dev_fraction))
        if n_train == 0 or n_train == len(verbs):
            raise SplitError(f"dev_fraction {dev_fraction} empties one side of stratum {name!r}")
        picked = [verbs[i] for i in perm]
        train_keys.extend(picked[:n_train])
        dev_keys.extend(picked[n_train:])
    train_set = set(train_keys)
    train_ex, dev_ex = [], []
    for key in order:
        (train_ex if key in train_set else dev_ex).extend(per_verb[key])
    return TrainingSet(tuple(train_ex), ts.kind), TrainingSet(tuple(dev_ex), ts.kind)


def resample_counts(n_irregular: int, method: ResampleMethod):
    """(regular count, irregular count, target irregular percent) for one
    epoch.  Regular counts use the floor of n_irr * (1 - rho) / rho, which
    is what reproduces the published (48, 129) and (283, 129)."""
    method = ResampleMethod(method)
    if method == ResampleMethod.none:
        raise UsageError("resample_counts is undefined for method 'none'")
    if method == ResampleMethod.balance:
        return n_irregular, n_irregular, 50.0
    rho = PARENTS_IRR_RATIO if method == ResampleMethod.reg_ds else TOKEN_IRR_RATIO
    n_reg = math.floor(n_irregular * (1.0 - rho) / rho)
    return n_reg, n_irregular, round(100.0 * rho, 1)


def resample_epoch(train: TrainingSet, method: ResampleMethod, rng: Rng) -> TrainingSet:
    """One epoch's multiset under a resampling method.

    Every irregular type is retained; regular types are drawn without
    replacement to the method's target count.  Pass a per-epoch substream
    (e.g. ``run_rng.substream(f"resample/epoch{k}")``) for a fresh draw
    each epoch.
    """
    method = ResampleMethod(method)
    if method == ResampleMethod.none:
        return train
    if train.kind != DatasetKind.type_irr:
        raise UsageError("resampling is defined on the type_irr regime")
    irregular = [ex for ex in train.examples if ex.regularity == "irreg"]
    regular = sorted(
        (ex for ex in train.examples if ex.regularity == "reg"),
        key=lambda ex: ex.entry.lemma_orth,
    )
    n_reg, _, _ = resample_counts(len(irregular), method)
    if n_reg > len(regular):
        raise ResampleError(
            f"{method.value} wants {n_reg} regular types but only {len(regular)} are available"
        )
    picked = rng.choice_without_replacement(len(regular), n_reg)
    chosen = [regular[i] for i in sorted(picked)]
    return TrainingSet(tuple(irregular + chosen), train.kind)
