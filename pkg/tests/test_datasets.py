"""Training-set totals, splits, and epoch resampling against the
published distribution tables."""

import pytest

from pastlab.datasets import (
    DatasetKind,
    ResampleMethod,
    build_training_set,
    resample_counts,
    resample_epoch,
    split_train_dev,
)
from pastlab.errors import ResampleError, SplitError, UsageError
from pastlab.rng import Rng


def printed_share(ts):
    return f"{ts.irregular_share_percent():.1f}"


class TestBuildTrainingSet:
    def test_type_reg(self, train_entries):
        ts = build_training_set(train_entries, DatasetKind.type_reg)
        assert ts.total_tokens == 3959
        assert printed_share(ts) == "3.4"
        assert f"{100 - ts.irregular_share_percent():.1f}" == "96.6"

    def test_type_irr(self, train_entries):
        ts = build_training_set(train_entries, DatasetKind.type_irr)
        assert ts.total_tokens == 3959
        assert printed_share(ts) == "4.1"

    def test_token_both(self, train_entries):
        ts = build_training_set(train_entries, DatasetKind.token_both)
        assert ts.total_tokens == 147_711
        assert printed_share(ts) == "31.3"
        assert f"{100 - ts.irregular_share_percent():.1f}" == "68.7"

    def test_token_irr(self, train_entries):
        ts = build_training_set(train_entries, DatasetKind.token_irr)
        assert ts.total_tokens == 49_983
        assert printed_share(ts) == "92.3"
        assert f"{100 - ts.irregular_share_percent():.1f}" == "7.7"

    def test_token_counts_follow_frequencies(self, train_entries, by_lemma):
        ts = build_training_set(train_entries, DatasetKind.token_both)
        knit = {ex.past_index: ex.count for ex in ts.examples if ex.entry.lemma_orth == "knit"}
        entry = by_lemma["knit"]
        assert knit == {i: p.freq for i, p in enumerate(entry.pasts)}

    def test_type_sets_resolve_ambiguous_verbs(self, train_entries):
        reg = build_training_set(train_entries, DatasetKind.type_reg)
        irr = build_training_set(train_entries, DatasetKind.type_irr)
        for ts, wanted in ((reg, "reg"), (irr, "irreg")):
            for ex in ts.examples:
                if ex.entry.is_ambiguous:
                    assert ex.regularity == wanted

    def test_zero_frequency_lexicon_rejected_for_token_kinds(self, train_entries):
        from dataclasses import replace

        from pastlab.errors import DataError
        from pastlab.lexicon import PastForm, VerbEntry

        flat = [
            VerbEntry(e.lemma_orth, e.stem, tuple(PastForm(p.form, p.regularity, p.verb_class, 0) for p in e.pasts))
            for e in train_entries[:10]
        ]
        with pytest.raises(DataError):
            build_training_set(flat, DatasetKind.token_irr)


class TestSplit:
    def test_published_80_20_irregular_count(self, train_entries):
        ts = build_training_set(train_entries, DatasetKind.type_irr)
        train, dev = split_train_dev(ts, 0.2, Rng(1))
        n_irr_train = sum(1 for ex in train.examples if ex.regularity == "irreg")
        n_irr_dev = sum(1 for ex in dev.examples if ex.regularity == "irreg")
        assert n_irr_train == 129
        assert n_irr_dev == 33

    def test_single_stratum_90_10_floor(self, train_entries):
        import math

        # the rounding rule on one stratum of 3,959 gives 3,563 / 396
        assert math.floor(3959 * 0.9) == 3563 and 3959 - 3563 == 396
        # and on the actual pure-regular stratum (3,797 verbs)
        regs = [e for e in train_entries if e.regularities == {"reg"}]
        ts = build_training_set(regs, DatasetKind.type_reg)
        assert ts.total_tokens == 3797
        train, dev = split_train_dev(ts, 0.1, Rng(4))
        assert train.total_tokens == math.floor(3797 * 0.9) == 3417
        assert dev.total_tokens == 380

    def test_stratified_90_10_counts(self, train_entries):
        ts = build_training_set(train_entries, DatasetKind.type_irr)
        train, dev = split_train_dev(ts, 0.1, Rng(3))
        # per-stratum floors: reg 3797 -> 3417, irreg 162 -> 145
        assert train.total_tokens == 3417 + 145
        assert dev.total_tokens == 3959 - train.total_tokens

    def test_partition_and_determinism(self, train_entries):
        ts = build_training_set(train_entries, DatasetKind.token_irr)
        t1, d1 = split_train_dev(ts, 0.1, Rng(7))
        t2, d2 = split_train_dev(ts, 0.1, Rng(7))
        t_verbs = {e.lemma_orth for e in t1.verb_types()}
        d_verbs = {e.lemma_orth for e in d1.verb_types()}
        assert t_verbs & d_verbs == set()
        assert t_verbs | d_verbs == {e.lemma_orth for e in ts.verb_types()}
        assert [ex.entry.lemma_orth for ex in t1.examples] == [ex.entry.lemma_orth for ex in t2.examples]
        # all tokens of one verb stay on one side
        assert t1.total_tokens + d1.total_tokens == ts.total_tokens

    def test_tiny_stratum_rejected(self, train_entries):
        regs = [e for e in train_entries if e.regularities == {"reg"}][:4]
        irr = [e for e in train_entries if e.regularities == {"irreg"}][:1]
        ts = build_training_set(regs + irr, DatasetKind.type_reg)
        with pytest.raises(SplitError):
            split_train_dev(ts, 0.5, Rng(1))

    def test_bad_fraction(self, train_entries):
        ts = build_training_set(train_entries, DatasetKind.type_reg)
        with pytest.raises(UsageError):
            split_train_dev(ts, 0.0, Rng(1))


class TestResample:
    def test_published_count_table(self):
        assert resample_counts(129, ResampleMethod.balance) == (129, 129, 50.0)
        assert resample_counts(129, ResampleMethod.reg_ds) == (48, 129, 72.6)
        assert resample_counts(129, ResampleMethod.irreg_ds) == (283, 129, 31.3)

    @pytest.fixture()
    def train_80(self, train_entries):
        ts = build_training_set(train_entries, DatasetKind.type_irr)
        train, _ = split_train_dev(ts, 0.2, Rng(1))
        return train

    def test_epoch_counts(self, train_80):
        for method, n_reg in ((ResampleMethod.balance, 129), (ResampleMethod.reg_ds, 48),
                              (ResampleMethod.irreg_ds, 283)):
            epoch = resample_epoch(train_80, method, Rng(1).substream("resample/epoch0"))
            by = epoch.tokens_by_regularity()
            assert by == {"reg": n_reg, "irreg": 129}

    def test_all_irregulars_retained_every_epoch(self, train_80):
        irr = {ex.entry.lemma_orth for ex in train_80.examples if ex.regularity == "irreg"}
        for k in range(5):
            epoch = resample_epoch(train_80, ResampleMethod.balance, Rng(9).substream(f"resample/epoch{k}"))
            got = {ex.entry.lemma_orth for ex in epoch.examples if ex.regularity == "irreg"}
            assert got == irr

    def test_sample_without_replacement_and_fresh_each_epoch(self, train_80):
        draws = []
        for k in range(3):
            epoch = resample_epoch(train_80, ResampleMethod.balance, Rng(5).substream(f"resample/epoch{k}"))
            regs = [ex.entry.lemma_orth for ex in epoch.examples if ex.regularity == "reg"]
            assert len(regs) == len(set(regs))
            draws.append(tuple(sorted(regs)))
        assert len(set(draws)) > 1

    def test_coverage_after_100_epochs(self, train_80):
        pool = {ex.entry.lemma_orth for ex in train_80.examples if ex.regularity == "reg"}
        seen = set()
        for k in range(100):
            epoch = resample_epoch(train_80, ResampleMethod.balance, Rng(2).substream(f"resample/epoch{k}"))
            seen.update(ex.entry.lemma_orth for ex in epoch.examples if ex.regularity == "reg")
        assert len(seen) / len(pool) >= 0.95

    def test_target_exceeding_pool(self, train_80):
        tiny = [ex for ex in train_80.examples if ex.regularity == "irreg"]
        tiny += [ex for ex in train_80.examples if ex.regularity == "reg"][:10]
        from pastlab.datasets import TrainingSet

        with pytest.raises(ResampleError):
            resample_epoch(TrainingSet(tuple(tiny), DatasetKind.type_irr),
                           ResampleMethod.irreg_ds, Rng(1))

    def test_none_passthrough_and_wrong_regime(self, train_80, train_entries):
        assert resample_epoch(train_80, ResampleMethod.none, Rng(1)) is train_80
        other = build_training_set(train_entries, DatasetKind.token_irr)
        with pytest.raises(UsageError):
            resample_epoch(other, ResampleMethod.balance, Rng(1))
