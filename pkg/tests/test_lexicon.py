"""Lexicon parsing, published distribution counts, vocabulary, encoding."""

from collections import Counter

import pytest

from pastlab import lexicon as lx
from pastlab import phonology as ph
from pastlab.errors import DataError


class TestLoadLexicon:
    def test_full_file_counts(self, entries):
        s = lx.summarize(entries)
        assert s.n_verbs == 4039
        assert s.n_regular == 3857
        assert s.n_irregular == 150
        assert s.n_ambiguous == 32

    def test_class_distribution(self, entries):
        s = lx.summarize(entries)
        assert s.class_counts["d"] == 2045
        assert s.class_counts["t"] == 763
        assert s.class_counts["id"] == 1049
        assert s.class_counts["vc"] == 125
        assert s.class_counts == {
            "d": 2045, "t": 763, "id": 1049, "vc": 125, "vc_t": 12,
            "vc_d": 10, "ruck": 8, "weak": 9, "level": 11, "other": 7,
        }

    def test_empty_file(self, tmp_path):
        p = tmp_path / "empty.tsv"
        p.write_text("lemma_orth\tstem_ipa\tpast_ipa\tregularity\tverb_class\tcelex_freq\n")
        assert lx.load_lexicon(p) == []

    def test_malformed_row_reports_line(self, tmp_path):
        p = tmp_path / "bad.tsv"
        p.write_text(
            "lemma_orth\tstem_ipa\tpast_ipa\tregularity\tverb_class\tcelex_freq\n"
            "call\tk ɔ l\tk ɔ l d\treg\td\t10\n"
            "oops\tk ɔ l\tk ɔ l d\treg\td\n"
        )
        with pytest.raises(DataError, match=":3"):
            lx.load_lexicon(p)

    def test_unknown_phoneme(self, tmp_path):
        p = tmp_path / "bad.tsv"
        p.write_text(
            "lemma_orth\tstem_ipa\tpast_ipa\tregularity\tverb_class\tcelex_freq\n"
            "zorp\tz ö p\tz ö p t\treg\tt\t1\n"
        )
        with pytest.raises(DataError, match="unknown phoneme"):
            lx.load_lexicon(p)

    def test_regular_pasts_obey_the_rule(self, entries):
        # the loader validates this; assert it end to end anyway
        for e in entries:
            for p in e.pasts:
                if p.regularity == "reg":
                    assert p.form == ph.regular_past(e.stem)
                    assert p.verb_class == ph.allomorph_for(e.stem)

    def test_ambiguous_verbs_have_both_readings(self, entries):
        for e in entries:
            if e.is_ambiguous:
                assert e.regularities == {"reg", "irreg"}

    def test_knit_carries_its_published_frequencies(self, by_lemma):
        knit = by_lemma["knit"]
        freqs = {p.regularity: p.freq for p in knit.pasts}
        assert freqs == {"reg": 12, "irreg": 5}
        assert knit.celex_freq == 17


class TestTestSet:
    def test_composition(self, entries, test_lemmas):
        assert len(test_lemmas) == 80
        by = {e.lemma_orth: e for e in entries}
        regs = [l for l in test_lemmas if by[l].regularities == {"reg"}]
        others = [l for l in test_lemmas if l not in regs]
        assert len(regs) == 60
        assert len(others) == 20
        cls = Counter(ph.allomorph_for(by[l].stem) for l in regs)
        assert cls == {"d": 20, "t": 20, "id": 20}
        ambiguous = [l for l in others if by[l].is_ambiguous]
        assert len(ambiguous) == 5


class TestVocab:
    def test_reserved_ids(self, entries):
        v = lx.build_vocab(entries)
        assert v.encode(lx.PAD) == 0
        assert v.encode(lx.START) == 1
        assert v.encode(lx.END) == 2

    def test_deterministic_across_runs(self, entries):
        a = lx.build_vocab(entries, schemes=(lx.LabelScheme.label_2,))
        b = lx.build_vocab(list(entries), schemes=(lx.LabelScheme.label_2,))
        assert a.tokens == b.tokens

    def test_label_tokens_present_when_requested(self, entries):
        v = lx.build_vocab(entries, schemes=(lx.LabelScheme.label_reg,))
        assert "reg" in v and "irreg" in v
        assert "+d" not in v
        v2 = lx.build_vocab(entries, schemes=(lx.LabelScheme.base,))
        assert "reg" not in v2

    def test_full_label_vocab_size(self, entries):
        # 3 reserved + 2 regularity + 10 class labels + 40 phonemes
        v = lx.build_vocab(entries, schemes=(lx.LabelScheme.label_2,))
        assert len(v) == 55
        assert set(ph.INVENTORY) <= set(v.tokens)


class TestEncodeExample:
    def test_call_base_scheme(self, by_lemma, entries):
        v = lx.build_vocab(entries, schemes=(lx.LabelScheme.base,))
        src, tgt = lx.encode_example(by_lemma["call"], 0, lx.LabelScheme.base, v)
        assert v.decode_all(src) == [lx.START, "k", "ɔ", "l", lx.END]
        assert v.decode_all(tgt) == [lx.START, "k", "ɔ", "l", "d", lx.END]

    def test_call_label_2(self, by_lemma, entries):
        v = lx.build_vocab(entries)
        _, tgt = lx.encode_example(by_lemma["call"], 0, lx.LabelScheme.label_2, v)
        assert v.decode_all(tgt) == [lx.START, "reg", "+d", "k", "ɔ", "l", "d", lx.END]

    def test_call_label_reg_and_vc(self, by_lemma, entries):
        v = lx.build_vocab(entries)
        _, t1 = lx.encode_example(by_lemma["call"], 0, lx.LabelScheme.label_reg, v)
        _, t2 = lx.encode_example(by_lemma["call"], 0, lx.LabelScheme.label_vc, v)
        assert v.decode_all(t1) == [lx.START, "reg", "k", "ɔ", "l", "d", lx.END]
        assert v.decode_all(t2) == [lx.START, "+d", "k", "ɔ", "l", "d", lx.END]

    def test_roundtrip(self, by_lemma, entries):
        v = lx.build_vocab(entries)
        src, tgt = lx.encode_example(by_lemma["understand"], 0, lx.LabelScheme.label_2, v)
        assert v.encode_all(v.decode_all(src)) == src
        assert v.encode_all(v.decode_all(tgt)) == tgt


class TestLoadNonce:
    def test_counts(self, nonce_verbs):
        assert len(nonce_verbs) == 58
        doubles = [v for v in nonce_verbs if len(v.irr_forms) == 2]
        assert len(doubles) == 16

    def test_bize(self, nonce_verbs):
        bize = next(v for v in nonce_verbs if v.key == "b aɪ z")
        assert bize.reg_form == tuple("b aɪ z d".split())
        assert bize.irr_forms == (tuple("b oʊ z".split()),)

    def test_rife_has_two_irregulars(self, nonce_verbs):
        rife = next(v for v in nonce_verbs if v.key == "r aɪ f")
        assert rife.irr_forms == (tuple("r oʊ f".split()), tuple("r ɪ f".split()))

    def test_doubles_are_file_final_starting_at_preak(self, nonce_verbs):
        first_double = next(i for i, v in enumerate(nonce_verbs) if len(v.irr_forms) == 2)
        assert nonce_verbs[first_double].key == "p r i k"
        assert all(len(v.irr_forms) == 2 for v in nonce_verbs[first_double:])

    def test_subset_warns_not_fails(self, tmp_path):
        from pathlib import Path

        full = Path(__file__).resolve().parents[1] / "src" / "pastlab" / "data" / "nonce.tsv"
        lines = full.read_text(encoding="utf-8").splitlines()
        p = tmp_path / "subset.tsv"
        p.write_text("\n".join(lines[:4]) + "\n", encoding="utf-8")
        with pytest.warns(UserWarning, match="58 nonce verbs"):
            subset = lx.load_nonce(p)
        assert len(subset) == 3

    def test_human_ppro_in_unit_interval(self, nonce_verbs):
        for v in nonce_verbs:
            for val in v.human_ppro.values():
                assert 0.0 <= val <= 1.0
