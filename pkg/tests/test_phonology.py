"""Allomorph conditioning and the regular past rule."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pastlab import phonology as ph
from pastlab.errors import DataError

segments = st.sampled_from(ph.INVENTORY)


class TestAllomorph:
    def test_wanted_takes_id(self):
        assert ph.allomorph_for("w ɑ n t".split()) == "id"

    def test_worked_takes_t(self):
        assert ph.allomorph_for("w ɝ k".split()) == "t"

    def test_called_takes_d(self):
        assert ph.allomorph_for("k ɔ l".split()) == "d"

    def test_vowel_final_takes_d(self):
        assert ph.allomorph_for(["p", "l", "eɪ"]) == "d"

    def test_empty_stem(self):
        with pytest.raises(DataError):
            ph.allomorph_for([])

    def test_unknown_final_phoneme(self):
        with pytest.raises(DataError):
            ph.allomorph_for(["k", "x"])

    @given(st.lists(segments, min_size=1, max_size=8))
    @settings(max_examples=100, deadline=None)
    def test_three_way_partition(self, stem):
        cls = ph.allomorph_for(stem)
        final = stem[-1]
        if final in ("t", "d"):
            assert cls == "id"
        elif final in ph.VOICELESS_CONSONANTS:
            assert cls == "t"
        else:
            assert cls == "d"


class TestRegularPast:
    def test_call(self):
        assert ph.regular_past("k ɔ l".split()) == tuple("k ɔ l d".split())

    def test_help(self):
        assert ph.regular_past("h ɛ l p".split()) == tuple("h ɛ l p t".split())

    def test_need(self):
        assert ph.regular_past("n i d".split()) == tuple("n i d ɪ d".split())

    @given(st.lists(segments, min_size=1, max_size=8))
    @settings(max_examples=100, deadline=None)
    def test_suffixation_only(self, stem):
        past = ph.regular_past(stem)
        assert past[: len(stem)] == tuple(stem)
        assert len(past) in (len(stem) + 1, len(stem) + 2)
