#!/usr/bin/env python3
"""Deterministically generate the data files shipped with the package.

Outputs (under src/pastlab/data/):

* lexicon.tsv     4,039 verbs / 4,071 rows.  Real English irregulars and a
                  core of real regulars, padded with phonotactically
                  plausible synthetic regulars so that every published
                  count is reproduced exactly:
                    - 3,857 regular / 150 irregular / 32 dual-form verbs
                    - class counts 2045 /-d/, 763 /-t/, 1049 /-ɪd/,
                      125 vc, 12 vc+t, 10 vc+d, 8 ruck, 9 weak, 11 level,
                      7 other (dual-form verbs counted by their irregular
                      reading)
                    - after removing the frozen test set, the four
                      training sets come out at 3,959 / 3,959 / 147,711 /
                      49,983 tokens with irregular shares 3.4 / 4.1 /
                      31.3 / 92.3 percent.
* test_verbs.txt  the frozen 80-verb test set (60 regular, 20 irregular,
                  5 of which are dual-form).
* nonce.tsv       58 nonce verbs (16 with two irregular forms, last in
                  file order starting at 'preak').  The behavioural
                  columns are synthetic placeholders with realistic
                  ranges; the real elicitation data is not
                  redistributable.

The script is the single source of truth for the shipped data; rerun it
after any edit and commit the regenerated files.  All counts are
asserted at the end.
"""

from __future__ import annotations

import sys
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

import numpy as np

from pastlab.phonology import (
    INVENTORY,
    VOICED_CONSONANTS,
    VOICELESS_CONSONANTS,
    VOWELS,
    allomorph_for,
    regular_past,
)

DATA_DIR = Path(__file__).resolve().parents[1] / "src" / "pastlab" / "data"

# target sums over TRAINING rows (after the frozen test set is removed)
PURE_IRR_TRAIN_TOKENS = 46_159   # sum of freq over the 135 training-only irregulars
AMB_IRR_TRAIN_TOKENS = 100       # sum of freq over the 27 training dual-form irregular rows
REG_TRAIN_TOKENS = 101_452       # sum of freq over all 3,824 training regular rows

S = str.split  # brevity for the big literal tables below

# ---------------------------------------------------------------------------
# real irregular verbs (lemma, stem, past, class)
# ---------------------------------------------------------------------------

PURE_IRREGULARS = [
    # other
    ("go", S("g oʊ"), S("w ɛ n t"), "other"),
    ("undergo", S("ʌ n d ɝ g oʊ"), S("ʌ n d ɝ w ɛ n t"), "other"),
    ("forgo", S("f ɔ r g oʊ"), S("f ɔ r w ɛ n t"), "other"),
    ("do", S("d u"), S("d ɪ d"), "other"),
    ("redo", S("r i d u"), S("r i d ɪ d"), "other"),
    ("undo", S("ʌ n d u"), S("ʌ n d ɪ d"), "other"),
    ("outdo", S("aʊ t d u"), S("aʊ t d ɪ d"), "other"),
    # ruckumlaut
    ("buy", S("b aɪ"), S("b ɔ t"), "ruck"),
    ("bring", S("b r ɪ ŋ"), S("b r ɔ t"), "ruck"),
    ("think", S("θ ɪ ŋ k"), S("θ ɔ t"), "ruck"),
    ("seek", S("s i k"), S("s ɔ t"), "ruck"),
    ("teach", S("t i tʃ"), S("t ɔ t"), "ruck"),
    ("catch", S("k æ tʃ"), S("k ɔ t"), "ruck"),
    ("fight", S("f aɪ t"), S("f ɔ t"), "ruck"),
    # vowel change + /t/
    ("feel", S("f i l"), S("f ɛ l t"), "vc_t"),
    ("keep", S("k i p"), S("k ɛ p t"), "vc_t"),
    ("sleep", S("s l i p"), S("s l ɛ p t"), "vc_t"),
    ("oversleep", S("oʊ v ɝ s l i p"), S("oʊ v ɝ s l ɛ p t"), "vc_t"),
    ("sweep", S("s w i p"), S("s w ɛ p t"), "vc_t"),
    ("weep", S("w i p"), S("w ɛ p t"), "vc_t"),
    ("creep", S("k r i p"), S("k r ɛ p t"), "vc_t"),
    ("kneel", S("n i l"), S("n ɛ l t"), "vc_t"),
    ("deal", S("d i l"), S("d ɛ l t"), "vc_t"),
    ("mean", S("m i n"), S("m ɛ n t"), "vc_t"),
    # vowel change + /d/
    ("tell", S("t ɛ l"), S("t oʊ l d"), "vc_d"),
    ("retell", S("r i t ɛ l"), S("r i t oʊ l d"), "vc_d"),
    ("foretell", S("f ɔ r t ɛ l"), S("f ɔ r t oʊ l d"), "vc_d"),
    ("sell", S("s ɛ l"), S("s oʊ l d"), "vc_d"),
    ("resell", S("r i s ɛ l"), S("r i s oʊ l d"), "vc_d"),
    ("hear", S("h ɪ r"), S("h ɝ d"), "vc_d"),
    ("overhear", S("oʊ v ɝ h ɪ r"), S("oʊ v ɝ h ɝ d"), "vc_d"),
    ("say", S("s eɪ"), S("s ɛ d"), "vc_d"),
    ("flee", S("f l i"), S("f l ɛ d"), "vc_d"),
    # weak (dental suffix, stem-final simplification)
    ("send", S("s ɛ n d"), S("s ɛ n t"), "weak"),
    ("bend", S("b ɛ n d"), S("b ɛ n t"), "weak"),
    ("lend", S("l ɛ n d"), S("l ɛ n t"), "weak"),
    ("spend", S("s p ɛ n d"), S("s p ɛ n t"), "weak"),
    ("build", S("b ɪ l d"), S("b ɪ l t"), "weak"),
    ("dwell", S("d w ɛ l"), S("d w ɛ l t"), "weak"),
    # level (past identical to stem)
    ("set", S("s ɛ t"), S("s ɛ t"), "level"),
    ("put", S("p ʊ t"), S("p ʊ t"), "level"),
    ("cut", S("k ʌ t"), S("k ʌ t"), "level"),
    # vowel change
    ("ride", S("r aɪ d"), S("r oʊ d"), "vc"),
    ("override", S("oʊ v ɝ r aɪ d"), S("oʊ v ɝ r oʊ d"), "vc"),
    ("rise", S("r aɪ z"), S("r oʊ z"), "vc"),
    ("arise", S("ə r aɪ z"), S("ə r oʊ z"), "vc"),
    ("write", S("r aɪ t"), S("r oʊ t"), "vc"),
    ("rewrite", S("r i r aɪ t"), S("r i r oʊ t"), "vc"),
    ("underwrite", S("ʌ n d ɝ r aɪ t"), S("ʌ n d ɝ r oʊ t"), "vc"),
    ("overwrite", S("oʊ v ɝ r aɪ t"), S("oʊ v ɝ r oʊ t"), "vc"),
    ("drive", S("d r aɪ v"), S("d r oʊ v"), "vc"),
    ("strike", S("s t r aɪ k"), S("s t r ʌ k"), "vc"),
    ("dig", S("d ɪ g"), S("d ʌ g"), "vc"),
    ("spin", S("s p ɪ n"), S("s p ʌ n"), "vc"),
    ("win", S("w ɪ n"), S("w ʌ n"), "vc"),
    ("cling", S("k l ɪ ŋ"), S("k l ʌ ŋ"), "vc"),
    ("fling", S("f l ɪ ŋ"), S("f l ʌ ŋ"), "vc"),
    ("sling", S("s l ɪ ŋ"), S("s l ʌ ŋ"), "vc"),
    ("sting", S("s t ɪ ŋ"), S("s t ʌ ŋ"), "vc"),
    ("string", S("s t r ɪ ŋ"), S("s t r ʌ ŋ"), "vc"),
    ("swing", S("s w ɪ ŋ"), S("s w ʌ ŋ"), "vc"),
    ("wring", S("r ɪ ŋ"), S("r ʌ ŋ"), "vc"),
    ("overhang", S("oʊ v ɝ h æ ŋ"), S("oʊ v ɝ h ʌ ŋ"), "vc"),
    ("sit", S("s ɪ t"), S("s æ t"), "vc"),
    ("babysit", S("b eɪ b i s ɪ t"), S("b eɪ b i s æ t"), "vc"),
    ("get", S("g ɛ t"), S("g ɑ t"), "vc"),
    ("forget", S("f ɝ g ɛ t"), S("f ɝ g ɑ t"), "vc"),
    ("beget", S("b ɪ g ɛ t"), S("b ɪ g ɑ t"), "vc"),
    ("bite", S("b aɪ t"), S("b ɪ t"), "vc"),
    ("hide", S("h aɪ d"), S("h ɪ d"), "vc"),
    ("slide", S("s l aɪ d"), S("s l ɪ d"), "vc"),
    ("sing", S("s ɪ ŋ"), S("s æ ŋ"), "vc"),
    ("ring", S("r ɪ ŋ"), S("r æ ŋ"), "vc"),
    ("spring", S("s p r ɪ ŋ"), S("s p r æ ŋ"), "vc"),
    ("drink", S("d r ɪ ŋ k"), S("d r æ ŋ k"), "vc"),
    ("shrink", S("ʃ r ɪ ŋ k"), S("ʃ r æ ŋ k"), "vc"),
    ("sink", S("s ɪ ŋ k"), S("s æ ŋ k"), "vc"),
    ("swim", S("s w ɪ m"), S("s w æ m"), "vc"),
    ("begin", S("b ɪ g ɪ n"), S("b ɪ g æ n"), "vc"),
    ("run", S("r ʌ n"), S("r æ n"), "vc"),
    ("rerun", S("r i r ʌ n"), S("r i r æ n"), "vc"),
    ("outrun", S("aʊ t r ʌ n"), S("aʊ t r æ n"), "vc"),
    ("overrun", S("oʊ v ɝ r ʌ n"), S("oʊ v ɝ r æ n"), "vc"),
    ("come", S("k ʌ m"), S("k eɪ m"), "vc"),
    ("become", S("b ɪ k ʌ m"), S("b ɪ k eɪ m"), "vc"),
    ("overcome", S("oʊ v ɝ k ʌ m"), S("oʊ v ɝ k eɪ m"), "vc"),
    ("fall", S("f ɔ l"), S("f ɛ l"), "vc"),
    ("befall", S("b ɪ f ɔ l"), S("b ɪ f ɛ l"), "vc"),
    ("give", S("g ɪ v"), S("g eɪ v"), "vc"),
    ("forgive", S("f ɝ g ɪ v"), S("f ɝ g eɪ v"), "vc"),
    ("forsake", S("f ɝ s eɪ k"), S("f ɝ s ʊ k"), "vc"),
    ("shake", S("ʃ eɪ k"), S("ʃ ʊ k"), "vc"),
    ("take", S("t eɪ k"), S("t ʊ k"), "vc"),
    ("retake", S("r i t eɪ k"), S("r i t ʊ k"), "vc"),
    ("overtake", S("oʊ v ɝ t eɪ k"), S("oʊ v ɝ t ʊ k"), "vc"),
    ("undertake", S("ʌ n d ɝ t eɪ k"), S("ʌ n d ɝ t ʊ k"), "vc"),
    ("mistake", S("m ɪ s t eɪ k"), S("m ɪ s t ʊ k"), "vc"),
    ("partake", S("p ɑ r t eɪ k"), S("p ɑ r t ʊ k"), "vc"),
    ("eat", S("i t"), S("eɪ t"), "vc"),
    ("overeat", S("oʊ v ɝ i t"), S("oʊ v ɝ eɪ t"), "vc"),
    ("blow", S("b l oʊ"), S("b l u"), "vc"),
    ("grow", S("g r oʊ"), S("g r u"), "vc"),
    ("outgrow", S("aʊ t g r oʊ"), S("aʊ t g r u"), "vc"),
    ("know", S("n oʊ"), S("n u"), "vc"),
    ("throw", S("θ r oʊ"), S("θ r u"), "vc"),
    ("overthrow", S("oʊ v ɝ θ r oʊ"), S("oʊ v ɝ θ r u"), "vc"),
    ("draw", S("d r ɔ"), S("d r u"), "vc"),
    ("withdraw", S("w ɪ θ d r ɔ"), S("w ɪ θ d r u"), "vc"),
    ("fly", S("f l aɪ"), S("f l u"), "vc"),
    ("slay", S("s l eɪ"), S("s l u"), "vc"),
    ("see", S("s i"), S("s ɔ"), "vc"),
    ("oversee", S("oʊ v ɝ s i"), S("oʊ v ɝ s ɔ"), "vc"),
    ("foresee", S("f ɔ r s i"), S("f ɔ r s ɔ"), "vc"),
    ("speak", S("s p i k"), S("s p oʊ k"), "vc"),
    ("wake", S("w eɪ k"), S("w oʊ k"), "vc"),
    ("break", S("b r eɪ k"), S("b r oʊ k"), "vc"),
    ("steal", S("s t i l"), S("s t oʊ l"), "vc"),
    ("weave", S("w i v"), S("w oʊ v"), "vc"),
    ("freeze", S("f r i z"), S("f r oʊ z"), "vc"),
    ("choose", S("tʃ u z"), S("tʃ oʊ z"), "vc"),
    ("shoot", S("ʃ u t"), S("ʃ ɑ t"), "vc"),
    ("overshoot", S("oʊ v ɝ ʃ u t"), S("oʊ v ɝ ʃ ɑ t"), "vc"),
    ("find", S("f aɪ n d"), S("f aʊ n d"), "vc"),
    ("bind", S("b aɪ n d"), S("b aʊ n d"), "vc"),
    ("grind", S("g r aɪ n d"), S("g r aʊ n d"), "vc"),
    ("wind", S("w aɪ n d"), S("w aʊ n d"), "vc"),
    ("rewind", S("r i w aɪ n d"), S("r i w aʊ n d"), "vc"),
    ("unwind", S("ʌ n w aɪ n d"), S("ʌ n w aʊ n d"), "vc"),
    ("hold", S("h oʊ l d"), S("h ɛ l d"), "vc"),
    ("behold", S("b ɪ h oʊ l d"), S("b ɪ h ɛ l d"), "vc"),
    ("uphold", S("ʌ p h oʊ l d"), S("ʌ p h ɛ l d"), "vc"),
    ("withhold", S("w ɪ θ h oʊ l d"), S("w ɪ θ h ɛ l d"), "vc"),
    ("stand", S("s t æ n d"), S("s t ʊ d"), "vc"),
    ("understand", S("ʌ n d ɝ s t æ n d"), S("ʌ n d ɝ s t ʊ d"), "vc"),
    ("withstand", S("w ɪ θ s t æ n d"), S("w ɪ θ s t ʊ d"), "vc"),
    ("misunderstand", S("m ɪ s ʌ n d ɝ s t æ n d"), S("m ɪ s ʌ n d ɝ s t ʊ d"), "vc"),
    ("wear", S("w ɛ r"), S("w ɔ r"), "vc"),
    ("swear", S("s w ɛ r"), S("s w ɔ r"), "vc"),
    ("tear", S("t ɛ r"), S("t ɔ r"), "vc"),
    ("bear", S("b ɛ r"), S("b ɔ r"), "vc"),
    ("forbear", S("f ɔ r b ɛ r"), S("f ɔ r b ɔ r"), "vc"),
    ("feed", S("f i d"), S("f ɛ d"), "vc"),
    ("overfeed", S("oʊ v ɝ f i d"), S("oʊ v ɝ f ɛ d"), "vc"),
    ("breastfeed", S("b r ɛ s t f i d"), S("b r ɛ s t f ɛ d"), "vc"),
    ("bleed", S("b l i d"), S("b l ɛ d"), "vc"),
    ("breed", S("b r i d"), S("b r ɛ d"), "vc"),
    ("lead", S("l i d"), S("l ɛ d"), "vc"),
    ("mislead", S("m ɪ s l i d"), S("m ɪ s l ɛ d"), "vc"),
    ("read", S("r i d"), S("r ɛ d"), "vc"),
    ("meet", S("m i t"), S("m ɛ t"), "vc"),
]

# dual-form verbs: (lemma, stem, irregular past, irregular class); the
# regular reading is stem + conditioned suffix
AMBIGUOUS = [
    ("abide", S("ə b aɪ d"), S("ə b oʊ d"), "vc"),
    ("alight", S("ə l aɪ t"), S("ə l ɪ t"), "vc"),
    ("awake", S("ə w eɪ k"), S("ə w oʊ k"), "vc"),
    ("beseech", S("b ɪ s i tʃ"), S("b ɪ s ɔ t"), "ruck"),
    ("bet", S("b ɛ t"), S("b ɛ t"), "level"),
    ("broadcast", S("b r ɔ d k æ s t"), S("b r ɔ d k æ s t"), "level"),
    ("cleave", S("k l i v"), S("k l oʊ v"), "vc"),
    ("clothe", S("k l oʊ ð"), S("k l æ d"), "vc"),
    ("dive", S("d aɪ v"), S("d oʊ v"), "vc"),
    ("dream", S("d r i m"), S("d r ɛ m t"), "vc_t"),
    ("floodlight", S("f l ʌ d l aɪ t"), S("f l ʌ d l ɪ t"), "vc"),
    ("gild", S("g ɪ l d"), S("g ɪ l t"), "weak"),
    ("gird", S("g ɝ d"), S("g ɝ t"), "weak"),
    ("hang", S("h æ ŋ"), S("h ʌ ŋ"), "vc"),
    ("inset", S("ɪ n s ɛ t"), S("ɪ n s ɛ t"), "level"),
    ("knit", S("n ɪ t"), S("n ɪ t"), "level"),
    ("leap", S("l i p"), S("l ɛ p t"), "vc_t"),
    ("light", S("l aɪ t"), S("l ɪ t"), "vc"),
    ("outshine", S("aʊ t ʃ aɪ n"), S("aʊ t ʃ oʊ n"), "vc"),
    ("plead", S("p l i d"), S("p l ɛ d"), "vc"),
    ("quit", S("k w ɪ t"), S("k w ɪ t"), "level"),
    ("rend", S("r ɛ n d"), S("r ɛ n t"), "weak"),
    ("shine", S("ʃ aɪ n"), S("ʃ oʊ n"), "vc"),
    ("shoe", S("ʃ u"), S("ʃ ɑ d"), "vc_d"),
    ("sneak", S("s n i k"), S("s n ʌ k"), "vc"),
    ("speed", S("s p i d"), S("s p ɛ d"), "vc"),
    ("stick", S("s t ɪ k"), S("s t ʌ k"), "vc"),
    ("strive", S("s t r aɪ v"), S("s t r oʊ v"), "vc"),
    ("sweat", S("s w ɛ t"), S("s w ɛ t"), "level"),
    ("tread", S("t r ɛ d"), S("t r ɑ d"), "vc"),
    ("wed", S("w ɛ d"), S("w ɛ d"), "level"),
    ("wet", S("w ɛ t"), S("w ɛ t"), "level"),
]

# irregular-row frequencies of the 27 training dual-form verbs (sum 100;
# knit keeps its literature value of 5)
AMB_IRR_FREQ = {
    "alight": 1, "awake": 4, "bet": 4, "broadcast": 2, "cleave": 1, "clothe": 2,
    "dive": 5, "floodlight": 1, "gild": 1, "gird": 1, "hang": 14, "inset": 1,
    "knit": 5, "leap": 5, "light": 9, "outshine": 1, "rend": 1, "shine": 7,
    "shoe": 2, "sneak": 4, "speed": 6, "stick": 8, "strive": 3, "sweat": 3,
    "tread": 3, "wed": 3, "wet": 3,
}
AMB_REG_FREQ_SPECIAL = {"knit": 12}  # knitted; the rest get small defaults

# ---------------------------------------------------------------------------
# real regular verbs (lemma, stem); past and class derive from the rule
# ---------------------------------------------------------------------------

REAL_REGULARS = [
    ("call", S("k ɔ l")), ("fine", S("f aɪ n")), ("clean", S("k l i n")),
    ("learn", S("l ɝ n")), ("turn", S("t ɝ n")), ("burn", S("b ɝ n")),
    ("live", S("l ɪ v")), ("love", S("l ʌ v")), ("move", S("m u v")),
    ("save", S("s eɪ v")), ("wave", S("w eɪ v")), ("use", S("j u z")),
    ("amaze", S("ə m eɪ z")), ("seem", S("s i m")), ("claim", S("k l eɪ m")),
    ("blame", S("b l eɪ m")), ("join", S("dʒ ɔɪ n")), ("enjoy", S("ɛ n dʒ ɔɪ")),
    ("annoy", S("ə n ɔɪ")), ("destroy", S("d ɪ s t r ɔɪ")), ("employ", S("ɛ m p l ɔɪ")),
    ("play", S("p l eɪ")), ("stay", S("s t eɪ")), ("cry", S("k r aɪ")),
    ("try", S("t r aɪ")), ("tie", S("t aɪ")), ("sigh", S("s aɪ")),
    ("allow", S("ə l aʊ")), ("follow", S("f ɑ l oʊ")), ("borrow", S("b ɑ r oʊ")),
    ("measure", S("m ɛ ʒ ɝ")), ("secure", S("s ɪ k j ʊ r")), ("giggle", S("g ɪ g ə l")),
    ("bribe", S("b r aɪ b")), ("rob", S("r ɑ b")), ("grab", S("g r æ b")),
    ("rub", S("r ʌ b")), ("beg", S("b ɛ g")), ("hug", S("h ʌ g")),
    ("drag", S("d r æ g")), ("breathe", S("b r i ð")), ("bathe", S("b eɪ ð")),
    ("soothe", S("s u ð")), ("scan", S("s k æ n")), ("plan", S("p l æ n")),
    ("open", S("oʊ p ə n")), ("happen", S("h æ p ə n")), ("listen", S("l ɪ s ə n")),
    ("travel", S("t r æ v ə l")), ("smile", S("s m aɪ l")), ("sail", S("s eɪ l")),
    ("fail", S("f eɪ l")), ("yell", S("j ɛ l")), ("roam", S("r oʊ m")),
    ("storm", S("s t ɔ r m")), ("warn", S("w ɔ r n")), ("scream", S("s k r i m")),
    ("judge", S("dʒ ʌ dʒ")), ("manage", S("m æ n ɪ dʒ")), ("change", S("tʃ eɪ n dʒ")),
    ("charge", S("tʃ ɑ r dʒ")),
    ("work", S("w ɝ k")), ("walk", S("w ɔ k")), ("talk", S("t ɔ k")),
    ("look", S("l ʊ k")), ("like", S("l aɪ k")), ("dislike", S("d ɪ s l aɪ k")),
    ("bake", S("b eɪ k")), ("cook", S("k ʊ k")), ("pick", S("p ɪ k")),
    ("kick", S("k ɪ k")), ("knock", S("n ɑ k")), ("park", S("p ɑ r k")),
    ("thank", S("θ æ ŋ k")), ("ask", S("æ s k")), ("risk", S("r ɪ s k")),
    ("coach", S("k oʊ tʃ")), ("watch", S("w ɑ tʃ")), ("reach", S("r i tʃ")),
    ("touch", S("t ʌ tʃ")), ("march", S("m ɑ r tʃ")), ("unleash", S("ə n l i ʃ")),
    ("wash", S("w ɑ ʃ")), ("push", S("p ʊ ʃ")), ("finish", S("f ɪ n ɪ ʃ")),
    ("wish", S("w ɪ ʃ")), ("crash", S("k r æ ʃ")), ("brush", S("b r ʌ ʃ")),
    ("laugh", S("l æ f")), ("cough", S("k ɔ f")), ("triumph", S("t r aɪ ʌ m f")),
    ("sniff", S("s n ɪ f")), ("stuff", S("s t ʌ f")), ("help", S("h ɛ l p")),
    ("jump", S("dʒ ʌ m p")), ("stop", S("s t ɑ p")), ("drop", S("d r ɑ p")),
    ("clap", S("k l æ p")), ("hope", S("h oʊ p")), ("escape", S("ɪ s k eɪ p")),
    ("wrap", S("r æ p")), ("miss", S("m ɪ s")), ("pass", S("p æ s")),
    ("kiss", S("k ɪ s")), ("guess", S("g ɛ s")), ("dance", S("d æ n s")),
    ("force", S("f ɔ r s")), ("notice", S("n oʊ t ɪ s")), ("release", S("r ɪ l i s")),
    ("increase", S("ɪ n k r i s")), ("fix", S("f ɪ k s")), ("mix", S("m ɪ k s")),
    ("relax", S("r ɪ l æ k s")), ("box", S("b ɑ k s")), ("hitchhike", S("h ɪ tʃ h aɪ k")),
    ("want", S("w ɑ n t")), ("need", S("n i d")), ("wait", S("w eɪ t")),
    ("hate", S("h eɪ t")), ("vote", S("v oʊ t")), ("note", S("n oʊ t")),
    ("start", S("s t ɑ r t")), ("hunt", S("h ʌ n t")), ("paint", S("p eɪ n t")),
    ("point", S("p ɔɪ n t")), ("print", S("p r ɪ n t")), ("plant", S("p l æ n t")),
    ("count", S("k aʊ n t")), ("shout", S("ʃ aʊ t")), ("doubt", S("d aʊ t")),
    ("visit", S("v ɪ z ɪ t")), ("edit", S("ɛ d ɪ t")), ("expect", S("ɪ k s p ɛ k t")),
    ("collect", S("k ə l ɛ k t")), ("connect", S("k ə n ɛ k t")), ("protect", S("p r ə t ɛ k t")),
    ("select", S("s ə l ɛ k t")), ("act", S("æ k t")), ("lift", S("l ɪ f t")),
    ("shift", S("ʃ ɪ f t")), ("drift", S("d r ɪ f t")), ("adopt", S("ə d ɑ p t")),
    ("accept", S("æ k s ɛ p t")), ("attempt", S("ə t ɛ m p t")), ("insist", S("ɪ n s ɪ s t")),
    ("exist", S("ɪ g z ɪ s t")), ("test", S("t ɛ s t")), ("rest", S("r ɛ s t")),
    ("trust", S("t r ʌ s t")), ("twist", S("t w ɪ s t")), ("boast", S("b oʊ s t")),
    ("toast", S("t oʊ s t")), ("add", S("æ d")), ("decide", S("d ɪ s aɪ d")),
    ("divide", S("d ɪ v aɪ d")), ("provide", S("p r ə v aɪ d")), ("guide", S("g aɪ d")),
    ("fade", S("f eɪ d")), ("trade", S("t r eɪ d")), ("load", S("l oʊ d")),
    ("nod", S("n ɑ d")), ("guard", S("g ɑ r d")), ("record", S("r ɪ k ɔ r d")),
    ("reward", S("r ɪ w ɔ r d")), ("avoid", S("ə v ɔɪ d")), ("end", S("ɛ n d")),
    ("mend", S("m ɛ n d")), ("defend", S("d ɪ f ɛ n d")), ("demand", S("d ɪ m æ n d")),
    ("expand", S("ɪ k s p æ n d")), ("land", S("l æ n d")), ("sound", S("s aʊ n d")),
    ("found", S("f aʊ n d")),
]

# curated training frequencies for common regulars; everything else gets
# a Zipf tail
REAL_REG_FREQ = {
    "want": 2500, "use": 2400, "call": 1900, "work": 1800, "look": 1700,
    "ask": 1500, "seem": 1300, "help": 1100, "play": 900, "turn": 850,
    "start": 800, "talk": 760, "need": 740, "move": 700, "live": 650,
    "walk": 600, "like": 580, "happen": 560, "watch": 520, "try": 500,
    "open": 460, "stay": 440, "stop": 420, "add": 400, "follow": 380,
    "learn": 360, "change": 340, "visit": 320, "allow": 300, "expect": 280,
}

# frequency ranking for the heavy head of the training irregulars
IRR_FREQ_ORDER = [
    "say", "go", "get", "see", "come", "take", "think", "find", "tell",
    "stand", "hold", "hear", "run", "bring", "write", "sit", "speak",
    "meet", "read", "lead", "understand", "buy", "fall", "feed", "give",
]

# the frozen test set: 60 regulars (20 per class) and 20 irregulars
TEST_IRREGULARS = [
    "abide", "plead", "hide",          # vc (abide, plead dual-form)
    "dream", "deal",                   # vc_t (dream dual-form)
    "foretell", "retell", "flee",      # vc_d
    "beseech", "seek", "fight",        # ruck (beseech dual-form)
    "send", "lend", "dwell",           # weak
    "quit", "set", "put",              # level (quit dual-form)
    "forgo", "undo", "outdo",          # other
]
TEST_REGULARS_D = [
    "fine", "clean", "wave", "blame", "annoy", "sigh", "borrow", "soothe",
    "scan", "roam", "storm", "warn", "yell", "sail", "hug", "drag",
    "bathe", "charge", "smile", "employ",
]
TEST_REGULARS_T = [
    "coach", "unleash", "dislike", "hitchhike", "triumph", "bake", "kick",
    "knock", "march", "wish", "crash", "cough", "sniff", "clap", "wrap",
    "guess", "notice", "release", "mix", "box",
]
TEST_REGULARS_ID = [
    "wait", "vote", "hunt", "paint", "print", "shout", "doubt", "edit",
    "collect", "protect", "lift", "drift", "adopt", "attempt", "insist",
    "twist", "toast", "fade", "mend", "expand",
]

# ---------------------------------------------------------------------------
# synthetic regular filler
# ---------------------------------------------------------------------------

ONSETS = [
    (), ("b",), ("d",), ("g",), ("v",), ("z",), ("m",), ("n",), ("l",), ("r",),
    ("w",), ("j",), ("p",), ("t",), ("k",), ("f",), ("s",), ("h",), ("ʃ",),
    ("tʃ",), ("dʒ",), ("θ",), ("ð",),
    ("b", "l"), ("b", "r"), ("d", "r"), ("f", "l"), ("f", "r"), ("g", "l"),
    ("g", "r"), ("k", "l"), ("k", "r"), ("p", "l"), ("p", "r"), ("s", "k"),
    ("s", "l"), ("s", "m"), ("s", "n"), ("s", "p"), ("s", "t"), ("t", "r"),
    ("t", "w"), ("θ", "r"), ("ʃ", "r"), ("s", "k", "r"), ("s", "p", "l"),
    ("s", "p", "r"), ("s", "t", "r"), ("k", "w"), ("d", "w"), ("s", "w"),
]
CODAS_ID = [
    ("t",), ("d",), ("s", "t"), ("n", "t"), ("n", "d"), ("f", "t"),
    ("k", "t"), ("p", "t"), ("l", "d"), ("r", "d"), ("r", "t"), ("l", "t"),
    ("m", "d"), ("z", "d"), ("ŋ", "d"), ("m", "p", "t"),
]
CODAS_T = [
    ("p",), ("k",), ("f",), ("θ",), ("s",), ("ʃ",), ("tʃ",),
    ("m", "p"), ("ŋ", "k"), ("s", "k"), ("s", "p"), ("k", "s"), ("p", "s"),
    ("l", "p"), ("l", "k"), ("r", "k"), ("r", "p"), ("r", "s"), ("l", "f"),
    ("r", "f"), ("n", "s"), ("n", "tʃ"), ("l", "tʃ"), ("r", "tʃ"),
]
CODAS_D = [
    (), ("b",), ("g",), ("v",), ("ð",), ("z",), ("ʒ",), ("dʒ",), ("m",),
    ("n",), ("ŋ",), ("l",), ("r",),
    ("r", "b"), ("r", "g"), ("r", "m"), ("r", "n"), ("l", "m"), ("r", "v"),
    ("l", "v"), ("n", "z"), ("l", "z"), ("r", "z"), ("n", "dʒ"), ("l", "dʒ"),
    ("r", "dʒ"),
]
PREFIXES = [
    ("ə",), ("r", "ɪ"), ("d", "ɪ"), ("b", "ɪ"), ("p", "r", "ə"), ("k", "ə"),
    ("ɪ", "n"), ("ʌ", "n"), ("ɛ", "n"), ("d", "ɪ", "s"), ("m", "ɪ", "s"),
    ("oʊ", "v", "ɝ"), ("ʌ", "n", "d", "ɝ"),
]

SPELL = {
    "i": "ee", "ɪ": "i", "ɛ": "e", "æ": "a", "ə": "a", "ʌ": "u", "ɑ": "o",
    "ɔ": "au", "ʊ": "oo", "u": "oo", "ɝ": "ur", "aɪ": "ie", "aʊ": "ow",
    "ɔɪ": "oy", "eɪ": "ai", "oʊ": "oa",
    "b": "b", "d": "d", "g": "g", "v": "v", "ð": "th", "z": "z", "ʒ": "zh",
    "dʒ": "j", "m": "m", "n": "n", "ŋ": "ng", "l": "l", "r": "r", "w": "w",
    "j": "y", "p": "p", "t": "t", "k": "k", "f": "f", "θ": "th", "s": "s",
    "ʃ": "sh", "tʃ": "ch", "h": "h",
}


def spell_out(stem, taken):
    base = "".join(SPELL[p] for p in stem)
    for suffix in ("", "e", "o", "y", "a"):
        cand = base + suffix
        if cand not in taken:
            return cand
    i = 2
    while f"{base}{i}" in taken:
        i += 1
    return f"{base}{i}"


def make_synthetic_stems(rng, n_per_class, reserved_stems, taken_lemmas):
    """Generate n fresh stems for each regular class."""
    codas = {"id": CODAS_ID, "t": CODAS_T, "d": CODAS_D}
    seen = set(reserved_stems)
    out = {"id": [], "t": [], "d": []}
    for cls in ("d", "t", "id"):
        while len(out[cls]) < n_per_class[cls]:
            onset = ONSETS[rng.integers(0, len(ONSETS))]
            nucleus = VOWELS[rng.integers(0, len(VOWELS))]
            coda = codas[cls][rng.integers(0, len(codas[cls]))]
            stem = tuple(onset) + (nucleus,) + tuple(coda)
            if rng.uniform() < 0.35:
                stem = tuple(PREFIXES[rng.integers(0, len(PREFIXES))]) + stem
            if len(stem) < 2 or stem in seen:
                continue
            if allomorph_for(stem) != cls:
                continue
            lemma = spell_out(stem, taken_lemmas)
            seen.add(stem)
            taken_lemmas.add(lemma)
            out[cls].append((lemma, list(stem)))
    return out


# ---------------------------------------------------------------------------
# nonce verbs
# ---------------------------------------------------------------------------

NONCE_SINGLE = [
    ("b aɪ z", "b oʊ z"), ("g l i d", "g l ɛ d"), ("f l i p", "f l ɛ p t"),
    ("ʃ i", "ʃ oʊ"), ("n eɪ s", "n ɑ s"), ("b l eɪ f", "b l oʊ f"),
    ("b r ɛ dʒ", "b r ɑ dʒ"), ("tʃ eɪ k", "tʃ ʊ k"), ("tʃ u l", "tʃ oʊ l"),
    ("d eɪ p", "d ʊ p"), ("d aɪ z", "d oʊ z"), ("d r aɪ s", "d r oʊ s"),
    ("d r ɪ t", "d r ɪ t"), ("f l ɪ dʒ", "f l ʌ dʒ"), ("f r oʊ", "f r u"),
    ("g ɛ r", "g ɔ r"), ("g ɛ z", "g ɑ z"), ("g l ɪ p", "g l ʌ p"),
    ("g l ɪ t", "g l ɪ t"), ("g r i m", "g r ɛ m t"), ("g r ɛ l", "g r oʊ l d"),
    ("g u d", "g ʌ d"), ("k aɪ v", "k oʊ v"), ("l ʌ m", "l eɪ m"),
    ("m ɝ n", "m ɔ r n"), ("n oʊ l d", "n ɛ l d"), ("n ʌ ŋ", "n æ ŋ"),
    ("p æ ŋ k", "p ʌ ŋ k"), ("p l ɪ m", "p l æ m"), ("r æ s k", "r ʊ s k"),
    ("s k ɔɪ l", "s k oʊ l"), ("s k r aɪ d", "s k r oʊ d"), ("ʃ ɪ l k", "ʃ ʌ l k"),
    ("ʃ ɝ n", "ʃ ɔ r n"), ("s l eɪ m", "s l ʊ m"), ("s n ɛ l", "s n oʊ l"),
    ("s p æ k", "s p ʌ k"), ("s t ɪ n", "s t ʌ n"), ("s t ɪ p", "s t ʌ p"),
    ("t i p", "t ɛ p t"), ("t ɛ ʃ", "t ɑ ʃ"), ("t ʌ ŋ k", "t æ ŋ k"),
]
NONCE_DOUBLE = [
    ("p r i k", "p r ɛ k", "p r oʊ k"), ("r aɪ f", "r oʊ f", "r ɪ f"),
    ("k w i d", "k w ɛ d", "k w ɪ d"), ("s p l ɪ ŋ", "s p l æ ŋ", "s p l ʌ ŋ"),
    ("k r ɪ ŋ k", "k r æ ŋ k", "k r ʌ ŋ k"), ("z eɪ", "z ɛ d", "z u"),
    ("b r aɪ v", "b r oʊ v", "b r ɪ v"), ("ʃ i l", "ʃ oʊ l", "ʃ ɛ l t"),
    ("g l i t", "g l ɛ t", "g l ɪ t"), ("t r æ s k", "t r ʊ s k", "t r ɔ s k"),
    ("p l aɪ d", "p l oʊ d", "p l ɪ d"), ("d r i p", "d r ɛ p t", "d r ʌ p"),
    ("s t aɪ r", "s t oʊ r", "s t ɝ d"), ("w ɪ s", "w ʌ s", "w ɔ s"),
    ("tʃ i d", "tʃ ɛ d", "tʃ oʊ d"), ("f l i n", "f l ɛ n", "f l u n"),
]


def build_nonce_rows(rng):
    rows = []
    for i, entry in enumerate(NONCE_SINGLE + [d[:2] for d in NONCE_DOUBLE]):
        pass
    all_entries = [(s, [i1], ) for s, i1 in NONCE_SINGLE] + [
        (s, [i1, i2]) for s, i1, i2 in NONCE_DOUBLE
    ]
    for stem_str, irrs in all_entries:
        stem = stem_str.split()
        reg = " ".join(regular_past(stem))
        ppro_reg = round(float(rng.uniform(0.35, 0.92)), 3)
        ppro_irr1 = 0.0 if stem_str == "n eɪ s" else round(float(rng.uniform(0.0, min(0.45, 1 - ppro_reg))), 3)
        rate_reg = round(float(rng.uniform(4.5, 6.9)), 2)
        rate_irr1 = round(float(rng.uniform(1.5, 5.5)), 2)
        if len(irrs) == 2:
            ppro_irr2 = round(float(rng.uniform(0.0, max(0.0, 1 - ppro_reg - ppro_irr1))), 3)
            rate_irr2 = round(float(rng.uniform(1.5, 5.0)), 2)
            rows.append((stem_str, reg, irrs[0], irrs[1],
                         ppro_reg, ppro_irr1, ppro_irr2, rate_reg, rate_irr1, rate_irr2))
        else:
            rows.append((stem_str, reg, irrs[0], "",
                         ppro_reg, ppro_irr1, "", rate_reg, rate_irr1, ""))
    return rows


# ---------------------------------------------------------------------------
# assembly
# ---------------------------------------------------------------------------


def zipf_exact(rng, n, total, head=None, alpha=1.0, floor=1):
    """n positive ints summing exactly to total, roughly Zipf-distributed;
    `head` optionally pins the first len(head) values."""
    head = list(head or [])
    raw = np.array([1.0 / (r + 1) ** alpha for r in range(n - len(head))])
    rest_total = total - sum(head)
    vals = np.maximum(np.round(raw / raw.sum() * (rest_total - floor * raw.size) ).astype(int) + floor, floor)
    vals = head + list(vals)
    # correct the rounding drift on the largest non-head value
    drift = total - sum(vals)
    j = len(head)
    vals[j] += drift
    assert vals[j] >= 1, "drift correction drove a frequency negative"
    assert sum(vals) == total
    return vals


def main():
    rng = np.random.Generator(np.random.Philox(key=20240801))

    real_lemmas = {l for l, *_ in PURE_IRREGULARS} | {l for l, *_ in AMBIGUOUS} | {
        l for l, _ in REAL_REGULARS
    }
    real_stems = {tuple(s) for _, s, *_ in PURE_IRREGULARS} | {
        tuple(s) for _, s, *_ in AMBIGUOUS
    } | {tuple(s) for _, s in REAL_REGULARS}
    nonce_stems = {tuple(s.split()) for s, *_ in NONCE_SINGLE} | {
        tuple(s.split()) for s, *_ in NONCE_DOUBLE
    }

    # how many synthetics per class
    real_by_class = Counter(allomorph_for(s) for _, s in REAL_REGULARS)
    target = {"d": 2045, "t": 763, "id": 1049}
    need = {c: target[c] - real_by_class[c] for c in target}
    assert all(v > 0 for v in need.values()), need

    synth = make_synthetic_stems(
        rng, need, real_stems | nonce_stems, set(real_lemmas)
    )

    regulars = list(REAL_REGULARS) + [
        (lemma, stem) for cls in ("d", "t", "id") for lemma, stem in synth[cls]
    ]
    assert len(regulars) == 3857
    assert Counter(allomorph_for(s) for _, s in regulars) == target

    test_set = set(TEST_IRREGULARS) | set(TEST_REGULARS_D) | set(TEST_REGULARS_T) | set(TEST_REGULARS_ID)
    assert len(test_set) == 80

    # --- frequencies -------------------------------------------------------
    # training pure irregulars: Zipf head pinned by the common-verb ranking
    train_pure_irr = [v for v in PURE_IRREGULARS if v[0] not in test_set]
    assert len(train_pure_irr) == 135
    order = {lemma: i for i, lemma in enumerate(IRR_FREQ_ORDER)}
    train_pure_irr.sort(key=lambda v: (order.get(v[0], len(order)), v[0]))
    head = [7000, 5400, 4400, 3500, 3000, 2600, 2200, 1900, 1650, 1400,
            1200, 1050, 900, 800, 700, 620, 540, 480, 430, 390,
            350, 310, 280, 250, 230]
    irr_freq_list = zipf_exact(rng, 135, PURE_IRR_TRAIN_TOKENS, head=head, alpha=0.9)
    irr_freq = {v[0]: f for v, f in zip(train_pure_irr, irr_freq_list)}
    # test irregulars get plausible but sum-irrelevant values
    for lemma, f in [("seek", 310), ("fight", 520), ("send", 640), ("lend", 90),
                     ("dwell", 45), ("set", 1210), ("put", 2050), ("hide", 140),
                     ("foretell", 12), ("retell", 18), ("flee", 70), ("deal", 410),
                     ("forgo", 9), ("undo", 35), ("outdo", 11)]:
        irr_freq[lemma] = f

    amb_irr_freq = dict(AMB_IRR_FREQ)
    for lemma in ("abide", "plead", "dream", "beseech", "quit"):  # test dual-forms
        amb_irr_freq[lemma] = {"abide": 2, "plead": 4, "dream": 9, "beseech": 1, "quit": 11}[lemma]
    assert sum(f for l, f in amb_irr_freq.items() if l not in test_set) == AMB_IRR_TRAIN_TOKENS

    # regular rows: curated head + synthetic tail, exact-sum corrected
    amb_reg_freq = {}
    for lemma, *_ in AMBIGUOUS:
        amb_reg_freq[lemma] = AMB_REG_FREQ_SPECIAL.get(lemma, int(rng.integers(1, 9)))
    train_reg_rows = [lemma for lemma, _ in regulars if lemma not in test_set]
    train_amb_reg = [lemma for lemma, *_ in AMBIGUOUS if lemma not in test_set]
    assert len(train_reg_rows) + len(train_amb_reg) == 3824
    fixed = sum(amb_reg_freq[l] for l in train_amb_reg)
    curated = {l: f for l, f in REAL_REG_FREQ.items() if l not in test_set}
    fixed += sum(curated.values())
    tail_lemmas = [l for l in train_reg_rows if l not in curated]
    tail = zipf_exact(rng, len(tail_lemmas), REG_TRAIN_TOKENS - fixed, alpha=0.85)
    reg_freq = dict(curated)
    reg_freq.update({l: f for l, f in zip(tail_lemmas, tail)})
    for lemma in test_set - set(TEST_IRREGULARS):
        reg_freq[lemma] = int(rng.integers(20, 400))

    # --- rows --------------------------------------------------------------
    rows = []
    for lemma, stem in regulars:
        cls = allomorph_for(stem)
        rows.append((lemma, stem, list(regular_past(stem)), "reg", cls, reg_freq[lemma]))
    for lemma, stem, past, cls in PURE_IRREGULARS:
        rows.append((lemma, stem, past, "irreg", cls, irr_freq[lemma]))
    for lemma, stem, past, cls in AMBIGUOUS:
        rows.append((lemma, stem, list(regular_past(stem)), "reg", allomorph_for(stem), amb_reg_freq[lemma]))
        rows.append((lemma, stem, past, "irreg", cls, amb_irr_freq[lemma]))
    rows.sort(key=lambda r: (r[0], r[3] != "reg"))

    DATA_DIR.mkdir(parents=True, exist_ok=True)
    with open(DATA_DIR / "lexicon.tsv", "w", encoding="utf-8") as fh:
        fh.write("lemma_orth\tstem_ipa\tpast_ipa\tregularity\tverb_class\tcelex_freq\n")
        for lemma, stem, past, reg, cls, freq in rows:
            fh.write(f"{lemma}\t{' '.join(stem)}\t{' '.join(past)}\t{reg}\t{cls}\t{freq}\n")

    with open(DATA_DIR / "test_verbs.txt", "w", encoding="utf-8") as fh:
        for lemma in TEST_IRREGULARS + TEST_REGULARS_D + TEST_REGULARS_T + TEST_REGULARS_ID:
            fh.write(lemma + "\n")

    nonce_rows = build_nonce_rows(np.random.Generator(np.random.Philox(key=20240802)))
    with open(DATA_DIR / "nonce.tsv", "w", encoding="utf-8") as fh:
        fh.write("verb_ipa\tregular_past_ipa\tirregular_past_ipa_1\tirregular_past_ipa_2\t"
                 "human_ppro_reg\thuman_ppro_irr1\thuman_ppro_irr2\t"
                 "rating_reg\trating_irr1\trating_irr2\n")
        for row in nonce_rows:
            fh.write("\t".join(str(x) for x in row) + "\n")

    # --- self checks -------------------------------------------------------
    lemmas = {r[0] for r in rows}
    assert len(lemmas) == 4039
    by_lemma = {}
    for r in rows:
        by_lemma.setdefault(r[0], []).append(r)
    n_amb = sum(1 for v in by_lemma.values() if len(v) == 2)
    n_reg = sum(1 for v in by_lemma.values() if len(v) == 1 and v[0][3] == "reg")
    n_irr = sum(1 for v in by_lemma.values() if len(v) == 1 and v[0][3] == "irreg")
    assert (n_reg, n_irr, n_amb) == (3857, 150, 32), (n_reg, n_irr, n_amb)

    cls_counts = Counter()
    for lemma, readings in by_lemma.items():
        if len(readings) == 2:
            cls_counts[[r for r in readings if r[3] == "irreg"][0][4]] += 1
        else:
            cls_counts[readings[0][4]] += 1
    assert cls_counts == Counter({"d": 2045, "t": 763, "id": 1049, "vc": 125,
                                  "vc_t": 12, "vc_d": 10, "ruck": 8, "weak": 9,
                                  "level": 11, "other": 7}), cls_counts

    train = {l: v for l, v in by_lemma.items() if l not in test_set}
    assert len(train) == 3959
    pure_irr_tok = sum(v[0][5] for v in train.values() if len(v) == 1 and v[0][3] == "irreg")
    amb_irr_tok = sum(r[5] for v in train.values() if len(v) == 2 for r in v if r[3] == "irreg")
    reg_tok = sum(r[5] for v in train.values() for r in v if r[3] == "reg")
    assert pure_irr_tok == PURE_IRR_TRAIN_TOKENS, pure_irr_tok
    assert amb_irr_tok == AMB_IRR_TRAIN_TOKENS, amb_irr_tok
    assert reg_tok == REG_TRAIN_TOKENS, reg_tok

    token_both = pure_irr_tok + amb_irr_tok + reg_tok
    token_irr = pure_irr_tok + 3824
    assert token_both == 147_711
    assert token_irr == 49_983
    shares = {
        "type_reg": 135 / 3959, "type_irr": 162 / 3959,
        "token_both": (pure_irr_tok + amb_irr_tok) / token_both,
        "token_irr": pure_irr_tok / token_irr,
    }
    printed = {k: f"{100 * v:.1f}" for k, v in shares.items()}
    assert printed == {"type_reg": "3.4", "type_irr": "4.1",
                       "token_both": "31.3", "token_irr": "92.3"}, printed

    used = {p for r in rows for p in r[1]} | {p for r in rows for p in r[2]}
    assert used == set(INVENTORY), set(INVENTORY) - used

    assert len(nonce_rows) == 58
    assert sum(1 for r in nonce_rows if r[3]) == 16

    print(f"lexicon.tsv: {len(rows)} rows, {len(lemmas)} verbs "
          f"({n_reg} reg / {n_irr} irreg / {n_amb} dual)")
    print(f"training token sums: type 3959, token_both {token_both}, token_irr {token_irr}")
    print("irregular shares:", printed)
    print("nonce.tsv: 58 verbs (16 with two irregular forms)")


if __name__ == "__main__":
    main()
