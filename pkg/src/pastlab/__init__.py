"""Phoneme-level transformer laboratory for English past-tense inflection."""

__version__ = "0.1.0"
