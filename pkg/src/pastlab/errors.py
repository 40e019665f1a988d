"""Exception taxonomy shared across the package."""


class PastlabError(Exception):
    """Base class for all package errors."""


class ShapeError(PastlabError):
    """Tensor shapes are incompatible with the requested operation."""


class NumericError(PastlabError):
    """Non-finite values where finite values are required."""


class UsageError(PastlabError):
    """An operation was called outside its contract."""


class DataError(PastlabError):
    """Input data (lexicon, nonce file, token ids) is invalid."""


class ConfigError(PastlabError):
    """Invalid model or run configuration."""


class SplitError(DataError):
    """A train/dev split cannot be formed (stratum too small)."""


class ResampleError(DataError):
    """An epoch resampling target cannot be met."""


class ScoringError(PastlabError):
    """Evaluation input is incomplete (e.g. a verb is missing a prediction)."""


class CheckpointError(PastlabError):
    """Checkpoint file is malformed or inconsistent with its config."""
