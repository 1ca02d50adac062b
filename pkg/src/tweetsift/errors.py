"""Exception types shared across the package."""


class TweetsiftError(Exception):
    """Base class for all errors raised by this package."""


class ContractViolation(TweetsiftError, ValueError):
    """An argument broke a documented precondition."""


class DatasetFormatError(TweetsiftError, ValueError):
    """A dataset or prediction file could not be parsed."""


class EmbeddingLoadError(TweetsiftError, ValueError):
    """An embedding file failed validation."""


class FitError(TweetsiftError, ValueError):
    """Feature fitting failed (e.g. empty corpus)."""


class TrainingError(TweetsiftError, ValueError):
    """Model training failed (e.g. single-class data, divergence)."""


class EvaluationError(TweetsiftError, ValueError):
    """Evaluation inputs were inconsistent."""
