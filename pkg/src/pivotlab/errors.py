"""Exception taxonomy. The CLI maps these onto process exit codes."""


class PivotLabError(Exception):
    """Base class for all package errors."""


class DimensionError(PivotLabError):
    """Shapes or axis sizes are incompatible."""


class ParameterError(PivotLabError):
    """A scalar argument is outside its documented range."""


class ContractError(PivotLabError):
    """An operation was called in a way its contract forbids."""


class DegenerateError(PivotLabError):
    """Input is structurally empty: all positions masked/ignored, empty batch."""


class VocabularyError(PivotLabError):
    """A token or id is unknown to the vocabulary."""


class DataError(PivotLabError):
    """Corpus or file content is malformed or empty."""


class ConfigError(PivotLabError):
    """A configuration value or method name is invalid."""


class NumericError(PivotLabError):
    """A non-finite value appeared at a graph boundary, or training diverged."""
