"""Exception types shared across the package."""


class EmbedBenchError(Exception):
    """Base class for all errors raised by this package."""


class CorpusError(EmbedBenchError):
    """A corpus file or corpus value violates its contract.

    ``line`` carries the 1-based line number for record-level problems,
    or None for whole-file problems.
    """

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ConfigurationError(EmbedBenchError):
    """A spec, config file, or resource wiring is invalid."""


class TrainingError(EmbedBenchError):
    """An iterative trainer diverged or produced non-finite values."""
