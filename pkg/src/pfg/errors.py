class PfgError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(PfgError):
    """Invalid configuration, e.g. a malformed trigger set."""


class StructureError(PfgError):
    """A graph or one of its components violates a structural requirement."""


class FormatError(PfgError):
    """Malformed input file (FASTA, GFA or trigger list)."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
