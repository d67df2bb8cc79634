"""Exception hierarchy for the toolkit.

``DataError`` subclasses map to CLI exit code 2; anything else surfacing at
the command layer is treated as a usage error (exit code 1).
"""


class ToolkitError(Exception):
    """Base class for all toolkit errors."""


class ConfigError(ToolkitError):
    """A configuration file or flag value is invalid."""


class DataError(ToolkitError):
    """Input data violated a contract of the operation."""


class EmptyCorpus(DataError):
    pass


class LineCountMismatch(DataError):
    pass


class MalformedRow(DataError):
    pass


class UnknownLanguage(DataError):
    pass


class DuplicateLemma(DataError):
    pass


class TokenTooShort(DataError):
    pass


class DimensionMismatch(DataError):
    pass


class EmptyMatrix(DataError):
    pass


class MissingResource(DataError):
    pass


class PlanMismatch(DataError):
    pass


class LengthMismatch(DataError):
    pass


class EmptyInput(DataError):
    pass


class HeaderMismatch(DataError):
    pass


class RaggedRow(DataError):
    pass


class EmptySet(DataError):
    pass


class ZeroVector(DataError):
    pass


class EndpointUnreachable(DataError):
    pass


# Vector-dimension disagreement between embedding sets; kept as a distinct
# name from DimensionMismatch (which is about token-grid shapes).
class DimMismatch(DataError):
    pass
