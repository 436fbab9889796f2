"""Exception types shared across the package."""


class BenfordError(Exception):
    """Base class for all benfordlab errors."""


class SpecificationError(BenfordError, ValueError):
    """Invalid specification parameters (bad base, position, interval, ...)."""


class DomainError(BenfordError, ValueError):
    """Value outside the mathematical domain of an operation."""


class IngestError(BenfordError):
    """Base class for dataset ingestion failures."""


class FileUnreadableError(IngestError):
    """Input file missing or not readable/parseable."""


class ColumnMissingError(IngestError):
    """Requested column is not present in the input."""


class NoUsableValuesError(IngestError):
    """Cleaning pass left zero usable values."""
