"""Exception types shared across the toolkit."""


class SatiraError(Exception):
    """Base class for all toolkit errors."""


class DataError(SatiraError):
    """Malformed input data: bad records, unknown labels, broken files."""
