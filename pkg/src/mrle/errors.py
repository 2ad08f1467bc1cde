"""Exception hierarchy shared by all codecs and the container."""


class MrleError(ValueError):
    """Base class for corrupt or malformed encoded data."""


class TruncatedInputError(MrleError):
    """The encoded stream ended in the middle of a token or header."""


class InvalidRunByteError(MrleError):
    """A run byte of 0 was found; zero-length runs are unrepresentable."""


class LengthMismatchError(MrleError):
    """A bit payload parsed completely but produced the wrong bit count."""


class FormatError(MrleError):
    """Bad magic, unknown version/mode or reserved bits set in a container."""
