"""Exception hierarchy shared by every module."""


class RIndexError(Exception):
    """Base class for all errors raised by this package."""


class TerminatorInInput(RIndexError, ValueError):
    """The raw text contains the reserved terminator byte 0."""


class NotSorted(RIndexError, ValueError):
    pass


class OutOfUniverse(RIndexError, IndexError):
    pass


class RankOutOfRange(RIndexError, IndexError):
    pass


class OutOfRange(RIndexError, IndexError):
    pass


class WindowsNotBuilt(RIndexError):
    """A query needs the s-window tables, but the index was built without them."""


class SectionMissing(RIndexError):
    """The index file lacks an optional section required by the query."""


class BadIndex(RIndexError, ValueError):
    """The index file is malformed, has a bad checksum, or an unknown version."""
