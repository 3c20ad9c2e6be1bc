"""Exception hierarchy.

Every domain error carries a short ``kind`` (the class name) so callers such
as the command line can report ``ERROR <kind>: <detail>`` uniformly.
"""


class FCAError(Exception):
    """Base class for all domain errors raised by this package."""

    @property
    def kind(self) -> str:
        return type(self).__name__


# context construction and set algebra
class DuplicateName(FCAError):
    pass


class UnknownName(FCAError):
    pass


class InvalidName(FCAError):
    pass


class ContextMismatch(FCAError):
    pass


# scaling
class InvalidScheme(FCAError):
    pass


class UncoveredColumn(FCAError):
    pass


class ValueOutOfRange(FCAError):
    pass


class UnknownCategory(FCAError):
    pass


class InvalidTable(FCAError):
    pass


# lattice
class CapacityExceeded(FCAError):
    pass


class EmptyInput(FCAError):
    pass


# analytics
class UnknownAttribute(UnknownName):
    pass


class NonPartition(FCAError):
    pass


# file formats
class MalformedHeader(FCAError):
    pass


class DimensionMismatch(FCAError):
    pass


class IllegalIncidenceChar(FCAError):
    pass


class RaggedRow(FCAError):
    pass


class NonNumericCell(FCAError):
    pass


class EmptyHeader(FCAError):
    pass


class MissingCell(FCAError):
    pass
