"""Exceptions and the ``UNKNOWN`` marker shared by every module."""

import enum


class PiKernelError(Exception):
    pass


class DomainError(PiKernelError, ValueError):
    """Bad input: invalid group parameter, non-prime, malformed word, ..."""


class UnsupportedGroup(DomainError):
    pass


class NotCovered(PiKernelError):
    """The query is well formed but lies outside the range where the answer is established."""


class OutOfSerreRange(NotCovered):
    pass


class Unknown(enum.Enum):
    UNKNOWN = "unknown"

    def __repr__(self):
        return "UNKNOWN"

    def __str__(self):
        return "unknown"


UNKNOWN = Unknown.UNKNOWN
