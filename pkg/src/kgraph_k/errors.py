"""Exception hierarchy.

Every error raised on purpose by the package derives from :class:`KGraphError`.
The CLI maps :class:`InvalidInput` (and subclasses) to exit code 1 and
:class:`Unsupported` (and subclasses) to exit code 2.
"""

from __future__ import annotations


class KGraphError(Exception):
    """Base class for all package errors."""


class InvalidInput(KGraphError, ValueError):
    """Input data is malformed or violates a necessary condition."""


class Unsupported(KGraphError):
    """The request is well formed but outside what the package computes."""


class SubgroupNotContained(InvalidInput):
    """A generator of a would-be subgroup lies outside the ambient kernel."""


class InvalidFamily(InvalidInput):
    """A vertex-matrix family failed validation; carries the report."""

    def __init__(self, report, message: str | None = None):
        self.report = report
        if message is None:
            message = "invalid vertex-matrix family: " + "; ".join(
                f"{f.kind}: {f.detail}" for f in report.failures
            )
        super().__init__(message)


class RankNotOne(InvalidInput):
    """A product factor is not a 1-graph skeleton."""


class LabelOutOfRange(InvalidInput):
    """An edge label is missing or is not an element of the group."""


class UnsupportedRank(Unsupported):
    """The operation is only defined for a specific rank k."""


class UnsupportedGroup(Unsupported):
    """Skew products are only built for finite abelian groups."""


class RankMismatch(InvalidInput):
    """Two families of different rank were compared."""
