"""Exception types shared across the package."""

from __future__ import annotations


class BraidForgeError(Exception):
    """Base class for domain errors."""


class WordError(BraidForgeError, ValueError):
    """Invalid braid word input."""


class MoveError(BraidForgeError, ValueError):
    """A word move is not applicable where requested."""


class StrandMismatchError(BraidForgeError, ValueError):
    """Operation on words with different strand counts."""


class LinkingStructureError(BraidForgeError):
    """A linking-graph region violates the expected boundary structure.

    Raised instead of proceeding silently; the message reports the
    offending face so it can be inspected.
    """


class NotAForestError(BraidForgeError, ValueError):
    """Tree comparison was asked of a graph containing a cycle."""


class ResourceCapError(BraidForgeError):
    """A configured search limit was exceeded; never a wrong answer."""
