"""Exception types shared across the package."""

from __future__ import annotations


class SocleError(Exception):
    """Base class for all library errors."""


class OrderBoundExceeded(SocleError):
    """A construction or search would exceed the configured size cap."""


class NotNormal(SocleError):
    """An operation required a normal subgroup and got one that is not."""


class NotAHomomorphism(SocleError):
    """Generator images do not extend to a homomorphism."""


class NotMonomorphism(SocleError):
    """An operation required an injective homomorphism."""


class NotAbelian(SocleError):
    """An operation required an abelian group."""


class TrivialGroup(SocleError):
    """An operation required a nontrivial group."""


class InvalidAction(SocleError):
    """Generator images do not define a valid group action."""


class PreconditionFailed(SocleError):
    """A certified operation was called outside its hypothesis."""


class UnknownSuite(SocleError):
    """Requested verification suite is not registered."""


class SpecSyntaxError(SocleError):
    """Group-spec text failed to parse.

    `offset` is the byte offset of the failure; `expected` lists what the
    parser would have accepted there.
    """

    def __init__(self, offset: int, expected: tuple[str, ...], found: str = ""):
        self.offset = offset
        self.expected = expected
        self.found = found
        want = " | ".join(expected)
        super().__init__(f"at offset {offset}: expected {want}, found {found!r}")


class SpecSemanticError(SocleError):
    """Group-spec parsed but carries invalid parameters."""
