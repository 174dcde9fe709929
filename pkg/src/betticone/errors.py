"""Exception types shared across the package.

The split matters for the CLI contract: malformed serialized input exits
with status 1, a violated operation precondition (not-in-cone, bad cone
parameters) exits with status 2, and an internal verification failure
exits with status 3.
"""

from __future__ import annotations


class MalformedInputError(ValueError):
    """Serialized input (JSON sequence, rational string, CSV flag) is unparseable."""


class ConeInputError(ValueError):
    """A well-formed value violates an operation's precondition."""


class NotInConeError(ConeInputError):
    """Membership precondition failed; carries the violated constraints.

    ``violations`` is a list of ``(name, value)`` pairs where ``name`` is a
    constraint label such as ``"chi[1,2]"`` and ``value`` is the (negative
    or nonzero) exact rational it evaluated to.
    """

    def __init__(self, message: str, violations=()):
        super().__init__(message)
        self.violations = list(violations)


class InternalInconsistencyError(RuntimeError):
    """A state that should be impossible for valid inputs; signals a bug."""
