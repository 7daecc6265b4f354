"""Exception types raised by the workbench.

Names mirror the failure conditions of the public operations; all inherit
from OddwalkError so callers can catch the whole family at once.
"""


class OddwalkError(Exception):
    pass


class ParseError(OddwalkError):
    """Malformed graph, prefix, or vertex input."""


class UnknownVertex(OddwalkError):
    """A queried vertex id is not part of the graph or gadget."""


class PhiFails(OddwalkError):
    """The queried set admits an odd walk, violating a caller precondition."""


class CoverIncomplete(OddwalkError):
    """The supplied pieces do not cover the vertex set."""


class PieceNotTiny(OddwalkError):
    """A cover piece admits an odd walk between its members."""


class NotHomomorphism(OddwalkError):
    """A vertex map fails to send some edge to an edge."""


class PrefixMismatch(OddwalkError):
    """Two gadgets do not stand in the required prefix relation."""


class NonOddPrefix(OddwalkError):
    """An operation restricted to odd prefix values got an even one."""


class NotLarge(OddwalkError):
    """The profile has no member avoiding two-colorable components."""


class NotMember(OddwalkError):
    """The homomorphism is not in the profile's denotation."""


class OutOfTruncation(OddwalkError):
    """A tower query addresses a level beyond the built depth."""


class InvalidIndex(OddwalkError):
    """A (stage, position) pair violates the index constraint."""


class LevelOutOfRange(OddwalkError):
    """A projection level lies outside the representable range."""


class InvalidVertex(OddwalkError):
    """A symbolic vertex violates its shape constraint for the prefix."""


class GapInsufficient(OddwalkError):
    """The target prefix is too short or too coarse for the requested depth."""
