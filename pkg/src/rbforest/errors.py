"""Exception hierarchy."""


class RotaBaxterError(Exception):
    """Base class for errors raised by this package."""


class AlphabetError(RotaBaxterError, KeyError):
    """A symbol is not in the alphabet, or has no assigned value."""

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class DecorationError(RotaBaxterError, ValueError):
    """Decoration vector length does not match ``leaves - 1``."""


class UnsupportedTermError(RotaBaxterError, ValueError):
    """A term cannot be mapped into a nonunitary target."""


class PreconditionError(RotaBaxterError, ValueError):
    """An operation's input violates its documented precondition."""


class ParseError(RotaBaxterError, ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}")
        self.message = message
        self.position = position
        self.text = text
