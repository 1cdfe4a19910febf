"""Exception hierarchy shared by all modules."""


class RobustUPError(Exception):
    """Base class for errors raised by this package."""


class DegenerateInputError(RobustUPError, ValueError):
    """An operation received an input outside its domain (e.g. the zero polynomial)."""


class ModeMismatchError(RobustUPError, ValueError):
    """A discrete-only operation got a continuous instance, or vice versa."""


class ToleranceNotMetError(RobustUPError, ArithmeticError):
    """A numeric routine could not certify the requested error bound."""


class InstanceParseError(RobustUPError, ValueError):
    """Malformed instance file. ``path`` names the offending field."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
