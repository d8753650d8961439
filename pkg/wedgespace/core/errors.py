"""Exceptions raised while describing spaces and loading group data."""

from typing import Optional


class SpaceError(ValueError):
    """Base class for space descriptor and table errors."""


class ParseError(SpaceError):
    """Malformed expression; `position` is a 0-based offset into `text`."""

    def __init__(self, message: str, text: str = "", position: int = 0):
        self.message = message
        self.text = text
        self.position = position
        super().__init__(f"{message} at offset {position}")

    def caret(self) -> str:
        """The source line with a caret under the offending offset."""
        return f"{self.text}\n{' ' * self.position}^"


class NotSimplyConnectedError(SpaceError):
    def __init__(self, summand: str, position: Optional[int] = None):
        self.summand = summand
        self.position = position
        super().__init__(f"Summand {summand} is not simply connected")


class UnsupportedSpaceError(SpaceError):
    pass


class EmptySmashError(SpaceError):
    pass


class TableLoadError(SpaceError):
    """A group-table file or entry could not be loaded; `entry` names it."""

    def __init__(self, message: str, entry: Optional[str] = None):
        self.entry = entry
        super().__init__(f"{entry}: {message}" if entry else message)
