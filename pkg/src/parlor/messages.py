"""Sender-attributed text events with per-player visibility.

Every observation in the arena is an ordered slice of one global message
log, filtered down to what a given seat is allowed to see.
"""

from __future__ import annotations

from dataclasses import dataclass, field

# Distinguished sender index for messages emitted by the game itself.
GAME = -1


@dataclass(frozen=True)
class Message:
    """One text event.

    ``to`` is either ``None`` (broadcast to every seat) or an explicit
    non-empty set of seat indices allowed to see the message.
    """

    sender: int
    content: str
    to: frozenset[int] | None = None

    def __post_init__(self):
        if not self.content:
            raise ValueError("message content must be non-empty")
        if self.sender < GAME:
            raise ValueError(f"bad sender index {self.sender}")
        if self.to is not None:
            if not isinstance(self.to, frozenset):
                object.__setattr__(self, "to", frozenset(self.to))
            if not self.to:
                raise ValueError("explicit visibility set must be non-empty")

    def visible_to(self, viewer: int) -> bool:
        return self.to is None or viewer in self.to

    def sender_label(self) -> str:
        return "GAME" if self.sender == GAME else f"Player {self.sender}"


def broadcast(sender: int, content: str) -> Message:
    return Message(sender, content)


def private(sender: int, content: str, *viewers: int) -> Message:
    return Message(sender, content, frozenset(viewers))


@dataclass(frozen=True)
class Observation:
    """The messages one viewer may see, in global emission order."""

    viewer: int
    messages: tuple[Message, ...] = field(default_factory=tuple)

    def render_prompt(self) -> str:
        """Render the visible history as one prompt, one line per message."""
        return "\n".join(f"[{m.sender_label()}] {m.content}" for m in self.messages)


def visible_slice(log: list[Message], viewer: int) -> tuple[Message, ...]:
    return tuple(m for m in log if m.visible_to(viewer))
