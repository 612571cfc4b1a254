"""Online arena server and its wire-protocol client."""

from .client import OnlineEnv, make_online
from .matchmaking import QueueState, Ticket, sweep
from .service import ArenaServer
from .store import MatchStore

__all__ = [
    "ArenaServer",
    "MatchStore",
    "OnlineEnv",
    "QueueState",
    "Ticket",
    "make_online",
    "sweep",
]
