"""Exception hierarchy shared across the arena."""


class ArenaError(Exception):
    """Base class for all arena errors."""


class UnknownEnvId(ArenaError):
    def __init__(self, env_id: str):
        super().__init__(f"unknown environment id: {env_id!r}")
        self.env_id = env_id


class PlayerCountOutOfRange(ArenaError):
    def __init__(self, min_players: int, max_players: int, got: int):
        super().__init__(
            f"player count {got} outside allowed range [{min_players}, {max_players}]"
        )
        self.min_players = min_players
        self.max_players = max_players
        self.got = got


class NotResetError(ArenaError):
    """The environment has not been reset yet."""


class AlreadyResetError(ArenaError):
    """The environment was already reset; too late for this operation."""


class TerminalError(ArenaError):
    """The game is over; no further observations or moves."""


class NotTerminalError(ArenaError):
    """The game is still running; terminal-only data is unavailable."""


class NoBracketToken(ArenaError):
    """No well-formed ``[...]`` group in the action text."""


class IllegalAction(ArenaError):
    """A parsed token that the game rules reject."""

    def __init__(self, token: str, why: str = ""):
        detail = f": {why}" if why else ""
        super().__init__(f"illegal action {token!r}{detail}")
        self.token = token
        self.why = why


class BadLength(ArenaError):
    """Guess/secret length does not match what the feedback rule expects."""


class BadSymbol(ArenaError):
    """Guess contains a symbol outside the configured alphabet."""


class NonFiniteInput(ArenaError):
    """Rating update received NaN or infinity."""


class TooFewPlayers(ArenaError):
    """A ranked update needs at least two entries."""


class NoRatedEnvironments(ArenaError):
    """Participant has no per-environment ratings to profile."""


class AuthError(ArenaError):
    """Missing or rejected API credential."""


class MalformedResponse(ArenaError):
    """Chat-completion endpoint returned an unusable payload."""


class TurnTimeout(ArenaError):
    """A seat failed to act before its per-turn clock expired."""


class ReservedName(ArenaError):
    def __init__(self, name: str):
        super().__init__(f"name {name!r} is reserved")
        self.name = name


class NameConflict(ArenaError):
    """Registration name already taken with different credentials."""


class AlreadyQueued(ArenaError):
    """Participant already waiting in a queue or seated in a live match."""
