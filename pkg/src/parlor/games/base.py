"""Shared machinery for the game suite.

Each game is a deterministic rule machine: it consumes parsed action
tokens for the seat to move, mutates its own state, and emits messages
describing every state change a player is allowed to see.  Randomness
comes exclusively from labeled seed streams so that a fixed
(env_id, seed, action sequence) replays byte-identically.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..errors import IllegalAction, NotTerminalError, TerminalError
from ..messages import GAME, Message, broadcast, private

__all__ = [
    "ActionSpace",
    "Game",
    "GameRules",
    "SeedStreams",
    "TerminalInfo",
    "mean_ranks",
    "outcome",
    "ranking_from_scores",
]


@dataclass(frozen=True)
class GameRules:
    """Static metadata for one environment."""

    env_id: str
    min_players: int
    max_players: int
    turn_limit: int
    action_grammar: str
    skills: tuple[str, ...]
    can_draw: bool = True

    @property
    def skill_weights(self) -> dict[str, float]:
        """Uniform weight over the tagged skills, normalized to sum 1."""
        if not self.skills:
            return {}
        w = 1.0 / len(self.skills)
        return {s: w for s in self.skills}


@dataclass(frozen=True)
class TerminalInfo:
    """Uniform terminal envelope.

    ``ranking`` is an ordered list of tie groups, best first, covering all
    seats exactly once.  ``kind`` records why the game ended.
    """

    kind: str  # win | draw | rank | success | failure | invalid_move | turn_limit
    ranking: tuple[tuple[int, ...], ...]
    detail: str = ""

    def __post_init__(self):
        seats = [p for group in self.ranking for p in group]
        if len(seats) != len(set(seats)):
            raise ValueError("ranking must cover each seat exactly once")


class SeedStreams:
    """Labeled deterministic sub-streams fanned out from one 64-bit seed."""

    def __init__(self, seed: int, scope: str):
        self._seed = seed
        self._scope = scope
        self._streams: dict[str, random.Random] = {}

    def stream(self, label: str) -> random.Random:
        # str seeding is stable across runs and platforms (hashed via sha512).
        if label not in self._streams:
            self._streams[label] = random.Random(f"{self._seed}:{self._scope}:{label}")
        return self._streams[label]


@dataclass
class ActionSpace:
    """Legal actions: an exact token set, or a validator plus generator.

    Finite-move games fill ``tokens``.  Free-text games leave it ``None``
    and supply ``validate`` plus ``sample`` (which must always return a
    legal token).
    """

    tokens: frozenset[str] | None = None
    validate: object = None  # Callable[[str], bool] when tokens is None
    sample: object = None  # Callable[[random.Random], str] when tokens is None

    def is_legal(self, token: str) -> bool:
        if self.tokens is not None:
            return token in self.tokens
        return bool(self.validate(token))  # type: ignore[operator]

    def pick(self, rng: random.Random) -> str:
        if self.tokens is not None:
            return rng.choice(sorted(self.tokens))
        return self.sample(rng)  # type: ignore[operator]


def mean_ranks(ranking: tuple[tuple[int, ...], ...]) -> dict[int, float]:
    """Seat -> mean rank (1-based), ties sharing the mean of their span."""
    ranks: dict[int, float] = {}
    next_rank = 1
    for group in ranking:
        span = range(next_rank, next_rank + len(group))
        mean = sum(span) / len(group)
        for seat in group:
            ranks[seat] = mean
        next_rank += len(group)
    return ranks


def outcome(terminal: TerminalInfo | None, num_players: int) -> dict[int, float]:
    """Map a terminal envelope to per-seat rewards in [-1, +1].

    Single-player: success -> +1, anything else -> -1.  Two or more
    players: reward = 1 - 2*(rank-1)/(n-1) with tied seats sharing their
    mean rank, which yields {-1, 0, +1} for two players and rank-scaled,
    zero-sum rewards for more.
    """
    if terminal is None:
        raise NotTerminalError("game is not over")
    if num_players == 1:
        return {0: 1.0 if terminal.kind == "success" else -1.0}
    ranks = mean_ranks(terminal.ranking)
    n = num_players
    return {seat: 1.0 - 2.0 * (rank - 1.0) / (n - 1.0) for seat, rank in ranks.items()}


def ranking_from_scores(scores: dict[int, float]) -> tuple[tuple[int, ...], ...]:
    """Group seats by score, best (highest) first, ties grouped together."""
    by_score: dict[float, list[int]] = {}
    for seat, score in scores.items():
        by_score.setdefault(score, []).append(seat)
    ordered = sorted(by_score.items(), key=lambda kv: -kv[0])
    return tuple(tuple(sorted(seats)) for _, seats in ordered)


class Game:
    """Base rule machine.  Subclasses implement the per-game rules.

    Lifecycle: construct with (num_players, streams), call ``setup`` once
    to get the initial private-setup messages, then alternate
    ``legal_actions`` / ``apply`` until ``terminal`` is set.
    """

    rules: GameRules  # set per subclass

    def __init__(self, num_players: int, streams: SeedStreams):
        self.num_players = num_players
        self.streams = streams
        self.to_move = 0
        self.terminal: TerminalInfo | None = None

    @classmethod
    def configured(cls, **overrides) -> type["Game"]:
        """Subclass with class-level defaults (PILES, GUESSES, ...) replaced."""
        for name in overrides:
            if not hasattr(cls, name):
                raise AttributeError(f"{cls.__name__} has no parameter {name}")
        return type(f"{cls.__name__}Configured", (cls,), overrides)

    # -- hooks -----------------------------------------------------------
    def setup(self) -> list[Message]:
        """Draw private randomness; return initial setup messages."""
        return []

    def rules_text(self, player: int) -> str:
        """Rules prompt shown to ``player`` at reset."""
        raise NotImplementedError

    def legal_actions(self) -> ActionSpace:
        if self.terminal is not None:
            raise TerminalError("game is over")
        return self._legal_actions()

    def _legal_actions(self) -> ActionSpace:
        raise NotImplementedError

    def apply(self, player: int, token: str) -> list[Message]:
        """Apply ``token`` for ``player``; return emitted messages.

        Raises IllegalAction for tokens the rules reject; the caller is
        responsible for converting that into invalid-move termination.
        """
        if self.terminal is not None:
            raise TerminalError("game is over")
        if player != self.to_move:
            raise IllegalAction(token, f"not player {player}'s turn")
        if not self.legal_actions().is_legal(token):
            raise IllegalAction(token)
        return self._apply(player, token)

    def _apply(self, player: int, token: str) -> list[Message]:
        raise NotImplementedError

    def render(self, viewer: int) -> str:
        """Fixed-width text view hiding what ``viewer`` may not see."""
        raise NotImplementedError

    def standing(self) -> tuple[tuple[int, ...], ...]:
        """Current ranking of seats by interim standing (default: all tied)."""
        return (tuple(range(self.num_players)),)

    def timeout(self) -> TerminalInfo:
        """Terminal envelope when the env-level turn limit is hit."""
        return TerminalInfo("turn_limit", self.standing(), "turn limit reached")

    # -- helpers for subclasses ------------------------------------------
    def say(self, content: str) -> Message:
        return broadcast(GAME, content)

    def tell(self, player: int, content: str) -> Message:
        return private(GAME, content, player)

    def echo(self, player: int, token: str, public: bool = True) -> Message:
        """The acting player's move as a message (private in sealed phases)."""
        if public:
            return broadcast(player, f"[{token}]")
        return private(player, f"[{token}]", player)

    def finish(self, kind: str, ranking: tuple[tuple[int, ...], ...], detail: str = "") -> None:
        if self.terminal is not None:
            raise ValueError("terminal info already set")
        self.terminal = TerminalInfo(kind, ranking, detail)

    def finish_invalid(self, offender: int, detail: str) -> None:
        """Offender ranked strictly last; others keep their current standing."""
        if self.num_players == 1:
            ranking: tuple[tuple[int, ...], ...] = ((0,),)
        else:
            others = tuple(
                tuple(s for s in group if s != offender)
                for group in self.standing()
            )
            ranking = tuple(g for g in others if g) + ((offender,),)
        self.terminal = TerminalInfo("invalid_move", ranking, detail)

    def win(self, winner: int) -> None:
        loser = 1 - winner
        self.finish("win", ((winner,), (loser,)), f"player {winner} wins")

    def draw(self, detail: str = "draw") -> None:
        self.finish("draw", (tuple(range(self.num_players)),), detail)
