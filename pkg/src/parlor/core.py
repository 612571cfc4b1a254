"""Environment lifecycle: make / reset / get_observation / step / close.

An :class:`Env` owns one game instance plus the global message log.  It
is single-owner: drive it from one logical thread.  Distinct envs are
fully independent.
"""

from __future__ import annotations

import random
import re
from typing import NamedTuple

from .errors import (
    IllegalAction,
    NoBracketToken,
    NotResetError,
    NotTerminalError,
    PlayerCountOutOfRange,
    TerminalError,
    UnknownEnvId,
)
from .games import registry
from .games.base import Game, GameRules, SeedStreams, outcome
from .messages import Message, Observation, visible_slice

__all__ = ["Env", "StepResult", "make", "parse_bracketed_action"]

_BRACKET = re.compile(r"\[([^\[\]]*)\]")


def parse_bracketed_action(text: str) -> str:
    """Return the content of the last well-formed ``[...]`` group, trimmed.

    Deliberation before the action is harmless: only the final bracket
    group counts.  Games decide downstream whether the token is legal.
    """
    groups = _BRACKET.findall(text or "")
    if not groups:
        raise NoBracketToken(f"no [...] action group in {text!r}")
    return groups[-1].strip()


class StepResult(NamedTuple):
    done: bool
    info: dict[str, str]


class Env:
    """One playable environment bound to a seed.

    The same (env_id, seed, action sequence) always reproduces the same
    message log and rewards.
    """

    def __init__(self, env_id: str, rng_seed: int):
        reg = registry()
        if env_id not in reg:
            raise UnknownEnvId(env_id)
        self.env_id = env_id
        self.rng_seed = rng_seed
        self.rules: GameRules = reg[env_id].rules
        self._game_cls = reg[env_id]
        self.game: Game | None = None
        self.log: list[Message] = []
        self.num_players = 0
        self._plies = 0
        self._rewards: dict[int, float] | None = None

    # -- lifecycle ---------------------------------------------------------
    def reset(self, num_players: int) -> None:
        rules = self.rules
        if not rules.min_players <= num_players <= rules.max_players:
            raise PlayerCountOutOfRange(rules.min_players, rules.max_players, num_players)
        self.num_players = num_players
        self.log = []
        self._plies = 0
        self._rewards = None
        streams = SeedStreams(self.rng_seed, self.env_id)
        self.game = self._game_cls(num_players, streams)
        for seat in range(num_players):
            self._emit(Message(-1, f"You are Player {seat}. {self.game.rules_text(seat)}",
                               frozenset([seat])))
        for msg in self.game.setup():
            self._emit(msg)

    def get_observation(self) -> tuple[int, Observation]:
        game = self._require_game()
        if game.terminal is not None:
            raise TerminalError("game is over")
        viewer = game.to_move
        return viewer, Observation(viewer, visible_slice(self.log, viewer))

    def step(self, action: str) -> StepResult:
        game = self._require_game()
        if game.terminal is not None:
            raise TerminalError("game is over")
        actor = game.to_move
        try:
            token = parse_bracketed_action(action)
        except NoBracketToken:
            game.finish_invalid(actor, f"unparsable action from player {actor}")
            self._emit(game.say(f"Player {actor} sent an unparsable action and forfeits."))
            return self._result()
        try:
            for msg in game.apply(actor, token):
                self._emit(msg)
        except IllegalAction as exc:
            game.finish_invalid(actor, f"illegal action from player {actor}: {exc.token!r}")
            self._emit(game.say(f"Player {actor} played an illegal action and forfeits."))
            return self._result()
        self._plies += 1
        if game.terminal is None and self._plies >= self.rules.turn_limit:
            game.terminal = game.timeout()
            self._emit(game.say("Turn limit reached."))
        return self._result()

    def close(self) -> dict[int, float]:
        game = self._require_game()
        if game.terminal is None:
            raise NotTerminalError("game still in progress")
        if self._rewards is None:
            self._rewards = outcome(game.terminal, self.num_players)
        return dict(self._rewards)

    # -- introspection -----------------------------------------------------
    @property
    def done(self) -> bool:
        return self.game is not None and self.game.terminal is not None

    @property
    def was_reset(self) -> bool:
        return self.game is not None

    def observation_for(self, viewer: int) -> Observation:
        """Visibility-filtered view for any seat (used by replay checks)."""
        self._require_game()
        return Observation(viewer, visible_slice(self.log, viewer))

    def unwrapped(self) -> "Env":
        return self

    # -- internals -----------------------------------------------------------
    def _require_game(self) -> Game:
        if self.game is None:
            raise NotResetError("call reset() first")
        return self.game

    def _emit(self, msg: Message) -> None:
        if msg.to is not None and not msg.to <= set(range(self.num_players)):
            raise ValueError(f"visibility {set(msg.to)} outside seated range")
        self.log.append(msg)

    def _result(self) -> StepResult:
        game = self._require_game()
        if game.terminal is None:
            return StepResult(False, {})
        info = {"reason": game.terminal.kind}
        if game.terminal.detail:
            info["detail"] = game.terminal.detail
        return StepResult(True, info)


def make(env_id: str | list[str], rng_seed: int = 0) -> Env:
    """Build an environment; a list picks one id uniformly from the seed."""
    ids = [env_id] if isinstance(env_id, str) else list(env_id)
    if not ids:
        raise UnknownEnvId("<empty list>")
    reg = registry()
    for candidate in ids:
        if candidate not in reg:
            raise UnknownEnvId(candidate)
    chosen = ids[random.Random(f"{rng_seed}:env-choice").randrange(len(ids))]
    return Env(chosen, rng_seed)
