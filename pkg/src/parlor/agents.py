"""Agents: observation text in, action text out.

Baselines for testing (random legal play, perfect Nim), a
chat-completion HTTP client for remote models, and a relay that blocks
on a human seat.
"""

from __future__ import annotations

import os
import queue
import random
import time
from dataclasses import dataclass

import requests

from .errors import AuthError, MalformedResponse, TurnTimeout

__all__ = [
    "Agent",
    "HumanRelayAgent",
    "LLMAgent",
    "LLMEndpointConfig",
    "NimPerfectAgent",
    "RandomAgent",
]


class Agent:
    """Base contract: callable text -> text, with an identity."""

    name = "agent"
    description = ""

    def act(self, observation: str) -> str:
        raise NotImplementedError

    def __call__(self, observation: str) -> str:
        return self.act(observation)


class RandomAgent(Agent):
    """Uniform choice over the environment's current legal actions.

    Needs a live view of the env it plays in, so it never produces an
    action the rules reject.  The action stream mixes the agent seed
    with the env seed: a fixed pairing replays identically while
    different matches explore different lines.
    """

    def __init__(self, env, seed: int = 0):
        self.env = env
        self.rng = random.Random(f"random-agent:{seed}:{getattr(env, 'rng_seed', 0)}")
        self.name = f"random:{seed}"
        self.description = "uniform random legal play"

    def act(self, observation: str) -> str:
        game = self.env.unwrapped().game
        token = game.legal_actions().pick(self.rng)
        return f"[{token}]"


class NimPerfectAgent(Agent):
    """Plays the nim-sum-zeroing move when one exists.

    Outside Nim (e.g. in a mixed-env tournament) it falls back to
    deterministic random legal play.
    """

    name = "nim-perfect"
    description = "optimal normal-play Nim"

    def __init__(self, env, seed: int = 0):
        self.env = env
        self.rng = random.Random(f"nim-perfect:{seed}:{getattr(env, 'rng_seed', 0)}")

    def act(self, observation: str) -> str:
        game = self.env.unwrapped().game
        piles = getattr(game, "piles", None)
        if piles is None:
            return f"[{game.legal_actions().pick(self.rng)}]"
        total = 0
        for size in piles:
            total ^= size
        if total != 0:
            for i, size in enumerate(piles):
                target = size ^ total
                if target < size:
                    return f"[{i} {size - target}]"
        # Losing position: take one from the first non-empty pile.
        i = next(i for i, size in enumerate(piles) if size > 0)
        return f"[{i} 1]"


@dataclass(frozen=True)
class LLMEndpointConfig:
    base_url: str
    model: str
    api_key_env: str = "OPENROUTER_API_KEY"
    timeout_s: float = 60.0
    max_retries: int = 3
    temperature: float = 0.7

    def __post_init__(self):
        if self.timeout_s <= 0:
            raise ValueError("timeout must be positive")
        if self.max_retries < 0:
            raise ValueError("retries must be >= 0")


class LLMAgent(Agent):
    """Chat-completion client speaking the OpenAI/OpenRouter-style schema.

    The observation goes out as a single user message (the prompt
    wrapper already carries the full history), prefixed by one fixed
    system line naming the game.  Transient failures retry with
    exponential backoff.
    """

    def __init__(self, cfg: LLMEndpointConfig, game_name: str = "a text game",
                 post=None, sleep=time.sleep):
        self.cfg = cfg
        self.game_name = game_name
        self.name = cfg.model
        self.description = f"chat-completion model at {cfg.base_url}"
        self._post = post or requests.post
        self._sleep = sleep

    def act(self, observation: str) -> str:
        key = os.environ.get(self.cfg.api_key_env)
        if not key:
            raise AuthError(f"set {self.cfg.api_key_env} to use {self.cfg.model}")
        body = {
            "model": self.cfg.model,
            "messages": [
                {"role": "system",
                 "content": f"You are playing {self.game_name}. Reply with your chosen "
                            "action in square brackets."},
                {"role": "user", "content": observation},
            ],
            "temperature": self.cfg.temperature,
        }
        url = self.cfg.base_url.rstrip("/") + "/chat/completions"
        headers = {"Authorization": f"Bearer {key}"}
        last_error: Exception | None = None
        for attempt in range(self.cfg.max_retries + 1):
            try:
                response = self._post(url, json=body, headers=headers,
                                      timeout=self.cfg.timeout_s)
            except requests.RequestException as exc:
                last_error = exc
                self._sleep(min(2.0**attempt, 30.0))
                continue
            if response.status_code in (401, 403):
                raise AuthError(f"endpoint rejected the key ({response.status_code})")
            if response.status_code >= 500 or response.status_code == 429:
                last_error = MalformedResponse(f"status {response.status_code}")
                self._sleep(min(2.0**attempt, 30.0))
                continue
            try:
                return response.json()["choices"][0]["message"]["content"]
            except (KeyError, IndexError, TypeError, ValueError) as exc:
                raise MalformedResponse(f"unexpected payload: {exc}") from exc
        raise TimeoutError(f"gave up after {self.cfg.max_retries + 1} attempts: {last_error}")


class HumanRelayAgent(Agent):
    """Forwards observations to a live session and waits for typed input.

    ``outbound`` receives observation text; ``inbound`` is a queue the
    session feeds with the human's replies.  The wait is bounded by the
    per-turn clock and cancelable through ``cancel()``.
    """

    def __init__(self, outbound, inbound: "queue.Queue[str]", turn_clock_s: float = 120.0):
        self.outbound = outbound
        self.inbound = inbound
        self.turn_clock_s = turn_clock_s
        self._cancelled = False
        self.name = "human"
        self.description = "relayed human seat"

    def cancel(self) -> None:
        self._cancelled = True
        self.inbound.put_nowait("")  # unblock a pending wait

    def act(self, observation: str) -> str:
        if self._cancelled:
            raise TurnTimeout("session closed")
        self.outbound(observation)
        try:
            text = self.inbound.get(timeout=self.turn_clock_s)
        except queue.Empty:
            raise TurnTimeout(f"no input within {self.turn_clock_s}s") from None
        if self._cancelled or not text:
            raise TurnTimeout("session closed mid-turn")
        return text
