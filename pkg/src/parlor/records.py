"""Replayable match trajectories.

A record carries everything needed to reproduce a match: the seed, every
raw action in order, per-turn rendered observations, final rewards, and
the rating movement it caused.  Offline runs use wall time 0.0 so a
fixed seed reproduces byte-identical records.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .core import Env, make, parse_bracketed_action
from .errors import NoBracketToken
from .wrappers import wrap_prompt

__all__ = ["MatchRecord", "Turn", "play_match", "replay_rewards", "token_or_none"]


@dataclass(frozen=True)
class Turn:
    seat: int
    observation: str
    action: str
    token: str | None
    wall_time: float = 0.0


@dataclass
class MatchRecord:
    match_id: str
    env_id: str
    seed: int
    participants: list[str]
    turns: list[Turn] = field(default_factory=list)
    rewards: dict[str, float] = field(default_factory=dict)  # seat index -> reward
    ratings: dict[str, dict] = field(default_factory=dict)  # name -> before/after

    def to_json(self) -> str:
        doc = {
            "match_id": self.match_id,
            "env_id": self.env_id,
            "seed": self.seed,
            "participants": self.participants,
            "turns": [
                {
                    "seat": t.seat,
                    "observation": t.observation,
                    "action": t.action,
                    "token": t.token,
                    "wall_time": t.wall_time,
                }
                for t in self.turns
            ],
            "rewards": self.rewards,
            "ratings": self.ratings,
        }
        return json.dumps(doc, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> "MatchRecord":
        doc = json.loads(line)
        return cls(
            match_id=doc["match_id"],
            env_id=doc["env_id"],
            seed=doc["seed"],
            participants=list(doc["participants"]),
            turns=[
                Turn(t["seat"], t["observation"], t["action"], t["token"], t["wall_time"])
                for t in doc["turns"]
            ],
            rewards={k: float(v) for k, v in doc["rewards"].items()},
            ratings=doc.get("ratings", {}),
        )


def token_or_none(action: str) -> str | None:
    try:
        return parse_bracketed_action(action)
    except NoBracketToken:
        return None


def play_match(
    env_id: str,
    agent_factories: list,
    seed: int,
    match_id: str = "",
    names: list[str] | None = None,
    clock=None,
) -> MatchRecord:
    """Run one full local match and return its trajectory.

    ``agent_factories`` are callables env -> agent; ``clock`` (when
    given) stamps wall times, otherwise they stay 0.0 for
    bit-reproducible output.
    """
    env = make(env_id, rng_seed=seed)
    wrapped = wrap_prompt(env)
    agents = [factory(env) for factory in agent_factories]
    names = names or [getattr(a, "name", f"agent{i}") for i, a in enumerate(agents)]
    record = MatchRecord(
        match_id=match_id or f"{env_id}:{seed}",
        env_id=env_id,
        seed=seed,
        participants=list(names),
    )
    wrapped.reset(num_players=len(agents))
    done = False
    while not done:
        seat, prompt = wrapped.get_observation()
        action = agents[seat](prompt)
        done, info = wrapped.step(action)
        record.turns.append(
            Turn(seat, prompt, action, token_or_none(action),
                 clock() if clock else 0.0)
        )
    rewards = wrapped.close()
    record.rewards = {str(seat): value for seat, value in rewards.items()}
    return record


def replay_rewards(record: MatchRecord) -> dict[str, float]:
    """Re-run the recorded actions from the seed; returns the rewards."""
    env: Env = make(record.env_id, rng_seed=record.seed)
    env.reset(num_players=len(record.participants))
    for turn in record.turns:
        done, _ = env.step(turn.action)
        if done:
            break
    return {str(seat): value for seat, value in env.close().items()}
