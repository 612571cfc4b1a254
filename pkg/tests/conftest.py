from __future__ import annotations

import random

import pytest

import parlor
from parlor.agents import RandomAgent


def random_playout(env_id: str, seed: int, num_players: int | None = None,
                   max_steps: int = 5000):
    """Drive one env with random legal agents; returns (env, actions, rewards, info)."""
    env = parlor.make(env_id, rng_seed=seed)
    n = num_players or env.rules.min_players
    agents = {p: RandomAgent(env, seed=seed * 31 + p) for p in range(n)}
    env.reset(num_players=n)
    actions = []
    done, info = False, {}
    while not done:
        pid, _ = env.get_observation()
        action = agents[pid]("")
        actions.append(action)
        done, info = env.step(action)
        assert len(actions) < max_steps, f"{env_id} did not terminate"
    return env, actions, env.close(), info


@pytest.fixture
def rng():
    return random.Random(12345)
