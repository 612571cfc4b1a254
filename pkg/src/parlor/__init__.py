"""parlor: a competitive text-game arena for evaluating decision-making agents.

Quick start::

    import parlor

    env = parlor.make("TicTacToe-v0", rng_seed=7)
    env = parlor.wrappers.wrap_prompt(env)
    env.reset(num_players=2)
    done = False
    while not done:
        player_id, observation = env.get_observation()
        done, info = env.step(agents[player_id](observation))
    rewards = env.close()
"""

from . import agents, errors, games, rating, wrappers
from .core import Env, StepResult, make, parse_bracketed_action
from .games import env_ids, registry
from .messages import GAME, Message, Observation

__version__ = "0.1.0"

__all__ = [
    "Env",
    "GAME",
    "Message",
    "Observation",
    "StepResult",
    "agents",
    "env_ids",
    "errors",
    "games",
    "make",
    "parse_bracketed_action",
    "rating",
    "registry",
    "wrappers",
]
