"""Stackable observation wrappers.

Wrappers change only how observations are rendered; player ids, done
flags, and rewards pass through untouched, so any stacking order leaves
game semantics alone.
"""

from __future__ import annotations

from .core import Env, StepResult
from .errors import AlreadyResetError
from .messages import Observation

__all__ = ["ObservationWrapper", "PromptObservationWrapper", "wrap_prompt"]


class ObservationWrapper:
    """Delegating base: subclass and override ``render``."""

    def __init__(self, env):
        if env.was_reset:
            raise AlreadyResetError("wrap before reset()")
        self.env = env

    def render(self, observation):
        return observation

    # -- delegated lifecycle ----------------------------------------------
    def reset(self, num_players: int) -> None:
        self.env.reset(num_players)

    def get_observation(self):
        player_id, observation = self.env.get_observation()
        return player_id, self.render(observation)

    def step(self, action: str) -> StepResult:
        return self.env.step(action)

    def close(self) -> dict[int, float]:
        return self.env.close()

    def unwrapped(self) -> Env:
        return self.env.unwrapped()

    def __getattr__(self, name: str):
        return getattr(self.env, name)


class PromptObservationWrapper(ObservationWrapper):
    """Render the full visible history as one prompt string.

    Each message becomes a ``[GAME]`` or ``[Player k]`` line in emission
    order, the viewer's own past lines included.  Stacking the wrapper
    twice renders identically to stacking it once: already-rendered text
    passes through unchanged.
    """

    def render(self, observation):
        if isinstance(observation, Observation):
            return observation.render_prompt()
        return observation


def wrap_prompt(env) -> PromptObservationWrapper:
    return PromptObservationWrapper(env)
