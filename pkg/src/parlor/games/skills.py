"""Soft-skill tagging: which skills each environment exercises.

The versioned table in ``data/skill_weights.tsv`` is the interface other
tools read; weights are uniform over each environment's tagged skills
and sum to 1 per environment.
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

SKILL_NAMES = (
    "Strategic Planning",
    "Spatial Thinking",
    "Pattern Recognition",
    "Theory of Mind",
    "Logical Reasoning",
    "Memory Recall",
    "Bluffing",
    "Persuasion",
    "Uncertainty Estimation",
    "Adaptability",
)


def _data_text(name: str) -> str:
    return resources.files("parlor.games").joinpath(f"data/{name}").read_text()


@lru_cache(maxsize=1)
def skill_weights() -> dict[str, dict[str, float]]:
    """env_id -> {skill: weight}; loaded once from the bundled table."""
    table: dict[str, dict[str, float]] = {}
    for line in _data_text("skill_weights.tsv").splitlines():
        if not line or line.startswith("#"):
            continue
        env_id, skill, weight = line.split("\t")
        if skill not in SKILL_NAMES:
            raise ValueError(f"unknown skill {skill!r} in table")
        table.setdefault(env_id, {})[skill] = float(weight)
    return table


def skills_for(env_id: str) -> tuple[str, ...]:
    """Tagged skills in canonical (SKILL_NAMES) order."""
    tagged = skill_weights().get(env_id, {})
    return tuple(s for s in SKILL_NAMES if s in tagged)
