"""Bundled word lists (one lowercase word per line, sorted)."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources


@lru_cache(maxsize=None)
def word_list(name: str) -> tuple[str, ...]:
    text = resources.files("parlor.games").joinpath(f"data/{name}").read_text()
    return tuple(text.split())


def wordle_words() -> tuple[str, ...]:
    """Five-letter guessing pool."""
    return word_list("wordle_words.txt")


def general_words() -> tuple[str, ...]:
    """General pool for hidden-word games."""
    return word_list("words.txt")
