"""Letter/peg feedback rules shared by the guessing games."""

from __future__ import annotations

from collections import Counter

from ..errors import BadLength, BadSymbol

__all__ = ["mastermind_feedback", "wordle_feedback"]


def wordle_feedback(guess: str, secret: str) -> str:
    """Two-pass letter feedback over {G, Y, X}.

    First pass marks greens and consumes letter counts; the second marks
    a yellow only while an unconsumed count remains, so duplicates never
    over-report.
    """
    if len(guess) != 5 or len(secret) != 5:
        raise BadLength(f"need 5-letter words, got {guess!r} / {secret!r}")
    marks = ["X"] * 5
    remaining = Counter(secret)
    for i, (g, s) in enumerate(zip(guess, secret)):
        if g == s:
            marks[i] = "G"
            remaining[g] -= 1
    for i, g in enumerate(guess):
        if marks[i] == "G":
            continue
        if remaining[g] > 0:
            marks[i] = "Y"
            remaining[g] -= 1
    return "".join(marks)


def mastermind_feedback(guess: str, secret: str, alphabet: str = "123456") -> tuple[int, int]:
    """(black, white): positional matches, then multiset matches elsewhere."""
    if len(guess) != len(secret):
        raise BadLength(f"guess length {len(guess)} != secret length {len(secret)}")
    for sym in guess:
        if sym not in alphabet:
            raise BadSymbol(f"symbol {sym!r} outside alphabet {alphabet!r}")
    black = sum(g == s for g, s in zip(guess, secret))
    overlap = sum((Counter(guess) & Counter(secret)).values())
    return black, overlap - black
