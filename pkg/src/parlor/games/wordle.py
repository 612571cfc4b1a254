"""Five-letter word guessing with placement feedback."""

from __future__ import annotations

from .base import ActionSpace, Game, GameRules
from .feedback import wordle_feedback
from .words import wordle_words


class Wordle(Game):
    GUESSES = 6

    rules = GameRules(
        env_id="Wordle-v0",
        min_players=1,
        max_players=1,
        turn_limit=9,
        action_grammar="a five-letter word from the list, e.g. [crane]",
        skills=("Pattern Recognition", "Logical Reasoning", "Memory Recall"),
        can_draw=False,
    )

    def __init__(self, num_players, streams):
        super().__init__(num_players, streams)
        self.secret = streams.stream("secret").choice(wordle_words())
        self.left = self.GUESSES
        self.history: list[tuple[str, str]] = []

    def rules_text(self, player):
        return (
            "Guess the hidden five-letter word within "
            f"{self.GUESSES} tries, e.g. [crane]. Guesses must be real words from the "
            "game's list. Feedback per letter: G = right letter right spot, "
            "Y = in the word elsewhere, X = not in the word."
        )

    def _legal_actions(self):
        return ActionSpace(tokens=frozenset(wordle_words()))

    def _apply(self, player, token):
        guess = token.lower()
        marks = wordle_feedback(guess, self.secret)
        self.left -= 1
        self.history.append((guess, marks))
        msgs = [self.echo(player, token)]
        if marks == "GGGGG":
            self.finish("success", ((0,),), f"solved in {self.GUESSES - self.left}")
            msgs.append(self.say(f"Solved! The word was {self.secret!r}."))
            return msgs
        msgs.append(self.say(f"{guess} -> {marks}  ({self.left} left)"))
        if self.left == 0:
            self.finish("failure", ((0,),), f"out of guesses; word was {self.secret}")
            msgs.append(self.say(f"Out of guesses. The word was {self.secret!r}."))
        return msgs

    def render(self, viewer):
        return "\n".join(f"{g} {m}" for g, m in self.history) or "(no guesses yet)"
