"""Letter-by-letter word guessing with a wrong-guess budget."""

from __future__ import annotations

import string

from .base import ActionSpace, Game, GameRules
from .words import general_words


class Hangman(Game):
    WRONG_LIMIT = 6

    rules = GameRules(
        env_id="Hangman-v0",
        min_players=1,
        max_players=1,
        turn_limit=40,
        action_grammar="a letter like [e] or a full word like [castle]",
        skills=("Logical Reasoning", "Memory Recall", "Adaptability"),
        can_draw=False,
    )

    def __init__(self, num_players, streams):
        super().__init__(num_players, streams)
        self.secret = streams.stream("secret").choice(general_words())
        self.guessed: set[str] = set()
        self.wrong = 0

    def rules_text(self, player):
        return (
            f"Guess the hidden {len(self.secret)}-letter word. Play one letter like [e] "
            "or guess the full word like [castle]. "
            f"{self.WRONG_LIMIT} wrong guesses lose the game."
        )

    def masked(self) -> str:
        return " ".join(c if c in self.guessed else "_" for c in self.secret)

    def _legal_actions(self):
        letters = set(string.ascii_lowercase) - self.guessed
        return ActionSpace(tokens=frozenset(letters | set(general_words())))

    def _apply(self, player, token):
        token = token.lower()
        msgs = [self.echo(player, token)]
        if len(token) > 1:
            if token == self.secret:
                self.finish("success", ((0,),), "word guessed")
                msgs.append(self.say(f"Correct! The word was {self.secret!r}."))
                return msgs
            self.wrong += 1
            msgs.append(self.say(f"{token!r} is not the word."))
        elif token in self.secret:
            self.guessed.add(token)
            msgs.append(self.say(f"Yes: {self.masked()}"))
            if all(c in self.guessed for c in self.secret):
                self.finish("success", ((0,),), "all letters found")
                msgs.append(self.say(f"Solved! The word was {self.secret!r}."))
                return msgs
        else:
            self.guessed.add(token)
            self.wrong += 1
            msgs.append(self.say(f"No {token!r} in the word. {self.masked()}"))
        if self.wrong >= self.WRONG_LIMIT:
            self.finish("failure", ((0,),), f"out of wrong guesses; word was {self.secret}")
            msgs.append(self.say(f"Out of guesses. The word was {self.secret!r}."))
        return msgs

    def render(self, viewer):
        return f"{self.masked()}   wrong: {self.wrong}/{self.WRONG_LIMIT}"
