"""Code-breaking against a hidden digit sequence."""

from __future__ import annotations

from itertools import product

from .base import ActionSpace, Game, GameRules
from .feedback import mastermind_feedback


class Mastermind(Game):
    POSITIONS = 4
    DIGITS = "123456"
    GUESSES = 12

    rules = GameRules(
        env_id="Mastermind-v0",
        min_players=1,
        max_players=1,
        turn_limit=15,
        action_grammar="four digits 1-6 separated by spaces, e.g. [1 3 5 6]",
        skills=("Strategic Planning", "Pattern Recognition", "Logical Reasoning"),
        can_draw=False,
    )

    def __init__(self, num_players, streams):
        super().__init__(num_players, streams)
        rng = streams.stream("secret")
        self.secret = "".join(rng.choice(self.DIGITS) for _ in range(self.POSITIONS))
        self.left = self.GUESSES
        self.history: list[tuple[str, int, int]] = []

    def rules_text(self, player):
        return (
            f"Crack the hidden code: {self.POSITIONS} digits, each 1-{self.DIGITS[-1]} "
            f"(repeats allowed). Guess like [1 3 5 6]. You have {self.GUESSES} guesses; "
            "feedback is black pegs (right digit, right place) and white pegs "
            "(right digit, wrong place)."
        )

    def _legal_actions(self):
        tokens = frozenset(
            " ".join(combo) for combo in product(self.DIGITS, repeat=self.POSITIONS)
        )
        return ActionSpace(tokens=tokens)

    def _apply(self, player, token):
        guess = "".join(token.split())
        black, white = mastermind_feedback(guess, self.secret, self.DIGITS)
        self.left -= 1
        self.history.append((guess, black, white))
        msgs = [self.echo(player, token)]
        if black == self.POSITIONS:
            self.finish("success", ((0,),), "code cracked")
            msgs.append(self.say(f"Cracked! The code was {' '.join(self.secret)}."))
            return msgs
        msgs.append(self.say(f"Feedback: {black} black, {white} white. {self.left} guesses left."))
        if self.left == 0:
            self.finish("failure", ((0,),), f"out of guesses; code was {self.secret}")
            msgs.append(self.say(f"Out of guesses. The code was {' '.join(self.secret)}."))
        return msgs

    def render(self, viewer):
        lines = [f"{' '.join(g)}  -> {b} black, {w} white" for g, b, w in self.history]
        lines.append(f"guesses left: {self.left}")
        return "\n".join(lines)
