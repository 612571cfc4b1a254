"""Hidden-number deduction with higher/lower hints."""

from __future__ import annotations

from .base import ActionSpace, Game, GameRules


class GuessTheNumber(Game):
    LOW = 1
    HIGH = 20
    GUESSES = 5

    rules = GameRules(
        env_id="GuessTheNumber-v0",
        min_players=1,
        max_players=1,
        turn_limit=8,
        action_grammar="a number, e.g. [7]",
        skills=("Pattern Recognition", "Logical Reasoning", "Uncertainty Estimation"),
        can_draw=False,
    )

    def __init__(self, num_players, streams):
        super().__init__(num_players, streams)
        self.secret = streams.stream("secret").randint(self.LOW, self.HIGH)
        self.left = self.GUESSES
        self.history: list[tuple[int, str]] = []

    def rules_text(self, player):
        return (
            f"Guess the hidden number between {self.LOW} and {self.HIGH}. "
            f"You have {self.GUESSES} guesses; after each wrong guess you are told "
            "whether the secret is higher or lower. Answer like [12]."
        )

    def _legal_actions(self):
        return ActionSpace(tokens=frozenset(str(n) for n in range(self.LOW, self.HIGH + 1)))

    def _apply(self, player, token):
        guess = int(token)
        self.left -= 1
        if guess == self.secret:
            self.finish("success", ((0,),), f"guessed {guess}")
            return [self.echo(player, token), self.say(f"Correct! The number was {guess}.")]
        hint = "higher" if self.secret > guess else "lower"
        self.history.append((guess, hint))
        msgs = [self.echo(player, token),
                self.say(f"The secret is {hint} than {guess}. {self.left} guesses left.")]
        if self.left == 0:
            self.finish("failure", ((0,),), f"out of guesses; secret was {self.secret}")
            msgs.append(self.say(f"Out of guesses. The number was {self.secret}."))
        return msgs

    def render(self, viewer):
        lines = [f"guess {g}: {h}" for g, h in self.history]
        lines.append(f"guesses left: {self.left}")
        return "\n".join(lines)
