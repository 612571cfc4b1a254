"""Conversation trap: make the opponent utter your secret word."""

from __future__ import annotations

import re

from .base import ActionSpace, Game, GameRules
from .words import general_words

_WORD = re.compile(r"[a-z']+")


def words_in(text: str) -> set[str]:
    """Lowercased whole words with punctuation stripped."""
    return set(_WORD.findall(text.lower()))


class DontSayIt(Game):
    TURNS = 20

    rules = GameRules(
        env_id="DontSayIt-v0",
        min_players=2,
        max_players=2,
        turn_limit=20,
        action_grammar="anything you want to say, e.g. [Tell me about your garden]",
        skills=("Theory of Mind", "Memory Recall", "Bluffing", "Adaptability"),
    )

    def __init__(self, num_players, streams):
        super().__init__(num_players, streams)
        self.secret = tuple(streams.stream("secret").sample(general_words(), 2))
        self.plies = 0

    def setup(self):
        return [
            self.tell(p, f"Your secret word is {self.secret[p]!r}. You win if your "
                         "opponent says it; they win if you say theirs.")
            for p in (0, 1)
        ]

    def rules_text(self, player):
        return (
            "Don't Say It. Each player holds a secret word; steer the conversation so "
            "your opponent says yours while avoiding theirs (you don't know it). "
            "Speak with [your message]. Matching is by whole word, case-insensitive. "
            f"After {self.TURNS} messages with no hit the game is a draw."
        )

    def _legal_actions(self):
        return ActionSpace(
            validate=lambda token: bool(token.strip()),
            sample=lambda rng: f"What do you think about the {rng.choice(general_words())}?",
        )

    def _apply(self, player, token):
        self.plies += 1
        opponent = 1 - player
        msgs = [self.echo(player, token)]
        if self.secret[opponent].lower() in words_in(token):
            self.win(opponent)
            msgs.append(self.say(
                f"Player {player} said the forbidden word {self.secret[opponent]!r}. "
                f"Player {opponent} wins."))
        elif self.plies >= self.TURNS:
            self.draw("nobody slipped")
            msgs.append(self.say("Time is up; nobody said the other's word. Draw."))
        else:
            self.to_move = opponent
        return msgs

    def render(self, viewer):
        mine = self.secret[viewer] if viewer in (0, 1) else "?"
        return f"your word: {mine}   messages so far: {self.plies}/{self.TURNS}"
