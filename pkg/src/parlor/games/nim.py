"""Mathematical removal game: last to take wins."""

from __future__ import annotations

from .base import ActionSpace, Game, GameRules


class Nim(Game):
    PILES = (3, 4, 5)

    rules = GameRules(
        env_id="Nim-v0",
        min_players=2,
        max_players=2,
        turn_limit=20,
        action_grammar="pile index and count, e.g. [2 3]",
        skills=("Strategic Planning", "Logical Reasoning"),
        can_draw=False,
    )

    def __init__(self, num_players, streams):
        super().__init__(num_players, streams)
        self.piles: list[int] = list(self.PILES)

    def rules_text(self, player):
        return (
            f"Nim with piles {list(self.PILES)} (pile indices start at 0). On your turn "
            "take at least one object from exactly one pile: [pile count], e.g. [2 3]. "
            "Whoever takes the last object wins."
        )

    def _legal_actions(self):
        moves = {
            f"{i} {k}"
            for i, size in enumerate(self.piles)
            for k in range(1, size + 1)
        }
        return ActionSpace(tokens=frozenset(moves))

    def _apply(self, player, token):
        pile, count = (int(p) for p in token.split())
        self.piles[pile] -= count
        msgs = [self.echo(player, token),
                self.say(f"Piles now {self.piles}.")]
        if not any(self.piles):
            self.win(player)
            msgs.append(self.say(f"Player {player} took the last object and wins."))
        else:
            self.to_move = 1 - player
        return msgs

    def render(self, viewer):
        return "\n".join(f"pile {i}: {'*' * n or '-'}" for i, n in enumerate(self.piles))
