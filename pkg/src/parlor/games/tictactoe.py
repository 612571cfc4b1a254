"""Three-in-a-row on a 3x3 grid, cells addressed 0-8."""

from __future__ import annotations

from .base import ActionSpace, Game, GameRules

LINES = [
    (0, 1, 2), (3, 4, 5), (6, 7, 8),
    (0, 3, 6), (1, 4, 7), (2, 5, 8),
    (0, 4, 8), (2, 4, 6),
]
MARKS = ("X", "O")


class TicTacToe(Game):
    rules = GameRules(
        env_id="TicTacToe-v0",
        min_players=2,
        max_players=2,
        turn_limit=12,
        action_grammar="a cell number 0-8, e.g. [4]",
        skills=("Strategic Planning", "Logical Reasoning"),
    )

    def __init__(self, num_players, streams):
        super().__init__(num_players, streams)
        self.board: list[str] = [""] * 9

    def rules_text(self, player):
        return (
            f"Tic-tac-toe. You are {MARKS[player]}. Claim a cell with [0]-[8] "
            "(left-to-right, top-to-bottom); three in a row wins. X moves first."
        )

    def winner_mark(self) -> str | None:
        for a, b, c in LINES:
            if self.board[a] and self.board[a] == self.board[b] == self.board[c]:
                return self.board[a]
        return None

    def _legal_actions(self):
        return ActionSpace(tokens=frozenset(str(i) for i in range(9) if not self.board[i]))

    def _apply(self, player, token):
        self.board[int(token)] = MARKS[player]
        msgs = [self.echo(player, token), self.say(self.render(player))]
        mark = self.winner_mark()
        if mark is not None:
            self.win(MARKS.index(mark))
            msgs.append(self.say(f"{mark} wins."))
        elif all(self.board):
            self.draw("board full")
            msgs.append(self.say("Draw."))
        else:
            self.to_move = 1 - player
        return msgs

    def render(self, viewer):
        cells = [m or "." for m in self.board]
        return "\n".join(" ".join(cells[r * 3:r * 3 + 3]) for r in range(3))
