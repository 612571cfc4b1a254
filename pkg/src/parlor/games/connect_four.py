"""Token-drop alignment on a 7x6 grid."""

from __future__ import annotations

from .base import ActionSpace, Game, GameRules

MARKS = ("X", "O")


def find_winner(grid: list[list[str]]) -> str | None:
    """Full-grid scan for any four-in-a-row; grid[row][col], row 0 = top."""
    rows, cols = len(grid), len(grid[0])
    for r in range(rows):
        for c in range(cols):
            mark = grid[r][c]
            if not mark:
                continue
            for dr, dc in ((0, 1), (1, 0), (1, 1), (1, -1)):
                rr, cc = r + 3 * dr, c + 3 * dc
                if 0 <= rr < rows and 0 <= cc < cols and all(
                    grid[r + i * dr][c + i * dc] == mark for i in (1, 2, 3)
                ):
                    return mark
    return None


class ConnectFour(Game):
    ROWS = 6
    COLS = 7

    rules = GameRules(
        env_id="ConnectFour-v0",
        min_players=2,
        max_players=2,
        turn_limit=45,
        action_grammar="a column number 0-6, e.g. [3]",
        skills=("Strategic Planning", "Spatial Thinking", "Pattern Recognition",
                "Logical Reasoning"),
    )

    def __init__(self, num_players, streams):
        super().__init__(num_players, streams)
        self.grid: list[list[str]] = [[""] * self.COLS for _ in range(self.ROWS)]

    def rules_text(self, player):
        return (
            f"Connect Four on a {self.COLS}-wide, {self.ROWS}-tall grid. You are "
            f"{MARKS[player]}. Drop a token with [0]-[{self.COLS - 1}]; it falls to the "
            "lowest free cell. Four in a row (any direction) wins. X moves first."
        )

    def _legal_actions(self):
        open_cols = (c for c in range(self.COLS) if not self.grid[0][c])
        return ActionSpace(tokens=frozenset(str(c) for c in open_cols))

    def _apply(self, player, token):
        col = int(token)
        row = max(r for r in range(self.ROWS) if not self.grid[r][col])
        self.grid[row][col] = MARKS[player]
        msgs = [self.echo(player, token), self.say(self.render(player))]
        mark = find_winner(self.grid)
        if mark is not None:
            self.win(MARKS.index(mark))
            msgs.append(self.say(f"{mark} wins."))
        elif all(self.grid[0]):
            self.draw("grid full")
            msgs.append(self.say("Draw."))
        else:
            self.to_move = 1 - player
        return msgs

    def render(self, viewer):
        body = "\n".join(" ".join(cell or "." for cell in row) for row in self.grid)
        footer = " ".join(str(c) for c in range(self.COLS))
        return f"{body}\n{footer}"
