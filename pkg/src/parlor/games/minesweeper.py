"""Grid clearing around hidden mines; first reveal is always safe."""

from __future__ import annotations

from .base import ActionSpace, Game, GameRules

NEIGHBORS = [(-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1)]


class Minesweeper(Game):
    ROWS = 8
    COLS = 8
    MINES = 10

    rules = GameRules(
        env_id="Minesweeper-v0",
        min_players=1,
        max_players=1,
        turn_limit=70,
        action_grammar="row and column to reveal, e.g. [3 4]",
        skills=("Pattern Recognition", "Logical Reasoning", "Uncertainty Estimation"),
        can_draw=False,
    )

    def __init__(self, num_players, streams):
        super().__init__(num_players, streams)
        cells = [(r, c) for r in range(self.ROWS) for c in range(self.COLS)]
        self.mines = set(streams.stream("mines").sample(cells, self.MINES))
        self.revealed: set[tuple[int, int]] = set()
        self.first_move = True

    def rules_text(self, player):
        return (
            f"Clear the {self.ROWS}x{self.COLS} minefield: reveal every cell that is not "
            f"one of the {self.MINES} mines. Reveal with [row col], zero-based, e.g. [3 4]. "
            "Revealed numbers count adjacent mines; revealing a mine loses. "
            "Your first reveal is always safe."
        )

    def _adjacent(self, cell) -> int:
        r, c = cell
        return sum((r + dr, c + dc) in self.mines for dr, dc in NEIGHBORS)

    def _relocate(self, cell) -> None:
        # First-click safety: move the mine to the first free cell, row-major.
        for r in range(self.ROWS):
            for c in range(self.COLS):
                if (r, c) not in self.mines and (r, c) != cell:
                    self.mines.discard(cell)
                    self.mines.add((r, c))
                    return

    def _flood(self, cell) -> None:
        stack = [cell]
        while stack:
            cur = stack.pop()
            if cur in self.revealed or cur in self.mines:
                continue
            self.revealed.add(cur)
            if self._adjacent(cur) == 0:
                r, c = cur
                for dr, dc in NEIGHBORS:
                    nxt = (r + dr, c + dc)
                    if 0 <= nxt[0] < self.ROWS and 0 <= nxt[1] < self.COLS:
                        stack.append(nxt)

    def _legal_actions(self):
        hidden = [
            (r, c)
            for r in range(self.ROWS)
            for c in range(self.COLS)
            if (r, c) not in self.revealed
        ]
        return ActionSpace(tokens=frozenset(f"{r} {c}" for r, c in hidden))

    def _apply(self, player, token):
        r, c = (int(p) for p in token.split())
        cell = (r, c)
        msgs = [self.echo(player, token)]
        if self.first_move:
            self.first_move = False
            if cell in self.mines:
                self._relocate(cell)
        if cell in self.mines:
            self.revealed.add(cell)
            self.finish("failure", ((0,),), f"mine at {r} {c}")
            msgs.append(self.say(f"Boom! Mine at {r} {c}.\n{self.render(0)}"))
            return msgs
        self._flood(cell)
        msgs.append(self.say(f"Revealed {r} {c}.\n{self.render(0)}"))
        if len(self.revealed) == self.ROWS * self.COLS - self.MINES:
            self.finish("success", ((0,),), "field cleared")
            msgs.append(self.say("Field cleared!"))
        return msgs

    def render(self, viewer):
        rows = []
        for r in range(self.ROWS):
            cells = []
            for c in range(self.COLS):
                if (r, c) not in self.revealed:
                    cells.append("#")
                elif (r, c) in self.mines:
                    cells.append("*")
                else:
                    n = self._adjacent((r, c))
                    cells.append(str(n) if n else ".")
            rows.append(" ".join(cells))
        return "\n".join(rows)
