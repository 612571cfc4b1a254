"""Multi-snake apple chase on a shared grid; moves resolve per tick."""

from __future__ import annotations

from collections import deque

from .base import ActionSpace, Game, GameRules

DIRS = {"up": (-1, 0), "down": (1, 0), "left": (0, -1), "right": (0, 1)}
STARTS = [(2, 2), (7, 7), (2, 7), (7, 2)]


class Snake(Game):
    SIZE = 10
    APPLES = 3
    TICKS = 50

    rules = GameRules(
        env_id="Snake-v0",
        min_players=2,
        max_players=4,
        turn_limit=220,
        action_grammar="[up], [down], [left] or [right]",
        skills=("Strategic Planning", "Spatial Thinking"),
    )

    def __init__(self, num_players, streams):
        super().__init__(num_players, streams)
        self.rng = streams.stream("apples")
        # body[p] is a deque of cells, head first
        self.body = [deque([STARTS[p]]) for p in range(num_players)]
        self.alive = [True] * num_players
        self.died_at = [0] * num_players  # tick of death; 0 = still alive
        self.tick = 0
        self.apples: set[tuple[int, int]] = set()
        while len(self.apples) < self.APPLES:
            self.apples.add(self._free_cell())
        self.pending: dict[int, str] = {}
        self.to_move = 0

    def _free_cell(self) -> tuple[int, int]:
        occupied = {c for b in self.body for c in b} | self.apples
        while True:
            cell = (self.rng.randrange(self.SIZE), self.rng.randrange(self.SIZE))
            if cell not in occupied:
                return cell

    def rules_text(self, player):
        return (
            f"Snake on a {self.SIZE}x{self.SIZE} grid with {self.APPLES} apples. Each "
            "tick every live snake secretly picks [up]/[down]/[left]/[right]; moves "
            "resolve simultaneously. Apples grow you by one. Hitting a wall, any body, "
            "or another head kills. Survive longest (ties broken by length)."
        )

    def _legal_actions(self):
        return ActionSpace(tokens=frozenset(DIRS))

    def _collector_order(self) -> list[int]:
        return [p for p in range(self.num_players) if self.alive[p]]

    def _apply(self, player, token):
        self.pending[player] = token.lower()
        msgs = [self.echo(player, token, public=False)]
        order = self._collector_order()
        waiting = [p for p in order if p not in self.pending]
        if waiting:
            self.to_move = waiting[0]
            return msgs
        msgs.extend(self._resolve_tick())
        return msgs

    def _resolve_tick(self):
        self.tick += 1
        movers = self._collector_order()
        heads = {}
        for p in movers:
            dr, dc = DIRS[self.pending[p]]
            r, c = self.body[p][0]
            heads[p] = (r + dr, c + dc)
        self.pending = {}

        dead = set()
        for p in movers:  # walls
            r, c = heads[p]
            if not (0 <= r < self.SIZE and 0 <= c < self.SIZE):
                dead.add(p)
        for p in movers:  # head-on collisions
            if any(q != p and heads[q] == heads[p] for q in movers):
                dead.add(p)
        eats = {p for p in movers if p not in dead and heads[p] in self.apples}
        # Occupied cells during the tick: every body segment, minus the tails
        # that vacate (snakes that move without eating).
        occupied = set()
        for q in range(self.num_players):
            if not self.alive[q]:
                continue
            segs = list(self.body[q])
            if q in movers and q not in eats and len(segs) > 0:
                segs = segs[:-1]
            occupied.update(segs)
        for p in movers:
            if p not in dead and heads[p] in occupied:
                dead.add(p)

        eaten: set[tuple[int, int]] = set()
        for p in movers:
            if p in dead:
                self.alive[p] = False
                self.died_at[p] = self.tick
                continue
            self.body[p].appendleft(heads[p])
            if p in eats:
                eaten.add(heads[p])
            else:
                self.body[p].pop()
        for p in dead:
            self.body[p] = deque()
        for cell in eaten:
            self.apples.discard(cell)
            self.apples.add(self._free_cell())

        msgs = []
        if dead:
            msgs.append(self.say(
                f"Tick {self.tick}: snake(s) {sorted(dead)} died."))
        msgs.append(self.say(f"Tick {self.tick}:\n{self.render(-1)}"))

        survivors = self._collector_order()
        if len(survivors) <= 1 or self.tick >= self.TICKS:
            self.finish("rank", self.standing(), f"over after tick {self.tick}")
            msgs.append(self.say("Game over."))
        else:
            self.to_move = survivors[0]
        return msgs

    def standing(self):
        # Survival time first (alive = best), then length.
        def key(p):
            lifetime = self.tick + 1 if self.alive[p] else self.died_at[p]
            return (lifetime, len(self.body[p]))

        groups: dict[tuple[int, int], list[int]] = {}
        for p in range(self.num_players):
            groups.setdefault(key(p), []).append(p)
        return tuple(
            tuple(sorted(ps)) for _, ps in sorted(groups.items(), reverse=True)
        )

    def render(self, viewer):
        grid = [["."] * self.SIZE for _ in range(self.SIZE)]
        for r, c in self.apples:
            grid[r][c] = "a"
        for p in range(self.num_players):
            for i, (r, c) in enumerate(self.body[p]):
                grid[r][c] = str(p) if i == 0 else "#"
        return "\n".join(" ".join(row) for row in grid)
