"""Disk-stacking puzzle across three pegs under a move budget."""

from __future__ import annotations

from .base import ActionSpace, Game, GameRules


class TowerOfHanoi(Game):
    DISKS = 3
    MOVE_LIMIT = 50

    rules = GameRules(
        env_id="TowerOfHanoi-v0",
        min_players=1,
        max_players=1,
        turn_limit=50,
        action_grammar="source and destination peg, e.g. [0 2]",
        skills=("Strategic Planning", "Logical Reasoning"),
        can_draw=False,
    )

    def __init__(self, num_players, streams):
        super().__init__(num_players, streams)
        self.pegs: list[list[int]] = [list(range(self.DISKS, 0, -1)), [], []]

    def rules_text(self, player):
        return (
            f"Move the stack of {self.DISKS} disks from peg 0 to peg 2 within "
            f"{self.MOVE_LIMIT} moves. Move one disk at a time with [src dst], "
            "e.g. [0 2]; a larger disk never sits on a smaller one."
        )

    def _legal_actions(self):
        moves = set()
        for src in range(3):
            if not self.pegs[src]:
                continue
            top = self.pegs[src][-1]
            for dst in range(3):
                if dst != src and (not self.pegs[dst] or self.pegs[dst][-1] > top):
                    moves.add(f"{src} {dst}")
        return ActionSpace(tokens=frozenset(moves))

    def _apply(self, player, token):
        src, dst = (int(p) for p in token.split())
        disk = self.pegs[src].pop()
        self.pegs[dst].append(disk)
        msgs = [self.echo(player, token), self.say(self.render(0))]
        if len(self.pegs[2]) == self.DISKS:
            self.finish("success", ((0,),), "stack moved")
            msgs.append(self.say("Solved!"))
        return msgs

    def render(self, viewer):
        return "\n".join(
            f"peg {i}: {' '.join(str(d) for d in peg) or '-'}"
            for i, peg in enumerate(self.pegs)
        )
