"""Escalating bids about everyone's hidden dice; calls cost the loser a die."""

from __future__ import annotations

from .base import ActionSpace, Game, GameRules


class LiarsDice(Game):
    DICE = 5

    rules = GameRules(
        env_id="LiarsDice-v0",
        min_players=2,
        max_players=6,
        turn_limit=400,
        action_grammar="[bid quantity face] or [call]",
        skills=("Theory of Mind", "Memory Recall", "Bluffing",
                "Uncertainty Estimation"),
    )

    def __init__(self, num_players, streams):
        super().__init__(num_players, streams)
        self.roller = streams.stream("dice")
        self.dice: list[list[int]] = [[] for _ in range(num_players)]
        self.counts = [self.DICE] * num_players
        self.bid: tuple[int, int] | None = None  # (quantity, face)
        self.bidder: int | None = None
        self.eliminated: list[int] = []  # in elimination order

    def setup(self):
        return self._reroll()

    def rules_text(self, player):
        return (
            f"Liar's dice, {self.num_players} players, {self.DICE} dice each. Bid how "
            "many dice of one face exist across ALL hands with [bid quantity face], "
            "each bid strictly higher (by quantity, then face), or challenge with "
            "[call]. A wrong bid (or wrong call) costs that player one die; at zero "
            "dice you are out. Last player standing wins."
        )

    # -- round plumbing ----------------------------------------------------
    def alive(self) -> list[int]:
        return [p for p in range(self.num_players) if self.counts[p] > 0]

    def total_dice(self) -> int:
        return sum(self.counts)

    def _reroll(self):
        msgs = []
        for p in self.alive():
            self.dice[p] = sorted(self.roller.randint(1, 6) for _ in range(self.counts[p]))
            msgs.append(self.tell(p, f"Your dice: {self.dice[p]}"))
        return msgs

    def _next_alive(self, after: int) -> int:
        p = (after + 1) % self.num_players
        while self.counts[p] == 0:
            p = (p + 1) % self.num_players
        return p

    # -- actions -------------------------------------------------------------
    def _legal_actions(self):
        moves = set()
        if self.bid is not None:
            moves.add("call")
        lo_q, lo_f = self.bid if self.bid is not None else (1, 0)
        for q in range(lo_q, self.total_dice() + 1):
            start = lo_f + 1 if q == lo_q else 1
            for f in range(start, 7):
                moves.add(f"bid {q} {f}")
        return ActionSpace(tokens=frozenset(moves))

    def _lose_die(self, loser: int) -> list:
        self.counts[loser] -= 1
        msgs = [self.say(f"Player {loser} loses a die "
                         f"({self.counts[loser]} left).")]
        if self.counts[loser] == 0:
            self.eliminated.append(loser)
            msgs.append(self.say(f"Player {loser} is eliminated."))
        alive = self.alive()
        if len(alive) == 1:
            ranking = ((alive[0],),) + tuple((p,) for p in reversed(self.eliminated))
            self.finish("rank", ranking, f"player {alive[0]} is the last standing")
            msgs.append(self.say(f"Player {alive[0]} wins."))
            return msgs
        self.bid = None
        self.bidder = None
        msgs.extend(self._reroll())
        self.to_move = loser if self.counts[loser] > 0 else self._next_alive(loser)
        return msgs

    def _apply(self, player, token):
        parts = token.lower().split()
        msgs = [self.echo(player, token)]
        if parts[0] == "call":
            quantity, face = self.bid
            actual = sum(d == face for hand in self.dice for d in hand)
            reveal = {p: self.dice[p] for p in self.alive()}
            msgs.append(self.say(
                f"Player {player} calls the bid of {quantity} x {face}. "
                f"Hands: {reveal}. Actual count: {actual}."))
            loser = player if actual >= quantity else self.bidder
            msgs.extend(self._lose_die(loser))
        else:
            quantity, face = int(parts[1]), int(parts[2])
            self.bid = (quantity, face)
            self.bidder = player
            msgs.append(self.say(f"Player {player} bids {quantity} x {face}."))
            self.to_move = self._next_alive(player)
        return msgs

    def standing(self):
        groups: dict[int, list[int]] = {}
        for p in self.alive():
            groups.setdefault(self.counts[p], []).append(p)
        ranking = [tuple(sorted(ps)) for _, ps in sorted(groups.items(), reverse=True)]
        ranking += [(p,) for p in reversed(self.eliminated)]
        return tuple(ranking)

    def render(self, viewer):
        lines = []
        for p in range(self.num_players):
            if p == viewer:
                lines.append(f"Player {p}: {self.dice[p]} (you)")
            else:
                lines.append(f"Player {p}: {self.counts[p]} dice")
        if self.bid is not None:
            lines.append(f"current bid: {self.bid[0]} x {self.bid[1]} "
                         f"by Player {self.bidder}")
        return "\n".join(lines)
