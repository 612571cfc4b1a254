"""One round of sealed bids over five items with private valuations."""

from __future__ import annotations

from .base import ActionSpace, Game, GameRules, ranking_from_scores


class BlindAuction(Game):
    ITEMS = 5
    VALUE = (5, 100)
    BUDGET = 1000

    rules = GameRules(
        env_id="BlindAuction-v0",
        min_players=3,
        max_players=6,
        turn_limit=8,
        action_grammar="five bids, one per item, e.g. [120 0 45 300 80]",
        skills=("Theory of Mind", "Persuasion", "Uncertainty Estimation"),
    )

    def __init__(self, num_players, streams):
        super().__init__(num_players, streams)
        rng = streams.stream("values")
        self.values = [
            [rng.randint(*self.VALUE) for _ in range(self.ITEMS)]
            for _ in range(num_players)
        ]
        self.bids: dict[int, list[int]] = {}

    def setup(self):
        return [
            self.tell(p, f"Your private item valuations: {self.values[p]}.")
            for p in range(self.num_players)
        ]

    def rules_text(self, player):
        return (
            f"Sealed-bid auction: {self.ITEMS} items, budget {self.BUDGET}. Submit one "
            "bid per item in a single action like [120 0 45 300 80] (0 = no bid, total "
            "at most the budget). The highest bid takes each item (ties go to the lowest "
            "player index); you pay your winning bids. Highest profit "
            "(won valuations minus spend) wins."
        )

    def _parse(self, token: str) -> list[int] | None:
        parts = token.split()
        if len(parts) != self.ITEMS or not all(p.isdigit() for p in parts):
            return None
        bids = [int(p) for p in parts]
        if sum(bids) > self.BUDGET:
            return None
        return bids

    def _legal_actions(self):
        def sample(rng):
            while True:
                bids = [rng.randint(0, self.BUDGET // self.ITEMS) for _ in range(self.ITEMS)]
                if sum(bids) <= self.BUDGET:
                    return " ".join(str(b) for b in bids)
        return ActionSpace(
            validate=lambda token: self._parse(token) is not None,
            sample=sample,
        )

    def _apply(self, player, token):
        self.bids[player] = self._parse(token)
        msgs = [self.echo(player, token, public=False)]
        waiting = [p for p in range(self.num_players) if p not in self.bids]
        if waiting:
            self.to_move = waiting[0]
            return msgs
        msgs.extend(self._resolve())
        return msgs

    def _resolve(self):
        profit = {p: 0 for p in range(self.num_players)}
        outcome_lines = []
        for item in range(self.ITEMS):
            best = max(self.bids[p][item] for p in range(self.num_players))
            if best == 0:
                outcome_lines.append(f"item {item}: no bids, unsold")
                continue
            winner = min(p for p in range(self.num_players) if self.bids[p][item] == best)
            profit[winner] += self.values[winner][item] - best
            outcome_lines.append(f"item {item}: Player {winner} wins at {best}")
        all_bids = {p: self.bids[p] for p in range(self.num_players)}
        self.finish("rank", ranking_from_scores(profit),
                    f"profits {profit}")
        return [self.say(
            "All bids are in: "
            f"{all_bids}.\n" + "\n".join(outcome_lines) + f"\nProfits: {profit}.")]

    def render(self, viewer):
        status = "submitted" if viewer in self.bids else "pending"
        return (f"your valuations: {self.values[viewer]}   "
                f"budget: {self.BUDGET}   your bid: {status}")
