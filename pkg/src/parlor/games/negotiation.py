"""Two-trader bargaining over five resources with private valuations."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .base import ActionSpace, Game, GameRules, ranking_from_scores

RESOURCES = ("Wheat", "Wood", "Sheep", "Brick", "Ore")
_OFFER = re.compile(
    r"^offer:\s*give\s+(\d+)\s+([a-z]+)\s*->\s*receive\s+(\d+)\s+([a-z]+)$",
    re.IGNORECASE,
)
_CANON = {name.lower(): name for name in RESOURCES}


@dataclass(frozen=True)
class Offer:
    maker: int
    give_qty: int
    give_res: str  # resource the maker hands over
    take_qty: int
    take_res: str  # resource the maker receives

    def describe(self) -> str:
        return (f"give {self.give_qty} {self.give_res} -> "
                f"receive {self.take_qty} {self.take_res}")


def parse_offer(maker: int, token: str) -> Offer | None:
    m = _OFFER.match(token.strip())
    if not m:
        return None
    give_qty, give_res, take_qty, take_res = m.groups()
    give_res, take_res = _CANON.get(give_res.lower()), _CANON.get(take_res.lower())
    if give_res is None or take_res is None:
        return None
    return Offer(maker, int(give_qty), give_res, int(take_qty), take_res)


class SimpleNegotiation(Game):
    TURNS = 10
    ENDOWMENT = (5, 25)
    UNIT_VALUE = (5, 15)

    rules = GameRules(
        env_id="SimpleNegotiation-v0",
        min_players=2,
        max_players=2,
        turn_limit=10,
        action_grammar="[Offer: give X RES -> receive Y RES], [Accept] or [Deny]",
        skills=("Strategic Planning", "Theory of Mind", "Bluffing", "Adaptability"),
    )

    def __init__(self, num_players, streams):
        super().__init__(num_players, streams)
        rng = streams.stream("economy")
        self.holdings = [
            {r: rng.randint(*self.ENDOWMENT) for r in RESOURCES} for _ in (0, 1)
        ]
        self.values = [
            {r: rng.randint(*self.UNIT_VALUE) for r in RESOURCES} for _ in (0, 1)
        ]
        self.initial = [dict(h) for h in self.holdings]
        self.pending: Offer | None = None
        self.plies = 0
        self.trades = 0

    def setup(self):
        return [
            self.tell(p, f"Your resources: {self.holdings[p]}. "
                         f"Your private unit values: {self.values[p]}.")
            for p in (0, 1)
        ]

    def rules_text(self, player):
        return (
            "Trade negotiation over "
            f"{', '.join(RESOURCES)}. Each turn play [Offer: give X RES -> receive Y RES] "
            "(you give X, you get Y from the other player), [Accept] the standing offer, "
            f"or [Deny]. {self.TURNS} turns total; highest gain in your own private "
            "valuation wins. No trades means a draw."
        )

    def gain(self, player: int) -> int:
        return sum(
            self.values[player][r] * (self.holdings[player][r] - self.initial[player][r])
            for r in RESOURCES
        )

    def _acceptable(self, player: int) -> bool:
        offer = self.pending
        return (
            offer is not None
            and offer.maker != player
            and self.holdings[player][offer.take_res] >= offer.take_qty
            and self.holdings[offer.maker][offer.give_res] >= offer.give_qty
        )

    def _valid(self, player: int, token: str) -> bool:
        lowered = token.strip().lower()
        if lowered == "deny":
            return True
        if lowered == "accept":
            return self._acceptable(player)
        offer = parse_offer(player, token)
        return (
            offer is not None
            and offer.give_qty >= 1
            and offer.take_qty >= 1
            and self.holdings[player][offer.give_res] >= offer.give_qty
        )

    def _sample(self, player: int):
        def gen(rng):
            if rng.random() < 0.3:
                return "Deny"
            if self._acceptable(player) and rng.random() < 0.5:
                return "Accept"
            give = rng.choice([r for r in RESOURCES if self.holdings[player][r] >= 1])
            take = rng.choice(RESOURCES)
            qty = rng.randint(1, self.holdings[player][give])
            return f"Offer: give {qty} {give} -> receive {rng.randint(1, 10)} {take}"
        return gen

    def _legal_actions(self):
        player = self.to_move
        return ActionSpace(
            validate=lambda token: self._valid(player, token),
            sample=self._sample(player),
        )

    def _finish_by_gain(self):
        scores = {0: self.gain(0), 1: self.gain(1)}
        ranking = ranking_from_scores(scores)
        if len(ranking) == 1:
            self.draw("no advantage" if self.trades else "no trades")
        else:
            self.finish("win", ranking, f"gains {scores[0]} vs {scores[1]}")
        return self.say(
            f"Negotiation over. Valuation gains: Player 0 {scores[0]}, Player 1 {scores[1]}."
        )

    def _apply(self, player, token):
        self.plies += 1
        opponent = 1 - player
        lowered = token.strip().lower()
        msgs = [self.echo(player, token)]
        if lowered == "accept":
            offer = self.pending
            self.holdings[offer.maker][offer.give_res] -= offer.give_qty
            self.holdings[player][offer.give_res] += offer.give_qty
            self.holdings[player][offer.take_res] -= offer.take_qty
            self.holdings[offer.maker][offer.take_res] += offer.take_qty
            self.trades += 1
            self.pending = None
            msgs.append(self.say(f"Trade executed: Player {offer.maker} {offer.describe()}."))
        elif lowered == "deny":
            if self.pending is not None:
                msgs.append(self.say(f"Player {player} declines the offer."))
                self.pending = None
        else:
            self.pending = parse_offer(player, token)
            msgs.append(self.say(f"Player {player} offers: {self.pending.describe()}."))
        if self.plies >= self.TURNS:
            msgs.append(self._finish_by_gain())
        else:
            self.to_move = opponent
        return msgs

    def standing(self):
        return ranking_from_scores({0: self.gain(0), 1: self.gain(1)})

    def render(self, viewer):
        lines = [f"your resources: {self.holdings[viewer]}",
                 f"your values: {self.values[viewer]}"]
        if self.pending is not None:
            lines.append(f"standing offer (Player {self.pending.maker}): "
                         f"{self.pending.describe()}")
        lines.append(f"turn {self.plies + 1}/{self.TURNS}")
        return "\n".join(lines)
