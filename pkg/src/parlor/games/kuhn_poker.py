"""Three-card poker with a single bet round.

The classic tree: each player antes 1 and receives one card from
{J, Q, K}.  Player 0 checks or bets 1; facing a bet the opponent calls
or folds; two checks or a call reach showdown (K > Q > J).  Exactly five
betting lines exist per deal.  Rewards follow the arena's win/loss
mapping; the chip swing is tracked separately for analysis.
"""

from __future__ import annotations

from .base import ActionSpace, Game, GameRules

CARDS = ("J", "Q", "K")
RANK = {c: i for i, c in enumerate(CARDS)}


class KuhnPoker(Game):
    rules = GameRules(
        env_id="KuhnPoker-v0",
        min_players=2,
        max_players=2,
        turn_limit=6,
        action_grammar="[check], [bet], [call] or [fold]",
        skills=("Strategic Planning", "Theory of Mind", "Bluffing",
                "Uncertainty Estimation"),
        can_draw=False,
    )

    def __init__(self, num_players, streams):
        super().__init__(num_players, streams)
        self.deal = tuple(streams.stream("deal").sample(CARDS, 2))
        self.history = ""  # c = check, b = bet, k = call, f = fold
        self.chip_delta = 0  # player 0's net chips once terminal

    def setup(self):
        return [self.tell(p, f"Your card: {self.deal[p]}") for p in (0, 1)]

    def rules_text(self, player):
        return (
            "Kuhn poker. One card each from J, Q, K; both ante 1. Player 0 acts first: "
            "[check] or [bet] (1 chip). Facing a bet: [call] or [fold]. Two checks or a "
            "call go to showdown, K > Q > J."
        )

    def _legal_actions(self):
        facing_bet = self.history.endswith("b")
        tokens = {"call", "fold"} if facing_bet else {"check", "bet"}
        return ActionSpace(tokens=frozenset(tokens))

    def _showdown_winner(self) -> int:
        return 0 if RANK[self.deal[0]] > RANK[self.deal[1]] else 1

    def _finish_hand(self, winner: int, chips: int, how: str) -> list:
        self.chip_delta = chips if winner == 0 else -chips
        self.win(winner)
        return [self.say(f"Player {winner} wins {chips} chip(s) ({how}). "
                         f"Cards were {self.deal[0]} / {self.deal[1]}.")]

    def _apply(self, player, token):
        code = {"check": "c", "bet": "b", "call": "k", "fold": "f"}[token.lower()]
        self.history += code
        msgs = [self.echo(player, token)]
        h = self.history
        if h == "cc":
            msgs += self._finish_hand(self._showdown_winner(), 1, "showdown, checked down")
        elif h in ("bk", "cbk"):
            msgs += self._finish_hand(self._showdown_winner(), 2, "showdown after a call")
        elif h == "bf":
            msgs += self._finish_hand(0, 1, "opponent folded")
        elif h == "cbf":
            msgs += self._finish_hand(1, 1, "opponent folded")
        else:
            self.to_move = 1 - player
        return msgs

    def render(self, viewer):
        seen = self.deal[viewer] if viewer in (0, 1) else "?"
        return f"your card: {seen}   betting so far: {self.history or '(none)'}"
