"""Repeated cooperate/defect rounds with sealed simultaneous choices."""

from __future__ import annotations

from .base import ActionSpace, Game, GameRules, ranking_from_scores

# (my move, their move) -> my payoff: T=5, R=3, P=1, S=0
PAYOFF = {
    ("defect", "cooperate"): 5,
    ("cooperate", "cooperate"): 3,
    ("defect", "defect"): 1,
    ("cooperate", "defect"): 0,
}


class IteratedPrisonersDilemma(Game):
    ROUNDS = 10

    rules = GameRules(
        env_id="IteratedPrisonersDilemma-v0",
        min_players=2,
        max_players=2,
        turn_limit=22,
        action_grammar="[cooperate] or [defect]",
        skills=("Strategic Planning", "Theory of Mind", "Uncertainty Estimation",
                "Adaptability"),
    )

    def __init__(self, num_players, streams):
        super().__init__(num_players, streams)
        self.scores = [0, 0]
        self.round = 1
        self.choice: dict[int, str] = {}

    def rules_text(self, player):
        return (
            f"Iterated prisoner's dilemma, {self.ROUNDS} rounds. Each round both players "
            "secretly play [cooperate] or [defect]. Payoffs per round: both cooperate "
            "3/3, both defect 1/1, lone defector 5 against 0. Highest total wins."
        )

    def _legal_actions(self):
        return ActionSpace(tokens=frozenset({"cooperate", "defect"}))

    def _apply(self, player, token):
        move = token.lower()
        self.choice[player] = move
        msgs = [self.echo(player, token, public=False)]
        if len(self.choice) < 2:
            self.to_move = 1 - player
            return msgs
        # Round resolves once both sealed choices are in.
        a, b = self.choice[0], self.choice[1]
        pay = (PAYOFF[(a, b)], PAYOFF[(b, a)])
        self.scores[0] += pay[0]
        self.scores[1] += pay[1]
        msgs.append(self.say(
            f"Round {self.round}: Player 0 played {a}, Player 1 played {b}. "
            f"Payoffs +{pay[0]}/+{pay[1]}; totals {self.scores[0]}-{self.scores[1]}."))
        self.choice = {}
        if self.round >= self.ROUNDS:
            ranking = ranking_from_scores({0: self.scores[0], 1: self.scores[1]})
            if len(ranking) == 1:
                self.draw(f"tied at {self.scores[0]}")
            else:
                self.finish("win", ranking, f"totals {self.scores[0]}-{self.scores[1]}")
            msgs.append(self.say("Game over."))
        else:
            self.round += 1
            self.to_move = 0
        return msgs

    def standing(self):
        return ranking_from_scores({0: self.scores[0], 1: self.scores[1]})

    def render(self, viewer):
        return (f"round {self.round}/{self.ROUNDS}   totals: "
                f"P0={self.scores[0]} P1={self.scores[1]}")
