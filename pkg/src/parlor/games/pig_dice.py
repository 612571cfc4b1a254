"""Push-your-luck dice banking; bust on a 1."""

from __future__ import annotations

from .base import ActionSpace, Game, GameRules, ranking_from_scores


class PigDice(Game):
    TARGET = 100

    rules = GameRules(
        env_id="PigDice-v0",
        min_players=2,
        max_players=2,
        turn_limit=300,
        action_grammar="[roll] or [hold]",
        skills=("Strategic Planning", "Logical Reasoning", "Uncertainty Estimation"),
    )

    def __init__(self, num_players, streams):
        super().__init__(num_players, streams)
        self.die = streams.stream("dice")
        self.banked = [0, 0]
        self.turn_total = 0

    def rules_text(self, player):
        return (
            f"Pig. First to bank {self.TARGET} points wins. [roll] adds the die to your "
            "turn total, but a 1 busts the turn (total lost, turn passes). [hold] banks "
            "your turn total and passes the turn."
        )

    def _legal_actions(self):
        return ActionSpace(tokens=frozenset({"roll", "hold"}))

    def _pass_turn(self, player):
        self.turn_total = 0
        self.to_move = 1 - player

    def _apply(self, player, token):
        token = token.lower()
        msgs = [self.echo(player, token)]
        if token == "roll":
            face = self.die.randint(1, 6)
            if face == 1:
                msgs.append(self.say(f"Player {player} rolled a 1 and busts. "
                                     f"Banked: {self.banked}."))
                self._pass_turn(player)
            else:
                self.turn_total += face
                msgs.append(self.say(f"Player {player} rolled {face}; "
                                     f"turn total {self.turn_total}."))
        else:
            self.banked[player] += self.turn_total
            msgs.append(self.say(f"Player {player} holds at {self.turn_total}; "
                                 f"banked {self.banked}."))
            if self.banked[player] >= self.TARGET:
                self.win(player)
                msgs.append(self.say(f"Player {player} reaches {self.banked[player]} and wins."))
                return msgs
            self._pass_turn(player)
        return msgs

    def standing(self):
        return ranking_from_scores({0: self.banked[0], 1: self.banked[1]})

    def render(self, viewer):
        return (f"banked: P0={self.banked[0]} P1={self.banked[1]}  "
                f"turn total: {self.turn_total} (P{self.to_move} to act)")
