"""Per-game rule checks beyond the big oracles."""

import pytest

import parlor
from parlor.core import make
from parlor.errors import IllegalAction, TerminalError
from parlor.games.base import SeedStreams
from parlor.games.blind_auction import BlindAuction
from parlor.games.dont_say_it import words_in
from parlor.games.liars_dice import LiarsDice
from parlor.games.minesweeper import Minesweeper
from parlor.games.negotiation import SimpleNegotiation, parse_offer
from parlor.games.pig_dice import PigDice
from parlor.games.snake import Snake
from parlor.games.words import general_words, wordle_words

from conftest import random_playout


def fresh(game_cls, num_players, seed=0):
    game = game_cls(num_players, SeedStreams(seed, game_cls.rules.env_id))
    game.setup()
    return game


class TestGuessTheNumber:
    def test_hints_and_budget(self):
        env = make("GuessTheNumber-v0", rng_seed=3)
        env.reset(1)
        secret = env.game.secret
        probe = 1 if secret != 1 else 2
        done, _ = env.step(f"[{probe}]")
        assert not done
        hint = env.log[-1].content
        assert ("higher" in hint) == (secret > probe)

    def test_correct_guess_wins(self):
        env = make("GuessTheNumber-v0", rng_seed=3)
        env.reset(1)
        done, info = env.step(f"[{env.game.secret}]")
        assert done and info["reason"] == "success"
        assert env.close() == {0: 1.0}

    def test_out_of_guesses_fails(self):
        env = make("GuessTheNumber-v0", rng_seed=3)
        env.reset(1)
        wrong = (n for n in range(1, 21) if n != env.game.secret)
        for _ in range(5):
            done, info = env.step(f"[{next(wrong)}]")
        assert done and info["reason"] == "failure"
        assert env.close() == {0: -1.0}


class TestHangman:
    def test_full_word_guess_wins(self):
        env = make("Hangman-v0", rng_seed=1)
        env.reset(1)
        done, info = env.step(f"[{env.game.secret}]")
        assert done and info["reason"] == "success"

    def test_six_wrong_letters_lose(self):
        env = make("Hangman-v0", rng_seed=1)
        env.reset(1)
        secret = env.game.secret
        missing = [c for c in "abcdefghijklmnopqrstuvwxyz" if c not in secret]
        done = False
        for letter in missing[:6]:
            done, info = env.step(f"[{letter}]")
        assert done and info["reason"] == "failure"

    def test_masked_render(self):
        game = fresh(parlor.registry()["Hangman-v0"], 1, seed=2)
        assert set(game.masked().split()) == {"_"}


class TestWordleEnv:
    def test_secret_from_bundled_list(self):
        for seed in range(20):
            env = make("Wordle-v0", rng_seed=seed)
            env.reset(1)
            assert env.game.secret in wordle_words()

    def test_six_guesses_budget(self):
        env = make("Wordle-v0", rng_seed=4)
        env.reset(1)
        wrongs = [w for w in wordle_words() if w != env.game.secret][:6]
        done = False
        for word in wrongs:
            done, info = env.step(f"[{word}]")
        assert done and info["reason"] == "failure"

    def test_non_list_guess_is_illegal(self):
        env = make("Wordle-v0", rng_seed=4)
        env.reset(1)
        done, info = env.step("[zzzzz]")
        assert done and info["reason"] == "invalid_move"


class TestMinesweeper:
    def test_initial_render_all_hidden(self):
        game = fresh(Minesweeper, 1)
        rendered = game.render(0)
        rows = rendered.split("\n")
        assert len(rows) == 8
        assert all(row == " ".join("#" * 8) for row in rows)

    def test_first_reveal_always_safe(self):
        for seed in range(40):
            game = fresh(Minesweeper, 1, seed=seed)
            target = next(iter(sorted(game.mines)))
            game.apply(0, f"{target[0]} {target[1]}")
            assert game.terminal is None or game.terminal.kind != "failure"

    def test_mine_after_first_move_fails(self):
        game = fresh(Minesweeper, 1, seed=3)
        safe = next(
            (r, c) for r in range(8) for c in range(8) if (r, c) not in game.mines
        )
        game.apply(0, f"{safe[0]} {safe[1]}")
        if game.terminal is None:
            mine = next(iter(sorted(game.mines - game.revealed)))
            game.apply(0, f"{mine[0]} {mine[1]}")
            assert game.terminal is not None and game.terminal.kind == "failure"

    def test_flood_fill_reveals_neighbors(self):
        # A zero cell reveals its whole neighborhood transitively.
        for seed in range(30):
            game = fresh(Minesweeper, 1, seed=seed)
            zero = next(
                ((r, c) for r in range(8) for c in range(8)
                 if (r, c) not in game.mines and game._adjacent((r, c)) == 0),
                None,
            )
            if zero is None:
                continue
            game.apply(0, f"{zero[0]} {zero[1]}")
            assert len(game.revealed) > 1
            return
        pytest.skip("no zero cell in sampled seeds")


class TestHanoi:
    def test_optimal_solution_succeeds(self):
        env = make("TowerOfHanoi-v0", rng_seed=0)
        env.reset(1)
        for move in ("0 2", "0 1", "2 1", "0 2", "1 0", "1 2", "0 2"):
            done, info = env.step(f"[{move}]")
        assert done and info["reason"] == "success"
        assert env.close() == {0: 1.0}

    def test_larger_on_smaller_is_illegal(self):
        env = make("TowerOfHanoi-v0", rng_seed=0)
        env.reset(1)
        env.step("[0 2]")
        done, info = env.step("[0 2]")  # disk 2 onto disk 1
        assert done and info["reason"] == "invalid_move"


class TestPigDice:
    def test_bust_zeroes_turn_and_passes(self):
        game = fresh(PigDice, 2, seed=0)
        # Roll until this seed's stream produces a 1.
        while True:
            player = game.to_move
            before = list(game.banked)
            game.apply(player, "roll")
            if game.to_move != player:
                assert game.turn_total == 0
                assert game.banked == before
                break
            if game.terminal is not None:
                pytest.fail("game ended before any bust")

    def test_hold_banks_and_passes(self):
        game = fresh(PigDice, 2, seed=1)
        game.apply(0, "hold")  # banks 0, still legal
        assert game.banked == [0, 0]
        assert game.to_move == 1

    def test_reaching_target_wins(self):
        game = fresh(PigDice, 2, seed=1)
        game.banked[0] = 99
        game.turn_total = 5
        game.apply(0, "hold")
        assert game.terminal is not None
        assert game.terminal.ranking == ((0,), (1,))


class TestDontSayIt:
    def test_whole_word_detection(self):
        assert "garden" in words_in("My GARDEN, obviously!")
        assert "garden" not in words_in("gardening is fun")

    def test_saying_opponent_word_loses(self):
        env = make("DontSayIt-v0", rng_seed=6)
        env.reset(2)
        trap = env.game.secret[1]  # player 1's word
        done, info = env.step(f"[I love {trap}!]")
        assert done and info["reason"] == "win"
        assert env.close() == {0: -1.0, 1: 1.0}

    def test_turn_limit_draw(self):
        env = make("DontSayIt-v0", rng_seed=6)
        env.reset(2)
        done = False
        for _ in range(20):
            assert not done
            done, info = env.step("[hmm]")
        assert done and info["reason"] == "draw"
        assert env.close() == {0: 0.0, 1: 0.0}

    def test_distinct_secrets(self):
        for seed in range(30):
            env = make("DontSayIt-v0", rng_seed=seed)
            env.reset(2)
            assert env.game.secret[0] != env.game.secret[1]
            assert all(w in general_words() for w in env.game.secret)


class TestSimpleNegotiation:
    def test_offer_grammar(self):
        offer = parse_offer(0, "Offer: give 2 Wheat -> receive 3 Ore")
        assert (offer.give_qty, offer.give_res, offer.take_qty, offer.take_res) == \
            (2, "Wheat", 3, "Ore")
        assert parse_offer(0, "give me everything") is None

    def test_trade_moves_resources(self):
        game = fresh(SimpleNegotiation, 2, seed=5)
        give = next(r for r in game.holdings[0] if game.holdings[0][r] >= 2)
        take = next(r for r in game.holdings[1]
                    if r != give and game.holdings[1][r] >= 1)
        before0 = dict(game.holdings[0])
        before1 = dict(game.holdings[1])
        game.apply(0, f"Offer: give 2 {give} -> receive 1 {take}")
        game.apply(1, "Accept")
        assert game.holdings[0][give] == before0[give] - 2
        assert game.holdings[1][give] == before1[give] + 2
        assert game.trades == 1

    def test_accept_without_offer_is_illegal(self):
        game = fresh(SimpleNegotiation, 2, seed=5)
        with pytest.raises(IllegalAction):
            game.apply(0, "Accept")

    def test_no_trade_is_draw(self):
        env = make("SimpleNegotiation-v0", rng_seed=5)
        env.reset(2)
        done = False
        for _ in range(10):
            assert not done
            done, info = env.step("[Deny]")
        assert done and info["reason"] == "draw"
        assert env.close() == {0: 0.0, 1: 0.0}

    def test_gain_scored_in_own_valuation(self):
        env = make("SimpleNegotiation-v0", rng_seed=8)
        env.reset(2)
        game = env.game
        give = next(r for r in game.holdings[0] if game.holdings[0][r] >= 1)
        take = next(r for r in game.holdings[1] if game.holdings[1][r] >= 3)
        env.step(f"[Offer: give 1 {give} -> receive 3 {take}]")
        env.step("[Accept]")
        expected0 = 3 * game.values[0][take] - 1 * game.values[0][give]
        assert game.gain(0) == expected0


class TestIteratedPrisonersDilemma:
    def test_payoff_matrix_cell(self):
        env = make("IteratedPrisonersDilemma-v0", rng_seed=0)
        env.reset(2)
        env.step("[defect]")
        env.step("[cooperate]")
        assert env.game.scores == [5, 0]

    def test_sealed_choice_not_visible_to_opponent(self):
        env = make("IteratedPrisonersDilemma-v0", rng_seed=0)
        env.reset(2)
        env.step("[defect]")
        _, obs = env.get_observation()  # player 1, pre-resolution
        assert not any(m.sender == 0 for m in obs.messages)
        # ...but player 0 still sees their own sealed choice.
        own = env.observation_for(0)
        assert any(m.sender == 0 and "defect" in m.content for m in own.messages)

    def test_mutual_cooperation_ten_rounds_draw(self):
        env = make("IteratedPrisonersDilemma-v0", rng_seed=0)
        env.reset(2)
        done = False
        for _ in range(20):
            assert not done
            done, info = env.step("[cooperate]")
        assert done and info["reason"] == "draw"
        assert env.game.scores == [30, 30]

    def test_defector_beats_cooperator(self):
        env = make("IteratedPrisonersDilemma-v0", rng_seed=0)
        env.reset(2)
        done = False
        while not done:
            pid, _ = env.get_observation()
            done, _ = env.step("[defect]" if pid == 0 else "[cooperate]")
        assert env.close() == {0: 1.0, 1: -1.0}


class TestLiarsDice:
    def test_bids_strictly_increase(self):
        game = fresh(LiarsDice, 3)
        game.apply(0, "bid 2 4")
        tokens = game.legal_actions().tokens
        assert "bid 2 4" not in tokens
        assert "bid 2 3" not in tokens
        assert "bid 2 5" in tokens
        assert "bid 3 1" in tokens
        assert "call" in tokens

    def test_call_without_bid_is_illegal(self):
        game = fresh(LiarsDice, 3)
        assert "call" not in game.legal_actions().tokens
        with pytest.raises(IllegalAction):
            game.apply(0, "call")

    def test_call_resolution_and_die_loss(self):
        game = fresh(LiarsDice, 2, seed=9)
        total_sixes = sum(d == 6 for hand in game.dice for d in hand)
        game.apply(0, f"bid {total_sixes + 1} 6")  # overbid by one
        before = list(game.counts)
        game.apply(1, "call")
        assert game.counts[0] == before[0] - 1  # bidder loses the die

    def test_elimination_ranking(self):
        env, _, rewards, info = random_playout("LiarsDice-v0", seed=12, num_players=3)
        terminal = env.game.terminal
        flat = [p for group in terminal.ranking for p in group]
        assert sorted(flat) == [0, 1, 2]
        assert sum(rewards.values()) == pytest.approx(0.0)

    def test_render_hides_other_hands(self):
        game = fresh(LiarsDice, 3)
        view = game.render(0)
        assert f"{game.dice[0]} (you)" in view
        assert str(game.dice[1]) not in view.replace(f"{game.dice[0]} (you)", "")


class TestSnake:
    def test_wall_collision_kills(self):
        game = fresh(Snake, 2)
        # Player 0 starts at (2, 2); march it into the top wall.
        for _ in range(3):
            if not game.alive[0]:
                break
            game.apply(game.to_move, "up") if game.to_move == 0 else None
            if game.to_move == 1:
                game.apply(1, "down")
        assert not game.alive[0]

    def test_head_on_collision_kills_both(self):
        game = fresh(Snake, 2)
        game.body[0].clear()
        game.body[0].append((5, 4))
        game.body[1].clear()
        game.body[1].append((5, 6))
        game.apply(0, "right")
        game.apply(1, "left")
        assert not game.alive[0] and not game.alive[1]
        assert game.terminal is not None

    def test_eating_apple_grows(self):
        game = fresh(Snake, 2)
        game.apples = {(2, 3), (9, 9), (8, 9)}
        game.apply(0, "right")
        game.apply(1, "up")
        if game.alive[0]:
            assert len(game.body[0]) == 2

    def test_survivor_ranks_first(self):
        env, _, rewards, _ = random_playout("Snake-v0", seed=21, num_players=3)
        terminal = env.game.terminal
        flat = [p for group in terminal.ranking for p in group]
        assert sorted(flat) == [0, 1, 2]


class TestBlindAuction:
    def test_resolution_highest_bid_lowest_index_tiebreak(self):
        game = fresh(BlindAuction, 3, seed=2)
        game.apply(0, "10 0 0 0 0")
        game.apply(1, "10 5 0 0 0")
        game.apply(2, "0 5 7 0 0")
        terminal = game.terminal
        assert terminal is not None
        # Item 0: tie at 10 -> player 0. Item 1: tie at 5 -> player 1.
        # Item 2: player 2 at 7. Items 3, 4 unsold.
        expected = {
            0: game.values[0][0] - 10,
            1: game.values[1][1] - 5,
            2: game.values[2][2] - 7,
        }
        flat = {p for group in terminal.ranking for p in group}
        assert flat == {0, 1, 2}
        assert f"{expected}" in terminal.detail

    def test_over_budget_is_illegal(self):
        game = fresh(BlindAuction, 3, seed=2)
        with pytest.raises(IllegalAction):
            game.apply(0, "500 500 500 0 0")

    def test_sealed_bids_private_until_resolution(self):
        env = make("BlindAuction-v0", rng_seed=2)
        env.reset(3)
        env.step("[10 0 0 0 0]")
        _, obs = env.get_observation()  # player 1
        assert not any("10 0 0 0 0" in m.content for m in obs.messages)

    def test_valuations_in_range(self):
        for seed in range(20):
            game = fresh(BlindAuction, 4, seed=seed)
            for player_values in game.values:
                assert all(5 <= v <= 100 for v in player_values)


class TestTerminalAccess:
    def test_legal_actions_raise_after_terminal(self):
        env, _, _, _ = random_playout("TicTacToe-v0", seed=2)
        with pytest.raises(TerminalError):
            env.game.legal_actions()
