"""Environment lifecycle contract: make/reset/observe/step/close, wrappers."""

import collections

import pytest

from parlor.core import make
from parlor.errors import (
    AlreadyResetError,
    NotResetError,
    NotTerminalError,
    PlayerCountOutOfRange,
    TerminalError,
    UnknownEnvId,
)
from parlor.messages import GAME
from parlor.wrappers import PromptObservationWrapper, wrap_prompt

from conftest import random_playout


class TestMake:
    def test_singleton_list_is_forced(self):
        env = make(["TicTacToe-v0"], rng_seed=7)
        assert env.env_id == "TicTacToe-v0"

    def test_plain_string_accepted(self):
        assert make("Nim-v0", rng_seed=0).env_id == "Nim-v0"

    def test_unknown_env(self):
        with pytest.raises(UnknownEnvId):
            make(["NoSuchGame-v0"], rng_seed=0)

    def test_unknown_env_in_list(self):
        with pytest.raises(UnknownEnvId):
            make(["TicTacToe-v0", "NoSuchGame-v0"], rng_seed=0)

    def test_uniform_choice_over_seeds(self):
        counts = collections.Counter(
            make(["TicTacToe-v0", "Nim-v0"], rng_seed=s).env_id
            for s in range(10_000)
        )
        assert abs(counts["TicTacToe-v0"] - 5_000) <= 200
        assert abs(counts["Nim-v0"] - 5_000) <= 200

    def test_choice_deterministic_per_seed(self):
        for seed in range(50):
            ids = [make(["Wordle-v0", "Hangman-v0"], rng_seed=seed).env_id
                   for _ in range(3)]
            assert len(set(ids)) == 1


class TestReset:
    def test_initial_state(self):
        env = make("TicTacToe-v0", rng_seed=0)
        env.reset(2)
        pid, obs = env.get_observation()
        assert pid == 0
        assert env.game.board == [""] * 9

    def test_player_count_out_of_range(self):
        env = make("TicTacToe-v0", rng_seed=0)
        with pytest.raises(PlayerCountOutOfRange) as exc:
            env.reset(3)
        assert (exc.value.min_players, exc.value.max_players, exc.value.got) == (2, 2, 3)

    def test_rules_message_first(self):
        env = make("TicTacToe-v0", rng_seed=0)
        env.reset(2)
        _, obs = env.get_observation()
        assert obs.messages[0].sender == GAME
        assert "tic-tac-toe" in obs.messages[0].content.lower()

    def test_private_setup_deterministic(self):
        dice = []
        for _ in range(2):
            env = make("LiarsDice-v0", rng_seed=42)
            env.reset(4)
            dice.append([list(env.game.dice[p]) for p in range(4)])
        assert dice[0] == dice[1]

    def test_not_reset_errors(self):
        env = make("TicTacToe-v0", rng_seed=0)
        with pytest.raises(NotResetError):
            env.get_observation()
        with pytest.raises(NotResetError):
            env.step("[4]")


class TestObservation:
    def test_idempotent(self):
        env = make("TicTacToe-v0", rng_seed=0)
        env.reset(2)
        first = env.get_observation()
        second = env.get_observation()
        assert first == second

    def test_terminal_error(self):
        env, _, _, _ = random_playout("TicTacToe-v0", seed=3)
        with pytest.raises(TerminalError):
            env.get_observation()

    def test_kuhn_private_cards(self):
        env = make("KuhnPoker-v0", rng_seed=5)
        env.reset(2)
        _, obs = env.get_observation()
        card_lines = [m for m in obs.messages if "Your card" in m.content]
        assert len(card_lines) == 1
        assert card_lines[0].to == frozenset([0])
        p1_view = env.observation_for(1)
        p1_cards = [m for m in p1_view.messages if "Your card" in m.content]
        assert len(p1_cards) == 1
        assert p1_cards[0].to == frozenset([1])


class TestStep:
    def test_legal_opening(self):
        env = make("TicTacToe-v0", rng_seed=0)
        env.reset(2)
        done, info = env.step("[4]")
        assert not done and info == {}
        assert env.game.board[4] == "X"

    def test_unparsable_action_terminates(self):
        env = make("TicTacToe-v0", rng_seed=0)
        env.reset(2)
        done, info = env.step("hello!")
        assert done and info["reason"] == "invalid_move"
        assert env.close() == {0: -1.0, 1: 1.0}

    def test_illegal_token_terminates(self):
        env = make("TicTacToe-v0", rng_seed=0)
        env.reset(2)
        env.step("[4]")
        done, info = env.step("[4]")  # occupied cell
        assert done and info["reason"] == "invalid_move"
        assert env.close() == {0: 1.0, 1: -1.0}

    def test_win_line(self):
        env = make("TicTacToe-v0", rng_seed=0)
        env.reset(2)
        for action in ("[0]", "[3]", "[1]", "[4]"):
            done, _ = env.step(action)
            assert not done
        done, info = env.step("[2]")
        assert done and info["reason"] == "win"
        assert env.close() == {0: 1.0, 1: -1.0}

    def test_no_terminal_reason_while_running(self):
        env = make("ConnectFour-v0", rng_seed=0)
        env.reset(2)
        done, info = env.step("[3]")
        assert not done
        assert "reason" not in info


class TestClose:
    def test_not_terminal(self):
        env = make("TicTacToe-v0", rng_seed=0)
        env.reset(2)
        with pytest.raises(NotTerminalError):
            env.close()

    def test_draw_rewards(self):
        env = make("TicTacToe-v0", rng_seed=0)
        env.reset(2)
        for action in ("[4]", "[0]", "[8]", "[2]", "[1]", "[7]", "[6]", "[3]", "[5]"):
            env.step(action)
        assert env.close() == {0: 0.0, 1: 0.0}

    def test_stable_across_calls(self):
        env, _, rewards, _ = random_playout("Nim-v0", seed=1)
        assert env.close() == rewards
        assert env.close() == rewards


class TestPromptWrapper:
    def test_sender_labels_in_order(self):
        env = wrap_prompt(make("TicTacToe-v0", rng_seed=0))
        env.reset(2)
        env.step("[4]")
        _, prompt = env.get_observation()
        assert isinstance(prompt, str)
        game_at = prompt.index("[GAME]")
        player_at = prompt.index("[Player 0]")
        assert game_at < player_at

    def test_own_messages_included(self):
        env = wrap_prompt(make("DontSayIt-v0", rng_seed=0))
        env.reset(2)
        env.step("[nice weather today]")
        env.step("[indeed it is]")
        _, prompt = env.get_observation()  # player 0 again
        assert "[Player 0] [nice weather today]" in prompt

    def test_stacking_twice_is_identity(self):
        single = wrap_prompt(make("TicTacToe-v0", rng_seed=3))
        double = PromptObservationWrapper(wrap_prompt(make("TicTacToe-v0", rng_seed=3)))
        single.reset(2)
        double.reset(2)
        for action in ("[4]", "[0]"):
            assert single.get_observation() == double.get_observation()
            single.step(action)
            double.step(action)

    def test_wrap_after_reset_rejected(self):
        env = make("TicTacToe-v0", rng_seed=0)
        env.reset(2)
        with pytest.raises(AlreadyResetError):
            wrap_prompt(env)

    def test_transparency(self):
        plain = make("KuhnPoker-v0", rng_seed=9)
        wrapped = wrap_prompt(make("KuhnPoker-v0", rng_seed=9))
        plain.reset(2)
        wrapped.reset(2)
        done = False
        while not done:
            pid_a, _ = plain.get_observation()
            pid_b, _ = wrapped.get_observation()
            assert pid_a == pid_b
            result_a = plain.step("[check]" if "check" in
                                  plain.game.legal_actions().tokens else "[call]")
            result_b = wrapped.step("[check]" if "check" in
                                    wrapped.unwrapped().game.legal_actions().tokens
                                    else "[call]")
            assert result_a == result_b
            done = result_a.done
        assert plain.close() == wrapped.close()

    def test_kuhn_prompt_never_leaks_opponent_card(self):
        env = wrap_prompt(make("KuhnPoker-v0", rng_seed=17))
        env.reset(2)
        inner = env.unwrapped()
        private = {p: f"Your card: {inner.game.deal[p]}" for p in (0, 1)}
        done = False
        while not done:
            pid, prompt = env.get_observation()
            assert private[1 - pid] not in prompt
            token = sorted(inner.game.legal_actions().tokens)[0]
            done, _ = env.step(f"[{token}]")
