"""Agent kit: baselines, the chat-completion client, and the human relay."""

import collections
import queue
import threading

import pytest

import parlor
from parlor.agents import (
    HumanRelayAgent,
    LLMAgent,
    LLMEndpointConfig,
    NimPerfectAgent,
    RandomAgent,
)
from parlor.errors import AuthError, MalformedResponse, TurnTimeout


class TestRandomAgent:
    def test_uniform_over_empty_board(self):
        env = parlor.make("TicTacToe-v0", rng_seed=0)
        env.reset(2)
        agent = RandomAgent(env, seed=77)
        counts = collections.Counter(agent("") for _ in range(90_000))
        for cell in range(9):
            assert abs(counts[f"[{cell}]"] - 10_000) <= 400

    def test_deterministic_given_seed(self):
        def play(seed):
            env = parlor.make("ConnectFour-v0", rng_seed=3)
            agents = {p: RandomAgent(env, seed=seed + p) for p in (0, 1)}
            env.reset(2)
            actions = []
            done = False
            while not done:
                pid, _ = env.get_observation()
                action = agents[pid]("")
                actions.append(action)
                done, _ = env.step(action)
            return actions

        assert play(5) == play(5)

    def test_singleton_legality_forced(self):
        env = parlor.make("Nim-v0", rng_seed=0)
        env.reset(2)
        env.unwrapped().game.piles = [0, 0, 1]
        agent = RandomAgent(env, seed=1)
        assert agent("") == "[2 1]"

    def test_free_text_games_always_legal(self):
        for env_id in ("SimpleNegotiation-v0", "DontSayIt-v0", "BlindAuction-v0"):
            rules = parlor.registry()[env_id].rules
            env = parlor.make(env_id, rng_seed=4)
            env.reset(rules.min_players)
            agent = RandomAgent(env, seed=2)
            space = env.game.legal_actions()
            for _ in range(50):
                token = agent("").strip("[]")
                assert space.is_legal(token)


class TestNimPerfectAgent:
    def test_zeroes_the_nim_sum(self):
        env = parlor.make("Nim-v0", rng_seed=0)
        env.reset(2)
        agent = NimPerfectAgent(env)
        move = agent("").strip("[]")
        pile, count = (int(x) for x in move.split())
        piles = list(env.game.piles)
        piles[pile] -= count
        assert piles[0] ^ piles[1] ^ piles[2] == 0


class FakeResponse:
    def __init__(self, status_code=200, payload=None):
        self.status_code = status_code
        self._payload = payload or {}

    def json(self):
        return self._payload


class TestLLMAgent:
    CFG = LLMEndpointConfig(base_url="https://api.example.test/v1", model="test-model",
                            api_key_env="TEST_LLM_KEY", max_retries=3)

    def test_missing_key_raises_before_any_call(self, monkeypatch):
        monkeypatch.delenv("TEST_LLM_KEY", raising=False)
        calls = []
        agent = LLMAgent(self.CFG, post=lambda *a, **k: calls.append(1))
        with pytest.raises(AuthError):
            agent("observation")
        assert calls == []

    def test_pass_through_completion(self, monkeypatch):
        monkeypatch.setenv("TEST_LLM_KEY", "k")
        payload = {"choices": [{"message": {"content": "I choose [4]"}}]}
        captured = {}

        def post(url, json=None, headers=None, timeout=None):
            captured.update(url=url, body=json, headers=headers)
            return FakeResponse(200, payload)

        agent = LLMAgent(self.CFG, game_name="TicTacToe-v0", post=post)
        assert agent("the board") == "I choose [4]"
        assert captured["url"].endswith("/chat/completions")
        assert captured["headers"]["Authorization"] == "Bearer k"
        assert captured["body"]["model"] == "test-model"
        assert captured["body"]["messages"][1] == {"role": "user", "content": "the board"}
        assert captured["body"]["messages"][0]["role"] == "system"
        assert "TicTacToe-v0" in captured["body"]["messages"][0]["content"]

    def test_retries_then_succeeds(self, monkeypatch):
        monkeypatch.setenv("TEST_LLM_KEY", "k")
        import requests

        attempts = []

        def post(url, **kwargs):
            attempts.append(1)
            if len(attempts) <= 2:
                raise requests.ConnectionError("transient")
            return FakeResponse(200, {"choices": [{"message": {"content": "[hold]"}}]})

        agent = LLMAgent(self.CFG, post=post, sleep=lambda s: None)
        assert agent("obs") == "[hold]"
        assert len(attempts) == 3

    def test_rejected_key(self, monkeypatch):
        monkeypatch.setenv("TEST_LLM_KEY", "bad")
        agent = LLMAgent(self.CFG, post=lambda *a, **k: FakeResponse(401),
                         sleep=lambda s: None)
        with pytest.raises(AuthError):
            agent("obs")

    def test_malformed_payload(self, monkeypatch):
        monkeypatch.setenv("TEST_LLM_KEY", "k")
        agent = LLMAgent(self.CFG, post=lambda *a, **k: FakeResponse(200, {"oops": 1}),
                         sleep=lambda s: None)
        with pytest.raises(MalformedResponse):
            agent("obs")

    def test_gives_up_after_retries(self, monkeypatch):
        monkeypatch.setenv("TEST_LLM_KEY", "k")
        agent = LLMAgent(self.CFG, post=lambda *a, **k: FakeResponse(503),
                         sleep=lambda s: None)
        with pytest.raises(TimeoutError):
            agent("obs")


class TestHumanRelay:
    def test_relay_round_trip(self):
        seen = []
        inbound: "queue.Queue[str]" = queue.Queue()
        agent = HumanRelayAgent(seen.append, inbound, turn_clock_s=5.0)
        inbound.put("[4]")
        assert agent("your move") == "[4]"
        assert seen == ["your move"]

    def test_clock_expiry(self):
        agent = HumanRelayAgent(lambda text: None, queue.Queue(), turn_clock_s=0.05)
        with pytest.raises(TurnTimeout):
            agent("your move")

    def test_cancel_unblocks_waiter(self):
        inbound: "queue.Queue[str]" = queue.Queue()
        agent = HumanRelayAgent(lambda text: None, inbound, turn_clock_s=10.0)
        errors = []

        def wait():
            try:
                agent("your move")
            except TurnTimeout:
                errors.append("timeout")

        thread = threading.Thread(target=wait)
        thread.start()
        agent.cancel()
        thread.join(timeout=2.0)
        assert not thread.is_alive()
        assert errors == ["timeout"]
