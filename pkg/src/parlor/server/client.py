"""Client side of the wire protocol: play one seat of an online match
through the same five-call lifecycle as a local environment.

The server owns the environment; the client owns exactly one seat, so
``reset`` is called with ``num_players=1`` and ``get_observation``
always reports this client's seat.
"""

from __future__ import annotations

import json
import socket
import time

from ..errors import ArenaError
from .protocol import encode

__all__ = ["OnlineEnv", "make_online"]


class OnlineMatchError(ArenaError):
    def __init__(self, code: str, detail: str):
        super().__init__(f"{code}: {detail}")
        self.code = code
        self.detail = detail


class OnlineEnv:
    def __init__(self, host: str, port: int, env_ids: list[str], model_name: str,
                 model_description: str, email: str, human: bool = False,
                 timeout_s: float = 120.0):
        self.env_ids = list(env_ids)
        self.model_name = model_name
        self.timeout_s = timeout_s
        self._sock = socket.create_connection((host, port), timeout=timeout_s)
        self._buffer = b""
        self.match_id: str | None = None
        self.env_id: str | None = None
        self.player_id: int | None = None
        self.num_players: int | None = None
        self.rewards: dict[str, float] | None = None
        self.rating: dict | None = None
        self._pending_observation: str | None = None
        hello = {"type": "hello", "model_name": model_name,
                 "model_description": model_description, "email": email}
        if human:
            hello["human"] = True
        self._send(hello)

    # -- lifecycle ------------------------------------------------------------
    def reset(self, num_players: int = 1) -> None:
        if num_players != 1:
            raise ValueError("an online client controls exactly one seat")
        self._send({"type": "enqueue", "env_ids": self.env_ids})
        deadline = time.monotonic() + self.timeout_s
        while self.match_id is None:
            self._pump(deadline)

    def get_observation(self) -> tuple[int, str]:
        deadline = time.monotonic() + self.timeout_s
        while self._pending_observation is None and self.rewards is None:
            self._pump(deadline)
        if self._pending_observation is None:
            # The match ended while we were waiting (e.g. opponent forfeit);
            # the next step() reports done without sending anything.
            return self.player_id, "The match has ended."
        return self.player_id, self._pending_observation

    def step(self, action: str) -> tuple[bool, dict]:
        if self.rewards is not None:
            return True, {}
        self._pending_observation = None
        self._send({"type": "action", "match_id": self.match_id, "text": action})
        deadline = time.monotonic() + self.timeout_s
        # The match is over when match_end arrives; otherwise the next
        # observation for this seat signals another turn.
        while self._pending_observation is None and self.rewards is None:
            self._pump(deadline)
        if self.rewards is not None:
            return True, {}
        return False, {}

    def close(self) -> dict[int, float]:
        deadline = time.monotonic() + self.timeout_s
        while self.rewards is None:
            self._pump(deadline)
        self._sock.close()
        return {int(seat): value for seat, value in self.rewards.items()}

    # -- plumbing ----------------------------------------------------------------
    def _send(self, payload: dict) -> None:
        self._sock.sendall(encode(payload))

    def _pump(self, deadline: float) -> None:
        message = self._recv(deadline)
        kind = message.get("type")
        if kind == "error":
            raise OnlineMatchError(message.get("code", "?"), message.get("detail", ""))
        elif kind == "match_found":
            self.match_id = message["match_id"]
            self.env_id = message["env_id"]
            self.player_id = message["player_id"]
            self.num_players = message["num_players"]
        elif kind == "observation" and message.get("match_id") == self.match_id:
            self._pending_observation = message["text"]
        elif kind == "match_end" and message.get("match_id") == self.match_id:
            self.rewards = message["rewards"]
            self.rating = message["rating"]

    def _recv(self, deadline: float) -> dict:
        while b"\n" not in self._buffer:
            remaining = deadline - time.monotonic()
            if remaining <= 0:
                raise TimeoutError("server went quiet")
            self._sock.settimeout(remaining)
            chunk = self._sock.recv(65536)
            if not chunk:
                raise ConnectionError("server closed the connection")
            self._buffer += chunk
        line, self._buffer = self._buffer.split(b"\n", 1)
        return json.loads(line.decode("utf-8"))


def make_online(env_id: list[str] | str, model_name: str, model_description: str,
                email: str, host: str = "127.0.0.1", port: int = 7770,
                human: bool = False, timeout_s: float = 120.0) -> OnlineEnv:
    ids = [env_id] if isinstance(env_id, str) else list(env_id)
    return OnlineEnv(host, port, ids, model_name, model_description, email,
                     human=human, timeout_s=timeout_s)
