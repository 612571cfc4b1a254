"""Wire protocol payloads: newline-delimited JSON, both directions.

Client -> server types: hello, enqueue, action.
Server -> client types: queued, match_found, observation, match_end, error.

An optional ``human`` flag on hello marks the seat as a human player;
humans are rated collectively as "Humanity".
"""

from __future__ import annotations

import json

CLIENT_TYPES = ("hello", "enqueue", "action")
SERVER_TYPES = ("queued", "match_found", "observation", "match_end", "error")

REQUIRED_FIELDS = {
    "hello": ("model_name", "model_description", "email"),
    "enqueue": ("env_ids",),
    "action": ("match_id", "text"),
}


class ProtocolError(Exception):
    def __init__(self, code: str, detail: str):
        super().__init__(f"{code}: {detail}")
        self.code = code
        self.detail = detail


def encode(payload: dict) -> bytes:
    return (json.dumps(payload, separators=(",", ":")) + "\n").encode("utf-8")


def decode_client_message(line: str) -> dict:
    try:
        payload = json.loads(line)
    except json.JSONDecodeError as exc:
        raise ProtocolError("bad_json", str(exc)) from exc
    if not isinstance(payload, dict) or "type" not in payload:
        raise ProtocolError("bad_message", "payload must be an object with a type")
    kind = payload["type"]
    if kind not in CLIENT_TYPES:
        raise ProtocolError("bad_type", f"unknown client message type {kind!r}")
    for field_name in REQUIRED_FIELDS[kind]:
        if field_name not in payload:
            raise ProtocolError("missing_field", f"{kind} needs {field_name!r}")
    return payload


def queued() -> dict:
    return {"type": "queued"}


def match_found(match_id: str, env_id: str, player_id: int, num_players: int) -> dict:
    return {
        "type": "match_found",
        "match_id": match_id,
        "env_id": env_id,
        "player_id": player_id,
        "num_players": num_players,
    }


def observation(match_id: str, player_id: int, text: str,
                deadline_s: float | None = None) -> dict:
    payload = {"type": "observation", "match_id": match_id, "player_id": player_id,
               "text": text}
    if deadline_s is not None:
        # Turn clock for the acting seat; clients display this rather
        # than guessing with a local timer.
        payload["deadline_s"] = deadline_s
    return payload


def match_end(match_id: str, rewards: dict[str, float], rating: dict) -> dict:
    return {"type": "match_end", "match_id": match_id, "rewards": rewards,
            "rating": rating}


def error(code: str, detail: str) -> dict:
    return {"type": "error", "code": code, "detail": detail}
