"""The online arena: registration, queues, live sessions, persistence.

Transport is newline-delimited JSON over a plain TCP connection, with an
HTTP long-poll fallback carrying the same payloads (plus read-only
endpoints for the leaderboard snapshot, skill profiles, and the static
web console bundle).

Concurrency: one reader thread per TCP connection, one driver thread per
live match, one sweep thread.  The leaderboard/store is single-writer
behind a lock; reads serve snapshots.
"""

from __future__ import annotations

import io
import json
import os
import queue
import random
import socket
import socketserver
import threading
import time
import uuid
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlparse

from ..config import ServerConfig
from ..core import make
from ..games import registry
from ..games.skills import skill_weights
from ..rating import HUMANITY, conservative, normalize_skills, skill_profiles
from ..records import MatchRecord, Turn, token_or_none
from .matchmaking import QueueState, Ticket, sweep
from .protocol import (
    ProtocolError,
    decode_client_message,
    encode,
    error,
    match_end,
    match_found,
    observation,
    queued,
)
from .store import MatchStore


class Channel:
    """One connected participant: outbound messages plus inbound actions."""

    def __init__(self, name: str = ""):
        self.name = name
        self.human = False
        self.alive = True
        self._actions: "queue.Queue[tuple[str, str] | None]" = queue.Queue()

    def send(self, payload: dict) -> None:
        raise NotImplementedError

    def push_action(self, match_id: str, text: str) -> None:
        self._actions.put((match_id, text))

    def close(self) -> None:
        self.alive = False
        self._actions.put(None)

    def await_action(self, match_id: str, deadline: float) -> str | None:
        """Block until an action for this match, the deadline, or disconnect."""
        while True:
            remaining = deadline - time.monotonic()
            if remaining <= 0 or not self.alive:
                return None
            try:
                item = self._actions.get(timeout=min(remaining, 0.5))
            except queue.Empty:
                continue
            if item is None:
                return None
            got_match, text = item
            if got_match == match_id:
                return text
            # stale action from a previous match: drop it


class TcpChannel(Channel):
    def __init__(self, sock: socket.socket):
        super().__init__()
        self._sock = sock
        self._lock = threading.Lock()

    def send(self, payload: dict) -> None:
        try:
            with self._lock:
                self._sock.sendall(encode(payload))
        except OSError:
            self.close()


class PollChannel(Channel):
    """Long-poll fallback: outbound messages buffer until the next poll."""

    def __init__(self, sid: str):
        super().__init__()
        self.sid = sid
        self._outbox: list[dict] = []
        self._cond = threading.Condition()
        self.last_poll = time.monotonic()

    def send(self, payload: dict) -> None:
        with self._cond:
            self._outbox.append(payload)
            self._cond.notify_all()

    def drain(self, timeout_s: float) -> list[dict]:
        self.last_poll = time.monotonic()
        with self._cond:
            if not self._outbox:
                self._cond.wait(timeout=timeout_s)
            out, self._outbox = self._outbox, []
            return out


class ArenaServer:
    def __init__(self, config: ServerConfig):
        self.config = config
        self.store = MatchStore(config.data_dir)
        self.queues = QueueState()
        self.registrations: dict[str, dict] = {}  # name -> {description,email,human}
        self.channels: dict[str, Channel] = {}
        self.active: set[str] = set()  # names in live sessions
        self.lock = threading.RLock()
        self.seed_rng = random.Random()
        self._stop = threading.Event()
        self._threads: list[threading.Thread] = []
        self._tcp_server: socketserver.ThreadingTCPServer | None = None
        self._http_server: ThreadingHTTPServer | None = None
        self._poll_sessions: dict[str, PollChannel] = {}
        self.static_dir: str | None = None

    # -- registration and queueing ------------------------------------------
    def register(self, channel: Channel, name: str, description: str, email: str,
                 human: bool = False) -> None:
        if name == HUMANITY:
            raise ProtocolError("reserved_name", f"{HUMANITY!r} is reserved")
        if not name:
            raise ProtocolError("bad_name", "model_name must be non-empty")
        with self.lock:
            existing = self.registrations.get(name)
            if existing is not None and existing["email"] != email:
                raise ProtocolError("name_conflict",
                                    f"{name!r} already registered with another email")
            self.registrations[name] = {
                "description": description, "email": email, "human": human,
            }
            channel.name = name
            channel.human = human
            self.channels[name] = channel
            # Registration seeds the rating book so the row exists.
            self.store.board.entry(self.entity_for(name))

    def entity_for(self, name: str) -> str:
        reg = self.registrations.get(name)
        return HUMANITY if reg is not None and reg["human"] else name

    def enqueue(self, channel: Channel, env_ids: list[str]) -> None:
        name = channel.name
        if not name or name not in self.registrations:
            raise ProtocolError("not_registered", "send hello first")
        if not env_ids:
            raise ProtocolError("bad_request", "env_ids must be non-empty")
        reg = registry()
        for env_id in env_ids:
            if env_id not in reg:
                raise ProtocolError("unknown_env", f"unknown env id {env_id!r}")
        with self.lock:
            if self.queues.waiting(name) or name in self.active:
                raise ProtocolError("already_queued",
                                    f"{name!r} is already queued or playing")
            entity = self.entity_for(name)
            score = conservative(self.store.board.entry(entity).glob.rating)
            self.queues.add(Ticket(
                name=name,
                env_ids=tuple(env_ids),
                enqueued_at=time.monotonic(),
                score=score,
                human=channel.human,
            ))
        channel.send(queued())

    # -- message dispatch -----------------------------------------------------
    def handle_message(self, channel: Channel, payload: dict) -> None:
        kind = payload["type"]
        if kind == "hello":
            self.register(channel, payload["model_name"],
                          payload["model_description"], payload["email"],
                          human=bool(payload.get("human", False)))
        elif kind == "enqueue":
            self.enqueue(channel, list(payload["env_ids"]))
        elif kind == "action":
            channel.push_action(payload["match_id"], payload["text"])

    def handle_line(self, channel: Channel, line: str) -> None:
        try:
            self.handle_message(channel, decode_client_message(line))
        except ProtocolError as exc:
            channel.send(error(exc.code, exc.detail))

    # -- matchmaking sweep ------------------------------------------------------
    def run_sweep(self) -> int:
        """One matchmaking pass; returns the number of sessions started."""
        with self.lock:
            proposals = sweep(self.queues)
            started = 0
            for proposal in proposals:
                names = [t.name for t in proposal.tickets]
                if any(n in self.active or not self._channel_alive(n) for n in names):
                    continue  # stale ticket; participant will re-enqueue
                self.active.update(names)
                started += 1
                thread = threading.Thread(
                    target=self._drive_session,
                    args=(proposal.env_id, names),
                    daemon=True,
                )
                thread.start()
                self._threads.append(thread)
        return started

    def _channel_alive(self, name: str) -> bool:
        channel = self.channels.get(name)
        return channel is not None and channel.alive

    def _sweep_loop(self) -> None:
        while not self._stop.is_set():
            self.run_sweep()
            self._stop.wait(self.config.sweep_interval_s)

    # -- session driving ---------------------------------------------------------
    def _clock_for(self, name: str) -> float:
        if self.registrations.get(name, {}).get("human"):
            return self.config.human_turn_clock_s
        return self.config.model_turn_clock_s

    def _drive_session(self, env_id: str, names: list[str]) -> None:
        match_id = uuid.uuid4().hex
        try:
            seed = self.seed_rng.getrandbits(63)
            env = make(env_id, rng_seed=seed)
            env.reset(num_players=len(names))
            seats = {i: self.channels[name] for i, name in enumerate(names)}
            for i, name in enumerate(names):
                seats[i].send(match_found(match_id, env_id, i, len(names)))
            record = MatchRecord(match_id=match_id, env_id=env_id, seed=seed,
                                 participants=list(names))
            done = False
            while not done:
                pid, obs = env.get_observation()
                prompt = obs.render_prompt()
                clock = self._clock_for(names[pid])
                seats[pid].send(observation(match_id, pid, prompt, deadline_s=clock))
                deadline = time.monotonic() + clock
                action = seats[pid].await_action(match_id, deadline)
                if action is None:
                    action = ""  # timeout or disconnect forfeits as invalid_move
                done, info = env.step(action)
                record.turns.append(Turn(pid, prompt, action,
                                         token_or_none(action), time.time()))
            rewards = env.close()
            record.rewards = {str(seat): value for seat, value in rewards.items()}
            self._commit_and_notify(record, names, seats)
        finally:
            with self.lock:
                self.active.difference_update(names)

    def _commit_and_notify(self, record: MatchRecord, names: list[str], seats) -> None:
        entities = [self.entity_for(name) for name in names]
        with self.lock:
            self.store.commit(record, entities)
        for i, name in enumerate(names):
            movement = record.ratings[name]["global"]
            seats[i].send(match_end(
                record.match_id,
                rewards=record.rewards,
                rating={
                    "mu_before": movement["before"]["mu"],
                    "sigma_before": movement["before"]["sigma"],
                    "mu_after": movement["after"]["mu"],
                    "sigma_after": movement["after"]["sigma"],
                },
            ))

    # -- queries ---------------------------------------------------------------
    def get_leaderboard(self) -> list[dict]:
        with self.lock:
            return self.store.leaderboard_rows()

    def get_skill_profiles(self) -> list:
        with self.lock:
            return normalize_skills(skill_profiles(self.store.board, skill_weights()))

    def skill_profiles_csv(self) -> str:
        import csv

        profiles = self.get_skill_profiles()
        buffer = io.StringIO()
        writer = csv.writer(buffer)
        writer.writerow(["name", "skill", "raw", "normalized"])
        for profile in profiles:
            for skill in sorted(profile.raw):
                writer.writerow([profile.name, skill, repr(profile.raw[skill]),
                                 repr(profile.normalized.get(skill, 0.5))])
        return buffer.getvalue()

    # -- lifecycle ----------------------------------------------------------------
    def start(self) -> None:
        self._start_tcp()
        self._start_http()
        sweeper = threading.Thread(target=self._sweep_loop, daemon=True)
        sweeper.start()
        self._threads.append(sweeper)

    def stop(self) -> None:
        self._stop.set()
        for channel in list(self.channels.values()):
            channel.close()
        if self._tcp_server is not None:
            self._tcp_server.shutdown()
            self._tcp_server.server_close()
        if self._http_server is not None:
            self._http_server.shutdown()
            self._http_server.server_close()

    @property
    def tcp_port(self) -> int:
        return self._tcp_server.server_address[1]

    @property
    def http_port(self) -> int:
        return self._http_server.server_address[1]

    # -- TCP transport ---------------------------------------------------------
    def _start_tcp(self) -> None:
        arena = self

        class Handler(socketserver.StreamRequestHandler):
            def handle(self):
                channel = TcpChannel(self.request)
                try:
                    for raw in self.rfile:
                        line = raw.decode("utf-8", errors="replace").strip()
                        if line:
                            arena.handle_line(channel, line)
                except (OSError, ValueError):
                    pass
                finally:
                    channel.close()
                    with arena.lock:
                        if channel.name:
                            arena.queues.remove_participant(channel.name)

        class Server(socketserver.ThreadingTCPServer):
            allow_reuse_address = True
            daemon_threads = True

        self._tcp_server = Server((self.config.listen_host, self.config.tcp_port), Handler)
        thread = threading.Thread(target=self._tcp_server.serve_forever, daemon=True)
        thread.start()
        self._threads.append(thread)

    # -- HTTP transport -----------------------------------------------------------
    def _start_http(self) -> None:
        arena = self

        class Handler(BaseHTTPRequestHandler):
            protocol_version = "HTTP/1.1"

            def log_message(self, *args):
                pass

            def _json(self, code: int, payload) -> None:
                raw = json.dumps(payload).encode()
                self.send_response(code)
                self.send_header("Content-Type", "application/json")
                self.send_header("Content-Length", str(len(raw)))
                self.send_header("Access-Control-Allow-Origin", "*")
                self.end_headers()
                self.wfile.write(raw)

            def _bytes(self, code: int, raw: bytes, content_type: str) -> None:
                self.send_response(code)
                self.send_header("Content-Type", content_type)
                self.send_header("Content-Length", str(len(raw)))
                self.send_header("Access-Control-Allow-Origin", "*")
                self.end_headers()
                self.wfile.write(raw)

            def do_POST(self):
                parts = urlparse(self.path)
                if parts.path == "/v0/session":
                    sid = uuid.uuid4().hex
                    channel = PollChannel(sid)
                    arena._poll_sessions[sid] = channel
                    self._json(200, {"sid": sid})
                    return
                if parts.path.startswith("/v0/session/") and parts.path.endswith("/send"):
                    sid = parts.path.split("/")[3]
                    channel = arena._poll_sessions.get(sid)
                    if channel is None:
                        self._json(404, error("unknown_session", sid))
                        return
                    length = int(self.headers.get("Content-Length", "0"))
                    body = self.rfile.read(length).decode()
                    arena.handle_line(channel, body.strip())
                    self._json(200, {"ok": True})
                    return
                self._json(404, error("not_found", parts.path))

            def do_GET(self):
                parts = urlparse(self.path)
                if parts.path.startswith("/v0/session/") and parts.path.endswith("/recv"):
                    sid = parts.path.split("/")[3]
                    channel = arena._poll_sessions.get(sid)
                    if channel is None:
                        self._json(404, error("unknown_session", sid))
                        return
                    params = parse_qs(parts.query)
                    timeout_s = float(params.get("timeout_s", ["25"])[0])
                    self._json(200, {"messages": channel.drain(min(timeout_s, 55.0))})
                    return
                if parts.path == "/leaderboard.json":
                    if os.path.exists(arena.store.snapshot_path):
                        with open(arena.store.snapshot_path, "rb") as f:
                            self._bytes(200, f.read(), "application/json")
                    else:
                        self._bytes(200, b"{}\n", "application/json")
                    return
                if parts.path == "/skill_profiles.csv":
                    self._bytes(200, arena.skill_profiles_csv().encode(), "text/csv")
                    return
                served = arena._serve_static(parts.path)
                if served is not None:
                    self._bytes(200, served[0], served[1])
                else:
                    self._json(404, error("not_found", parts.path))

        self._http_server = ThreadingHTTPServer(
            (self.config.listen_host, self.config.http_port), Handler)
        thread = threading.Thread(target=self._http_server.serve_forever, daemon=True)
        thread.start()
        self._threads.append(thread)

    def _serve_static(self, path: str):
        if self.static_dir is None:
            return None
        rel = "index.html" if path == "/" else path.lstrip("/")
        full = os.path.realpath(os.path.join(self.static_dir, rel))
        if not full.startswith(os.path.realpath(self.static_dir)) or not os.path.isfile(full):
            return None
        types = {".html": "text/html", ".js": "text/javascript",
                 ".css": "text/css", ".json": "application/json",
                 ".map": "application/json"}
        _, ext = os.path.splitext(full)
        with open(full, "rb") as f:
            return f.read(), types.get(ext, "application/octet-stream")
