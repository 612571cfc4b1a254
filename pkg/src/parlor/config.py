"""Server/runtime configuration: one INI file plus environment overrides.

Example file::

    [server]
    listen_host = 127.0.0.1
    tcp_port = 7770
    http_port = 7771
    data_dir = ./arena-data
    sweep_interval_s = 1.0
    human_turn_clock_s = 120
    model_turn_clock_s = 60

Every key can be overridden by ``PARLOR_<KEY_UPPERCASED>``.
"""

from __future__ import annotations

import configparser
import os
from dataclasses import dataclass, fields


@dataclass
class ServerConfig:
    listen_host: str = "127.0.0.1"
    tcp_port: int = 7770
    http_port: int = 7771
    data_dir: str = "./arena-data"
    sweep_interval_s: float = 1.0
    human_turn_clock_s: float = 120.0
    model_turn_clock_s: float = 60.0
    disconnect_grace_s: float = 5.0


def load_config(path: str | None = None, env: dict | None = None) -> ServerConfig:
    env = os.environ if env is None else env
    cfg = ServerConfig()
    values: dict[str, str] = {}
    if path:
        parser = configparser.ConfigParser()
        with open(path) as f:
            parser.read_file(f)
        if parser.has_section("server"):
            values.update(parser["server"])
    for f in fields(ServerConfig):
        override = env.get(f"PARLOR_{f.name.upper()}")
        if override is not None:
            values[f.name] = override
    for f in fields(ServerConfig):
        if f.name in values:
            setattr(cfg, f.name, _cast(f.type, values[f.name]))
    return cfg


def _cast(annotation, raw: str):
    if annotation in (int, "int"):
        return int(raw)
    if annotation in (float, "float"):
        return float(raw)
    return raw
