"""Operator command line: offline play, tournaments, rating simulations,
report export, and the online server.

Agent specs use ``kind:key=value,...``, e.g. ``random:seed=1`` or
``llm:model=gpt-4o,base=https://openrouter.ai/api/v1``.

Exit codes: 0 success, 1 configuration error, 2 runtime failure.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import games
from .agents import LLMAgent, LLMEndpointConfig, NimPerfectAgent, RandomAgent
from .config import load_config
from .errors import ArenaError
from .rating import Leaderboard, MatchResult, normalize_skills, skill_profiles
from .records import play_match, replay_rewards
from .tournament import (
    TournamentPlan,
    env_rating_config,
    ranking_from_rewards,
    run_tournament,
    simulate_convergence,
    write_convergence_csv,
    write_cross_table_csv,
    write_leaderboard_csv,
    write_skills_csv,
)


class ConfigError(Exception):
    pass


def parse_agent_spec(spec: str):
    """Return (display name, factory env -> agent) for one spec string."""
    kind, _, rest = spec.partition(":")
    options = {}
    if rest:
        for pair in rest.split(","):
            key, _, value = pair.partition("=")
            if not _:
                raise ConfigError(f"bad agent option {pair!r} in {spec!r}")
            options[key.strip()] = value.strip()
    if kind == "random":
        seed = int(options.pop("seed", "0"))
        _reject_extras(spec, options)
        return f"random:{seed}", lambda env: RandomAgent(env, seed=seed)
    if kind == "nim-perfect":
        _reject_extras(spec, options)
        return "nim-perfect", lambda env: NimPerfectAgent(env)
    if kind == "llm":
        if "model" not in options or "base" not in options:
            raise ConfigError(f"llm spec needs model= and base=: {spec!r}")
        cfg = LLMEndpointConfig(
            base_url=options.pop("base"),
            model=options.pop("model"),
            api_key_env=options.pop("key_env", "OPENROUTER_API_KEY"),
            timeout_s=float(options.pop("timeout", "60")),
            max_retries=int(options.pop("retries", "3")),
            temperature=float(options.pop("temp", "0.7")),
        )
        _reject_extras(spec, options)
        return cfg.model, lambda env: LLMAgent(cfg, game_name=env.env_id)
    raise ConfigError(f"unknown agent kind {kind!r} (random, nim-perfect, llm)")


def _reject_extras(spec: str, options: dict) -> None:
    if options:
        raise ConfigError(f"unknown options {sorted(options)} in {spec!r}")


def _check_env(env_id: str) -> str:
    if env_id not in games.registry():
        raise ConfigError(f"unknown env id {env_id!r}; see `parlor list-envs`")
    return env_id


def cmd_play(args) -> int:
    env_id = _check_env(args.env)
    specs = [parse_agent_spec(s) for s in args.agents]
    names = [name for name, _ in specs]
    factories = [factory for _, factory in specs]
    record = play_match(env_id, factories, args.seed, names=names)
    line = record.to_json()
    if args.out:
        with open(args.out, "a") as f:
            f.write(line + "\n")
    else:
        print(line)
    replayed = replay_rewards(record)
    if replayed != record.rewards:
        print("replay mismatch!", file=sys.stderr)
        return 2
    print(f"# rewards: {record.rewards}", file=sys.stderr)
    return 0


def cmd_tournament(args) -> int:
    env_ids = tuple(_check_env(e) for e in args.env)
    specs = [parse_agent_spec(s) for s in args.agents]
    plan = TournamentPlan(
        env_ids=env_ids,
        roster=tuple(specs),
        games_per_pairing=args.games,
        base_seed=args.seed,
    )
    sink_file = open(args.records, "w") if args.records else None

    def sink(record):
        sink_file.write(record.to_json() + "\n")
        sink_file.flush()

    try:
        table = run_tournament(plan, jobs=args.jobs,
                               on_record=sink if sink_file else None)
    finally:
        if sink_file is not None:
            sink_file.close()
    out = args.out or "cross_table.csv"
    write_cross_table_csv(table, out)
    for (agent, env_id), cell in sorted(table.cells.items()):
        print(f"{agent:>24} {env_id:<28} games={cell.games:<4} "
              f"mean_reward={cell.mean_reward:+.3f} win_rate={cell.win_rate:.3f}")
    print(f"# cross table written to {out}")
    if table.aborted:
        print(f"aborted after {len(table.records)} games: {table.aborted}",
              file=sys.stderr)
        return 2
    return 0


def cmd_simulate(args) -> int:
    report = simulate_convergence(
        num_agents=args.agents_count,
        spread=args.spread,
        max_matches=args.max_matches,
        seeds=args.seeds,
        elo_k=args.elo_k,
    )
    out = args.out or "convergence.csv"
    write_convergence_csv(report, out)
    ts_mean, elo_mean = report.mean("trueskill"), report.mean("elo")
    if report.no_signal:
        print("no signal: the ordering threshold was never reliably reached")
    else:
        print(f"matches to reliable ordering (mean over {args.seeds} seeds): "
              f"gaussian-skill={ts_mean:.1f} elo={elo_mean:.1f}")
    print(f"# per-seed counts written to {out}")
    return 0


def cmd_export(args) -> int:
    board = Leaderboard(env_rating_config)
    with open(args.records) as f:
        from .records import MatchRecord

        for line in f:
            if not line.strip():
                continue
            record = MatchRecord.from_json(line)
            entities = [
                record.ratings.get(name, {}).get("entity", name)
                for name in record.participants
            ]
            if len(entities) >= 2:
                board.record_match(MatchResult(
                    env_id=record.env_id,
                    ranking=ranking_from_rewards(record.rewards, entities),
                ))
    os.makedirs(args.out, exist_ok=True)
    write_leaderboard_csv(board, os.path.join(args.out, "leaderboard.csv"))
    profiles = normalize_skills(skill_profiles(board, games.skill_weights()))
    write_skills_csv(profiles, os.path.join(args.out, "skills.csv"))
    print(f"# wrote {args.out}/leaderboard.csv and {args.out}/skills.csv")
    return 0


def cmd_serve(args) -> int:
    from .server import ArenaServer

    config = load_config(args.config)
    if args.data_dir:
        config.data_dir = args.data_dir
    if args.tcp_port is not None:
        config.tcp_port = args.tcp_port
    if args.http_port is not None:
        config.http_port = args.http_port
    server = ArenaServer(config)
    if args.static_dir:
        server.static_dir = args.static_dir
    server.start()
    print(f"arena listening: tcp {config.listen_host}:{server.tcp_port}, "
          f"http {config.listen_host}:{server.http_port}, data in {config.data_dir}",
          flush=True)
    try:
        import threading

        threading.Event().wait()
    except KeyboardInterrupt:
        server.stop()
    return 0


def cmd_list_envs(args) -> int:
    for env_id in games.env_ids():
        rules = games.registry()[env_id].rules
        tagged = ", ".join(games.skills_for(env_id))
        print(f"{env_id:<30} players {rules.min_players}-{rules.max_players}  [{tagged}]")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="parlor", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("play", help="run one offline match")
    p.add_argument("--env", required=True)
    p.add_argument("--agents", nargs="+", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="append the match record to this JSONL file")
    p.set_defaults(func=cmd_play)

    p = sub.add_parser("tournament", help="round-robin cross table")
    p.add_argument("--env", nargs="+", required=True)
    p.add_argument("--agents", nargs="+", required=True)
    p.add_argument("--games", type=int, default=10, help="games per pairing per env")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="cross-table CSV path")
    p.add_argument("--records", help="also write every match record to this JSONL")
    p.set_defaults(func=cmd_tournament)

    p = sub.add_parser("simulate-ratings", help="rating-convergence comparison")
    p.add_argument("--agents-count", type=int, default=8)
    p.add_argument("--spread", type=float, default=None,
                   help="latent skill span (default: 2 beta)")
    p.add_argument("--max-matches", type=int, default=4000)
    p.add_argument("--seeds", type=int, default=20)
    p.add_argument("--elo-k", type=float, default=32.0)
    p.add_argument("--out", help="per-seed CSV path")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("export", help="leaderboard + skill-profile CSVs from records")
    p.add_argument("--records", required=True, help="matches.jsonl to aggregate")
    p.add_argument("--out", default="reports", help="output directory")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("serve", help="run the online arena server")
    p.add_argument("--config", help="INI config file")
    p.add_argument("--data-dir")
    p.add_argument("--tcp-port", type=int)
    p.add_argument("--http-port", type=int)
    p.add_argument("--static-dir", help="serve the web console from this directory")
    p.set_defaults(func=cmd_serve)

    p = sub.add_parser("list-envs", help="registered environments and their skills")
    p.set_defaults(func=cmd_list_envs)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ArenaError, OSError, ValueError) as exc:
        print(f"runtime failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
