"""Operator tooling: offline matches, round-robin tournaments with cross
tables, and the rating-convergence simulation harness."""

from __future__ import annotations

import csv
import hashlib
import math
import random
import statistics
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .games import registry
from .rating import (
    Leaderboard,
    MatchResult,
    Rating,
    RatingConfig,
    conservative,
    default_config,
    update_elo,
    update_two_player,
)
from .records import MatchRecord, play_match

__all__ = [
    "ConvergenceReport",
    "CrossTable",
    "TournamentPlan",
    "kendall_tau",
    "match_seed",
    "ranking_from_rewards",
    "run_tournament",
    "simulate_convergence",
    "write_convergence_csv",
    "write_cross_table_csv",
    "write_leaderboard_csv",
    "write_skills_csv",
]


def match_seed(base_seed: int, *parts) -> int:
    """Stable per-match seed derived from the base seed and a schedule key."""
    key = ":".join([str(base_seed), *map(str, parts)])
    return int.from_bytes(hashlib.sha256(key.encode()).digest()[:8], "big")


def ranking_from_rewards(rewards: dict[str, float], names: list[str]) -> tuple[tuple[str, ...], ...]:
    """Tie-grouped name ranking, best reward first."""
    by_reward: dict[float, list[str]] = {}
    for seat_key, reward in rewards.items():
        by_reward.setdefault(reward, []).append(names[int(seat_key)])
    return tuple(
        tuple(sorted(group)) for _, group in sorted(by_reward.items(), key=lambda kv: -kv[0])
    )


def env_rating_config(env_id: str) -> RatingConfig:
    return default_config(can_draw=registry()[env_id].rules.can_draw)


@dataclass(frozen=True)
class TournamentPlan:
    env_ids: tuple[str, ...]
    roster: tuple[tuple[str, object], ...]  # (name, factory: env -> agent)
    games_per_pairing: int = 10
    base_seed: int = 0

    def __post_init__(self):
        if len(self.roster) < 2:
            raise ValueError("roster needs at least two agents")
        if self.games_per_pairing < 1:
            raise ValueError("games per pairing must be >= 1")


@dataclass
class CellStats:
    games: int = 0
    reward_sum: float = 0.0
    wins: int = 0
    draws: int = 0

    @property
    def mean_reward(self) -> float:
        return self.reward_sum / self.games if self.games else 0.0

    @property
    def win_rate(self) -> float:
        return self.wins / self.games if self.games else 0.0

    @property
    def draw_rate(self) -> float:
        return self.draws / self.games if self.games else 0.0


@dataclass
class CrossTable:
    cells: dict[tuple[str, str], CellStats] = field(default_factory=dict)  # (agent, env)
    head_to_head: dict[tuple[str, str, str], CellStats] = field(default_factory=dict)
    ratings: dict[str, Rating] = field(default_factory=dict)
    records: list[MatchRecord] = field(default_factory=list)
    aborted: str | None = None  # failure message when the run stopped early

    def cell(self, agent: str, env_id: str) -> CellStats:
        return self.cells.setdefault((agent, env_id), CellStats())

    def pair_cell(self, agent: str, opponent: str, env_id: str) -> CellStats:
        return self.head_to_head.setdefault((agent, opponent, env_id), CellStats())


def _apply_record(table: CrossTable, record: MatchRecord) -> None:
    names = record.participants
    best = max(record.rewards.values())
    top = [names[int(k)] for k, v in record.rewards.items() if v == best]
    for seat_key, reward in record.rewards.items():
        name = names[int(seat_key)]
        cell = table.cell(name, record.env_id)
        cell.games += 1
        cell.reward_sum += reward
        if len(top) == len(names):
            cell.draws += 1
        elif name in top:
            cell.wins += 1
        if len(names) == 2:
            opponent = names[1 - int(seat_key)]
            pair = table.pair_cell(name, opponent, record.env_id)
            pair.games += 1
            pair.reward_sum += reward
            if len(top) == len(names):
                pair.draws += 1
            elif name in top:
                pair.wins += 1


def run_tournament(plan: TournamentPlan, jobs: int = 1, on_record=None) -> CrossTable:
    """Round robin: each unordered pair plays ``games_per_pairing`` per env,
    seat orders alternating.  Ratings accumulate in schedule order, so the
    result is identical at any parallelism level."""
    schedule = []
    roster = list(plan.roster)
    for env_id in plan.env_ids:
        for i in range(len(roster)):
            for j in range(i + 1, len(roster)):
                for g in range(plan.games_per_pairing):
                    pair = (roster[i], roster[j]) if g % 2 == 0 else (roster[j], roster[i])
                    seed = match_seed(plan.base_seed, env_id, roster[i][0], roster[j][0], g)
                    schedule.append((env_id, pair, seed, g))

    def play(entry) -> MatchRecord:
        env_id, pair, seed, g = entry
        names = [name for name, _ in pair]
        factories = [factory for _, factory in pair]
        return play_match(env_id, factories, seed, match_id=f"{env_id}:{seed}", names=names)

    table = CrossTable()
    board = Leaderboard(env_rating_config)

    def consume(record: MatchRecord) -> None:
        _apply_record(table, record)
        board.record_match(MatchResult(
            env_id=record.env_id,
            ranking=ranking_from_rewards(record.rewards, record.participants),
        ))
        table.records.append(record)
        if on_record is not None:
            on_record(record)

    # Records are consumed in schedule order even when games run in
    # parallel, so ratings are parallelism-invariant.  An agent failure
    # aborts the rest of the schedule; everything played so far stays.
    try:
        if jobs > 1:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                for record in pool.map(play, schedule):
                    consume(record)
        else:
            for entry in schedule:
                consume(play(entry))
    except Exception as exc:
        table.aborted = f"{type(exc).__name__}: {exc}"
    table.ratings = {
        name: board.entry(name).glob.rating for name, _ in roster
    }
    return table


# ---------------------------------------------------------------------------
# Rating-convergence simulation
# ---------------------------------------------------------------------------


def kendall_tau(xs: list[float], ys: list[float]) -> float:
    """Plain tau-a over all pairs; ties contribute zero."""
    n = len(xs)
    if n < 2:
        return 0.0
    total = 0
    for i in range(n):
        for j in range(i + 1, n):
            s = (xs[i] - xs[j]) * (ys[i] - ys[j])
            total += 1 if s > 0 else (-1 if s < 0 else 0)
    return total / (n * (n - 1) / 2)


@dataclass
class ConvergenceReport:
    """Matches-to-reliable-ordering per seed, for both rating systems.

    ``None`` means the threshold was never sustained within the budget.
    "Reliable" means Kendall tau against the latent order stays at or
    above the threshold for ``hold`` consecutive matches; the recorded
    count is the first match of that sustained run.
    """

    num_agents: int
    spread: float
    threshold: float
    hold: int
    trueskill_matches: list[int | None] = field(default_factory=list)
    elo_matches: list[int | None] = field(default_factory=list)

    @property
    def no_signal(self) -> bool:
        return all(m is None for m in self.trueskill_matches + self.elo_matches)

    def mean(self, which: str) -> float | None:
        values = self.trueskill_matches if which == "trueskill" else self.elo_matches
        reached = [v for v in values if v is not None]
        return statistics.mean(reached) if reached else None


def simulate_convergence(
    num_agents: int = 8,
    spread: float | None = None,
    max_matches: int = 4000,
    seeds: int = 20,
    elo_k: float = 32.0,
    threshold: float = 0.9,
    hold: int = 25,
) -> ConvergenceReport:
    """Synthetic agents with fixed latent skill play uniformly-scheduled
    matches; outcomes are drawn with probability Phi((s_i-s_j)/(sqrt(2)*beta)).

    Tracks how many matches each rating system needs before its ordering
    (conservative score for the Gaussian system, score for Elo) reliably
    matches the latent order.
    """
    if num_agents < 2:
        raise ValueError("need at least two synthetic agents")
    cfg = RatingConfig()
    beta = cfg.beta
    if spread is None:
        spread = 2.0 * beta
    lo, hi = cfg.mu0 - spread / 2.0, cfg.mu0 + spread / 2.0
    latent = [
        lo + (hi - lo) * i / (num_agents - 1) if num_agents > 1 else cfg.mu0
        for i in range(num_agents)
    ]
    report = ConvergenceReport(num_agents, spread, threshold, hold)
    for seed in range(seeds):
        rng = random.Random(f"convergence:{seed}")
        ts = [Rating() for _ in range(num_agents)]
        elo = [1500.0] * num_agents
        run_ts = run_elo = 0
        hit_ts = hit_elo = None
        for m in range(1, max_matches + 1):
            i, j = rng.sample(range(num_agents), 2)
            p_win = 0.5 * math.erfc(-((latent[i] - latent[j]) / (math.sqrt(2.0) * beta))
                                    / math.sqrt(2.0))
            w, l = (i, j) if rng.random() < p_win else (j, i)
            ts[w], ts[l] = update_two_player(ts[w], ts[l], draw=False, cfg=cfg)
            elo[w], elo[l] = update_elo(elo[w], elo[l], k=elo_k)
            if hit_ts is None:
                run_ts = run_ts + 1 if kendall_tau([conservative(r) for r in ts], latent) >= threshold else 0
                if run_ts >= hold:
                    hit_ts = m - hold + 1
            if hit_elo is None:
                run_elo = run_elo + 1 if kendall_tau(elo, latent) >= threshold else 0
                if run_elo >= hold:
                    hit_elo = m - hold + 1
            if hit_ts is not None and hit_elo is not None:
                break
        report.trueskill_matches.append(hit_ts)
        report.elo_matches.append(hit_elo)
    return report


# ---------------------------------------------------------------------------
# CSV export (repr floats round-trip exactly)
# ---------------------------------------------------------------------------


def _fmt(value: float) -> str:
    return repr(float(value))


def write_leaderboard_csv(board: Leaderboard, path: str) -> None:
    with open(path, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(["name", "mu", "sigma", "conservative", "matches"])
        for entry in board.sorted_entries():
            r = entry.glob.rating
            writer.writerow([entry.name, _fmt(r.mu), _fmt(r.sigma),
                             _fmt(conservative(r)), entry.glob.matches])


def write_skills_csv(profiles, path: str) -> None:
    with open(path, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(["name", "skill", "raw", "normalized"])
        for profile in profiles:
            for skill in sorted(profile.raw):
                writer.writerow([profile.name, skill, _fmt(profile.raw[skill]),
                                 _fmt(profile.normalized.get(skill, 0.5))])


def write_convergence_csv(report: ConvergenceReport, path: str) -> None:
    with open(path, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(["seed", "trueskill_matches", "elo_matches", "note"])
        note = "no signal" if report.no_signal else ""
        for seed, (t, e) in enumerate(zip(report.trueskill_matches, report.elo_matches)):
            writer.writerow([seed, "" if t is None else t, "" if e is None else e, note])


def write_cross_table_csv(table: CrossTable, path: str) -> None:
    with open(path, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(["agent", "env_id", "games", "mean_reward", "win_rate",
                         "draw_rate", "mu", "sigma", "conservative"])
        for (agent, env_id), cell in sorted(table.cells.items()):
            rating = table.ratings.get(agent, Rating())
            writer.writerow([
                agent, env_id, cell.games, _fmt(cell.mean_reward),
                _fmt(cell.win_rate), _fmt(cell.draw_rate),
                _fmt(rating.mu), _fmt(rating.sigma), _fmt(conservative(rating)),
            ])
