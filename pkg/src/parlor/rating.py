"""Skill-belief ratings: Gaussian (mu, sigma) updates, an Elo baseline,
leaderboard bookkeeping, and soft-skill profiling.

Every participant starts at mu=25, sigma=25/3 and is adjusted after
every match.  All human players share the single "Humanity" entry.
Single-player outcomes are scored against a fixed par opponent that is
never persisted, so solo environments still move per-env ratings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import NoRatedEnvironments, NonFiniteInput, TooFewPlayers

__all__ = [
    "ANCHOR",
    "HUMANITY",
    "Leaderboard",
    "MatchResult",
    "Rating",
    "RatingConfig",
    "SkillProfile",
    "conservative",
    "default_config",
    "draw_margin",
    "elo_deltas",
    "init_rating",
    "normalize_skills",
    "skill_profiles",
    "update_elo",
    "update_multiplayer",
    "update_two_player",
]

MU0 = 25.0
SIGMA0 = 25.0 / 3.0

HUMANITY = "Humanity"
# Phantom opponent for single-player matches; its posterior is discarded.
ANCHOR = "@par"


@dataclass(frozen=True)
class Rating:
    mu: float = MU0
    sigma: float = SIGMA0

    def __post_init__(self):
        if self.sigma <= 0:
            raise ValueError(f"sigma must be positive, got {self.sigma}")


def init_rating() -> Rating:
    return Rating(MU0, SIGMA0)


def conservative(rating: Rating) -> float:
    """Uncertainty-penalized leaderboard score, mu - 3 sigma."""
    return rating.mu - 3.0 * rating.sigma


def _phi(x: float) -> float:
    return math.exp(-0.5 * x * x) / math.sqrt(2.0 * math.pi)


def _cdf(x: float) -> float:
    return 0.5 * math.erfc(-x / math.sqrt(2.0))


def _v_win(t: float, eps: float) -> float:
    x = t - eps
    denom = _cdf(x)
    if denom < 1e-300:
        return -x
    return _phi(x) / denom


def _w_win(t: float, eps: float) -> float:
    v = _v_win(t, eps)
    w = v * (v + t - eps)
    return min(max(w, 0.0), 1.0)


def _v_draw(t: float, eps: float) -> float:
    s = abs(t)
    a, b = eps - s, -eps - s
    denom = _cdf(a) - _cdf(b)
    if denom < 1e-300:
        raise NonFiniteInput("draw update degenerates; need a larger draw margin")
    v = (_phi(b) - _phi(a)) / denom
    return -v if t < 0 else v


def _w_draw(t: float, eps: float) -> float:
    s = abs(t)
    a, b = eps - s, -eps - s
    denom = _cdf(a) - _cdf(b)
    if denom < 1e-300:
        raise NonFiniteInput("draw update degenerates; need a larger draw margin")
    v = (_phi(b) - _phi(a)) / denom
    w = v * v + (a * _phi(a) - b * _phi(b)) / denom
    return min(max(w, 0.0), 1.0)


def draw_margin(draw_probability: float, beta: float, players: int = 2) -> float:
    """Performance margin treated as a tie, from an assumed draw rate."""
    # Inverse normal CDF via bisection on erfc; accurate far beyond needs here.
    target = 0.5 * (draw_probability + 1.0)
    lo, hi = 0.0, 10.0
    for _ in range(80):
        mid = (lo + hi) / 2.0
        if _cdf(mid) < target:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2.0 * math.sqrt(players) * beta


@dataclass(frozen=True)
class RatingConfig:
    mu0: float = MU0
    sigma0: float = SIGMA0
    beta: float = SIGMA0 / 2.0
    tau: float = SIGMA0 / 100.0
    draw_margin_eps: float = 0.0  # per-environment; 0 for games without draws
    elo_k: float = 32.0

    def __post_init__(self):
        if self.beta <= 0 or self.tau < 0 or self.draw_margin_eps < 0:
            raise ValueError("beta > 0, tau >= 0, eps >= 0 required")

    def with_eps(self, eps: float) -> "RatingConfig":
        return RatingConfig(self.mu0, self.sigma0, self.beta, self.tau, eps, self.elo_k)


def default_config(can_draw: bool = False, draw_probability: float = 0.10) -> RatingConfig:
    cfg = RatingConfig()
    if can_draw:
        cfg = cfg.with_eps(draw_margin(draw_probability, cfg.beta))
    return cfg


def update_two_player(
    winner: Rating, loser: Rating, draw: bool, cfg: RatingConfig
) -> tuple[Rating, Rating]:
    """Posterior ratings after one head-to-head result.

    Dynamics noise is injected first (sigma^2 += tau^2); the update then
    moment-matches the rank-truncated Gaussian posterior.
    """
    for r in (winner, loser):
        if not (math.isfinite(r.mu) and math.isfinite(r.sigma)):
            raise NonFiniteInput(f"non-finite rating {r}")
    var_w = winner.sigma**2 + cfg.tau**2
    var_l = loser.sigma**2 + cfg.tau**2
    c2 = 2.0 * cfg.beta**2 + var_w + var_l
    c = math.sqrt(c2)
    t = (winner.mu - loser.mu) / c
    eps = cfg.draw_margin_eps / c
    if draw:
        v, w = _v_draw(t, eps), _w_draw(t, eps)
    else:
        v, w = _v_win(t, eps), _w_win(t, eps)
    new_winner = Rating(
        winner.mu + (var_w / c) * v,
        math.sqrt(var_w * (1.0 - (var_w / c2) * w)),
    )
    new_loser = Rating(
        loser.mu - (var_l / c) * v,
        math.sqrt(var_l * (1.0 - (var_l / c2) * w)),
    )
    return new_winner, new_loser


def update_multiplayer(
    ranked: list[tuple[Rating, int]], cfg: RatingConfig
) -> list[Rating]:
    """Chain approximation for ranked groups of any size.

    Each adjacent pair in rank order gets a two-player update from the
    original priors (ties become draws); mu deltas accumulate and each
    participant keeps the smallest sigma it was assigned.
    """
    if len(ranked) < 2:
        raise TooFewPlayers("need at least two ranked entries")
    order = sorted(range(len(ranked)), key=lambda i: ranked[i][1])
    deltas = [0.0] * len(ranked)
    sigmas = [ranked[i][0].sigma for i in range(len(ranked))]
    touched = [False] * len(ranked)
    for a, b in zip(order, order[1:]):
        ra, rank_a = ranked[a]
        rb, rank_b = ranked[b]
        tie = rank_a == rank_b
        na, nb = update_two_player(ra, rb, draw=tie, cfg=cfg)
        deltas[a] += na.mu - ra.mu
        deltas[b] += nb.mu - rb.mu
        for idx, new in ((a, na), (b, nb)):
            sigmas[idx] = new.sigma if not touched[idx] else min(sigmas[idx], new.sigma)
            touched[idx] = True
    return [
        Rating(ranked[i][0].mu + deltas[i], sigmas[i]) for i in range(len(ranked))
    ]


def elo_deltas(
    winner: float, loser: float, k: float = 32.0, draw: bool = False
) -> tuple[float, float]:
    """The (winner, loser) score changes; exact negations of each other."""
    if not (math.isfinite(winner) and math.isfinite(loser)):
        raise NonFiniteInput("non-finite Elo score")
    expected = 1.0 / (1.0 + 10.0 ** ((loser - winner) / 400.0))
    target = 0.5 if draw else 1.0
    delta = k * (target - expected)
    return delta, -delta


def update_elo(
    winner: float, loser: float, k: float = 32.0, draw: bool = False
) -> tuple[float, float]:
    """Classic logistic-expectation update; zero-sum by construction."""
    delta_w, delta_l = elo_deltas(winner, loser, k, draw)
    return winner + delta_w, loser + delta_l


# ---------------------------------------------------------------------------
# Leaderboard
# ---------------------------------------------------------------------------


@dataclass
class EntryStats:
    rating: Rating = field(default_factory=init_rating)
    matches: int = 0


@dataclass
class Entry:
    name: str
    glob: EntryStats = field(default_factory=EntryStats)
    per_env: dict[str, EntryStats] = field(default_factory=dict)

    def env_stats(self, env_id: str) -> EntryStats:
        if env_id not in self.per_env:
            self.per_env[env_id] = EntryStats()
        return self.per_env[env_id]


@dataclass(frozen=True)
class MatchResult:
    """One finished match: who beat whom in which environment.

    ``ranking`` is an ordered list of tie groups of participant names,
    best first.  Human players must already be mapped to "Humanity".
    """

    env_id: str
    ranking: tuple[tuple[str, ...], ...]
    timestamp: float = 0.0

    def __post_init__(self):
        names = [n for group in self.ranking for n in group]
        if not names:
            raise ValueError("ranking must not be empty")
        if len(names) != len(set(names)):
            raise ValueError("participant names must be distinct")


class Leaderboard:
    """Mutable rating book; updates are deterministic in the input order."""

    def __init__(self, config_for_env=None):
        # config_for_env: env_id -> RatingConfig (draw margins differ per env)
        self._config_for_env = config_for_env or (lambda env_id: default_config(True))
        self.entries: dict[str, Entry] = {}

    def copy(self) -> "Leaderboard":
        other = Leaderboard(self._config_for_env)
        for name, entry in self.entries.items():
            other.entries[name] = Entry(
                name,
                EntryStats(entry.glob.rating, entry.glob.matches),
                {
                    env: EntryStats(stats.rating, stats.matches)
                    for env, stats in entry.per_env.items()
                },
            )
        return other

    def entry(self, name: str) -> Entry:
        if name not in self.entries:
            self.entries[name] = Entry(name)
        return self.entries[name]

    def record_match(self, result: MatchResult) -> None:
        """Apply a match to the global and per-env ratings atomically."""
        cfg = self._config_for_env(result.env_id)
        flat: list[tuple[str, int]] = []
        for rank, group in enumerate(result.ranking):
            flat.extend((name, rank) for name in group)
        if len(flat) < 2:
            # Solo result with no reference point: count the match only.
            for name, _ in flat:
                if name == ANCHOR:
                    continue
                entry = self.entry(name)
                entry.glob.matches += 1
                entry.env_stats(result.env_id).matches += 1
            return
        for scope in ("global", "env"):
            ranked = []
            for name, rank in flat:
                if name == ANCHOR:
                    ranked.append((init_rating(), rank))
                elif scope == "global":
                    ranked.append((self.entry(name).glob.rating, rank))
                else:
                    ranked.append((self.entry(name).env_stats(result.env_id).rating, rank))
            updated = update_multiplayer(ranked, cfg)
            for (name, _), new_rating in zip(flat, updated):
                if name == ANCHOR:
                    continue
                if scope == "global":
                    self.entry(name).glob.rating = new_rating
                else:
                    self.entry(name).env_stats(result.env_id).rating = new_rating
        for name, _ in flat:
            if name == ANCHOR:
                continue
            self.entry(name).glob.matches += 1
            self.entry(name).env_stats(result.env_id).matches += 1

    def sorted_entries(self) -> list[Entry]:
        """Global conservative score descending, names breaking ties."""
        return sorted(
            self.entries.values(),
            key=lambda e: (-conservative(e.glob.rating), e.name),
        )


# ---------------------------------------------------------------------------
# Soft-skill profiles
# ---------------------------------------------------------------------------


@dataclass
class SkillProfile:
    name: str
    raw: dict[str, float]
    normalized: dict[str, float] = field(default_factory=dict)


def skill_profile(entry: Entry, weights: dict[str, dict[str, float]]) -> SkillProfile:
    """Weighted average of per-env conservative scores, per skill.

    Only environments the participant has actually played contribute;
    skills with zero total weight are absent from the profile.
    """
    played = {
        env: stats for env, stats in entry.per_env.items() if stats.matches > 0
    }
    if not played:
        raise NoRatedEnvironments(f"{entry.name} has no rated environments")
    totals: dict[str, float] = {}
    weighted: dict[str, float] = {}
    for env, stats in played.items():
        for skill, w in weights.get(env, {}).items():
            totals[skill] = totals.get(skill, 0.0) + w
            weighted[skill] = weighted.get(skill, 0.0) + w * conservative(stats.rating)
    raw = {skill: weighted[skill] / totals[skill] for skill in totals if totals[skill] > 0}
    return SkillProfile(entry.name, raw)


def skill_profiles(
    leaderboard: Leaderboard, weights: dict[str, dict[str, float]]
) -> list[SkillProfile]:
    profiles = []
    for entry in leaderboard.sorted_entries():
        try:
            profiles.append(skill_profile(entry, weights))
        except NoRatedEnvironments:
            continue
    return profiles


def normalize_skills(profiles: list[SkillProfile]) -> list[SkillProfile]:
    """Min-max per skill across the population; constant columns map to 0.5."""
    by_skill: dict[str, list[float]] = {}
    for p in profiles:
        for skill, value in p.raw.items():
            by_skill.setdefault(skill, []).append(value)
    for p in profiles:
        p.normalized = {}
        for skill, value in p.raw.items():
            lo, hi = min(by_skill[skill]), max(by_skill[skill])
            if hi == lo:
                p.normalized[skill] = 0.5
            else:
                p.normalized[skill] = (value - lo) / (hi - lo)
    return profiles
