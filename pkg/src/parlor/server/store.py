"""Crash-safe persistence: an append-only match log plus a rewritten
leaderboard snapshot.

The log (matches.jsonl) is the source of truth.  Records are written and
fsynced before any rating update; on boot the whole log replays into a
fresh leaderboard, so a crash between the two steps never leaves ratings
without their record.
"""

from __future__ import annotations

import json
import os

from ..rating import ANCHOR, Leaderboard, MatchResult, conservative, init_rating
from ..records import MatchRecord
from ..tournament import env_rating_config, ranking_from_rewards

MATCH_LOG = "matches.jsonl"
SNAPSHOT = "leaderboard.json"


def ranking_for_rating(record: MatchRecord, entities: list[str]) -> tuple[tuple[str, ...], ...]:
    """Name ranking for the rating engine.

    ``entities`` holds the rating identity per seat (humans already
    folded into "Humanity").  Solo matches rank against the fixed par
    opponent so wins and losses still move the per-env rating.
    """
    if len(entities) == 1:
        solo = entities[0]
        won = record.rewards.get("0", -1.0) > 0
        return ((solo,), (ANCHOR,)) if won else ((ANCHOR,), (solo,))
    if len(set(entities)) < len(entities):
        # Duplicate identities (e.g. human vs human) carry no relative
        # information for the shared entity; skip the rating movement.
        return ()
    return ranking_from_rewards(record.rewards, entities)


class MatchStore:
    def __init__(self, data_dir: str):
        self.data_dir = data_dir
        os.makedirs(data_dir, exist_ok=True)
        self.log_path = os.path.join(data_dir, MATCH_LOG)
        self.snapshot_path = os.path.join(data_dir, SNAPSHOT)
        self.board = Leaderboard(env_rating_config)
        self._entities_by_match: dict[str, list[str]] = {}
        self._replay_log()

    # -- write path ---------------------------------------------------------
    def commit(self, record: MatchRecord, entities: list[str]) -> None:
        """Persist the record (rating movement included), then apply it.

        The before/after block is computed on a copy first so the log
        line is complete before any live state changes; recovery replays
        the log, which re-derives the same updates deterministically.
        """
        record.ratings = self._ratings_block(record, entities)
        with open(self.log_path, "a") as f:
            f.write(record.to_json() + "\n")
            f.flush()
            os.fsync(f.fileno())
        self._apply(record, entities)
        self.write_snapshot()

    def _ratings_block(self, record: MatchRecord, entities: list[str]) -> dict:
        def block(board, entity):
            entry = board.entries.get(entity)
            if entry is None:
                fresh = init_rating()
                return ({"mu": fresh.mu, "sigma": fresh.sigma},) * 2
            env_rating = (entry.per_env[record.env_id].rating
                          if record.env_id in entry.per_env else init_rating())
            return (
                {"mu": entry.glob.rating.mu, "sigma": entry.glob.rating.sigma},
                {"mu": env_rating.mu, "sigma": env_rating.sigma},
            )

        preview = self.board.copy()
        before = {e: block(self.board, e) for e in set(entities)}
        ranking = ranking_for_rating(record, entities)
        if ranking:
            preview.record_match(MatchResult(env_id=record.env_id, ranking=ranking))
        after = {e: block(preview, e) for e in set(entities)}
        return {
            name: {
                "entity": entity,
                "global": {"before": before[entity][0], "after": after[entity][0]},
                "env": {"before": before[entity][1], "after": after[entity][1]},
            }
            for name, entity in zip(record.participants, entities)
        }

    def _apply(self, record: MatchRecord, entities: list[str]) -> None:
        ranking = ranking_for_rating(record, entities)
        if ranking:
            self.board.record_match(MatchResult(env_id=record.env_id, ranking=ranking))
        else:
            for name in set(entities):
                entry = self.board.entry(name)
                entry.glob.matches += 1
                entry.env_stats(record.env_id).matches += 1
        self._entities_by_match[record.match_id] = entities

    # -- read path ------------------------------------------------------------
    def records(self) -> list[MatchRecord]:
        if not os.path.exists(self.log_path):
            return []
        with open(self.log_path) as f:
            return [MatchRecord.from_json(line) for line in f if line.strip()]

    def _replay_log(self) -> None:
        for record in self.records():
            entities = [
                record.ratings.get(name, {}).get("entity", name)
                for name in record.participants
            ]
            self._apply(record, entities)

    # -- snapshot -------------------------------------------------------------
    def snapshot_doc(self) -> dict:
        doc = {}
        for entry in self.board.sorted_entries():
            if entry.name == ANCHOR:
                continue
            doc[entry.name] = {
                "global": {
                    "mu": entry.glob.rating.mu,
                    "sigma": entry.glob.rating.sigma,
                    "matches": entry.glob.matches,
                },
                "per_env": {
                    env: {
                        "mu": stats.rating.mu,
                        "sigma": stats.rating.sigma,
                        "matches": stats.matches,
                    }
                    for env, stats in sorted(entry.per_env.items())
                },
            }
        return doc

    def write_snapshot(self) -> None:
        tmp = self.snapshot_path + ".tmp"
        with open(tmp, "w") as f:
            json.dump(self.snapshot_doc(), f, indent=1, sort_keys=False)
            f.write("\n")
        os.replace(tmp, self.snapshot_path)

    def leaderboard_rows(self) -> list[dict]:
        rows = []
        for entry in self.board.sorted_entries():
            if entry.name == ANCHOR:
                continue
            rating = entry.glob.rating
            rows.append({
                "name": entry.name,
                "mu": rating.mu,
                "sigma": rating.sigma,
                "conservative": conservative(rating),
                "matches": entry.glob.matches,
            })
        return rows
