"""Queue grouping: conservative-score proximity with age-based priority."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..games import registry


@dataclass(frozen=True)
class Ticket:
    name: str
    env_ids: tuple[str, ...]
    enqueued_at: float
    score: float  # conservative score at enqueue time
    human: bool = False


@dataclass
class MatchProposal:
    env_id: str
    tickets: tuple[Ticket, ...]


@dataclass
class QueueState:
    # env_id -> tickets waiting, insertion-ordered (oldest first)
    queues: dict[str, list[Ticket]] = field(default_factory=dict)

    def add(self, ticket: Ticket) -> None:
        for env_id in ticket.env_ids:
            self.queues.setdefault(env_id, []).append(ticket)

    def remove_participant(self, name: str) -> None:
        for tickets in self.queues.values():
            tickets[:] = [t for t in tickets if t.name != name]

    def waiting(self, name: str) -> bool:
        return any(t.name == name for ts in self.queues.values() for t in ts)


def _compatible(group: tuple[Ticket, ...]) -> bool:
    # Humanity cannot meaningfully play itself: avoid all-human groups
    # of two or more.
    if len(group) >= 2 and all(t.human for t in group):
        return False
    return True


def sweep(state: QueueState) -> list[MatchProposal]:
    """Group waiting tickets into sessions.

    Per environment queue: repeatedly pick the group (of the game's
    minimum size) with the smallest conservative-score spread, breaking
    ties toward older tickets; matched participants leave every queue.
    """
    proposals: list[MatchProposal] = []
    reg = registry()
    matched: set[str] = set()
    for env_id in sorted(state.queues):
        size = reg[env_id].rules.min_players
        while True:
            waiting = [t for t in state.queues[env_id] if t.name not in matched]
            if len(waiting) < size:
                break
            if size == 1:
                group = (min(waiting, key=lambda t: t.enqueued_at),)
            else:
                ordered = sorted(waiting, key=lambda t: t.score)
                best = None
                for window in zip(*(ordered[i:] for i in range(size))):
                    if not _compatible(window):
                        continue
                    spread = window[-1].score - window[0].score
                    age = min(t.enqueued_at for t in window)
                    key = (spread, age)
                    if best is None or key < best[0]:
                        best = (key, window)
                if best is None:
                    break
                group = best[1]
            proposals.append(MatchProposal(env_id, group))
            matched.update(t.name for t in group)
    for name in matched:
        state.remove_participant(name)
    return proposals
