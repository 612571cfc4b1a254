"""Queue sweep: proximity pairing, age priority, group sizes."""

from parlor.server.matchmaking import QueueState, Ticket, sweep


def ticket(name, score, t=0.0, envs=("TicTacToe-v0",), human=False):
    return Ticket(name=name, env_ids=tuple(envs), enqueued_at=t, score=score,
                  human=human)


def test_closest_scores_pair_first():
    state = QueueState()
    for name, score in (("a", 0.0), ("b", 1.0), ("c", 19.0)):
        state.add(ticket(name, score))
    proposals = sweep(state)
    assert len(proposals) == 1
    assert {t.name for t in proposals[0].tickets} == {"a", "b"}
    assert state.waiting("c")


def test_four_tickets_two_sessions():
    state = QueueState()
    for i in range(4):
        state.add(ticket(f"m{i}", float(i)))
    proposals = sweep(state)
    assert len(proposals) == 2
    assert not any(state.waiting(f"m{i}") for i in range(4))


def test_five_tickets_prefer_minimum_group():
    state = QueueState()
    for i in range(5):
        state.add(ticket(f"m{i}", float(i), envs=("LiarsDice-v0",)))
    proposals = sweep(state)
    assert len(proposals) == 2
    assert all(len(p.tickets) == 2 for p in proposals)
    waiting = [f"m{i}" for i in range(5) if state.waiting(f"m{i}")]
    assert len(waiting) == 1


def test_single_ticket_waits_no_self_match():
    state = QueueState()
    state.add(ticket("lonely", 0.0))
    assert sweep(state) == []
    assert state.waiting("lonely")


def test_matched_ticket_leaves_all_queues():
    state = QueueState()
    state.add(ticket("a", 0.0, envs=("TicTacToe-v0", "Nim-v0", "PigDice-v0")))
    state.add(ticket("b", 0.5, envs=("TicTacToe-v0",)))
    proposals = sweep(state)
    assert len(proposals) == 1
    assert not state.waiting("a")
    assert not state.waiting("b")


def test_three_player_window_by_spread():
    state = QueueState()
    for name, score in (("a", 0.0), ("b", 0.5), ("c", 1.0), ("d", 30.0)):
        state.add(ticket(name, score, envs=("BlindAuction-v0",)))
    proposals = sweep(state)
    assert len(proposals) == 1
    assert {t.name for t in proposals[0].tickets} == {"a", "b", "c"}
    assert state.waiting("d")


def test_all_human_pair_skipped():
    state = QueueState()
    state.add(ticket("alice", 0.0, human=True))
    state.add(ticket("bob", 0.1, human=True))
    assert sweep(state) == []
    state.add(ticket("model", 5.0))
    proposals = sweep(state)
    assert len(proposals) == 1
    group = {t.name for t in proposals[0].tickets}
    assert "model" in group and len(group) == 2


def test_age_breaks_spread_ties():
    state = QueueState()
    state.add(ticket("old", 0.0, t=1.0))
    state.add(ticket("newer", 10.0, t=2.0))
    state.add(ticket("newest", 20.0, t=3.0))
    proposals = sweep(state)
    # Spreads tie at 10; the older window wins.
    assert {t.name for t in proposals[0].tickets} == {"old", "newer"}


def test_solo_env_matches_single_ticket():
    state = QueueState()
    state.add(ticket("solo-player", 0.0, envs=("Wordle-v0",)))
    proposals = sweep(state)
    assert len(proposals) == 1
    assert len(proposals[0].tickets) == 1
    assert proposals[0].env_id == "Wordle-v0"
