"""Round-robin bookkeeping, seat balance, and the convergence harness."""

import pytest

from parlor.agents import NimPerfectAgent, RandomAgent
from parlor.rating import RatingConfig
from parlor.tournament import (
    TournamentPlan,
    kendall_tau,
    run_tournament,
    simulate_convergence,
)


def random_roster(*seeds):
    return tuple(
        (f"random:{seed}", lambda env, s=seed: RandomAgent(env, seed=s))
        for seed in seeds
    )


class TestRunTournament:
    def test_two_agents_ten_games_bookkeeping(self):
        plan = TournamentPlan(("TicTacToe-v0",), random_roster(1, 2),
                              games_per_pairing=10, base_seed=3)
        table = run_tournament(plan)
        assert len(table.records) == 10
        for name in ("random:1", "random:2"):
            cell = table.cell(name, "TicTacToe-v0")
            assert cell.games == 10
            # Marginals recomputed independently from the records.
            rewards = [
                record.rewards[str(record.participants.index(name))]
                for record in table.records
            ]
            assert cell.mean_reward == pytest.approx(sum(rewards) / 10)
            assert cell.wins == sum(1 for r in rewards if r == 1.0)
            assert cell.draws == sum(1 for r in rewards if r == 0.0)

    def test_pair_rates_complement(self):
        plan = TournamentPlan(("TicTacToe-v0",), random_roster(5, 6),
                              games_per_pairing=20, base_seed=1)
        table = run_tournament(plan)
        ab = table.pair_cell("random:5", "random:6", "TicTacToe-v0")
        ba = table.pair_cell("random:6", "random:5", "TicTacToe-v0")
        assert ab.win_rate + ba.win_rate + ab.draw_rate == pytest.approx(1.0)
        assert ab.draw_rate == ba.draw_rate

    def test_seat_orders_balanced(self):
        plan = TournamentPlan(("TicTacToe-v0",), random_roster(1, 2),
                              games_per_pairing=10, base_seed=3)
        table = run_tournament(plan)
        first_seats = [record.participants[0] for record in table.records]
        assert first_seats.count("random:1") == 5
        assert first_seats.count("random:2") == 5

    def test_identical_random_agents_win_rates_close(self):
        # Seat orders alternate, so two identical agents should come out
        # within a few points of each other despite the first-mover edge.
        plan = TournamentPlan(("TicTacToe-v0",), random_roster(11, 12),
                              games_per_pairing=500, base_seed=9)
        table = run_tournament(plan)
        rate_a = table.cell("random:11", "TicTacToe-v0").win_rate
        rate_b = table.cell("random:12", "TicTacToe-v0").win_rate
        assert abs(rate_a - rate_b) < 0.05
        # The raw seat advantage is real and visible (X wins more).
        seat0_wins = sum(1 for r in table.records if r.rewards["0"] == 1.0)
        seat1_wins = sum(1 for r in table.records if r.rewards["1"] == 1.0)
        assert seat0_wins > seat1_wins

    def test_perfect_nim_agent_sweeps_random(self):
        roster = (
            ("nim-perfect", lambda env: NimPerfectAgent(env)),
            ("random:3", lambda env: RandomAgent(env, seed=3)),
        )
        plan = TournamentPlan(("Nim-v0",), roster, games_per_pairing=100, base_seed=2)
        table = run_tournament(plan)
        # Start piles [3,4,5] have nim-sum != 0: the first mover wins under
        # perfect play, and moving second the perfect player wins as soon as
        # random play leaves a nonzero nim-sum (it cannot hold the zero line).
        cell = table.cell("nim-perfect", "Nim-v0")
        assert cell.games == 100
        assert cell.wins == 100
        assert table.ratings["nim-perfect"].mu > table.ratings["random:3"].mu

    def test_parallel_equals_serial(self):
        plan = TournamentPlan(("Nim-v0", "KuhnPoker-v0"), random_roster(1, 2, 3),
                              games_per_pairing=4, base_seed=7)
        serial = run_tournament(plan, jobs=1)
        parallel = run_tournament(plan, jobs=4)
        assert [r.to_json() for r in serial.records] == \
            [r.to_json() for r in parallel.records]
        assert serial.ratings == parallel.ratings

    def test_deterministic_across_runs(self):
        plan = TournamentPlan(("PigDice-v0",), random_roster(4, 5),
                              games_per_pairing=6, base_seed=11)
        first = run_tournament(plan)
        second = run_tournament(plan)
        assert [r.to_json() for r in first.records] == \
            [r.to_json() for r in second.records]

    def test_agent_failure_aborts_with_partial_results(self):
        class FlakyAgent:
            name = "flaky"
            calls = 0

            def __init__(self, env):
                self.env = env

            def __call__(self, observation):
                FlakyAgent.calls += 1
                if FlakyAgent.calls > 12:
                    raise RuntimeError("model endpoint went away")
                game = self.env.unwrapped().game
                import random as _r
                return f"[{game.legal_actions().pick(_r.Random(FlakyAgent.calls))}]"

        from parlor.agents import RandomAgent
        roster = (
            ("flaky", lambda env: FlakyAgent(env)),
            ("random:1", lambda env: RandomAgent(env, seed=1)),
        )
        flushed = []
        plan = TournamentPlan(("TicTacToe-v0",), roster, games_per_pairing=50,
                              base_seed=3)
        table = run_tournament(plan, on_record=flushed.append)
        assert table.aborted is not None
        assert "went away" in table.aborted
        assert 0 < len(table.records) < 50
        assert len(flushed) == len(table.records)


class TestKendallTau:
    def test_perfect_agreement(self):
        assert kendall_tau([1, 2, 3, 4], [10, 20, 30, 40]) == 1.0

    def test_perfect_disagreement(self):
        assert kendall_tau([1, 2, 3], [3, 2, 1]) == -1.0

    def test_ties_contribute_zero(self):
        assert kendall_tau([1, 1, 2], [1, 2, 3]) == pytest.approx(2 / 3)

    def test_matches_scipy(self):
        from scipy.stats import kendalltau
        import random as _random

        rng = _random.Random(4)
        for _ in range(20):
            xs = [rng.random() for _ in range(8)]
            ys = [rng.random() for _ in range(8)]
            assert kendall_tau(xs, ys) == pytest.approx(kendalltau(xs, ys).statistic)


class TestSimulateConvergence:
    def test_two_agents_wide_gap_quickly_ordered(self):
        beta = RatingConfig().beta
        report = simulate_convergence(num_agents=2, spread=3 * beta, seeds=20,
                                      max_matches=10, hold=1)
        hits = sum(1 for m in report.trueskill_matches if m is not None and m <= 10)
        assert hits >= 18

    def test_zero_spread_reports_no_signal(self):
        report = simulate_convergence(num_agents=4, spread=0.0, seeds=3,
                                      max_matches=200)
        assert report.no_signal
        assert report.mean("trueskill") is None

    def test_deterministic(self):
        a = simulate_convergence(num_agents=4, seeds=3, max_matches=500)
        b = simulate_convergence(num_agents=4, seeds=3, max_matches=500)
        assert a.trueskill_matches == b.trueskill_matches
        assert a.elo_matches == b.elo_matches
