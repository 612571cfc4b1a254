"""Round-robin tournament producing a cross table.

Three agents play every pairing across two environments with balanced
seat orders; ratings accumulate in schedule order.  The perfect Nim
player should dominate that column.
"""

from parlor.agents import NimPerfectAgent, RandomAgent
from parlor.rating import conservative
from parlor.tournament import TournamentPlan, run_tournament, write_cross_table_csv

plan = TournamentPlan(
    env_ids=("Nim-v0", "TicTacToe-v0"),
    roster=(
        ("random:1", lambda env: RandomAgent(env, seed=1)),
        ("random:2", lambda env: RandomAgent(env, seed=2)),
        ("nim-perfect", lambda env: NimPerfectAgent(env)),
    ),
    games_per_pairing=20,
    base_seed=5,
)

table = run_tournament(plan, jobs=4)

print(f"{'agent':>14} {'env':<16} {'games':>5} {'mean reward':>12} {'win rate':>9}")
for (agent, env_id), cell in sorted(table.cells.items()):
    print(f"{agent:>14} {env_id:<16} {cell.games:>5} "
          f"{cell.mean_reward:>+12.3f} {cell.win_rate:>9.3f}")

print("\nratings after the tournament:")
for name, rating in sorted(table.ratings.items(),
                           key=lambda kv: -conservative(kv[1])):
    print(f"  {name}: mu={rating.mu:.2f} sigma={rating.sigma:.2f} "
          f"conservative={conservative(rating):.2f}")

write_cross_table_csv(table, "cross_table.csv")
print("\ncross table written to cross_table.csv")
