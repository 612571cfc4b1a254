"""Skill-belief ratings in action.

Every participant starts at mu=25, sigma=25/3; each match moves the
Gaussian belief.  The conservative score mu - 3*sigma ranks the
leaderboard so new, uncertain entrants sit low until proven.
"""

from parlor.rating import (
    Leaderboard,
    MatchResult,
    Rating,
    RatingConfig,
    conservative,
    init_rating,
    update_two_player,
)

# One decisive game between two fresh players.
fresh = init_rating()
print(f"fresh rating: mu={fresh.mu}, sigma={fresh.sigma:.4f}, "
      f"conservative={conservative(fresh)}")

cfg = RatingConfig(tau=0.0)
winner, loser = update_two_player(Rating(), Rating(), draw=False, cfg=cfg)
print(f"after one win : winner ({winner.mu:.2f}, {winner.sigma:.2f})"
      f"  loser ({loser.mu:.2f}, {loser.sigma:.2f})")

# An upset moves mu much further than an expected result.
favorite, underdog = Rating(35.0, 2.0), Rating(15.0, 2.0)
w2, l2 = update_two_player(favorite, underdog, draw=False, cfg=cfg)
print(f"expected win  : favorite gains {w2.mu - favorite.mu:+.4f}")
w3, l3 = update_two_player(underdog, favorite, draw=False, cfg=cfg)
print(f"upset win     : underdog gains {w3.mu - underdog.mu:+.4f}")

# A leaderboard tracks global and per-environment ratings together.
board = Leaderboard()
board.record_match(MatchResult("Nim-v0", (("m1",), ("m2",))))
board.record_match(MatchResult("TicTacToe-v0", (("m1",), ("m3",))))
board.record_match(MatchResult("TicTacToe-v0", (("m3", "m2"),)))  # a draw

print("\nleaderboard (conservative score order):")
for entry in board.sorted_entries():
    r = entry.glob.rating
    envs = ", ".join(sorted(entry.per_env))
    print(f"  {entry.name}: mu={r.mu:6.3f} sigma={r.sigma:5.3f} "
          f"cons={conservative(r):7.3f}  envs: {envs}")
