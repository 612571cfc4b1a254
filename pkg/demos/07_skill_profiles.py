"""Soft-skill profiles from per-environment ratings.

Each environment is tagged with up to five skills; a participant's raw
score per skill is the weighted average of its per-env conservative
scores over the environments it has actually played.  Profiles are then
min-max normalized per skill across the population.
"""

from parlor.games.skills import SKILL_NAMES, skill_weights, skills_for
from parlor.rating import (
    Leaderboard,
    MatchResult,
    normalize_skills,
    skill_profiles,
)
from parlor.tournament import write_skills_csv

print("environment skill tags:")
for env_id in sorted(skill_weights()):
    print(f"  {env_id:<30} {', '.join(skills_for(env_id))}")

# Seed a population with a few synthetic results.
board = Leaderboard()
for ranking in [
    (("sharp",), ("steady",)),      # Nim
    (("sharp",), ("wild",)),
    (("steady",), ("wild",)),
]:
    board.record_match(MatchResult("Nim-v0", ranking))
board.record_match(MatchResult("KuhnPoker-v0", (("wild",), ("steady",))))
board.record_match(MatchResult("LiarsDice-v0", (("wild",), ("sharp",), ("steady",))))

profiles = normalize_skills(skill_profiles(board, skill_weights()))

print("\nnormalized profiles (0 = population min, 1 = max, 0.5 = no spread):")
header = " ".join(f"{s.split()[0][:7]:>7}" for s in SKILL_NAMES)
print(f"{'':<8}{header}")
for profile in profiles:
    cells = " ".join(
        f"{profile.normalized[s]:>7.2f}" if s in profile.normalized else f"{'-':>7}"
        for s in SKILL_NAMES
    )
    print(f"{profile.name:<8}{cells}")

write_skills_csv(profiles, "skills.csv")
print("\nprofile CSV written to skills.csv (radar-plot ready)")
