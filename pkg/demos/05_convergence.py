"""How fast does each rating system find the true ordering?

Eight synthetic agents have fixed latent skills spanning two performance
standard deviations; match outcomes are drawn from the Gaussian
performance model.  We count how many uniformly-scheduled matches each
system needs before its ranking stays in step with the latent order
(Kendall tau >= 0.9, held for 25 consecutive matches).
"""

from parlor.tournament import simulate_convergence, write_convergence_csv

report = simulate_convergence(num_agents=8, seeds=20, max_matches=4_000)

print("matches until the ordering is reliable (per seed):")
print(f"{'seed':>4} {'gaussian-skill':>15} {'elo (k=32)':>11}")
for seed, (ts, elo) in enumerate(zip(report.trueskill_matches, report.elo_matches)):
    print(f"{seed:>4} {ts if ts is not None else '-':>15} "
          f"{elo if elo is not None else '-':>11}")

print(f"\nmean: gaussian-skill {report.mean('trueskill'):.1f}  "
      f"elo {report.mean('elo'):.1f}")
write_convergence_csv(report, "convergence.csv")
print("per-seed counts written to convergence.csv")
