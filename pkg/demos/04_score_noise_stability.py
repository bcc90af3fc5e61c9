"""Is the ranking an artifact of single survey points?

Each trial jitters every score by a uniform integer in {-1, 0, +1}
(clamped to the 1..9 scale) and re-ranks.  The random stream is derived
from (seed, trial), so the same seed always reproduces the same report,
trial by trial.
"""

from idealrank import NoiseSpec, monte_carlo_stability, supply_chain_case

problem = supply_chain_case()
report = monte_carlo_stability(problem, NoiseSpec(magnitude=1), trials=10_000, seed=42)

n = len(problem.alternatives)
print(f"{report.trials} trials, seed {report.seed}, jitter ±{report.noise.magnitude}")
print()
header = "".join(f"rank {r + 1:<4}" for r in range(n))
print(f"{'':30s}{header}")
for i, name in enumerate(problem.alternatives):
    counts = "".join(f"{int(report.frequency[i, r]):<9d}" for r in range(n))
    print(f"{name:30s}{counts}")

print()
order = sorted(range(n), key=lambda i: report.modal_ranking[i])
print("modal ranking:", " > ".join(problem.alternatives[i] for i in order))
print(f"seen in {report.modal_count} of {report.trials} trials")
print(f"degenerate trials: {report.degenerate_trials}")

top_pair = sorted(
    range(n), key=lambda i: report.frequency[i, 0] + report.frequency[i, 1], reverse=True
)[:2]
print()
print(
    "most frequent top-2 occupants:",
    ", ".join(problem.alternatives[i] for i in top_pair),
)
