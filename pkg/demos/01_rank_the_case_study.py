"""Walk the bundled supply-chain case study through the full pipeline.

Six improvement factors were scored 1-9 by department heads against four
criteria (three benefit, one cost, weights 0.5/0.1/0.3/0.1).  This script
shows every intermediate on the way to the final ranking.
"""

from pathlib import Path

import numpy as np

from idealrank import EvalOptions, evaluate, parse_problem

problem = parse_problem((Path(__file__).parent.parent / "fixtures" / "paper-case").read_bytes())

print("alternatives:", ", ".join(problem.alternatives))
print("criteria:    ", ", ".join(f"{c.name} ({c.kind.value}, w={c.weight})" for c in problem.criteria))
print()
print("raw decision matrix:")
print(problem.scores)

report = evaluate(problem, EvalOptions())

print()
print("normalized (each column has unit Euclidean norm):")
print(np.round(report.normalized.values, 4))
print()
print("weighted (column j scaled by w_j):")
print(np.round(report.weighted.values, 4))
print()
print("positive ideal:", np.round(report.ideals.pis, 4))
print("negative ideal:", np.round(report.ideals.nis, 4))
print()
print("separations from best / worst:")
for i, name in enumerate(problem.alternatives):
    print(f"  {name:30s} s+ = {report.separations.s_plus[i]:.4f}   s- = {report.separations.s_minus[i]:.4f}")

print()
print("closeness ratio s- / (s+ + s-) and final ranking:")
for i in report.order:
    print(f"  rank {report.ranks[i]}: {problem.alternatives[i]:30s} C = {report.closeness[i]:.4f}")
