"""From raw survey rows to a ranking.

Scoresheets arrive as CSV rows (respondent, alternative, criterion, score).
Multiple respondents are aggregated cell-wise into one decision matrix --
unrounded means by default, medians if preferred -- and the rest of the
pipeline is unchanged.
"""

import numpy as np

from idealrank import AggregateMethod, aggregate, evaluate, parse_scoresheets, supply_chain_case

base = supply_chain_case()

# fabricate two respondents around the bundled matrix: one as-is, one
# slightly more enthusiastic
rows = ["respondent,alternative,criterion,score"]
for respondent, bump in (("head-of-production", 0), ("head-of-logistics", 1)):
    for alt, score_row in zip(base.alternatives, base.scores):
        for crit, value in zip(base.criterion_names, score_row):
            rows.append(f"{respondent},{alt},{crit},{min(int(value) + bump, 9)}")
raw = "\n".join(rows) + "\n"

sheets = parse_scoresheets(raw.encode())
print(f"parsed {len(sheets)} scoresheets:", ", ".join(s.respondent for s in sheets))

for method in AggregateMethod:
    problem = aggregate(sheets, method, base.criteria, base.alternatives)
    print()
    print(f"--- aggregated with {method.value} ---")
    print(np.round(problem.scores, 2))
    report = evaluate(problem)
    for i in report.order:
        print(f"  rank {report.ranks[i]}: {problem.alternatives[i]:30s} C = {report.closeness[i]:.4f}")
