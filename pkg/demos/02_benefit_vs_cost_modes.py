"""Compare the two ideal-solution modes on the case study.

The fourth criterion (Additional cost) is a cost attribute: smaller is
better.  honor-kinds gives it that semantics; all-benefit treats every
column as benefit, which is how the case study's reference tables were
computed.  The two modes pick opposite ends of the cost column for the
ideals, and the closeness values shift accordingly.
"""

import numpy as np

from idealrank import EvalOptions, IdealMode, evaluate, round_up, supply_chain_case

problem = supply_chain_case()

for mode in (IdealMode.HONOR_KINDS, IdealMode.ALL_BENEFIT):
    report = evaluate(problem, EvalOptions(ideal_mode=mode))
    print(f"--- {mode.value} ---")
    print("PIS:", round_up(report.ideals.pis))
    print("NIS:", round_up(report.ideals.nis))
    for i in report.order:
        print(f"  rank {report.ranks[i]}: {problem.alternatives[i]:30s} C = {report.closeness[i]:.4f}")
    print()

honor = evaluate(problem, EvalOptions(ideal_mode=IdealMode.HONOR_KINDS))
compat = evaluate(problem, EvalOptions(ideal_mode=IdealMode.ALL_BENEFIT))
swap = np.flatnonzero(honor.ideals.pis != compat.ideals.pis)
print("columns where the modes disagree:", [problem.criterion_names[j] for j in swap])
print("(only the cost column: its best and worst swap places)")
