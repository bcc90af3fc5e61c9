"""Naive step-by-step ranking oracle.

Written independently of the library (pure Python, explicit loops, no
numpy) so the engine can be checked against it.  Keep it dumb: no shared
helpers with src/."""

import math


def oracle_rank(scores, weights, kinds, mode="honor-kinds", distance="euclidean"):
    """Return (closeness, ranks) or None when the problem is degenerate.

    scores: list of rows (alternatives) of positive numbers.
    kinds: 'benefit' / 'cost' per criterion.
    """
    n = len(scores)
    m = len(scores[0])

    norms = []
    for j in range(m):
        total = 0.0
        for i in range(n):
            total += scores[i][j] * scores[i][j]
        norms.append(math.sqrt(total))

    r = [[scores[i][j] / norms[j] for j in range(m)] for i in range(n)]
    v = [[r[i][j] * weights[j] for j in range(m)] for i in range(n)]

    pis, nis = [], []
    for j in range(m):
        column = [v[i][j] for i in range(n)]
        hi, lo = max(column), min(column)
        if mode == "all-benefit" or kinds[j] == "benefit":
            pis.append(hi)
            nis.append(lo)
        else:
            pis.append(lo)
            nis.append(hi)

    def dist(row, ref):
        total = 0.0
        for j in range(m):
            total += (row[j] - ref[j]) ** 2
        return total if distance == "squared" else math.sqrt(total)

    s_plus = [dist(v[i], pis) for i in range(n)]
    s_minus = [dist(v[i], nis) for i in range(n)]
    if any(s_plus[i] + s_minus[i] == 0.0 for i in range(n)):
        return None

    closeness = [s_minus[i] / (s_plus[i] + s_minus[i]) for i in range(n)]
    order = sorted(range(n), key=lambda i: (-closeness[i], i))
    ranks = [0] * n
    for position, i in enumerate(order):
        ranks[i] = position + 1
    return closeness, ranks
