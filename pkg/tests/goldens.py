"""Frozen expected values for the bundled supply-chain case study.

Derived values were computed with the naive implementation in oracle.py
before the engine was built; test_goldens_match_oracle re-derives them at
test time so a transcription slip cannot go unnoticed.  Published values
are the reference tables that shipped with the original case study,
recorded verbatim (see PUBLISHED_* notes on which of them are internally
inconsistent)."""

# ---------------------------------------------------------------------------
# Case-study inputs (also in fixtures/paper-case and idealrank.fixtures).

SCORES = [
    [7, 6, 7, 7],
    [8, 8, 7, 6],
    [7, 6, 6, 6],
    [8, 7, 8, 6],
    [6, 6, 6, 6],
    [7, 8, 6, 6],
]
WEIGHTS = [0.5, 0.1, 0.3, 0.1]
KINDS = ["benefit", "benefit", "benefit", "cost"]

# ---------------------------------------------------------------------------
# Oracle-derived goldens (full precision, euclidean distance).

CLOSENESS_HONOR_KINDS = [
    0.48126044531403467,
    0.7699242686214235,
    0.3788893450201287,
    0.9198980713025264,
    0.08800902411515411,
    0.404718014851685,
]
CLOSENESS_ALL_BENEFIT = [
    0.4901643283321605,
    0.757761673162728,
    0.3704677978395403,
    0.884113235343337,
    0.0,
    0.39686059076003527,
]
# Per-alternative ranks, identical in both modes: Inventory planning first,
# Supplier relationship second.
RANKS = [3, 2, 5, 1, 6, 4]

# leave-one-out with the cost criterion dropped, weights (0.5, 0.1, 0.3)/0.9
DROP_COST_CLOSENESS = [
    0.48545703390452766,
    0.7688803611621565,
    0.37268516239885674,
    0.9195480532946032,
    0.0,
    0.39928383219700153,
]
DROP_COST_RANKS = [3, 2, 5, 1, 6, 4]

# Sweep of the first criterion's weight (honor-kinds, euclidean): the top
# spot changes exactly once, at the very last grid cell, where the two
# top scorers tie at closeness 1 and input order promotes the earlier one.
SWEEP_C1_STEPS = 101
SWEEP_C1_CROSSOVER = (0.99, 1.0, "Inventory planning", "Supplier relationship")
SWEEP_C1_DENSE_STEPS = 10_001
SWEEP_C1_DENSE_CROSSOVER = (0.9999, 1.0)

# Monte-carlo stability, +/-1 jitter clamped to 1..9, honor-kinds euclidean.
STABILITY_SEED = 42
STABILITY_TRIALS = 10_000
# Trials in which {Supplier relationship, Inventory planning} held the top
# two ranks (in either order).
STABILITY_TOP2_COUNT = 5_863
STABILITY_DEGENERATE = 0
STABILITY_FREQUENCY = [
    [383, 1633, 2742, 2437, 2031, 774],
    [3350, 3846, 1775, 816, 202, 11],
    [131, 827, 1836, 2553, 2824, 1829],
    [5932, 2609, 1048, 355, 56, 0],
    [1, 40, 404, 1193, 2270, 6092],
    [203, 1045, 2195, 2646, 2617, 1294],
]

# ---------------------------------------------------------------------------
# Published reference tables (historical record).  The weighted matrix and
# the ideal tuples are reproducible — the tabulation rounded every value
# upward at the 4th decimal.  The published separations and closeness
# values are NOT reproducible from the same inputs (see
# test_published_record.py); they are kept verbatim for the record.

PUBLISHED_WEIGHTED = [
    [0.1985, 0.0356, 0.1279, 0.0463],
    [0.2269, 0.0474, 0.1279, 0.0397],
    [0.1985, 0.0356, 0.1096, 0.0397],
    [0.2269, 0.0415, 0.1461, 0.0397],
    [0.1702, 0.0356, 0.1096, 0.0397],
    [0.1985, 0.0474, 0.1096, 0.0397],
]
PUBLISHED_PIS = [0.2269, 0.0474, 0.1461, 0.0463]
PUBLISHED_NIS = [0.1702, 0.0356, 0.1096, 0.0397]

PUBLISHED_S_PLUS = [0.001, 0.0001, 0.0014, 0.0005, 0.0038, 0.0012]
PUBLISHED_S_MINUS = [0.000944, 0.003259, 0.001321, 0.003628, 0.000517, 0.001181]
PUBLISHED_CLOSENESS = [
    0.492824578,
    0.850943262,
    0.266585065,
    0.729255514,
    0.269528495,
    0.497990187,
]
PUBLISHED_RANKS = [4, 1, 6, 2, 5, 3]
