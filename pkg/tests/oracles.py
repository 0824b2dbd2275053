"""Brute-force reference computations, independent of the package under test.

Nothing here imports nwbts.  These little functions are the source of truth
for every derived constant frozen into the test suite; if a test disagrees
with them the package is wrong, not the other way round.
"""

from itertools import combinations


def point_square_sum(v, blocks):
    freq = {x: 0 for x in range(v)}
    for blk in blocks:
        for x in blk:
            freq[x] += 1
    return sum(c * c for c in freq.values())


def pair_square_sum(v, blocks):
    freq = {p: 0 for p in combinations(range(v), 2)}
    for blk in blocks:
        for p in combinations(sorted(blk), 2):
            freq[p] += 1
    return sum(c * c for c in freq.values())


def triple_square_sum(v, blocks):
    freq = {}
    for blk in blocks:
        key = tuple(sorted(blk))
        freq[key] = freq.get(key, 0) + 1
    return sum(c * c for c in freq.values())


def pair_frequencies(v, blocks):
    freq = {p: 0 for p in combinations(range(v), 2)}
    for blk in blocks:
        for p in combinations(sorted(blk), 2):
            freq[p] += 1
    return freq


def all_simple_systems(v, b):
    """Every b-subset of the full triple set on v points."""
    return combinations(combinations(range(v), 3), b)


def exhaustive_v5(b):
    """Minima of the three square sums over all simple TS(5;b) and the
    set of systems attaining all three at once."""
    rows = []
    for system in all_simple_systems(5, b):
        rows.append((point_square_sum(5, system),
                     pair_square_sum(5, system),
                     triple_square_sum(5, system),
                     system))
    m1 = min(r[0] for r in rows)
    m2 = min(r[1] for r in rows)
    m3 = min(r[2] for r in rows)
    winners = [r[3] for r in rows if r[:3] == (m1, m2, m3)]
    return (m1, m2, m3), winners, len(rows)


def defect_levels(v, blocks, lam):
    """Nonzero deviations of pair frequencies from lam, as {level: edges}."""
    levels = {}
    for pair, c in pair_frequencies(v, blocks).items():
        if c != lam:
            levels.setdefault(c - lam, []).append(pair)
    return levels


def poly_by_block_pairs(blocks, x):
    """Sum of x^{|A ^ B|} over ordered pairs of block copies, minus b*x^3.

    This is the reference value the variance polynomial must reproduce;
    blocks is a plain list (repeats = multiplicity).
    """
    blocks = [frozenset(b) for b in blocks]
    b = len(blocks)
    total = 0
    for i in range(b):
        for j in range(b):
            total += x ** len(blocks[i] & blocks[j])
    return total - b * x ** 3
