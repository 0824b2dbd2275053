"""The exhaustive v=5 ground truth versus the analysis module.

Frozen constants below were produced by the independent brute force in
oracles.py before the analysis code existed.
"""

from nwbts.core import TripleSystem
from nwbts import analysis as an

import oracles

# (b, min point sq, min pair sq, min triple sq, #systems, #simultaneous,
#  #simultaneous that are nearly 2-balanced)
FROZEN = {
    3: (17, 11, 3, 120, 30, 30),
    4: (30, 18, 4, 210, 70, 60),
}


def test_exhaustive_minima_match_closed_forms():
    for b, (m1, m2, m3, total, n_simul, n_shape) in FROZEN.items():
        minima, winners, count = oracles.exhaustive_v5(b)
        assert count == total
        assert minima == (m1, m2, m3)
        assert len(winners) == n_simul
        assert m1 == an.balanced_square_minimum(3 * b, 5)
        assert m2 == an.min_pair_square_sum(5, b)
        assert m3 == an.balanced_square_minimum(b, 10)


def test_simultaneous_minimizers_equal_minimum_achievers():
    for b, (_, _, _, _, n_simul, n_shape) in FROZEN.items():
        minima, winners, _ = oracles.exhaustive_v5(b)
        winner_set = {frozenset(map(frozenset, w)) for w in winners}
        achiever_set = set()
        certified_set = set()
        for system in oracles.all_simple_systems(5, b):
            ts = TripleSystem(range(5), system)
            report = an.certify_nwbts(ts)
            key = frozenset(map(frozenset, system))
            if report.achieves_square_minima:
                achiever_set.add(key)
            if report.is_nwbts:
                certified_set.add(key)
        assert achiever_set == winner_set
        # the strict shape definition excludes exactly the defect-2 singletons
        assert certified_set <= winner_set
        assert len(certified_set) == n_shape
        for key in winner_set - certified_set:
            ts = TripleSystem(range(5), [tuple(sorted(blk)) for blk in key])
            assert an.defect_graph(ts).beta == 2
