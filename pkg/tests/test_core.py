import pytest

from nwbts.core import (TripleSystem, PermutationGroup, DevelopmentRule,
                        develop, union_systems, complement_system,
                        disjoint_block_sets, system_to_json, system_from_json)


def test_blocks_canonicalized_and_counted():
    ts = TripleSystem(range(5), [(2, 1, 0), (0, 1, 2), (0, 3, 4)])
    assert ts.b == 3
    assert ts.multiplicity((1, 0, 2)) == 2
    assert not ts.is_simple()
    assert ts.distinct_block_count == 2


def test_block_validation():
    with pytest.raises(ValueError):
        TripleSystem(range(5), [(0, 1, 1)])
    with pytest.raises(ValueError):
        TripleSystem(range(5), [(0, 1, 7)])


def test_frequencies_sum_rules():
    ts = TripleSystem(range(6), [(0, 1, 2), (0, 1, 3), (3, 4, 5)])
    assert sum(ts.point_frequencies().values()) == 3 * ts.b
    assert sum(ts.pair_frequencies().values()) == 3 * ts.b


def test_union_and_complement_roundtrip():
    a = TripleSystem(range(5), [(0, 1, 2)])
    b = TripleSystem(range(5), [(0, 3, 4), (1, 3, 4)])
    u = union_systems(a, b)
    assert u.b == 3 and u.is_simple()
    comp = complement_system(u)
    assert comp.b == 10 - 3
    assert complement_system(comp) == u
    assert disjoint_block_sets(a, b)
    assert not disjoint_block_sets(u, a)


def test_complement_rejects_multisets():
    with pytest.raises(ValueError):
        complement_system(TripleSystem(range(4), [(0, 1, 2), (0, 1, 2)]))


def test_cyclic_development_full_orbit():
    g = PermutationGroup.cyclic(7)
    rule = DevelopmentRule(g)
    ts = develop([(0, 1, 3)], rule)
    # the Fano difference family: one base block, orbit length 7
    assert ts.b == 7 and ts.is_simple()
    assert all(c == 1 for c in ts.pair_frequencies().values())


def test_short_orbit_not_repeated():
    g = PermutationGroup.cyclic(6)
    rule = DevelopmentRule(g)
    ts = develop([(0, 2, 4)], rule)
    # {0,2,4} has orbit length 2 under +1 mod 6
    assert ts.b == 2


def test_listed_translates_exact_count():
    g = PermutationGroup.cyclic(6)
    shift2 = {i: (i + 2) % 6 for i in range(6)}
    rule = DevelopmentRule(g, translates=[{i: i for i in range(6)}, shift2])
    ts = develop([(0, 1, 3), (0, 2, 4)], rule)
    assert ts.b == 4  # one image per (block, translate), repeats kept


def test_group_closure_order():
    g = PermutationGroup.cyclic(11)
    assert g.order == 11
    two_gen = PermutationGroup(range(4), [{0: 1, 1: 0}, {2: 3, 3: 2}])
    assert two_gen.order == 4


def test_develop_equivariance():
    base = [(0, 1, 3)]
    g = PermutationGroup.cyclic(7)
    out = develop(base, DevelopmentRule(g))
    relabel = {i: (3 * i) % 7 for i in range(7)}
    conj_gens = [{relabel[i]: relabel[(i + 1) % 7] for i in range(7)}]
    moved = develop([tuple(relabel[x] for x in base[0])],
                    DevelopmentRule(PermutationGroup(range(7), conj_gens)))
    expected = {tuple(sorted(relabel[x] for x in blk)) for blk in out.distinct_blocks()}
    assert set(moved.distinct_blocks()) == expected


def test_json_roundtrip_with_tuple_labels():
    pts = [(i, j) for i in range(2) for j in range(3)]
    ts = TripleSystem(pts, [((0, 0), (0, 1), (1, 2)), ((0, 0), (1, 0), (1, 1))])
    doc = system_to_json(ts, meta={"note": "test"})
    back = system_from_json(doc)
    assert back == ts


def test_json_multiplicities():
    ts = TripleSystem(range(4), [(0, 1, 2), (0, 1, 2), (1, 2, 3)])
    doc = system_to_json(ts)
    assert doc["multiplicities"] == [2, 1]
    assert system_from_json(doc) == ts
