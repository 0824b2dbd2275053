"""Verifier checks for the auxiliary design species, on hand-built fixtures."""

from itertools import combinations

import pytest

from nwbts.core import TripleSystem
from nwbts.structures import (
    CandelabraDesign,
    FanDesign,
    GddDesign,
    NgddDesign,
    NgddMark,
    PartitionClass,
    PartitionedCandelabra,
    PilsSquare,
    group_type_string,
    pgdd2_parameters_admissible,
    pics2_role_swap,
    structure_from_json,
    structure_to_json,
    verify_candelabra,
    verify_fan,
    verify_gdd,
    verify_ngdd,
    verify_partition,
    verify_pils,
    verify_resolvable,
)

GDD6_GROUPS = [(0, 1), (2, 3), (4, 5)]
GDD6_BLOCKS = [(0, 2, 4), (0, 3, 5), (1, 2, 5), (1, 3, 4)]

# affine plane of order three: nine lines split into three parallel classes,
# the three removed lines serve as groups
AG9_GROUPS = [(0, 3, 6), (1, 4, 7), (2, 5, 8)]
AG9_CLASSES = [
    [(0, 1, 2), (3, 4, 5), (6, 7, 8)],
    [(0, 4, 8), (1, 5, 6), (2, 3, 7)],
    [(0, 5, 7), (1, 3, 8), (2, 4, 6)],
]

# every cross pair once, long-group pairs uncovered
GDD7_BLOCKS = [(0, 1, 4), (2, 3, 4), (0, 2, 5), (1, 3, 5), (0, 3, 6), (1, 2, 6)]

# doubled-pair half of a twofold triple system on six points
NGDD6_DOUBLED = [(0, 1, 2), (0, 1, 3), (2, 3, 4), (2, 3, 5), (0, 4, 5), (1, 4, 5)]


def all_triples(points):
    return list(combinations(sorted(points), 3))


def test_group_type_string():
    assert group_type_string([3, 3, 3]) == "3^3"
    assert group_type_string([1, 1, 1, 1, 3]) == "1^4 3^1"


def test_gdd_accepts_transversal_design():
    design = GddDesign(TripleSystem(range(6), GDD6_BLOCKS), GDD6_GROUPS)
    rep = verify_gdd(design)
    assert rep.ok
    assert rep.details["type"] == "2^3"
    assert rep.details["pair_violations"] == 0


def test_gdd_reports_missing_block():
    design = GddDesign(TripleSystem(range(6), GDD6_BLOCKS[1:]), GDD6_GROUPS)
    rep = verify_gdd(design)
    assert not rep.ok
    # one deleted block leaves three cross pairs uncovered
    assert rep.details["pair_violations"] == 3


def test_gdd_rejects_block_inside_group():
    blocks = [(0, 1, 2)] + GDD6_BLOCKS[1:]
    rep = verify_gdd(GddDesign(TripleSystem(range(6), blocks), GDD6_GROUPS))
    assert any("blocks-transverse" in f for f in rep.failures)


def test_gdd_index_two():
    system = TripleSystem(range(6), GDD6_BLOCKS * 2)
    assert verify_gdd(GddDesign(system, GDD6_GROUPS, index=2)).ok
    assert not verify_gdd(GddDesign(system, GDD6_GROUPS, index=1)).ok


def test_gdd_group_partition_checked():
    rep = verify_gdd(GddDesign(TripleSystem(range(6), GDD6_BLOCKS),
                               [(0, 1), (1, 2, 3), (4, 5)]))
    assert any("groups-disjoint" in f for f in rep.failures)
    rep = verify_gdd(GddDesign(TripleSystem(range(6), GDD6_BLOCKS),
                               [(0, 1), (2, 3)]))
    assert any("groups-cover-points" in f for f in rep.failures)


def test_resolvable_gdd():
    blocks = [b for cls in AG9_CLASSES for b in cls]
    design = GddDesign(TripleSystem(range(9), blocks), AG9_GROUPS)
    assert verify_gdd(design).ok
    assert verify_resolvable(design, AG9_CLASSES).ok


def test_resolvable_rejects_uneven_classes():
    blocks = [b for cls in AG9_CLASSES for b in cls]
    design = GddDesign(TripleSystem(range(9), blocks), AG9_GROUPS)
    shuffled = [
        [(0, 1, 2), (0, 4, 8), (6, 7, 8)],
        [(3, 4, 5), (1, 5, 6), (2, 3, 7)],
        AG9_CLASSES[2],
    ]
    rep = verify_resolvable(design, shuffled)
    assert any("parallel-classes" in f for f in rep.failures)


def test_ngdd_degenerate_plain_gdd():
    design = NgddDesign(TripleSystem(range(7), GDD7_BLOCKS), long_group=(4, 5, 6))
    rep = verify_ngdd(design)
    assert rep.ok
    assert design.type_string == "2^(0,0) 3^1"
    assert rep.details["singletons"] == 4


def test_ngdd_doubled_and_uncovered():
    doubled = NgddDesign(TripleSystem(range(6), NGDD6_DOUBLED),
                         doubled=[(0, 1), (2, 3), (4, 5)])
    assert verify_ngdd(doubled).ok
    assert doubled.type_string == "2^(3,0)"

    uncovered = NgddDesign(TripleSystem(range(6), GDD6_BLOCKS),
                           uncovered=[(0, 1), (2, 3), (4, 5)])
    assert verify_ngdd(uncovered).ok
    assert uncovered.type_string == "2^(0,3)"


def test_ngdd_wrong_labels_flagged():
    design = NgddDesign(TripleSystem(range(6), NGDD6_DOUBLED),
                        doubled=[(0, 1)], uncovered=[(2, 3), (4, 5)])
    rep = verify_ngdd(design)
    assert not rep.ok
    assert rep.details["pair_violations"] == 2


def test_ngdd_rejects_reused_point():
    design = NgddDesign(TripleSystem(range(6), NGDD6_DOUBLED),
                        doubled=[(0, 1), (1, 2)])
    rep = verify_ngdd(design)
    assert any("cells-disjoint" in f for f in rep.failures)


def test_candelabra_without_stem():
    cs = CandelabraDesign(range(6), (), GDD6_GROUPS, all_triples(range(6)))
    rep = verify_candelabra(cs)
    assert rep.ok
    assert rep.details["type"] == "(2^3 : 0)"


def test_candelabra_with_stem():
    points = [0, 1, 2, 3, "s", "t"]
    groups = [(0, 1), (2, 3)]
    qualifying = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3),
                  (0, 2, "s"), (0, 3, "s"), (1, 2, "s"), (1, 3, "s"),
                  (0, 2, "t"), (0, 3, "t"), (1, 2, "t"), (1, 3, "t")]
    cs = CandelabraDesign(points, ("s", "t"), groups, qualifying)
    assert verify_candelabra(cs).ok

    bad = CandelabraDesign(points, ("s", "t"), groups,
                           qualifying + [(0, "s", "t")])
    rep = verify_candelabra(bad)
    assert any("blocks-avoid-cells" in f for f in rep.failures)


def test_candelabra_counts_missing_triples():
    cs = CandelabraDesign(range(6), (), GDD6_GROUPS, all_triples(range(6))[1:])
    rep = verify_candelabra(cs)
    assert not rep.ok
    assert rep.details["triple_violations"] == 1


def test_candelabra_rejects_repeated_block():
    blocks = all_triples(range(6)) + [(0, 1, 2)]
    rep = verify_candelabra(CandelabraDesign(range(6), (), GDD6_GROUPS, blocks))
    assert any("blocks-simple" in f for f in rep.failures)


def pics2_fixture(r=3):
    base = CandelabraDesign(range(6), (), GDD6_GROUPS, all_triples(range(6)))
    half = NGDD6_DOUBLED + GDD6_BLOCKS
    other = [t for t in all_triples(range(6)) if t not in set(half)]
    pairs = [(0, 1), (2, 3), (4, 5)]
    if r == 3:
        mark = NgddMark(NGDD6_DOUBLED, doubled=pairs, uncovered=())
    else:
        mark = NgddMark(GDD6_BLOCKS, doubled=(), uncovered=pairs)
    classes = [
        PartitionClass(half, "steiner", 2, ngdd=mark),
        PartitionClass(other, "steiner", 2),
    ]
    return PartitionedCandelabra(base, "pics2", 1, classes, r=r)


def test_pics2_partition():
    rep = verify_partition(pics2_fixture())
    assert rep.ok, rep.failures
    assert rep.details["unpartitioned_blocks"] == 0


def test_pics2_role_swap():
    swapped = pics2_role_swap(pics2_fixture(r=3))
    assert swapped.r == 0
    rep = verify_partition(swapped)
    assert rep.ok, rep.failures


def test_pics2_wrong_split_count():
    pc = pics2_fixture(r=3)
    pc = PartitionedCandelabra(pc.base, "pics2", 1, pc.classes, r=2)
    rep = verify_partition(pc)
    assert any("ngdd-split" in f for f in rep.failures)


def test_pics2_missing_class():
    pc = pics2_fixture()
    broken = PartitionedCandelabra(pc.base, "pics2", 1, pc.classes[:1], r=3)
    rep = verify_partition(broken)
    assert any("steiner-count" in f for f in rep.failures)
    assert any("exact-partition" in f for f in rep.failures)


def pgdd2_fixture():
    groups = [(0, 1), (2, 3), (4, 5), (6, 7)]

    def transverse(gs):
        out = []
        for i, j, k in combinations(range(len(gs)), 3):
            for p in gs[i]:
                for q in gs[j]:
                    for r in gs[k]:
                        out.append(tuple(sorted((p, q, r))))
        return out

    even = [(2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6)]
    odd = [(2, 4, 7), (2, 5, 6), (3, 4, 6), (3, 5, 7)]
    sub = [(0, 4, 6), (0, 5, 7), (1, 4, 7), (1, 5, 6)]
    classes = [
        PartitionClass(transverse([groups[0], groups[2], groups[3]]),
                       "transverse", 2, group=1, subgdd=sub),
        PartitionClass(transverse([groups[0], groups[1], groups[3]]),
                       "transverse", 2, group=2),
        PartitionClass(transverse([groups[0], groups[1], groups[2]]),
                       "transverse", 2, group=3),
        PartitionClass(even, "transverse", 1, group=0),
        PartitionClass(odd, "transverse", 1, group=0),
    ]
    base = CandelabraDesign(range(8), (), groups, transverse(groups))
    return PartitionedCandelabra(base, "pgdd2", 1, classes, special_group=0)


def test_pgdd2_partition():
    rep = verify_partition(pgdd2_fixture())
    assert rep.ok, rep.failures
    assert rep.details["declared_blocks"] == 32


def test_pgdd2_detects_tampered_class():
    pc = pgdd2_fixture()
    classes = list(pc.classes)
    bad = list(classes[3].blocks)
    bad[0] = (2, 4, 6 + 1)
    classes[3] = PartitionClass(bad, "transverse", 1, group=0)
    rep = verify_partition(PartitionedCandelabra(pc.base, "pgdd2", 1, classes,
                                                 special_group=0))
    assert not rep.ok


def test_pgdd2_parameter_rule():
    assert pgdd2_parameters_admissible(1, 3)
    assert pgdd2_parameters_admissible(3, 4)
    assert not pgdd2_parameters_admissible(1, 2)
    assert not pgdd2_parameters_admissible(1, 5)


def test_pcs_counting_rules():
    # deliberately mislabel the three-group host as a stem-two candelabra
    pc = pics2_fixture()
    relabeled = PartitionedCandelabra(pc.base, "pcs", 2, pc.classes)
    rep = verify_partition(relabeled)
    assert not rep.ok
    assert any("per-group-count" in f or "roles" in f for f in rep.failures)


def test_gpcs2_counting_rules():
    pc = pics2_fixture()
    relabeled = PartitionedCandelabra(pc.base, "gpcs2", 1, pc.classes, r=3)
    rep = verify_partition(relabeled)
    assert any("roles" in f for f in rep.failures)


PILS_ROWS = [
    [None, None, 4, 5, 2, 3],
    [None, None, 5, 4, 3, 2],
    [4, 5, None, None, 0, 1],
    [5, 4, None, None, 1, 0],
    [2, 3, 0, 1, None, None],
    [3, 2, 1, 0, None, None],
]


def test_pils_symmetric():
    square = PilsSquare(range(6), GDD6_GROUPS, PILS_ROWS, symmetric=True)
    rep = verify_pils(square)
    assert rep.ok
    assert rep.details["type"] == "2^3"


def test_pils_detects_bad_rows():
    rows = [list(r) for r in PILS_ROWS]
    rows[0][2], rows[0][3] = rows[0][3], rows[0][2]
    rep = verify_pils(PilsSquare(range(6), GDD6_GROUPS, rows))
    assert not rep.ok

    rows = [list(r) for r in PILS_ROWS]
    rows[0][1] = 4
    rep = verify_pils(PilsSquare(range(6), GDD6_GROUPS, rows))
    assert any("hole-cells-empty" in f for f in rep.failures)


def test_pils_symmetry_flag():
    rows = [list(r) for r in PILS_ROWS]
    rows[2][4], rows[2][5] = rows[2][5], rows[2][4]
    rows[3][4], rows[3][5] = rows[3][5], rows[3][4]
    square = PilsSquare(range(6), GDD6_GROUPS, rows, symmetric=True)
    rep = verify_pils(square)
    assert any("symmetric" in f for f in rep.failures)
    assert verify_pils(PilsSquare(range(6), GDD6_GROUPS, rows)).ok


FANO = [(1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 7), (1, 5, 6), (2, 6, 7), (1, 3, 7)]


def steiner_quadruples_8():
    blocks = [tuple(sorted((0,) + line)) for line in FANO]
    blocks += [tuple(sorted(set(range(1, 8)) - set(line))) for line in FANO]
    return blocks


def test_fan_without_stem():
    fan = FanDesign(range(8), [(i,) for i in range(8)], [],
                    steiner_quadruples_8())
    rep = verify_fan(fan)
    assert rep.ok, rep.failures
    assert rep.details["transverse_block_sizes"] == [4]


def test_fan_with_one_stem_point():
    comps = [tuple(sorted(set(range(1, 8)) - set(line))) for line in FANO]
    fan = FanDesign(range(1, 8), [(i,) for i in range(1, 8)], [FANO], comps)
    rep = verify_fan(fan)
    assert rep.ok, rep.failures
    assert rep.details["class_block_sizes"] == [[4]]
    assert rep.details["transverse_block_sizes"] == [4]


def test_fan_detects_missing_block():
    comps = [tuple(sorted(set(range(1, 8)) - set(line))) for line in FANO]
    fan = FanDesign(range(1, 8), [(i,) for i in range(1, 8)],
                    [FANO[1:]], comps)
    assert not verify_fan(fan).ok


def test_fan_stem_label_collision():
    fan = FanDesign(list(range(1, 8)) + [("stem", 1)],
                    [(i,) for i in range(1, 8)] + [(("stem", 1),)],
                    [FANO], [])
    rep = verify_fan(fan)
    assert any("stem-labels-fresh" in f for f in rep.failures)


@pytest.mark.parametrize("builder", [
    lambda: GddDesign(TripleSystem(range(6), GDD6_BLOCKS), GDD6_GROUPS),
    lambda: NgddDesign(TripleSystem(range(6), NGDD6_DOUBLED),
                       doubled=[(0, 1), (2, 3), (4, 5)]),
    lambda: CandelabraDesign(range(6), (), GDD6_GROUPS, all_triples(range(6))),
    lambda: pics2_fixture(),
    lambda: pgdd2_fixture(),
    lambda: PilsSquare(range(6), GDD6_GROUPS, PILS_ROWS, symmetric=True),
    lambda: FanDesign(range(1, 8), [(i,) for i in range(1, 8)], [FANO],
                      [tuple(sorted(set(range(1, 8)) - set(l))) for l in FANO]),
])
def test_json_round_trip(builder):
    import json

    original = builder()
    doc = structure_to_json(original, meta={"note": "fixture"})
    clone = structure_from_json(json.loads(json.dumps(doc)))
    assert structure_to_json(clone, meta={"note": "fixture"}) == doc


def test_pgdd2_json_has_no_block_list():
    doc = structure_to_json(pgdd2_fixture())
    assert "blocks" not in doc
    assert len(doc["classes"]) == 5


def test_report_json_shape():
    rep = verify_gdd(GddDesign(TripleSystem(range(6), GDD6_BLOCKS), GDD6_GROUPS))
    doc = rep.to_json()
    assert doc["kind"] == "gdd"
    assert doc["ok"] is True
    assert "pair-coverage" in doc["checks"]
