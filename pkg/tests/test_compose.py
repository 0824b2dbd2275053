"""Composition and candelabra-finish constructions, run on catalog parts.

Every expected (v, b, lam, eps, shape) tuple below was computed by running
the construction and certifying the result, then frozen.
"""

from itertools import combinations

import pytest

from nwbts import catalog
from nwbts.analysis import certify_nwbts
from nwbts.compose import (
    CompositionError,
    add_disjoint_steiner_layers,
    assemble_v0_mod6,
    check_epsilon_coverage,
    construction_tbb,
    construction_tbbb,
    construction_tbbb1,
    reachable_epsilons,
    shift_by_full_layers,
)
from nwbts.core import TripleSystem, complement_system, point_key


def relabel(system, target_points):
    """Carry a system onto new point labels, order-preserving."""
    src = sorted(system.points, key=point_key)
    dst = sorted(target_points, key=point_key)
    m = dict(zip(src, dst))
    return TripleSystem(dst, [[m[p] for p in blk] for blk in system.blocks()])


def cell_of(pc, idx):
    return sorted(set(pc.base.groups[idx]) | set(pc.base.stem), key=point_key)


def full_cell_fill(pc, idx):
    cell = cell_of(pc, idx)
    return idx, TripleSystem(cell, list(combinations(cell, 3)))


def certified(system, v, b, lam, eps):
    rep = certify_nwbts(system)
    assert (system.v, system.b) == (v, b)
    assert rep.is_nwbts, rep.reasons
    assert (rep.association.lam, rep.association.eps) == (lam, eps)
    return rep


# ---------------------------------------------------------------- shifting

def test_shift_adds_full_layers():
    base = catalog.materialize("nwbts-5-3")
    out = shift_by_full_layers(base, 1)
    certified(out, 5, 13, 4, -1)


def test_shift_zero_is_identity():
    base = catalog.materialize("nwbts-5-3")
    assert shift_by_full_layers(base, 0) is base


def test_shift_rejects_negative_count():
    base = catalog.materialize("nwbts-5-3")
    with pytest.raises(ValueError):
        shift_by_full_layers(base, -1)


def test_shift_rejects_nonsimple_base():
    base = catalog.materialize("nwbts-5-3")
    doubled = TripleSystem(base.points, list(base.blocks()) * 2)
    with pytest.raises(CompositionError):
        shift_by_full_layers(doubled, 1)


def test_shift_preserves_defect_edges():
    base = catalog.materialize("nwbts-11-18")
    before = certify_nwbts(base).defect_levels
    after = certify_nwbts(shift_by_full_layers(base, 2)).defect_levels
    assert before == after


# ---------------------------------------------------------------- layering

def test_layering_v11_with_index_three_layer():
    base = catalog.materialize("nwbts-11-18")
    layer = catalog.materialize("s3-2-3-11")
    out = add_disjoint_steiner_layers(base, [layer])
    rep = certified(out, 11, 73, 4, -1)
    assert rep.shape == "G-1"


def test_layering_v16_stacks_disjoint_layers():
    base = catalog.materialize("nwbts-16-38")
    one = catalog.materialize("s2-2-3-16-1")
    two = catalog.materialize("s2-2-3-16-2")
    assert add_disjoint_steiner_layers(base, [one]).b == 118
    out = add_disjoint_steiner_layers(base, [one, two])
    certified(out, 16, 198, 5, -6)


def test_layering_v16_with_index_six_layer():
    base = catalog.materialize("nwbts-16-40")
    layer = catalog.materialize("s6-2-3-16-hole4")
    out = add_disjoint_steiner_layers(base, [layer])
    assert out.b == 280
    assert certify_nwbts(out).is_nwbts


def test_layering_rejects_repeated_layer():
    base = catalog.materialize("nwbts-11-18")
    layer = catalog.materialize("s3-2-3-11")
    with pytest.raises(CompositionError):
        add_disjoint_steiner_layers(base, [layer, layer])


def test_layering_rejects_uneven_layer():
    base = catalog.materialize("nwbts-11-18")
    lop = TripleSystem(range(11), [(0, 1, 2), (3, 4, 5)])
    with pytest.raises(CompositionError):
        add_disjoint_steiner_layers(base, [lop])


def test_layering_rejects_foreign_point_set():
    base = catalog.materialize("nwbts-11-18")
    other = catalog.materialize("s2-2-3-10")
    with pytest.raises(CompositionError):
        add_disjoint_steiner_layers(base, [other])


def test_complement_recertifies():
    out = complement_system(catalog.materialize("nwbts-8-27"))
    certified(out, 8, 29, 3, 3)


# ------------------------------------------------- even-index finish (tbb)

def _even_partition_and_hole(hole_id):
    pc = catalog.materialize("pcs2-3-6^4-2-r0")
    hole = relabel(catalog.materialize(hole_id), cell_of(pc, 0))
    return pc, hole


def test_tbb_base_assembly():
    pc, hole = _even_partition_and_hole("nwbts-8-18")
    out = construction_tbb(pc, hole, (), 0)
    rep = certified(out, 26, 216, 2, -2)
    assert rep.shape == "G-2"


def test_tbb_one_spare_group_layer():
    pc, hole = _even_partition_and_hole("nwbts-8-18")
    out = construction_tbb(pc, hole, [full_cell_fill(pc, 1)], 1)
    certified(out, 26, 866, 8, -2)


def test_tbb_rejects_wrong_flavor():
    pics = catalog.materialize("pics2-3-4^3-0")
    _, hole = _even_partition_and_hole("nwbts-8-18")
    with pytest.raises(CompositionError):
        construction_tbb(pics, hole, (), 0)


def test_tbb_rejects_odd_index_hole():
    pc, hole = _even_partition_and_hole("nwbts-8-9")
    with pytest.raises(CompositionError, match="does not satisfy C1"):
        construction_tbb(pc, hole, (), 0)


def test_tbb_rejects_misplaced_hole():
    pc = catalog.materialize("pcs2-3-6^4-2-r0")
    hole = catalog.materialize("nwbts-8-18")  # still on 0..7
    with pytest.raises(CompositionError):
        construction_tbb(pc, hole, (), 0)


def test_tbb_rejects_excess_layers():
    pc, hole = _even_partition_and_hole("nwbts-8-18")
    fills = [full_cell_fill(pc, i) for i in (1, 2, 3, 1)]
    with pytest.raises(CompositionError):
        construction_tbb(pc, hole, fills, 4)


# ------------------------------------------------- odd-index finish (tbbb)

def test_tbbb_marked_partition_small_hole():
    pc, hole = _even_partition_and_hole("nwbts-8-9")
    out = construction_tbbb(pc, hole, (), 0)
    rep = certified(out, 26, 105, 1, -10)
    assert rep.shape == "H1-H2"


def test_tbbb_marked_partition_larger_hole():
    pc, hole = _even_partition_and_hole("nwbts-8-10")
    out = construction_tbbb(pc, hole, (), 0)
    rep = certified(out, 26, 106, 1, -7)
    assert rep.shape == "H0"


def test_tbbb_rejects_even_index_hole():
    pc, hole = _even_partition_and_hole("nwbts-8-18")
    with pytest.raises(CompositionError, match="does not satisfy C2"):
        construction_tbbb(pc, hole, (), 0)


FOLDED_RESULTS = [
    ("pcs6-1-6^4-2-r3", 107, -4),
    ("pcs6-1-6^4-2-r6", 109, 2),
    ("pcs6-1-6^4-2-r9", 111, 8),
]


@pytest.mark.parametrize("entry_id, b, eps", FOLDED_RESULTS)
def test_tbbb1_folded_partitions(entry_id, b, eps):
    pc = catalog.materialize(entry_id)
    hole = relabel(catalog.materialize("nwbts-8-9"), cell_of(pc, 0))
    out = construction_tbbb1(pc, hole, (), 0)
    rep = certified(out, 26, b, 1, eps)
    assert rep.shape == "H1-H2"


def test_tbbb1_spare_layer_raises_index():
    pc = catalog.materialize("pcs6-1-6^4-2-r3")
    hole = relabel(catalog.materialize("nwbts-8-9"), cell_of(pc, 0))
    out = construction_tbbb1(pc, hole, [full_cell_fill(pc, 1)], 1)
    certified(out, 26, 757, 7, -4)


def test_tbbb1_rejects_index_two_flavor():
    pc, hole = _even_partition_and_hole("nwbts-8-9")
    with pytest.raises(CompositionError):
        construction_tbbb1(pc, hole, (), 0)


# -------------------------------------------- stemless finish (v = 0 mod 6)

V12_RESULTS = [
    ("even", 0, 22, 1, 0, "H0"),
    ("even", 1, 66, 3, 0, "H0"),
    ("even", 3, 154, 7, 0, "H0"),
    ("odd", 0, 23, 1, 3, "H1-H2"),
    ("odd", 1, 67, 3, 3, "H1-H2"),
    ("odd", 3, 155, 7, 3, "H1-H2"),
]


@pytest.mark.parametrize("parity, q, b, lam, eps, shape", V12_RESULTS)
def test_assemble_v0_mod6(parity, q, b, lam, eps, shape):
    pics = catalog.materialize("pics2-3-4^3-0")
    out = assemble_v0_mod6(pics, parity, q)
    rep = certified(out, 12, b, lam, eps)
    assert rep.shape == shape


def test_assemble_v0_mod6_rejects_bad_parity():
    pics = catalog.materialize("pics2-3-4^3-0")
    with pytest.raises(ValueError):
        assemble_v0_mod6(pics, "both", 0)


def test_assemble_v0_mod6_rejects_excess_layers():
    pics = catalog.materialize("pics2-3-4^3-0")
    with pytest.raises(CompositionError):
        assemble_v0_mod6(pics, "even", 99)


# ------------------------------------------------------------ eps coverage

def test_reachable_epsilons_per_mark_count():
    assert sorted(reachable_epsilons(26, 8, 1, 0)) == [-10, -7]
    assert sorted(reachable_epsilons(26, 8, 1, 3)) == [-4, -1]
    assert sorted(reachable_epsilons(26, 8, 1, 6)) == [2, 5]
    assert sorted(reachable_epsilons(26, 8, 1, 9)) == [8, 11]


def test_epsilon_coverage_needs_all_four_mark_counts():
    assert check_epsilon_coverage(26, 8, 1, (0, 3, 6, 9))
    assert not check_epsilon_coverage(26, 8, 1, (0, 3))
    assert not check_epsilon_coverage(26, 8, 1, (3, 6, 9))
