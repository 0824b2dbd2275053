"""Catalog registry, stored designs, small-target assembly, and doubling.

Block and count constants were produced by the brute-force scans in this
file's companion probes and frozen; the tests rebuild everything and check
against those numbers.
"""

import json
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from nwbts import catalog
from nwbts.analysis import certify_nwbts, classify_condition
from nwbts.catalog import (
    CatalogError,
    complete_candelabra,
    fold_classes_to_six,
    small_nwbts,
    swap_marked_class,
)
from nwbts.catalog._hashes import DATA_DIGESTS, current_digest
from nwbts.catalog.doubling import (
    DoublingError,
    build_doubled_nwbts,
    difference_table,
    doubled_decomposition,
    steiner6_layer,
)
from nwbts.core import TripleSystem, system_from_json
from nwbts.structures import structure_from_json, verify_partition

EXPECTED_ENTRY_COUNT = 77

# ids that must exist under exactly these names
PINNED_IDS = [
    "nwbts-11-18",
    "nwbts-14-150",
    "pics2-3-4^3-0",
    "s6-2-3-10-hole4",
    "s2-2-3-16-1",
    "pcs2-3-6^4-2-r0",
    "pcs6-1-6^4-2-r9",
    "pgdd2-2^4",
]


# ---------------------------------------------------------------- registry

def test_registry_size():
    assert len(catalog.entry_ids()) == EXPECTED_ENTRY_COUNT


@pytest.mark.parametrize("entry_id", PINNED_IDS)
def test_pinned_entry_present(entry_id):
    assert catalog.get_entry(entry_id).id == entry_id


def test_every_entry_verifies():
    results = catalog.verify_all()
    assert len(results) == EXPECTED_ENTRY_COUNT
    bad = [(i, note) for i, ok, note in results if not ok]
    assert not bad, bad


def test_materialize_is_memoized():
    a = catalog.materialize("nwbts-11-18")
    assert catalog.materialize("nwbts-11-18") is a


def test_unknown_entry_rejected():
    with pytest.raises(CatalogError):
        catalog.get_entry("nwbts-999-1")
    with pytest.raises(CatalogError):
        catalog.materialize("no-such-thing")


def test_coverage_listing_matches_registry():
    rows = catalog.list_coverage()
    assert len(rows) == EXPECTED_ENTRY_COUNT
    assert all({"id", "species", "parameters"} <= set(r) for r in rows)


def test_data_modules_match_locked_digests():
    assert set(DATA_DIGESTS) == {"data_small", "data_pcs", "data_double"}
    for name, digest in DATA_DIGESTS.items():
        assert current_digest(name) == digest, name


def test_sixteen_point_steiner_layers_are_disjoint():
    one = set(catalog.materialize("s2-2-3-16-1").distinct_blocks())
    two = set(catalog.materialize("s2-2-3-16-2").distinct_blocks())
    assert not one & two


# ------------------------------------------------------------------ export

SYSTEM_EXPORTS = ["nwbts-11-18", "s3-2-3-11", "s6-2-3-10-hole4"]
STRUCTURE_EXPORTS = [
    "pics2-3-4^3-0",
    "pcs2-3-6^3-2-r3",
    "pcs2p-3-12^3-4-u0",
    "pcs6-1-6^4-2-r0",
    "pgdd2-2^4",
]


@pytest.mark.parametrize("entry_id", SYSTEM_EXPORTS)
def test_export_system_round_trip(entry_id):
    doc = json.loads(json.dumps(catalog.export_entry(entry_id)))
    assert doc["id"] == entry_id
    assert {"species", "parameters", "source"} <= set(doc)
    original = catalog.materialize(entry_id)
    back = system_from_json(doc)
    assert back.block_counts == original.block_counts


@pytest.mark.parametrize("entry_id", STRUCTURE_EXPORTS)
def test_export_structure_round_trip(entry_id):
    doc = json.loads(json.dumps(catalog.export_entry(entry_id)))
    assert doc["id"] == entry_id
    back = structure_from_json(doc)
    assert back.flavor == catalog.get_entry(entry_id).species
    assert verify_partition(back).ok


# ------------------------------------------------- candelabra construction

def test_complete_candelabra_is_every_qualifying_triple():
    stem = ("a", "b")
    groups = [tuple(range(i * 4, i * 4 + 4)) for i in range(3)]
    cand = complete_candelabra(stem, groups)
    points = set(stem) | set(range(12))
    cells = [set(stem) | set(g) for g in groups]
    want = sum(1 for t in combinations(points, 3)
               if not any(set(t) <= c for c in cells))
    assert len(cand.blocks) == want
    assert cand.type_string == "(4^3 : 2)"


# ------------------------------------------------------ marked-class moves

SWAP_CASES = [
    ("pics2-3-4^3-0", 3, 3),
    ("pcs2-3-6^3-2-r3", 3, 3),
    ("pcs2-3-12^3-2-r6", 6, 6),
    ("pcs2p-3-12^3-4-u0", 0, 12),
]


@pytest.mark.parametrize("entry_id, r, swapped_r", SWAP_CASES)
def test_swap_marked_class(entry_id, r, swapped_r):
    pc = catalog.materialize(entry_id)
    assert pc.r == r
    swapped = swap_marked_class(pc)
    assert swapped.r == swapped_r
    assert verify_partition(swapped).ok
    again = swap_marked_class(swapped)
    assert again.r == r
    assert verify_partition(again).ok


def test_registry_swaps_cover_both_mark_counts():
    assert catalog.materialize("pcs2p-3-12^3-4-u12").r == 12
    assert catalog.materialize("pcs6-1-6^4-2-r6").r == 6
    assert catalog.materialize("pcs6-1-6^4-2-r9").r == 9


def test_fold_classes_to_six_shape():
    folded = catalog.materialize("pcs6-1-6^4-2-r0")
    assert folded.flavor == "gpcs6"
    assert (folded.g, folded.special_group) == (1, 0)
    assert sorted(cls.index for cls in folded.classes) == [2, 2, 2, 6, 6, 6]


def test_fold_rejects_wrong_flavor():
    pics = catalog.materialize("pics2-3-4^3-0")
    with pytest.raises(CatalogError):
        fold_classes_to_six(pics)


# ---------------------------------------------------- small-target assembly

# number of admissible (and all assemblable) block counts per stored order;
# v=5 is scanned past C(5,3)=10 to exercise the full-layer shifts
SMALL_SCANS = [
    (5, range(3, 41), 16),
    (8, range(1, comb(8, 3) + 1), 11),
    (10, range(1, comb(10, 3) + 1), 12),
    (11, range(1, comb(11, 3) + 1), 12),
    (14, range(1, comb(14, 3) + 1), 34),
    (16, range(1, comb(16, 3) + 1), 35),
]


@pytest.mark.parametrize("v, scan, admissible", SMALL_SCANS)
def test_small_nwbts_builds_every_admissible_target(v, scan, admissible):
    built = 0
    for b in scan:
        if classify_condition(v, b) == "neither":
            continue
        system = small_nwbts(v, b)
        assert (system.v, system.b) == (v, b)
        assert certify_nwbts(system).is_nwbts
        built += 1
    assert built == admissible


def test_small_nwbts_rejects_inadmissible_pairs():
    for v, b in ((5, 5), (6, 5), (8, 8)):
        with pytest.raises(CatalogError):
            small_nwbts(v, b)


def test_small_nwbts_needs_stored_order():
    with pytest.raises(CatalogError):
        small_nwbts(17, 45)


# ---------------------------------------------------------------- doubling

DOUBLED_TARGETS = [
    (25, 816, 2, -2),
    (25, 817, 2, 1),
    (25, 1633, 4, -1),
    (25, 1634, 4, 2),
    (37, 1800, 2, -2),
    (37, 1801, 2, 1),
    (37, 3601, 4, -1),
    (37, 3602, 4, 2),
]


@pytest.mark.parametrize("w, b, lam, eps", DOUBLED_TARGETS)
def test_doubled_base_targets(w, b, lam, eps):
    out = build_doubled_nwbts(w, b)
    assert (out.v, out.b) == (2 * w, b)
    rep = certify_nwbts(out)
    assert rep.is_nwbts, rep.reasons
    assert (rep.association.lam, rep.association.eps) == (lam, eps)


def test_doubled_layered_extremes():
    big = build_doubled_nwbts(25, 8984)
    rep = certify_nwbts(big)
    assert rep.is_nwbts
    assert (rep.association.lam, rep.association.eps) == (22, 2)
    big = build_doubled_nwbts(37, 30612)
    rep = certify_nwbts(big)
    assert rep.is_nwbts
    assert (rep.association.lam, rep.association.eps) == (34, 2)


def test_doubling_error_paths():
    with pytest.raises(DoublingError, match="does not satisfy"):
        build_doubled_nwbts(25, 818)
    with pytest.raises(DoublingError, match="cap"):
        build_doubled_nwbts(25, 10616)
    with pytest.raises(DoublingError, match="difference table"):
        build_doubled_nwbts(24, 816)


def test_doubled_systems_are_not_registry_entries():
    assert not [i for i in catalog.entry_ids() if "-50-" in i or "-74-" in i]


@pytest.mark.parametrize("w, alphas", [(25, 2), (37, 3)])
def test_difference_table_shape(w, alphas):
    table = difference_table(w)
    assert table.alpha_count == alphas
    assert all(a in range(alphas) for a, _ in table.classes)


@pytest.mark.parametrize("w", [25, 37])
def test_steiner6_layer_is_pair_uniform(w):
    table = difference_table(w)
    layer = steiner6_layer(table, 1, 0)
    v = 2 * w
    assert len(layer) == v * (v - 1)
    system = TripleSystem([(x, i) for x in range(w) for i in (0, 1)], layer)
    assert set(system.pair_frequencies().values()) == {6}


@settings(max_examples=120, deadline=None)
@given(w=st.sampled_from([25, 37]), b=st.integers(0, 40000))
def test_doubled_decomposition_arithmetic(w, b):
    table = difference_table(w)
    full = 2 * w * (2 * w - 1)
    split = doubled_decomposition(w, b)
    if split is None:
        return
    m, short, lam, eps = split
    assert m * full + short == b
    assert m // 2 < table.alpha_count
    assert 3 * short == lam * comb(2 * w, 2) + eps
    assert (lam, eps) in ((2, -2), (2, 1), (4, -1), (4, 2))
