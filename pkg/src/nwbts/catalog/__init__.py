"""Catalog of stored designs and the recipes that rebuild them.

Every entry pairs an id with a recipe over the frozen data modules; the
data files themselves are locked by content hash.  materialize() runs the
recipe, verifies the result (nothing is served unverified), and memoizes
it behind a lock so concurrent callers share one object.  Stored designs
keep base blocks plus a development rule, never expanded block lists,
except where a design has no usable symmetry.

Beyond the fixed entries the module offers three assembly services:
small_nwbts() reaches every admissible block count on the stored small
orders through layering, complements, and full-layer shifts;
build_doubled_nwbts() covers the two doubled orders from difference
tables; swap_marked_class() and fold_classes_to_six() derive the
alternate markings and the merged index-six readings of the stored
partitioned candelabra systems.
"""

from __future__ import annotations

import threading
from collections import defaultdict
from itertools import combinations
from math import comb

from ..analysis import C1, C2, associate, certify_nwbts, classify_condition
from ..compose import CompositionError, add_disjoint_steiner_layers, \
    shift_by_full_layers
from ..core import TripleSystem, canonical_block, complement_system, \
    point_key, system_to_json
from ..structures import CandelabraDesign, NgddMark, PartitionClass, \
    PartitionedCandelabra, group_type_string, pics2_role_swap, \
    structure_to_json, verify_partition
from . import data_pcs, data_small
from ._hashes import DATA_DIGESTS, current_digest
from .doubling import DoublingError, build_doubled_nwbts, \
    doubled_decomposition, difference_table


class CatalogError(Exception):
    """A stored design is missing, altered, or fails verification."""


def _check_data_integrity():
    for name, want in DATA_DIGESTS.items():
        got = current_digest(name)
        if got != want:
            raise CatalogError(
                "data module %s.py does not match its recorded digest "
                "(%s... != %s...)" % (name, got[:12], want[:12]))


class CatalogEntry:
    """An id, what the design is, and how to rebuild it."""

    __slots__ = ("id", "species", "parameters", "recipe", "source_ref")

    def __init__(self, entry_id, species, parameters, recipe, source_ref):
        self.id = entry_id
        self.species = species
        self.parameters = dict(parameters)
        self.recipe = recipe
        self.source_ref = source_ref

    def describe(self) -> dict:
        return {"id": self.id, "species": self.species,
                "parameters": dict(self.parameters), "source": self.source_ref}

    def __repr__(self):
        return "CatalogEntry(%s)" % self.id


# ---------------------------------------------------------------------------
# verified-build helpers

def _certified_nwbts(system: TripleSystem, v: int, b: int) -> TripleSystem:
    if (system.v, system.b) != (v, b):
        raise CatalogError("stored design has v=%d b=%d, expected (%d, %d)"
                           % (system.v, system.b, v, b))
    rep = certify_nwbts(system)
    if not rep.is_nwbts:
        raise CatalogError("NWBTS(%d; %d) fails certification: %s"
                           % (v, b, "; ".join(rep.reasons)))
    return system


def _uniform_layer(system: TripleSystem, lam: int, hole=None) -> TripleSystem:
    if not system.is_simple():
        raise CatalogError("layer repeats a block")
    freqs = set(system.pair_frequencies().values())
    if freqs != {lam}:
        raise CatalogError("layer covers pairs %r times, expected %d"
                           % (sorted(freqs), lam))
    if hole is not None:
        cell = frozenset(hole)
        for blk in system.distinct_blocks():
            if cell.issuperset(blk):
                raise CatalogError("layer block %r sits inside the avoided "
                                   "cell" % (blk,))
    return system


def _verified_partition(pc: PartitionedCandelabra) -> PartitionedCandelabra:
    rep = verify_partition(pc)
    if not rep.ok:
        raise CatalogError("stored %s system fails verification: %s"
                           % (pc.flavor, "; ".join(rep.failures[:3])))
    return pc


def complete_candelabra(stem, groups) -> CandelabraDesign:
    """The all-triples candelabra on the given cells: every triple not
    inside stem-plus-one-group appears exactly once."""
    stem = tuple(stem)
    groups = [tuple(g) for g in groups]
    points = sorted(list(stem) + [p for g in groups for p in g], key=point_key)
    cells = [frozenset(stem) | frozenset(g) for g in groups]
    blocks = [t for t in combinations(points, 3)
              if not any(sum(p in c for p in t) == 3 for c in cells)]
    return CandelabraDesign(points, stem, groups, blocks)


def _detect_long_group(blocks, base: CandelabraDesign) -> int:
    """Which stem+group cell no block of the class meets twice."""
    for idx, g in enumerate(base.groups):
        cell = frozenset(base.stem) | frozenset(g)
        if not any(sum(p in cell for p in blk) >= 2 for blk in blocks):
            return idx
    raise CatalogError("stored class avoids no stem+group cell")


def _long_class(blocks, base, index, mark=None) -> PartitionClass:
    return PartitionClass(blocks, "long", index,
                          group=_detect_long_group(blocks, base), ngdd=mark)


# ---------------------------------------------------------------------------
# development helpers for the stored base blocks

def _dev_ints(bases, step, count, modulus, shift=0):
    # integer points translate, letter points stay put
    out = []
    for k in range(count):
        off = (shift + k * step) % modulus
        for blk in bases:
            out.append(tuple(p if isinstance(p, str) else (p + off) % modulus
                             for p in blk))
    return out


def _dev_grid(bases, t, s, modulus=12, rings=3):
    # (x, j) points: x over the offsets 0,3,6,9 plus t; j shifted by s
    out = []
    for u in (0, 3, 6, 9):
        for blk in bases:
            out.append(tuple(
                p if isinstance(p, str)
                else ((p[0] + u + t) % modulus, (p[1] + s) % rings)
                for p in blk))
    return out


# ---------------------------------------------------------------------------
# stored small NWBTS block lists

def _stored_blocks(key):
    if key in data_small.NWBTS_BLOCKS:
        return [tuple(b) for b in data_small.NWBTS_BLOCKS[key]]
    if key == (14, 150):
        return _dev_ints(data_small.NWBTS_14_150_BASES, 7, 2, 14)
    if key in data_small.EXTENSIONS:
        src, extra = data_small.EXTENSIONS[key]
        return _stored_blocks(src) + [tuple(b) for b in extra]
    raise CatalogError("no stored blocks for %r" % (key,))


def _stored_keys():
    keys = set(data_small.NWBTS_BLOCKS) | set(data_small.EXTENSIONS)
    keys.add((14, 150))
    return keys


def _load_small(v, b) -> TripleSystem:
    return _certified_nwbts(TripleSystem(range(v), _stored_blocks((v, b))),
                            v, b)


# ---------------------------------------------------------------------------
# uniform layers

def _load_s3_11():
    blocks = _dev_ints(data_small.S3_11_BASES, 1, 11, 11)
    return _uniform_layer(TripleSystem(range(11), blocks), 3)


def _load_s2_16(which):
    bases = data_small.S2_16_BASE_LINES[which]
    blocks = _dev_ints(bases, 1, 16, 16)
    return _uniform_layer(TripleSystem(range(16), blocks), 2)


def _load_s2_10():
    return _uniform_layer(TripleSystem(range(10), data_small.S2_10_BLOCKS), 2)


_HOLE_16 = (0, 4, 8, 12)
_HOLE_10 = (0, 1, 2, 3)


def _load_s6_16():
    blocks = _dev_ints(data_small.S6_16_BASES, 1, 16, 16)
    return _uniform_layer(TripleSystem(range(16), blocks), 6, hole=_HOLE_16)


def _load_s6_10():
    return _uniform_layer(TripleSystem(range(10), data_small.S6_10_BLOCKS), 6,
                          hole=_HOLE_10)


# ---------------------------------------------------------------------------
# partitioned candelabra loaders

def _load_pics433():
    data = data_pcs.PICS433
    groups = [[(x, y, i) for x in (0, 1) for y in (0, 1)] for i in (0, 1, 2)]
    base = complete_candelabra((), groups)

    def shift(blk, dx, dy):
        return tuple(((x + dx) % 2, (y + dy) % 2, i) for x, y, i in blk)

    full = tuple(data["s2_marked"]) + tuple(data["s2_plain"])
    mark = NgddMark(data["s2_marked"], data["doubled"], data["uncovered"])
    classes = []
    for dx, dy in ((0, 0), (0, 1), (1, 0), (1, 1)):
        blocks = [shift(b, dx, dy) for b in full]
        classes.append(PartitionClass(blocks, "steiner", 2,
                                      ngdd=mark if (dx, dy) == (0, 0) else None))
    for lines in data["transverse_lines"]:
        blocks = [shift(b, dx, dy) for b in lines
                  for dx in (0, 1) for dy in (0, 1)]
        classes.append(PartitionClass(blocks, "transverse", 1))
    return _verified_partition(PartitionedCandelabra(
        base, "pics2", 3, classes, r=data["r"]))


def _load_pcs632():
    data = data_pcs.PCS632
    groups = [[x for x in range(18) if x % 3 == i] for i in range(3)]
    base = complete_candelabra(("a", "b"), groups)
    bases = tuple(data["marked"]) + tuple(data["plain"])
    classes = []
    for j in range(9):
        blocks = _dev_ints(bases, 9, 2, 18, shift=j)
        mark = None
        if j == 0:
            mark = NgddMark(_dev_ints(data["marked"], 9, 2, 18),
                            data["doubled"], data["uncovered"])
        classes.append(_long_class(blocks, base, 2, mark))
    return _verified_partition(PartitionedCandelabra(
        base, "gpcs2", 3, classes, r=data["r"]))


_PCS634_ROTATE = {}
for _cyc in ((0, 2, 4), (1, 15, 17), (6, 8, 10), (3, 5, 7),
             (12, 14, 16), (9, 11, 13)):
    for _k, _x in enumerate(_cyc):
        _PCS634_ROTATE[_x] = _cyc[(_k + 1) % 3]
del _cyc, _k, _x


def _load_pcs634(r):
    data = data_pcs.PCS634[r]
    groups = [[x for x in range(18) if x % 3 == i] for i in range(3)]
    base = complete_candelabra(("a", "b", "c", "d"), groups)

    def image(blk, i, j):
        out = []
        for p in blk:
            if isinstance(p, str):
                out.append(p)
                continue
            for _ in range(j):
                p = _PCS634_ROTATE[p]
            out.append((p + 6 * i) % 18)
        return tuple(out)

    full = tuple(data["marked"]) + tuple(data["plain"])
    classes = []
    for i in range(3):
        for j in range(3):
            blocks = [image(b, i, j) for b in full]
            mark = None
            if i == 0 and j == 0:
                mark = NgddMark(data["marked"], data["doubled"],
                                data["uncovered"])
            classes.append(_long_class(blocks, base, 2, mark))
    return _verified_partition(PartitionedCandelabra(
        base, "gpcs2", 3, classes, r=r))


def _load_h1232():
    data = data_pcs.H1232
    groups = [[(x, j) for x in range(12)] for j in range(3)]
    base = complete_candelabra(("a", "b"), groups)
    bases = tuple(data["marked"]) + tuple(data["plain"])
    classes = []
    for t in range(3):
        for s in range(3):
            blocks = _dev_grid(bases, t, s)
            mark = None
            if (t, s) == (0, 0):
                mark = NgddMark(_dev_grid(data["marked"], 0, 0),
                                data["doubled"], data["uncovered"])
            classes.append(_long_class(blocks, base, 2, mark))
    return _verified_partition(PartitionedCandelabra(
        base, "gpcs2", 3, classes, r=data["r"]))


def _load_h12340(table):
    data = data_pcs.H12340
    groups = [[(x, j) for x in range(12)] for j in range(3)]
    base = complete_candelabra(("a", "b", "c", "d"), groups)
    head = data[table]
    bases = tuple(head["marked"]) + tuple(head["plain"])
    mark = NgddMark(_dev_grid(head["marked"], 0, 0),
                    head["doubled"], head["uncovered"])
    classes = [_long_class(_dev_grid(bases, 0, 0), base, 2, mark)]
    special = classes[0].group
    for t in range(3):
        for s in range(3):
            classes.append(_long_class(
                _dev_grid(data["table3"], t, s), base, 2))
    return _verified_partition(PartitionedCandelabra(
        base, "gpluspcs2", 3, classes, r=len(head["doubled"]),
        special_group=special))


def _load_w6420():
    data = data_pcs.W6420
    groups = [[x for x in range(24) if x % 4 == i] for i in range(4)]
    base = complete_candelabra(("a", "b"), groups)
    t1 = tuple(data["t1_marked"]) + tuple(data["t1_plain"])
    classes = []
    for j in range(8):
        mark = None
        if j == 0:
            mark = NgddMark(_dev_ints(data["t1_marked"], 8, 3, 24),
                            data["doubled"], data["uncovered"])
        classes.append(_long_class(_dev_ints(t1, 8, 3, 24, shift=j),
                                   base, 2, mark))
    for j in range(4):
        classes.append(_long_class(_dev_ints(data["t2"], 4, 6, 24, shift=j),
                                   base, 2))
    return _verified_partition(PartitionedCandelabra(
        base, "gpcs2", 3, classes, r=len(data["doubled"])))


def _load_wp():
    data = data_pcs.WP
    groups = [[x for x in range(24) if x % 4 == i] for i in range(4)]
    base = complete_candelabra(("a", "b"), groups)
    ring = {j: _dev_ints(data["a0"], 4, 6, 24, shift=j) for j in range(4)}
    mark = NgddMark(data["a4_marked"], data["doubled"], data["uncovered"])
    marked_blocks = tuple(data["a4_marked"]) + tuple(data["a4_plain"])
    classes = [
        _long_class(ring[0], base, 2),
        _long_class(marked_blocks, base, 2, mark),
        _long_class(data["a5"], base, 2),
        _long_class(ring[1] + list(data["a6"]) + list(data["a7"]), base, 6),
        _long_class(ring[2] + list(data["a8"]), base, 6),
        _long_class(ring[3] + list(data["a9"]), base, 6),
    ]
    return _verified_partition(PartitionedCandelabra(
        base, "gpcs6", 1, classes, r=len(data["doubled"]),
        special_group=0))


def _load_pgdd2_2x4():
    groups = [[(j, 0), (j, 1)] for j in range(4)]
    points = [p for g in groups for p in g]
    host = [canonical_block((p, q, r))
            for gi, gj, gk in combinations(range(4), 3)
            for p in groups[gi] for q in groups[gj] for r in groups[gk]]
    base = CandelabraDesign(points, (), groups, host)
    classes = []
    for parity in (0, 1):
        blocks = [((1, a), (2, b), (3, c))
                  for a in (0, 1) for b in (0, 1) for c in (0, 1)
                  if (a + b + c) % 2 == parity]
        classes.append(PartitionClass(blocks, "transverse", 1, group=0))
    for avoid in (1, 2, 3):
        rest = [j for j in range(4) if j != avoid]
        blocks = [((rest[0], a), (rest[1], b), (rest[2], c))
                  for a in (0, 1) for b in (0, 1) for c in (0, 1)]
        classes.append(PartitionClass(blocks, "transverse", 2, group=avoid))
    return _verified_partition(PartitionedCandelabra(
        base, "pgdd2", 1, classes, special_group=0))


# ---------------------------------------------------------------------------
# derived readings of the stored partitions

def swap_marked_class(pc: PartitionedCandelabra) -> PartitionedCandelabra:
    """The complementary marking: inside the marked class, keep the other
    block set and trade the doubled pairs for the uncovered ones."""
    if pc.flavor == "pics2":
        return pics2_role_swap(pc)
    if pc.flavor not in ("gpcs2", "gpluspcs2", "gpcs6"):
        raise CatalogError("no marking to swap in a %s system" % pc.flavor)
    n = len(pc.base.groups)
    gsize = len(pc.base.groups[0])
    short_pairs = (n - 1) * gsize // 2
    classes = []
    swapped = False
    for cls in pc.classes:
        if cls.ngdd is not None and not swapped:
            keep = set(cls.ngdd.blocks)
            rest = [b for b in cls.blocks if b not in keep]
            mark = NgddMark(rest, cls.ngdd.uncovered, cls.ngdd.doubled)
            classes.append(PartitionClass(cls.blocks, cls.role, cls.index,
                                          cls.group, mark, cls.subgdd))
            swapped = True
        else:
            classes.append(cls)
    if not swapped:
        raise CatalogError("no marked class to swap")
    return PartitionedCandelabra(pc.base, pc.flavor, pc.g, classes,
                                 r=short_pairs - pc.r,
                                 special_group=pc.special_group)


def fold_classes_to_six(pc: PartitionedCandelabra,
                        special_group=None) -> PartitionedCandelabra:
    """Merge each group's three index-two classes into one index-six class,
    keeping the special group's classes (and its marking) separate."""
    if pc.flavor != "gpcs2":
        raise CatalogError("folding starts from a gpcs2 system")
    if special_group is None:
        marked = [c for c in pc.classes if c.ngdd is not None]
        if not marked:
            raise CatalogError("no marked class to anchor the fold")
        special_group = marked[0].group
    by_group = defaultdict(list)
    for cls in pc.classes:
        by_group[cls.group].append(cls)
    if any(len(v) % 3 for v in by_group.values()):
        raise CatalogError("class counts are not multiples of three")
    classes = []
    for idx in sorted(by_group):
        if idx == special_group:
            classes.extend(by_group[idx])
        else:
            blocks = [b for cls in by_group[idx] for b in cls.blocks]
            classes.append(PartitionClass(blocks, "long", 6, group=idx))
    return PartitionedCandelabra(pc.base, "gpcs6", pc.g // 3, classes,
                                 r=pc.r, special_group=special_group)


# ---------------------------------------------------------------------------
# registry

_REGISTRY: dict = {}
_MEMO: dict = {}
_LOCK = threading.Lock()


def _add(entry_id, species, parameters, recipe, source_ref):
    if entry_id in _REGISTRY:
        raise CatalogError("duplicate catalog id %r" % entry_id)
    _REGISTRY[entry_id] = CatalogEntry(entry_id, species, parameters,
                                       recipe, source_ref)


def _nwbts_id(v, b):
    return "nwbts-%d-%d" % (v, b)


def _nwbts_params(v, b):
    a = associate(v, b)
    return {"v": v, "b": b, "lam": a.lam, "eps": a.eps,
            "condition": classify_condition(v, b)}


_LAYER_IDS = {
    10: ("s2-2-3-10",),
    11: ("s3-2-3-11",),
    16: ("s2-2-3-16-1", "s2-2-3-16-2", "s6-2-3-16-hole4"),
}

_LAYERED_TARGETS = (
    (10, 44), (10, 45), (10, 46),
    (11, 73), (11, 74),
    (16, 118), (16, 119), (16, 120), (16, 121), (16, 122),
    (16, 198), (16, 199), (16, 200), (16, 201), (16, 202),
    (16, 278), (16, 279), (16, 280), (16, 281), (16, 282),
)


def _build_registry():
    for v, b in sorted(_stored_keys()):
        if (v, b) in data_small.EXTENSIONS:
            src = "data_small.EXTENSIONS[%r]" % ((v, b),)
        elif (v, b) == (14, 150):
            src = "data_small.NWBTS_14_150_BASES"
        else:
            src = "data_small.NWBTS_BLOCKS[%r]" % ((v, b),)
        _add(_nwbts_id(v, b), "nwbts", _nwbts_params(v, b),
             (lambda v=v, b=b: _load_small(v, b)), src)
    for v, b in _LAYERED_TARGETS:
        _add(_nwbts_id(v, b), "nwbts", _nwbts_params(v, b),
             (lambda v=v, b=b: small_nwbts(v, b)),
             "derived: stored base plus disjoint uniform layers")

    _add("s3-2-3-11", "steiner", {"v": 11, "lam": 3, "b": 55},
         _load_s3_11, "data_small.S3_11_BASES")
    _add("s2-2-3-16-1", "steiner", {"v": 16, "lam": 2, "b": 80},
         lambda: _load_s2_16(0), "data_small.S2_16_BASE_LINES[0]")
    _add("s2-2-3-16-2", "steiner", {"v": 16, "lam": 2, "b": 80},
         lambda: _load_s2_16(1), "data_small.S2_16_BASE_LINES[1]")
    _add("s2-2-3-10", "steiner", {"v": 10, "lam": 2, "b": 30},
         _load_s2_10, "data_small.S2_10_BLOCKS")
    _add("s6-2-3-16-hole4", "steiner",
         {"v": 16, "lam": 6, "b": 240, "avoided_cell": list(_HOLE_16)},
         _load_s6_16, "data_small.S6_16_BASES")
    _add("s6-2-3-10-hole4", "steiner",
         {"v": 10, "lam": 6, "b": 90, "avoided_cell": list(_HOLE_10)},
         _load_s6_10, "data_small.S6_10_BLOCKS")

    _add("pics2-3-4^3-0", "pics2",
         {"type": "4^3:0", "r": 3}, _load_pics433, "data_pcs.PICS433")
    _add("pcs2-3-6^3-2-r3", "gpcs2",
         {"type": "6^3:2", "g": 3, "r": 3}, _load_pcs632, "data_pcs.PCS632")
    _add("pcs2-3-6^3-4-r0", "gpcs2",
         {"type": "6^3:4", "g": 3, "r": 0},
         lambda: _load_pcs634(0), "data_pcs.PCS634[0]")
    _add("pcs2-3-6^3-4-r3", "gpcs2",
         {"type": "6^3:4", "g": 3, "r": 3},
         lambda: _load_pcs634(3), "data_pcs.PCS634[3]")
    _add("pcs2-3-12^3-2-r6", "gpcs2",
         {"type": "12^3:2", "g": 3, "r": 6}, _load_h1232, "data_pcs.H1232")
    _add("pcs2p-3-12^3-4-u0", "gpluspcs2",
         {"type": "12^3:4", "g": 3, "r": 0},
         lambda: _load_h12340("table1"), "data_pcs.H12340[table1]")
    _add("pcs2p-3-12^3-4-u6", "gpluspcs2",
         {"type": "12^3:4", "g": 3, "r": 6},
         lambda: _load_h12340("table2"), "data_pcs.H12340[table2]")
    _add("pcs2p-3-12^3-4-u12", "gpluspcs2",
         {"type": "12^3:4", "g": 3, "r": 12},
         lambda: _verified_partition(
             swap_marked_class(materialize("pcs2p-3-12^3-4-u0"))),
         "derived: marking swap of pcs2p-3-12^3-4-u0")
    _add("pcs2-3-6^4-2-r0", "gpcs2",
         {"type": "6^4:2", "g": 3, "r": 0}, _load_w6420, "data_pcs.W6420")

    _add("pcs6-1-6^4-2-r0", "gpcs6",
         {"type": "6^4:2", "g": 1, "r": 0},
         lambda: _verified_partition(
             fold_classes_to_six(materialize("pcs2-3-6^4-2-r0"))),
         "derived: classes of pcs2-3-6^4-2-r0 folded three to one")
    _add("pcs6-1-6^4-2-r3", "gpcs6",
         {"type": "6^4:2", "g": 1, "r": 3}, _load_wp, "data_pcs.WP")
    _add("pcs6-1-6^4-2-r6", "gpcs6",
         {"type": "6^4:2", "g": 1, "r": 6},
         lambda: _verified_partition(
             swap_marked_class(materialize("pcs6-1-6^4-2-r3"))),
         "derived: marking swap of pcs6-1-6^4-2-r3")
    _add("pcs6-1-6^4-2-r9", "gpcs6",
         {"type": "6^4:2", "g": 1, "r": 9},
         lambda: _verified_partition(
             swap_marked_class(materialize("pcs6-1-6^4-2-r0"))),
         "derived: marking swap of pcs6-1-6^4-2-r0")

    _add("pgdd2-2^4", "pgdd2", {"type": "2^4", "g": 1},
         _load_pgdd2_2x4, "constructed in place")


def get_entry(entry_id) -> CatalogEntry:
    try:
        return _REGISTRY[entry_id]
    except KeyError:
        raise CatalogError("unknown catalog id %r" % (entry_id,)) from None


def entry_ids():
    return sorted(_REGISTRY)


def materialize(entry_id):
    """Build, verify, and cache an entry; repeat calls share one object."""
    with _LOCK:
        cached = _MEMO.get(entry_id)
    if cached is not None:
        return cached
    entry = get_entry(entry_id)
    built = entry.recipe()
    with _LOCK:
        return _MEMO.setdefault(entry_id, built)


def list_coverage():
    """Inventory of every entry without building anything."""
    return [_REGISTRY[i].describe() for i in entry_ids()]


def verify_all():
    """Materialize every entry; (id, ok, note) per entry."""
    results = []
    for entry_id in entry_ids():
        try:
            materialize(entry_id)
            results.append((entry_id, True, ""))
        except (CatalogError, CompositionError, DoublingError) as exc:
            results.append((entry_id, False, str(exc)))
    return results


def export_entry(entry_id) -> dict:
    """JSON document for one materialized entry."""
    entry = get_entry(entry_id)
    obj = materialize(entry_id)
    if isinstance(obj, TripleSystem):
        doc = system_to_json(obj, kind=entry.species)
    else:
        doc = structure_to_json(obj)
    doc["id"] = entry.id
    doc["species"] = entry.species
    doc["parameters"] = dict(entry.parameters)
    doc["source"] = entry.source_ref
    return doc


# ---------------------------------------------------------------------------
# assembly of arbitrary small targets

def small_nwbts(v: int, b: int) -> TripleSystem:
    """A certified NWBTS(v; b) assembled from the stored small designs.

    Tries, in order: peeling full layers of every triple (which lowers the
    index by v-2 per layer), a stored base plus disjoint uniform layers,
    and the complement of such an assembly.
    """
    if classify_condition(v, b) not in (C1, C2):
        raise CatalogError("(%d, %d) admits no nearly well-balanced system"
                           % (v, b))
    keys = sorted(k for k in _stored_keys() if k[0] == v)
    if not keys:
        raise CatalogError("no stored designs on %d points" % v)
    full = comb(v, 3)
    for h in range(b // full, -1, -1):
        b0 = b - h * full
        if not 0 < b0 < full:
            continue
        system = _resolve_simple(v, b0, [k[1] for k in keys])
        if system is None:
            continue
        return shift_by_full_layers(system, h) if h else system
    raise CatalogError("cannot assemble NWBTS(%d; %d) from stored designs"
                       % (v, b))


def _resolve_simple(v, b0, stored_bs):
    found = _base_plus_layers(v, b0, stored_bs)
    if found is not None:
        return found
    partner = comb(v, 3) - b0
    inner = _base_plus_layers(v, partner, stored_bs)
    if inner is not None:
        flipped = complement_system(inner)
        if certify_nwbts(flipped).is_nwbts:
            return flipped
    return None


def _base_plus_layers(v, target, stored_bs):
    layer_ids = _LAYER_IDS.get(v, ())
    sizes = None
    for base_b in stored_bs:
        rem = target - base_b
        if rem < 0:
            continue
        if rem == 0:
            return materialize(_nwbts_id(v, base_b))
        if not layer_ids:
            continue
        if sizes is None:
            sizes = [materialize(i).b for i in layer_ids]
        for count in range(1, len(layer_ids) + 1):
            for combo in combinations(range(len(layer_ids)), count):
                if sum(sizes[i] for i in combo) != rem:
                    continue
                base = materialize(_nwbts_id(v, base_b))
                layers = [materialize(layer_ids[i]) for i in combo]
                try:
                    return add_disjoint_steiner_layers(base, layers)
                except CompositionError:
                    continue
    return None


_check_data_integrity()
_build_registry()

__all__ = [
    "CatalogEntry", "CatalogError", "DoublingError",
    "build_doubled_nwbts", "complete_candelabra", "difference_table",
    "doubled_decomposition", "entry_ids", "export_entry",
    "fold_classes_to_six", "get_entry", "list_coverage", "materialize",
    "small_nwbts", "swap_marked_class", "verify_all",
]
