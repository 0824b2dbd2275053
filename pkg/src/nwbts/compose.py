"""Composition operations that turn verified ingredients into larger NWBTSs.

Every operation takes fully materialized parts, assembles the block union
its recipe prescribes, and re-certifies the result from scratch; assembly
bookkeeping is never trusted.  Failures raise CompositionError carrying
the offending report where one exists.
"""

from collections import Counter
from itertools import combinations
from math import comb

from .analysis import C1, C2, associate, certify_nwbts, classify_condition
from .core import TripleSystem, canonical_block, point_key
from .structures import (GddDesign, NgddDesign, PartitionedCandelabra,
                         verify_gdd, verify_ngdd, verify_partition)

__all__ = [
    "CompositionError",
    "shift_by_full_layers",
    "add_disjoint_steiner_layers",
    "fill_hole_with_gdd",
    "assemble_c2_union",
    "construction_tb",
    "construction_tbb",
    "construction_tbbb",
    "construction_tbbb1",
    "assemble_v0_mod6",
    "reachable_epsilons",
    "check_epsilon_coverage",
]


class CompositionError(ValueError):
    """Ingredients or output of an assembly failed verification."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


def _certified(system: TripleSystem, what: str):
    rep = certify_nwbts(system)
    if not rep.is_nwbts:
        why = "; ".join(rep.reasons) or "shape %r rejected" % (rep.shape,)
        raise CompositionError("%s is not an NWBTS(%d;%d): %s"
                               % (what, rep.v, rep.b, why), rep)
    return rep


def _shared_block(parts):
    """First block occurring in two of the given block collections."""
    seen = set()
    for blocks in parts:
        here = set()
        for blk in blocks:
            blk = canonical_block(blk)
            if blk in seen and blk not in here:
                return blk
            here.add(blk)
        seen |= here
    return None


def _require_disjoint(named_parts, context):
    clash = _shared_block(blocks for _, blocks in named_parts)
    if clash is not None:
        owners = [name for name, blocks in named_parts
                  if canonical_block(clash) in set(map(canonical_block, blocks))]
        raise CompositionError("%s: block %r shared between %s"
                               % (context, clash, " and ".join(owners[:2])))


def _sorted_blocks(blocks):
    return tuple(sorted((canonical_block(b) for b in blocks),
                        key=lambda b: tuple(map(point_key, b))))


# ------------------------------------------------------------- basic moves

def shift_by_full_layers(base: TripleSystem, h: int) -> TripleSystem:
    """Add h extra copies of every triple of the point set.

    Pair counts rise uniformly by h(v-2), so the association moves to
    lam + h(v-2) with the same eps and an untouched defect graph.
    """
    if h < 0:
        raise ValueError("negative layer count %d" % h)
    rep = _certified(base, "shift base")
    if not rep.simple:
        raise CompositionError("shift base must be simple", rep)
    if base.b >= comb(base.v, 3):
        raise CompositionError("shift base needs b < C(v,3), got b=%d" % base.b)
    if h == 0:
        return base
    counts = base.block_multiset()
    blocks = [canonical_block(t) for t in combinations(base.points, 3)]
    out = TripleSystem(base.points, blocks, [counts[t] + h for t in blocks])
    out_rep = _certified(out, "shifted system")
    want = (rep.association.lam + h * (base.v - 2), rep.association.eps)
    got = (out_rep.association.lam, out_rep.association.eps)
    if got != want:
        raise CompositionError("shifted association %r, predicted %r"
                               % (got, want), out_rep)
    return out


def add_disjoint_steiner_layers(base: TripleSystem, layers) -> TripleSystem:
    """Union the base with pairwise disjoint pair-uniform simple layers.

    Each layer covers every pair of the base's points equally often, so the
    defect graph must come through edge for edge; that is checked by set
    equality on both deviation levels, not assumed.
    """
    base_rep = _certified(base, "layering base")
    if base.b >= comb(base.v, 3):
        raise CompositionError("layering base needs b < C(v,3), got b=%d" % base.b)
    layers = list(layers)
    if not layers:
        return base
    for k, layer in enumerate(layers):
        if layer.points != base.points:
            raise CompositionError("layer %d is on a different point set" % k)
        if not layer.is_simple():
            dupe = next(b for b, m in layer.block_counts if m > 1)
            raise CompositionError("layer %d repeats block %r" % (k, dupe))
        freqs = set(layer.pair_frequencies().values())
        if len(freqs) != 1:
            raise CompositionError("layer %d covers pairs unevenly (%r)"
                                   % (k, sorted(freqs)))
    named = [("base", list(base.distinct_blocks()))]
    named += [("layer %d" % k, list(l.distinct_blocks()))
              for k, l in enumerate(layers)]
    _require_disjoint(named, "steiner layering")

    blocks = [b for _, part in named for b in part]
    out = TripleSystem(base.points, blocks)
    out_rep = _certified(out, "layered system")
    for level in (1, -1):
        before = set(base_rep.defect_levels.get(level, ()))
        after = set(out_rep.defect_levels.get(level, ()))
        if before != after:
            moved = sorted(before ^ after,
                           key=lambda pr: tuple(map(point_key, pr)))
            raise CompositionError(
                "layering moved the defect graph at level %+d: %r != %r"
                % (level, moved[:3], "..."), out_rep)
    return out


def fill_hole_with_gdd(hole: TripleSystem, gdd: GddDesign) -> TripleSystem:
    """Extend an NWBTS on the long group of a single-long-group GDD.

    The GDD covers every pair outside the hole exactly index times and the
    hole supplies the rest, so the union inherits the hole's defect graph.
    """
    hole_rep = _certified(hole, "hole design")
    u, c = hole.v, hole.b
    if classify_condition(u, c) != C1:
        raise CompositionError("hole (u=%d, c=%d) does not satisfy C1" % (u, c),
                               hole_rep)
    if c >= comb(u, 3):
        raise CompositionError("hole needs c < C(u,3), got c=%d" % c)
    long_groups = [g for g in gdd.groups if len(g) > 1]
    if len(long_groups) != 1:
        raise CompositionError("gdd must have exactly one long group, got %d"
                               % len(long_groups))
    if long_groups[0] != hole.points:
        raise CompositionError("gdd long group differs from the hole's points")
    v = gdd.system.v
    if v % 6 not in (2, 5) or u % 6 not in (2, 5):
        raise CompositionError("need v = u = 2 or 5 (mod 6), got v=%d u=%d" % (v, u))
    if v == u:
        raise CompositionError("degenerate fill: no points outside the hole")
    if gdd.index != hole_rep.association.lam:
        raise CompositionError("gdd index %d differs from the hole's lam %d"
                               % (gdd.index, hole_rep.association.lam))
    if not gdd.system.is_simple():
        raise CompositionError("gdd part must be simple")
    gdd_rep = verify_gdd(gdd)
    if not gdd_rep.ok:
        raise CompositionError("gdd part failed verification: %s"
                               % "; ".join(gdd_rep.failures[:2]))
    _require_disjoint([("hole", list(hole.distinct_blocks())),
                       ("gdd", list(gdd.system.distinct_blocks()))],
                      "hole fill")
    blocks = list(hole.blocks()) + list(gdd.system.blocks())
    out = TripleSystem(gdd.system.points, blocks)
    out_rep = _certified(out, "filled system")
    if out_rep.association.eps != hole_rep.association.eps:
        raise CompositionError("fill changed eps from %d to %d"
                               % (hole_rep.association.eps,
                                  out_rep.association.eps), out_rep)
    return out


def assemble_c2_union(ngdd: NgddDesign, gdd, hole: TripleSystem) -> TripleSystem:
    """Union an NGDD, an optional even-index GDD, and a hole NWBTS.

    The NGDD contributes the doubled/uncovered 2-groups as fresh defect
    edges; the hole keeps its own.  gdd is None exactly when the hole's
    lam is 1 (no extra coverage needed outside the hole).
    """
    ngdd_rep = verify_ngdd(ngdd)
    if not ngdd_rep.ok:
        raise CompositionError("ngdd failed verification: %s"
                               % "; ".join(ngdd_rep.failures[:2]))
    if not ngdd.system.is_simple():
        raise CompositionError("ngdd part must be simple")
    m, n = len(ngdd.doubled), len(ngdd.uncovered)
    if m % 3 or n % 3:
        raise CompositionError("need 3 | m and 3 | n, got (%d, %d)" % (m, n))
    u = len(ngdd.long_group)
    if u % 6 not in (2, 4):
        raise CompositionError("long group size %d is not 2 or 4 (mod 6)" % u)
    if hole.points != ngdd.long_group:
        raise CompositionError("hole points differ from the ngdd long group")
    hole_rep = _certified(hole, "hole design")
    if classify_condition(u, hole.b) != C2:
        raise CompositionError("hole (u=%d, c=%d) does not satisfy C2"
                               % (u, hole.b), hole_rep)
    if hole.b >= comb(u, 3):
        raise CompositionError("hole needs c < C(u,3), got c=%d" % hole.b)
    lam = hole_rep.association.lam
    parts = [("ngdd", list(ngdd.system.distinct_blocks())),
             ("hole", list(hole.distinct_blocks()))]
    if lam == 1:
        if gdd is not None:
            raise CompositionError("lam=1 leaves no room for an extra gdd part")
    else:
        if gdd is None:
            raise CompositionError("lam=%d requires a gdd part of index %d"
                                   % (lam, lam - 1))
        if gdd.index != lam - 1:
            raise CompositionError("gdd index %d, want lam-1 = %d"
                                   % (gdd.index, lam - 1))
        long_groups = [g for g in gdd.groups if len(g) > 1]
        if len(long_groups) != 1 or long_groups[0] != ngdd.long_group:
            raise CompositionError("gdd long group differs from the ngdd's")
        if gdd.system.points != ngdd.system.points:
            raise CompositionError("gdd lives on a different point set")
        if not gdd.system.is_simple():
            raise CompositionError("gdd part must be simple")
        gdd_rep = verify_gdd(gdd)
        if not gdd_rep.ok:
            raise CompositionError("gdd part failed verification: %s"
                                   % "; ".join(gdd_rep.failures[:2]))
        parts.append(("gdd", list(gdd.system.distinct_blocks())))
    _require_disjoint(parts, "c2 union")

    blocks = [b for _, part in parts for b in part]
    out = TripleSystem(ngdd.system.points, blocks)
    out_rep = _certified(out, "c2 union")
    delta = hole_rep.association.eps
    want = (lam, m - n + delta)
    got = (out_rep.association.lam, out_rep.association.eps)
    if got != want:
        raise CompositionError("union associates with %r, predicted %r"
                               % (got, want), out_rep)
    for level, fresh in ((1, ngdd.doubled), (-1, ngdd.uncovered)):
        union = set(fresh) | set(hole_rep.defect_levels.get(level, ()))
        if set(out_rep.defect_levels.get(level, ())) != union:
            raise CompositionError("defect level %+d is not the predicted union"
                                   % level, out_rep)
    return out


# --------------------------------------------- partitioned-candelabra input

def _verified_partition(pcs: PartitionedCandelabra, flavors):
    if pcs.flavor not in flavors:
        raise CompositionError("need a %s partition, got %r"
                               % ("/".join(flavors), pcs.flavor))
    rep = verify_partition(pcs)
    if not rep.ok:
        raise CompositionError("partition failed verification: %s"
                               % "; ".join(rep.failures[:2]))
    return rep


def _long_classes_by_group(pcs: PartitionedCandelabra):
    per = {}
    for k, cls in enumerate(pcs.classes):
        if cls.role == "long":
            per.setdefault(cls.group, []).append((k, cls))
    return per


def _hole_group(pcs: PartitionedCandelabra, hole: TripleSystem) -> int:
    stem = set(pcs.base.stem)
    want = set(hole.points)
    for i, grp in enumerate(pcs.base.groups):
        if set(grp) | stem == want:
            return i
    raise CompositionError("hole points match no group-plus-stem cell")


def _check_cell_fill(fill: TripleSystem, cell, stem, index: int, what: str):
    """A fill lives on one group-plus-stem cell, avoids stem-only blocks,
    is simple, and covers every cell pair exactly index times."""
    if fill.points != tuple(sorted(cell, key=point_key)):
        raise CompositionError("%s is not on its group-plus-stem cell" % what)
    if not fill.is_simple():
        raise CompositionError("%s repeats a block" % what)
    stem = set(stem)
    for blk in fill.distinct_blocks():
        if stem.issuperset(blk):
            raise CompositionError("%s has stem-only block %r" % (what, blk))
    off = next((pr for pr, f in fill.pair_frequencies().items() if f != index),
               None)
    if off is not None:
        raise CompositionError("%s covers pair %r %d times, want %d"
                               % (what, off, fill.pair_frequencies()[off], index))


def _stem_free(hole: TripleSystem, stem, what: str):
    stem = set(stem)
    for blk in hole.distinct_blocks():
        if stem.issuperset(blk):
            raise CompositionError("%s has stem-only block %r" % (what, blk))


def _layer_system(points, class_blocks, fill: TripleSystem) -> TripleSystem:
    blocks = [b for blocks in class_blocks for b in blocks]
    blocks += list(fill.distinct_blocks())
    return TripleSystem(points, blocks)


def construction_tb(pcs: PartitionedCandelabra, hole: TripleSystem,
                    fills, q: int) -> TripleSystem:
    """Index-one candelabra finish: hole plus lam long classes, then q
    triple-index layers each made of three long classes and one fill.

    fills is an ordered sequence of (group, S3-system) pairs; the first q
    are consumed, each eating the next three unused classes of its group.
    """
    _verified_partition(pcs, ("pcs",))
    base = pcs.base
    g = len(base.groups[0])
    n = len(base.groups)
    s = len(base.stem)
    if g % 3 or s % 3 != 2 or g < 3 or n < 3:
        raise CompositionError("parameters (g=%d, n=%d, s=%d) out of range"
                               % (g, n, s))
    hole_rep = _certified(hole, "hole design")
    u, c = hole.v, hole.b
    if u != g + s:
        raise CompositionError("hole has %d points, want g+s = %d" % (u, g + s))
    if classify_condition(u, c) != C1:
        raise CompositionError("hole (u=%d, c=%d) does not satisfy C1" % (u, c),
                               hole_rep)
    lam = hole_rep.association.lam
    if lam not in (1, 2):
        raise CompositionError("hole lam must be 1 or 2, got %d" % lam)
    _stem_free(hole, base.stem, "hole")
    i0 = _hole_group(pcs, hole)

    per_group = _long_classes_by_group(pcs)
    fills = list(fills)
    if q < 0 or q > len(fills):
        raise CompositionError("q=%d but %d fills supplied" % (q, len(fills)))

    used = Counter({i0: lam})
    blocks = list(hole.blocks())
    for _, cls in per_group[i0][:lam]:
        blocks.extend(cls.blocks)
    base_sys = TripleSystem(base.points, blocks)
    _certified(base_sys, "filled candelabra core")

    layers = []
    for j, (grp, fill) in enumerate(fills[:q]):
        if grp == i0:
            raise CompositionError("fill %d reuses the hole group" % j)
        cell = set(base.groups[grp]) | set(base.stem)
        _check_cell_fill(fill, cell, base.stem, 3, "fill %d" % j)
        start = used[grp]
        chosen = per_group[grp][start:start + 3]
        if len(chosen) < 3:
            raise CompositionError("group %d has no three unused classes left"
                                   % grp)
        used[grp] += 3
        layers.append(_layer_system(base.points,
                                    [cls.blocks for _, cls in chosen], fill))
    return add_disjoint_steiner_layers(base_sys, layers)


def _finish_even(pcs: PartitionedCandelabra, hole: TripleSystem, fills, q: int
                 ) -> TripleSystem:
    """Shared body of the even-index candelabra finish (stem size two)."""
    base = pcs.base
    n = len(base.groups)
    hole_rep = _certified(hole, "hole design")
    u, c = hole.v, hole.b
    if u != len(base.groups[0]) + len(base.stem):
        raise CompositionError("hole has %d points, want group+stem = %d"
                               % (u, len(base.groups[0]) + len(base.stem)))
    if classify_condition(u, c) != C1:
        raise CompositionError("hole (u=%d, c=%d) does not satisfy C1" % (u, c),
                               hole_rep)
    lam = hole_rep.association.lam
    if lam not in (2, 4):
        raise CompositionError("hole lam must be 2 or 4, got %d" % lam)
    _stem_free(hole, base.stem, "hole")
    i0 = _hole_group(pcs, hole)

    per_group = _long_classes_by_group(pcs)
    fills = list(fills)
    if q < 0 or q > len(fills):
        raise CompositionError("q=%d but %d fills supplied" % (q, len(fills)))
    if q > n - 1:
        raise CompositionError("q=%d exceeds the %d fillable groups" % (q, n - 1))

    blocks = list(hole.blocks())
    for _, cls in per_group[i0][:lam // 2]:
        blocks.extend(cls.blocks)
    base_sys = TripleSystem(base.points, blocks)
    _certified(base_sys, "filled candelabra core")

    layers = []
    seen_groups = set()
    for j, (grp, fill) in enumerate(fills[:q]):
        if grp == i0 or grp in seen_groups:
            raise CompositionError("fill %d reuses group %d" % (j, grp))
        seen_groups.add(grp)
        cell = set(base.groups[grp]) | set(base.stem)
        _check_cell_fill(fill, cell, base.stem, 6, "fill %d" % j)
        chosen = per_group[grp][:3]
        layers.append(_layer_system(base.points,
                                    [cls.blocks for _, cls in chosen], fill))
    return add_disjoint_steiner_layers(base_sys, layers)


def construction_tbb(pcs: PartitionedCandelabra, hole: TripleSystem,
                     fills, q: int) -> TripleSystem:
    """Even-lam candelabra finish: hole plus lam/2 index-two long classes,
    then q six-index layers (three classes plus one fill each)."""
    _verified_partition(pcs, ("gpcs2",))
    return _finish_even(pcs, hole, fills, q)


def _marked_class(pcs: PartitionedCandelabra):
    for k, cls in enumerate(pcs.classes):
        if cls.ngdd is not None:
            return k, cls
    raise CompositionError("no class carries a marked sub-design")


def construction_tbbb(pcs: PartitionedCandelabra, hole: TripleSystem,
                      fills, q: int) -> TripleSystem:
    """Odd-lam candelabra finish from an index-two partition: the marked
    sub-design, (lam-1)/2 whole classes of the marked group, and the hole,
    then q six-index layers.

    With a special-group partition, q may reach n by also filling the
    marked group; its fill must avoid the hole's blocks.
    """
    _verified_partition(pcs, ("gpcs2", "gpluspcs2"))
    base = pcs.base
    n = len(base.groups)
    mk, marked = _marked_class(pcs)
    i0 = marked.group
    hole_rep = _certified(hole, "hole design")
    u, c = hole.v, hole.b
    if u != len(base.groups[0]) + len(base.stem):
        raise CompositionError("hole has %d points, want group+stem = %d"
                               % (u, len(base.groups[0]) + len(base.stem)))
    if set(hole.points) != set(base.groups[i0]) | set(base.stem):
        raise CompositionError("hole must sit on the marked group's cell")
    if classify_condition(u, c) != C2:
        raise CompositionError("hole (u=%d, c=%d) does not satisfy C2" % (u, c),
                               hole_rep)
    lam = hole_rep.association.lam
    if lam not in (1, 3, 5):
        raise CompositionError("hole lam must be 1, 3, or 5, got %d" % lam)
    _stem_free(hole, base.stem, "hole")

    per_group = _long_classes_by_group(pcs)
    others = [(k, cls) for k, cls in per_group[i0] if k != mk]
    extra = (lam - 1) // 2
    if extra > len(others):
        raise CompositionError("marked group has %d spare classes, need %d"
                               % (len(others), extra))
    fills = list(fills)
    q_cap = n if pcs.flavor == "gpluspcs2" else n - 1
    if q < 0 or q > min(len(fills), q_cap):
        raise CompositionError("q=%d out of range (cap %d, %d fills)"
                               % (q, q_cap, len(fills)))

    blocks = list(hole.blocks()) + list(marked.ngdd.blocks)
    for _, cls in others[:extra]:
        blocks.extend(cls.blocks)
    base_sys = TripleSystem(base.points, blocks)
    _certified(base_sys, "filled candelabra core")

    layers = []
    seen_groups = set()
    for j, (grp, fill) in enumerate(fills[:q]):
        if grp in seen_groups:
            raise CompositionError("fill %d reuses group %d" % (j, grp))
        seen_groups.add(grp)
        cell = set(base.groups[grp]) | set(base.stem)
        _check_cell_fill(fill, cell, base.stem, 6, "fill %d" % j)
        if grp == i0:
            if pcs.flavor != "gpluspcs2":
                raise CompositionError("fill %d reuses the marked group" % j)
            if extra:
                raise CompositionError("marked-group fill needs lam=1, got %d"
                                       % lam)
            chosen = others[:3]
        else:
            chosen = per_group[grp][:3]
        if len(chosen) < 3:
            raise CompositionError("group %d has no three unused classes left"
                                   % grp)
        layers.append(_layer_system(base.points,
                                    [cls.blocks for _, cls in chosen], fill))
    return add_disjoint_steiner_layers(base_sys, layers)


def construction_tbbb1(pcs: PartitionedCandelabra, hole: TripleSystem,
                       fills, q: int) -> TripleSystem:
    """Odd-lam candelabra finish from a mixed-index partition: as in the
    index-two finish, but each layer takes a single index-six class."""
    _verified_partition(pcs, ("gpcs6",))
    base = pcs.base
    n = len(base.groups)
    mk, marked = _marked_class(pcs)
    i0 = marked.group
    if i0 != pcs.special_group:
        raise CompositionError("marked class sits outside the special group")
    hole_rep = _certified(hole, "hole design")
    u, c = hole.v, hole.b
    if set(hole.points) != set(base.groups[i0]) | set(base.stem):
        raise CompositionError("hole must sit on the marked group's cell")
    if classify_condition(u, c) != C2:
        raise CompositionError("hole (u=%d, c=%d) does not satisfy C2" % (u, c),
                               hole_rep)
    lam = hole_rep.association.lam
    if lam not in (1, 3, 5):
        raise CompositionError("hole lam must be 1, 3, or 5, got %d" % lam)
    _stem_free(hole, base.stem, "hole")

    per_group = _long_classes_by_group(pcs)
    spare2 = [(k, cls) for k, cls in per_group[i0]
              if k != mk and cls.index == 2]
    extra = (lam - 1) // 2
    if extra > len(spare2):
        raise CompositionError("special group has %d spare index-two classes, "
                               "need %d" % (len(spare2), extra))
    fills = list(fills)
    if q < 0 or q > min(len(fills), n - 1):
        raise CompositionError("q=%d out of range (cap %d, %d fills)"
                               % (q, n - 1, len(fills)))

    blocks = list(hole.blocks()) + list(marked.ngdd.blocks)
    for _, cls in spare2[:extra]:
        blocks.extend(cls.blocks)
    base_sys = TripleSystem(base.points, blocks)
    _certified(base_sys, "filled candelabra core")

    layers = []
    used = Counter()
    for j, (grp, fill) in enumerate(fills[:q]):
        if grp == i0:
            raise CompositionError("fill %d reuses the special group" % j)
        cell = set(base.groups[grp]) | set(base.stem)
        _check_cell_fill(fill, cell, base.stem, 6, "fill %d" % j)
        six = [cls for k, cls in per_group[grp] if cls.index == 6]
        if used[grp] >= len(six):
            raise CompositionError("group %d has no unused index-six class"
                                   % grp)
        cls = six[used[grp]]
        used[grp] += 1
        layers.append(_layer_system(base.points, [cls.blocks], fill))
    return add_disjoint_steiner_layers(base_sys, layers)


def assemble_v0_mod6(pics: PartitionedCandelabra, parity: str,
                     q: int) -> TripleSystem:
    """Finish for point counts divisible by six: the marked sub-design is
    already an NWBTS; odd block counts add one augmentation block found by
    deterministic scan; q leftover index-two classes layer on top."""
    if parity not in ("even", "odd"):
        raise ValueError("parity must be 'even' or 'odd', got %r" % (parity,))
    _verified_partition(pics, ("pics2",))
    points = pics.base.points
    mk, marked = _marked_class(pics)
    blocks = list(marked.ngdd.blocks)
    if parity == "odd":
        uncovered = set(marked.ngdd.uncovered)
        endpoints = {}
        for pr in uncovered:
            endpoints.setdefault(pr[0], set()).add(pr[1])
            endpoints.setdefault(pr[1], set()).add(pr[0])
        inside = set(marked.ngdd.blocks)
        pick = None
        for blk in marked.blocks:
            if blk in inside:
                continue
            for x, y, z in ((blk[0], blk[1], blk[2]),
                            (blk[0], blk[2], blk[1]),
                            (blk[1], blk[2], blk[0])):
                pair = (x, y) if point_key(x) <= point_key(y) else (y, x)
                if pair not in uncovered:
                    continue
                if endpoints.get(z, set()) - set(blk):
                    pick = blk
                    break
            if pick is not None:
                break
        if pick is None:
            raise CompositionError("no augmentation block with two level -1 "
                                   "contacts exists in the marked class")
        blocks.append(pick)
    base_sys = TripleSystem(points, blocks)
    _certified(base_sys, "marked sub-design")

    steiner = [(k, cls) for k, cls in enumerate(pics.classes)
               if cls.role == "steiner" and k != mk]
    if q < 0 or q > len(steiner):
        raise CompositionError("q=%d but only %d spare full classes" %
                               (q, len(steiner)))
    layers = [TripleSystem(points, cls.blocks) for _, cls in steiner[:q]]
    return add_disjoint_steiner_layers(base_sys, layers)


# ------------------------------------------------------ coverage arithmetic

def reachable_epsilons(v: int, u: int, lam: int, e: int):
    """All eps values one marked-class size e reaches: eps = -(v-u)/2 + 2e
    + delta, with delta ranging over the hole associations for (u, lam)."""
    out = []
    for delta in range(-(u // 2) + 1, u // 2):
        if (lam * comb(u, 2) + delta) % 3:
            continue
        eps = -(v - u) // 2 + 2 * e + delta
        if -v / 2 < eps < v / 2:
            out.append(eps)
    return tuple(out)


def check_epsilon_coverage(v: int, u: int, lam: int, e_values) -> bool:
    """Do the supplied marked-class sizes reach every admissible eps?"""
    reachable = set()
    for e in e_values:
        reachable.update(reachable_epsilons(v, u, lam, e))
    want = {eps for eps in range(-(v // 2) + 1, v // 2)
            if (lam * comb(v, 2) + eps) % 3 == 0}
    return want <= reachable
