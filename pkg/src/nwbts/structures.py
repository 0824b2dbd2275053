"""Verifiers for the auxiliary design species behind the recursive machinery.

Covered: group divisible designs (any index), resolvable GDDs, nearly-GDDs,
candelabra systems, the partitioned-candelabra flavors, partitioned GDDs,
partitioned incomplete Latin squares, and fan designs.  Every verifier
returns a structured report instead of a boolean so callers can surface the
first offending pair or triple.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations

from .core import TripleSystem, canonical_block, canonical_point, point_key

PARTITION_FLAVORS = ("pcs", "gpcs2", "gpluspcs2", "pics2", "gpcs6", "pgdd2")


class VerificationReport:
    """Named checks plus failure messages; ok means no failure recorded."""

    def __init__(self, kind):
        self.kind = kind
        self.checks = []
        self.failures = []
        self.details = {}

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, name, ok, message="") -> bool:
        self.checks.append(name)
        if not ok:
            self.failures.append("%s: %s" % (name, message) if message else name)
        return ok

    def absorb(self, name, sub: "VerificationReport") -> bool:
        # fold a nested verifier run into this report under one check name
        self.checks.append(name)
        for f in sub.failures:
            self.failures.append("%s: %s" % (name, f))
        return sub.ok

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "ok": self.ok,
            "checks": list(self.checks),
            "failures": list(self.failures),
            "details": dict(self.details),
        }

    def __repr__(self):
        state = "ok" if self.ok else "%d failure(s)" % len(self.failures)
        return "VerificationReport(%s, %s)" % (self.kind, state)


def _sorted_points(points):
    return tuple(sorted(set(points), key=point_key))


def _sorted_cell(cell):
    cell = tuple(sorted(cell, key=point_key))
    if len(set(cell)) != len(cell):
        raise ValueError("repeated point in %r" % (cell,))
    return cell


def _pair(p, q):
    return tuple(sorted((p, q), key=point_key))


def group_type_string(sizes) -> str:
    count = Counter(sizes)
    return " ".join("%d^%d" % (s, count[s]) for s in sorted(count))


def _first(items):
    for item in items:
        return item
    return None


class GddDesign:
    """Blocks of size three over a grouped point set, uniform index."""

    __slots__ = ("system", "groups", "index")

    def __init__(self, system: TripleSystem, groups, index: int = 1):
        self.system = system
        self.groups = tuple(_sorted_cell(g) for g in groups)
        self.index = int(index)

    @property
    def type_string(self) -> str:
        return group_type_string(len(g) for g in self.groups)


def verify_gdd(design: GddDesign) -> VerificationReport:
    rep = VerificationReport("gdd")
    system = design.system
    rep.details["type"] = design.type_string
    rep.details["index"] = design.index
    rep.details["v"] = system.v
    rep.details["b"] = system.b
    rep.record("positive-index", design.index >= 1, "index %d" % design.index)

    cell_of = {}
    overlap = None
    for i, g in enumerate(design.groups):
        for p in g:
            if p in cell_of:
                overlap = p
            cell_of[p] = i
    rep.record("groups-disjoint", overlap is None, "point %r in two groups" % (overlap,))
    missing = [p for p in system.points if p not in cell_of]
    stray = [p for p in cell_of if p not in system._point_set]
    rep.record("groups-cover-points", not missing and not stray,
               "missing %r / stray %r" % (_first(missing), _first(stray)))
    if not rep.ok:
        return rep

    for blk, _ in system.block_counts:
        hits = Counter(cell_of[p] for p in blk)
        heavy = _first(i for i, c in hits.items() if c >= 2)
        if heavy is not None:
            rep.record("blocks-transverse", False,
                       "block %r meets group %d twice" % (blk, heavy))
            break
    else:
        rep.record("blocks-transverse", True)

    bad = []
    for pair, freq in system.pair_frequencies().items():
        want = design.index if cell_of[pair[0]] != cell_of[pair[1]] else 0
        if freq != want:
            bad.append((pair, freq, want))
    rep.details["pair_violations"] = len(bad)
    first = _first(bad)
    msg = ("" if not bad else "%d pair(s) off, first %r seen %d want %d"
           % (len(bad), first[0], first[1], first[2]))
    rep.record("pair-coverage", not bad, msg)
    return rep


def verify_resolvable(design: GddDesign, classes) -> VerificationReport:
    rep = VerificationReport("resolvable-gdd")
    rep.absorb("gdd", verify_gdd(design))
    classes = [tuple(canonical_block(b) for b in cls) for cls in classes]
    rep.details["classes"] = len(classes)

    union: Counter = Counter()
    for cls in classes:
        union.update(cls)
    rep.record("classes-exhaust-blocks", union == design.system.block_multiset(),
               "class union differs from block multiset")

    pts = set(design.system.points)
    for k, cls in enumerate(classes):
        seen = Counter(p for blk in cls for p in blk)
        if set(seen) != pts or any(c != 1 for c in seen.values()):
            off = _first(p for p in pts if seen[p] != 1)
            rep.record("parallel-classes", False,
                       "class %d covers point %r %d times" % (k, off, seen[off]))
            break
    else:
        rep.record("parallel-classes", True)
    return rep


class NgddDesign:
    """Nearly-GDD: designated 2-groups covered twice, others not at all.

    doubled / uncovered are the 2-groups with pair frequency 2 and 0; the
    long group and any leftover singleton points behave as in a plain GDD.
    """

    __slots__ = ("system", "doubled", "uncovered", "long_group")

    def __init__(self, system: TripleSystem, doubled=(), uncovered=(), long_group=()):
        self.system = system
        self.doubled = tuple(_pair(*d) for d in doubled)
        self.uncovered = tuple(_pair(*u) for u in uncovered)
        self.long_group = _sorted_cell(long_group)

    @property
    def type_string(self) -> str:
        u = len(self.long_group)
        tail = " %d^1" % u if u else ""
        return "2^(%d,%d)%s" % (len(self.doubled), len(self.uncovered), tail)


def verify_ngdd(design: NgddDesign) -> VerificationReport:
    rep = VerificationReport("ngdd")
    system = design.system
    rep.details["type"] = design.type_string
    rep.details["b"] = system.b

    named = list(design.long_group)
    for pr in design.doubled + design.uncovered:
        named.extend(pr)
    dupe = _first(p for p, c in Counter(named).items() if c > 1)
    rep.record("cells-disjoint", dupe is None, "point %r reused" % (dupe,))
    unknown = _first(p for p in named if p not in system._point_set)
    rep.record("cells-in-point-set", unknown is None, "point %r unknown" % (unknown,))
    if not rep.ok:
        return rep
    rep.details["singletons"] = system.v - len(named)

    want = {}
    for pr in combinations(design.long_group, 2):
        want[_pair(*pr)] = 0
    for pr in design.doubled:
        want[pr] = 2
    for pr in design.uncovered:
        want[pr] = 0

    bad = []
    for pair, freq in system.pair_frequencies().items():
        if freq != want.get(pair, 1):
            bad.append((pair, freq, want.get(pair, 1)))
    rep.details["pair_violations"] = len(bad)
    first = _first(bad)
    msg = ("" if not bad else "%d pair(s) off, first %r seen %d want %d"
           % (len(bad), first[0], first[1], first[2]))
    rep.record("pair-coverage", not bad, msg)
    return rep


class CandelabraDesign:
    """Stem-plus-groups candelabra system; blocks may exceed size three."""

    __slots__ = ("points", "stem", "groups", "blocks")

    def __init__(self, points, stem, groups, blocks):
        self.points = _sorted_points(points)
        self.stem = _sorted_cell(stem)
        self.groups = tuple(_sorted_cell(g) for g in groups)
        canon = []
        for blk in blocks:
            cb = _sorted_cell(canonical_point(p) for p in blk)
            if len(cb) < 3:
                raise ValueError("block below size three: %r" % (blk,))
            canon.append(cb)
        self.blocks = tuple(sorted(canon, key=lambda b: tuple(map(point_key, b))))

    @property
    def v(self) -> int:
        return len(self.points)

    @property
    def type_string(self) -> str:
        return "(%s : %d)" % (group_type_string(len(g) for g in self.groups), len(self.stem))

    def triple_system(self) -> TripleSystem:
        return TripleSystem(self.points, self.blocks)


def verify_candelabra(cs: CandelabraDesign) -> VerificationReport:
    rep = VerificationReport("cs")
    rep.details["type"] = cs.type_string
    rep.details["blocks"] = len(cs.blocks)

    cell_of = {}
    overlap = None
    for i, g in enumerate(cs.groups):
        for p in g:
            if p in cell_of or p in cs.stem:
                overlap = p
            cell_of[p] = i
    rep.record("stem-groups-disjoint", overlap is None, "point %r reused" % (overlap,))
    covered = set(cs.stem) | set(cell_of)
    rep.record("stem-groups-cover-points", covered == set(cs.points),
               "difference %r" % (_first(covered ^ set(cs.points)),))
    if not rep.ok:
        return rep

    stem_set = set(cs.stem)

    def disqualified(triple):
        # lies inside stem + one group (or wholly in the stem)
        s = sum(1 for p in triple if p in stem_set)
        if s == 3:
            return True
        per = Counter(cell_of[p] for p in triple if p not in stem_set)
        return any(s + c == 3 for c in per.values())

    for blk in cs.blocks:
        stray = _first(p for p in blk if p not in covered)
        if stray is not None:
            rep.record("blocks-in-point-set", False, "block %r has %r" % (blk, stray))
            return rep
        s = sum(1 for p in blk if p in stem_set)
        per = Counter(cell_of[p] for p in blk if p not in stem_set)
        heavy = _first(i for i, c in per.items() if s + c >= 3)
        if s >= 3 or heavy is not None:
            rep.record("blocks-avoid-cells", False,
                       "block %r has three points in a stem+group cell" % (blk,))
            return rep
    rep.record("blocks-in-point-set", True)
    rep.record("blocks-avoid-cells", True)

    dupe = _first(b for b, c in Counter(cs.blocks).items() if c > 1)
    rep.record("blocks-simple", dupe is None, "block %r repeated" % (dupe,))

    coverage: Counter = Counter()
    for blk in cs.blocks:
        for t in combinations(blk, 3):
            coverage[t] += 1
    bad = []
    for t in combinations(cs.points, 3):
        want = 0 if disqualified(t) else 1
        if coverage.get(t, 0) != want:
            bad.append((t, coverage.get(t, 0), want))
    rep.details["triple_violations"] = len(bad)
    first = _first(bad)
    rep.record("triple-coverage", not bad,
               bad and "%d triple(s) off, first %r seen %d want %d"
               % (len(bad), first[0], first[1], first[2]) or "")
    return rep


class NgddMark:
    """A sub-NGDD singled out inside one partition class."""

    __slots__ = ("blocks", "doubled", "uncovered")

    def __init__(self, blocks, doubled, uncovered):
        self.blocks = tuple(sorted((canonical_block(b) for b in blocks),
                                   key=lambda b: tuple(map(point_key, b))))
        self.doubled = tuple(_pair(*d) for d in doubled)
        self.uncovered = tuple(_pair(*u) for u in uncovered)


class PartitionClass:
    """One labeled part: role "long" (GDD with a long group), "transverse"
    (GDD on the groups themselves, optionally avoiding one), or "steiner"
    (every pair of the whole point set covered index times)."""

    __slots__ = ("blocks", "role", "index", "group", "ngdd", "subgdd")

    def __init__(self, blocks, role, index, group=None, ngdd=None, subgdd=None):
        if role not in ("long", "transverse", "steiner"):
            raise ValueError("unknown class role %r" % (role,))
        self.blocks = tuple(sorted((canonical_block(b) for b in blocks),
                                   key=lambda b: tuple(map(point_key, b))))
        self.role = role
        self.index = int(index)
        self.group = group
        self.ngdd = ngdd
        self.subgdd = None if subgdd is None else tuple(
            sorted((canonical_block(b) for b in subgdd),
                   key=lambda b: tuple(map(point_key, b))))


class PartitionedCandelabra:
    """A candelabra system (or transverse-triple host for pgdd2) together
    with its labeled partition classes."""

    __slots__ = ("base", "flavor", "g", "classes", "r", "special_group")

    def __init__(self, base: CandelabraDesign, flavor, g, classes,
                 r=None, special_group=None):
        if flavor not in PARTITION_FLAVORS:
            raise ValueError("unknown flavor %r" % (flavor,))
        self.base = base
        self.flavor = flavor
        self.g = int(g)
        self.classes = tuple(classes)
        self.r = None if r is None else int(r)
        self.special_group = special_group


def pgdd2_parameters_admissible(g: int, n: int) -> bool:
    """Group half-size g, n+1 groups: the counting conditions of a pgdd2."""
    return n >= 3 and (g * n * (n - 1)) % 3 == 0


def _transverse_triples(groups):
    out = []
    for trio in combinations(range(len(groups)), 3):
        for p in groups[trio[0]]:
            for q in groups[trio[1]]:
                for r in groups[trio[2]]:
                    out.append(canonical_block((p, q, r)))
    return out


def _class_environment(pc: PartitionedCandelabra, cls: PartitionClass):
    """Point set and GDD group list implied by a class's role."""
    base = pc.base
    if cls.role == "long":
        long_cell = set(base.stem) | set(base.groups[cls.group])
        pts = base.points
        groups = [tuple(sorted(long_cell, key=point_key))]
        groups += [(p,) for p in pts if p not in long_cell]
        return pts, groups, long_cell
    if cls.role == "steiner":
        return base.points, [(p,) for p in base.points], set()
    # transverse: GDD on the groups themselves, minus an avoided group
    avoided = set() if cls.group is None else set(base.groups[cls.group])
    pts = tuple(p for p in base.points
                if p not in avoided and p not in set(base.stem))
    groups = [g for i, g in enumerate(base.groups) if i != cls.group]
    return pts, groups, set()


def _verify_class(pc, k, cls, rep) -> None:
    pts, groups, long_cell = _class_environment(pc, cls)
    label = "class-%d" % k
    try:
        system = TripleSystem(pts, cls.blocks)
    except ValueError as exc:
        rep.record(label, False, str(exc))
        return
    rep.absorb(label, verify_gdd(GddDesign(system, groups, cls.index)))

    if cls.ngdd is not None:
        mark = cls.ngdd
        inside = set(cls.blocks)
        outlier = _first(b for b in mark.blocks if b not in inside)
        sub_ok = rep.record(label + "-ngdd-subset", outlier is None,
                            "marked block %r not in class" % (outlier,))
        paired = set()
        for pr in mark.doubled + mark.uncovered:
            paired.update(pr)
        expected = set(pts) - long_cell
        cells_ok = rep.record(label + "-ngdd-cells", paired == expected,
                              "2-groups do not partition the short points")
        if sub_ok and cells_ok:
            nd = NgddDesign(TripleSystem(pts, mark.blocks), mark.doubled,
                            mark.uncovered, tuple(long_cell))
            rep.absorb(label + "-ngdd", verify_ngdd(nd))

    if cls.subgdd is not None:
        inside = set(cls.blocks)
        outlier = _first(b for b in cls.subgdd if b not in inside)
        rep.record(label + "-subgdd-subset", outlier is None,
                   "marked block %r not in class" % (outlier,))
        sub = GddDesign(TripleSystem(pts, cls.subgdd), groups, 1)
        rep.absorb(label + "-subgdd", verify_gdd(sub))


def _count_by_group(pc, role, index):
    per = Counter()
    for cls in pc.classes:
        if cls.role == role and cls.index == index:
            per[cls.group] += 1
    return per


def _marked_classes(pc):
    return [(k, cls) for k, cls in enumerate(pc.classes) if cls.ngdd is not None]


def verify_partition(pc: PartitionedCandelabra) -> VerificationReport:
    rep = VerificationReport(pc.flavor)
    base = pc.base
    n = len(base.groups)
    sizes = {len(g) for g in base.groups}
    rep.record("uniform-groups", len(sizes) == 1, "group sizes %r" % (sorted(sizes),))
    if not rep.ok:
        return rep
    gsize = len(base.groups[0])
    rep.details["type"] = base.type_string
    rep.details["flavor"] = pc.flavor
    rep.details["classes"] = len(pc.classes)

    if pc.flavor == "pgdd2":
        ghalf = gsize // 2
        rep.record("pgdd2-parameters",
                   gsize % 2 == 0 and pgdd2_parameters_admissible(ghalf, n - 1),
                   "size %d with %d groups fails the counting conditions" % (gsize, n))
        host = Counter()
        for cls in pc.classes:
            host.update(cls.blocks)
        want = Counter(_transverse_triples(base.groups))
        if host != want:
            off = _first(t for t in (want - host) + (host - want))
            rep.record("transverse-host", False,
                       "classes do not tile the transverse triples, first %r" % (off,))
        else:
            rep.record("transverse-host", True)
    else:
        rep.absorb("candelabra", verify_candelabra(base))
        block_set = set(base.blocks)
        for k, cls in enumerate(pc.classes):
            outlier = _first(b for b in cls.blocks if b not in block_set)
            if outlier is not None:
                rep.record("classes-within-base", False,
                           "class %d block %r outside base" % (k, outlier))
                break
        else:
            rep.record("classes-within-base", True)

    seen = set()
    clash = None
    for cls in pc.classes:
        for b in cls.blocks:
            if b in seen:
                clash = b
            seen.add(b)
    rep.record("classes-disjoint", clash is None, "block %r in two classes" % (clash,))

    for k, cls in enumerate(pc.classes):
        _verify_class(pc, k, cls, rep)

    declared = sum(len(cls.blocks) for cls in pc.classes)
    rep.details["declared_blocks"] = declared
    if pc.flavor != "pgdd2":
        rep.details["unpartitioned_blocks"] = len(base.blocks) - declared

    short_pairs = (n - 1) * gsize // 2   # 2-groups outside one long cell
    checker = {
        "pcs": _check_pcs,
        "gpcs2": _check_gpcs2,
        "gpluspcs2": _check_gpluspcs2,
        "pics2": _check_pics2,
        "gpcs6": _check_gpcs6,
        "pgdd2": _check_pgdd2,
    }[pc.flavor]
    checker(pc, rep, n, gsize, short_pairs)
    return rep


def _mark_matches(pc, rep, expected_uncovered, candidates) -> None:
    marked = _marked_classes(pc)
    rep.record("ngdd-present", bool(marked), "no class carries the marked sub-design")
    if not marked:
        return
    ok = False
    for k, cls in marked:
        fits = (len(cls.ngdd.doubled) == pc.r
                and len(cls.ngdd.uncovered) == expected_uncovered
                and (candidates is None or k in candidates))
        ok = ok or fits
    rep.record("ngdd-split", ok,
               "no marked class has the declared (%r, %r) split in an allowed class"
               % (pc.r, expected_uncovered))


def _check_pcs(pc, rep, n, gsize, short_pairs):
    s = len(pc.base.stem)
    long_classes = [c for c in pc.classes if c.role == "long"]
    inner = [c for c in pc.classes if c.role == "transverse"]
    rep.record("roles", len(long_classes) + len(inner) == len(pc.classes),
               "unexpected class role present")
    rep.record("indices", all(c.index == 1 for c in pc.classes), "index must be one")
    per = Counter(c.group for c in long_classes)
    rep.record("per-group-count",
               all(per.get(i, 0) == gsize for i in range(n)),
               "want %d long classes per group, got %r" % (gsize, dict(per)))
    rep.record("inner-count", len(inner) == max(s - 2, 0),
               "want %d stem-free classes, got %d" % (max(s - 2, 0), len(inner)))
    rep.record("inner-span", all(c.group is None for c in inner),
               "stem-free classes must keep the whole group set")
    declared = sum(len(c.blocks) for c in pc.classes)
    rep.record("exact-partition", declared == len(pc.base.blocks),
               "%d blocks declared of %d" % (declared, len(pc.base.blocks)))


def _check_gpcs2(pc, rep, n, gsize, short_pairs):
    long_classes = [c for c in pc.classes if c.role == "long" and c.index == 2]
    rep.record("roles", len(long_classes) == len(pc.classes),
               "every class must be an index-two long-group class")
    rep.record("class-count", len(pc.classes) == pc.g * n,
               "want %d classes, got %d" % (pc.g * n, len(pc.classes)))
    per = Counter(c.group for c in long_classes)
    rep.record("per-group-count",
               all(per.get(i, 0) == pc.g for i in range(n)),
               "want %d per group, got %r" % (pc.g, dict(per)))
    _mark_matches(pc, rep, short_pairs - pc.r, None)


def _check_gpluspcs2(pc, rep, n, gsize, short_pairs):
    long_classes = [c for c in pc.classes if c.role == "long" and c.index == 2]
    rep.record("roles", len(long_classes) == len(pc.classes),
               "every class must be an index-two long-group class")
    rep.record("class-count", len(pc.classes) == pc.g * n + 1,
               "want %d classes, got %d" % (pc.g * n + 1, len(pc.classes)))
    special = pc.special_group
    rep.record("special-group-set", special is not None, "no distinguished group")
    per = Counter(c.group for c in long_classes)
    wanted = all(per.get(i, 0) == (pc.g + 1 if i == special else pc.g)
                 for i in range(n))
    rep.record("per-group-count", wanted,
               "want %d at group %r and %d elsewhere, got %r"
               % (pc.g + 1, special, pc.g, dict(per)))
    allowed = {k for k, c in enumerate(pc.classes) if c.group == special}
    _mark_matches(pc, rep, short_pairs - pc.r, allowed)


def _check_pics2(pc, rep, n, gsize, short_pairs):
    rep.record("shape", n == 3 and not pc.base.stem,
               "a pics2 lives on three groups with an empty stem")
    steiner = [c for c in pc.classes if c.role == "steiner"]
    trans = [c for c in pc.classes if c.role == "transverse"]
    rep.record("roles", len(steiner) + len(trans) == len(pc.classes),
               "unexpected class role present")
    rep.record("steiner-count",
               len(steiner) == gsize and all(c.index == 2 for c in steiner),
               "want %d index-two full classes" % gsize)
    rep.record("transverse-count",
               len(trans) == gsize - 2 and all(c.index == 1 for c in trans),
               "want %d index-one transverse classes" % (gsize - 2))
    rep.record("transverse-span", all(c.group is None for c in trans),
               "transverse classes must keep all three groups")
    declared = sum(len(c.blocks) for c in pc.classes)
    rep.record("exact-partition", declared == len(pc.base.blocks),
               "%d blocks declared of %d" % (declared, len(pc.base.blocks)))
    _mark_matches(pc, rep, 3 * (gsize // 2) - pc.r, None)


def _check_gpcs6(pc, rep, n, gsize, short_pairs):
    special = pc.special_group
    rep.record("special-group-set", special is not None, "no distinguished group")
    long_classes = [c for c in pc.classes if c.role == "long"]
    rep.record("roles", len(long_classes) == len(pc.classes),
               "every class must be a long-group class")
    rep.record("class-count", len(pc.classes) == pc.g * n + 2,
               "want %d classes, got %d" % (pc.g * n + 2, len(pc.classes)))
    per2 = Counter(c.group for c in long_classes if c.index == 2)
    per6 = Counter(c.group for c in long_classes if c.index == 6)
    shape = (per2.get(special, 0) == 3
             and per6.get(special, 0) == pc.g - 1
             and all(per2.get(i, 0) == 0 and per6.get(i, 0) == pc.g
                     for i in range(n) if i != special))
    rep.record("per-group-count", shape,
               "want 3 index-two plus %d index-six at group %r and %d index-six "
               "elsewhere, got index-two %r index-six %r"
               % (pc.g - 1, special, pc.g, dict(per2), dict(per6)))
    allowed = {k for k, c in enumerate(pc.classes)
               if c.group == special and c.index == 2}
    _mark_matches(pc, rep, short_pairs - pc.r, allowed)


def _check_pgdd2(pc, rep, n, gsize, short_pairs):
    ghalf = gsize // 2
    special = pc.special_group
    rep.record("special-group-set", special is not None, "no distinguished group")
    trans = [c for c in pc.classes if c.role == "transverse"]
    rep.record("roles", len(trans) == len(pc.classes),
               "every class must avoid one group")
    per1 = Counter(c.group for c in trans if c.index == 1)
    per2 = Counter(c.group for c in trans if c.index == 2)
    shape = (per1.get(special, 0) == 2 * ghalf
             and per2.get(special, 0) == 0
             and all(per2.get(i, 0) == ghalf and per1.get(i, 0) == 0
                     for i in range(n) if i != special))
    rep.record("per-group-count", shape,
               "want %d index-one classes avoiding group %r and %d index-two "
               "avoiding each other group, got index-one %r index-two %r"
               % (2 * ghalf, special, ghalf, dict(per1), dict(per2)))


def pics2_role_swap(pc: PartitionedCandelabra) -> PartitionedCandelabra:
    """The complementary reading of a pics2: inside the marked class, swap to
    the complement block set and exchange the doubled/uncovered roles."""
    if pc.flavor != "pics2":
        raise ValueError("role swap applies to pics2 only")
    classes = []
    swapped = False
    for cls in pc.classes:
        if cls.ngdd is not None and not swapped:
            rest = [b for b in cls.blocks if b not in set(cls.ngdd.blocks)]
            mark = NgddMark(rest, cls.ngdd.uncovered, cls.ngdd.doubled)
            classes.append(PartitionClass(cls.blocks, cls.role, cls.index,
                                          cls.group, mark, cls.subgdd))
            swapped = True
        else:
            classes.append(cls)
    if not swapped:
        raise ValueError("no marked class to swap")
    gsize = len(pc.base.groups[0])
    return PartitionedCandelabra(pc.base, "pics2", pc.g, classes,
                                 r=3 * (gsize // 2) - pc.r,
                                 special_group=pc.special_group)


class PilsSquare:
    """Incomplete Latin square with hole-aligned empty cells.

    Rows and columns are indexed by the sorted symbol list; entry None marks
    an empty cell.
    """

    __slots__ = ("symbols", "holes", "rows", "symmetric")

    def __init__(self, symbols, holes, rows, symmetric=False):
        self.symbols = _sorted_points(symbols)
        self.holes = tuple(_sorted_cell(h) for h in holes)
        self.rows = tuple(tuple(row) for row in rows)
        self.symmetric = bool(symmetric)

    @property
    def type_string(self) -> str:
        return group_type_string(len(h) for h in self.holes)


def verify_pils(square: PilsSquare) -> VerificationReport:
    rep = VerificationReport("pils")
    symbols = square.symbols
    size = len(symbols)
    rep.details["type"] = square.type_string

    hole_of = {}
    overlap = None
    for i, h in enumerate(square.holes):
        for p in h:
            if p in hole_of:
                overlap = p
            hole_of[p] = i
    rep.record("holes-disjoint", overlap is None, "symbol %r in two holes" % (overlap,))
    rep.record("holes-cover-symbols", set(hole_of) == set(symbols),
               "difference %r" % (_first(set(hole_of) ^ set(symbols)),))
    rep.record("shape", len(square.rows) == size
               and all(len(r) == size for r in square.rows),
               "array is not %d by %d" % (size, size))
    if not rep.ok:
        return rep

    for i, x in enumerate(symbols):
        for j, y in enumerate(symbols):
            entry = square.rows[i][j]
            if hole_of[x] == hole_of[y]:
                if entry is not None:
                    rep.record("hole-cells-empty", False,
                               "cell (%r, %r) should be empty" % (x, y))
                    return rep
            elif entry is None or entry not in set(symbols):
                rep.record("cells-filled", False,
                           "cell (%r, %r) holds %r" % (x, y, entry))
                return rep
    rep.record("hole-cells-empty", True)
    rep.record("cells-filled", True)

    for i, x in enumerate(symbols):
        want = set(symbols) - set(square.holes[hole_of[x]])
        row = [e for e in square.rows[i] if e is not None]
        col = [square.rows[k][i] for k in range(size) if square.rows[k][i] is not None]
        if Counter(row) != Counter({s: 1 for s in want}):
            rep.record("row-content", False,
                       "row %r misses or repeats symbols" % (x,))
            return rep
        if Counter(col) != Counter({s: 1 for s in want}):
            rep.record("column-content", False,
                       "column %r misses or repeats symbols" % (x,))
            return rep
    rep.record("row-content", True)
    rep.record("column-content", True)

    if square.symmetric:
        bad = _first((symbols[i], symbols[j])
                     for i in range(size) for j in range(size)
                     if square.rows[i][j] != square.rows[j][i])
        rep.record("symmetric", bad is None, "cell %r asymmetric" % (bad,))
    return rep


class FanDesign:
    """Grouped design with s block classes plus a transverse class; class i
    reconstitutes candelabra blocks through an added stem point."""

    __slots__ = ("points", "groups", "classes", "transverse")

    def __init__(self, points, groups, classes, transverse):
        self.points = _sorted_points(points)
        self.groups = tuple(_sorted_cell(g) for g in groups)
        self.classes = tuple(tuple(_sorted_cell(b) for b in cls) for cls in classes)
        self.transverse = tuple(_sorted_cell(b) for b in transverse)

    @property
    def s(self) -> int:
        return len(self.classes)

    def block_size_sets(self):
        per = [sorted({len(b) + 1 for b in cls}) for cls in self.classes]
        return per, sorted({len(b) for b in self.transverse})


def verify_fan(fan: FanDesign) -> VerificationReport:
    rep = VerificationReport("fan")
    stem = tuple(("stem", i) for i in range(1, fan.s + 1))
    clash = _first(p for p in stem if p in set(fan.points))
    rep.record("stem-labels-fresh", clash is None, "label %r already used" % (clash,))
    if not rep.ok:
        return rep

    class_sizes, transverse_sizes = fan.block_size_sets()
    rep.details["class_block_sizes"] = class_sizes
    rep.details["transverse_block_sizes"] = transverse_sizes

    blocks = [b + (stem[i],) for i, cls in enumerate(fan.classes) for b in cls]
    blocks.extend(fan.transverse)
    cs = CandelabraDesign(fan.points + stem, stem, fan.groups, blocks)
    rep.absorb("reconstituted-candelabra", verify_candelabra(cs))
    return rep


# ---------------------------------------------------------------------------
# JSON round-trip for every species


def _enc_point(p):
    return list(p) if isinstance(p, tuple) else p


def _enc_blocks(blocks):
    return [[_enc_point(q) for q in b] for b in blocks]


def _dec_blocks(rows):
    return [tuple(canonical_point(q) for q in b) for b in rows]


def _enc_class(cls: PartitionClass) -> dict:
    doc = {
        "role": cls.role,
        "index": cls.index,
        "group": cls.group,
        "blocks": _enc_blocks(cls.blocks),
    }
    if cls.ngdd is not None:
        doc["ngdd"] = {
            "blocks": _enc_blocks(cls.ngdd.blocks),
            "doubled": _enc_blocks(cls.ngdd.doubled),
            "uncovered": _enc_blocks(cls.ngdd.uncovered),
        }
    if cls.subgdd is not None:
        doc["subgdd"] = _enc_blocks(cls.subgdd)
    return doc


def _dec_class(doc: dict) -> PartitionClass:
    ngdd = None
    if "ngdd" in doc:
        ngdd = NgddMark(_dec_blocks(doc["ngdd"]["blocks"]),
                        _dec_blocks(doc["ngdd"]["doubled"]),
                        _dec_blocks(doc["ngdd"]["uncovered"]))
    subgdd = _dec_blocks(doc["subgdd"]) if "subgdd" in doc else None
    return PartitionClass(_dec_blocks(doc["blocks"]), doc["role"], doc["index"],
                          doc.get("group"), ngdd, subgdd)


def structure_to_json(obj, meta=None) -> dict:
    if isinstance(obj, GddDesign):
        doc = {
            "kind": "gdd",
            "points": [_enc_point(p) for p in obj.system.points],
            "blocks": _enc_blocks(b for b, _ in obj.system.block_counts),
            "multiplicities": [m for _, m in obj.system.block_counts],
            "groups": _enc_blocks(obj.groups),
            "index": obj.index,
        }
        if all(m == 1 for m in doc["multiplicities"]):
            del doc["multiplicities"]
    elif isinstance(obj, NgddDesign):
        doc = {
            "kind": "ngdd",
            "points": [_enc_point(p) for p in obj.system.points],
            "blocks": _enc_blocks(b for b, _ in obj.system.block_counts),
            "multiplicities": [m for _, m in obj.system.block_counts],
            "doubled": _enc_blocks(obj.doubled),
            "uncovered": _enc_blocks(obj.uncovered),
            "long_group": [_enc_point(p) for p in obj.long_group],
        }
        if all(m == 1 for m in doc["multiplicities"]):
            del doc["multiplicities"]
    elif isinstance(obj, PartitionedCandelabra):
        doc = {
            "kind": obj.flavor,
            "points": [_enc_point(p) for p in obj.base.points],
            "stem": [_enc_point(p) for p in obj.base.stem],
            "groups": _enc_blocks(obj.base.groups),
            "g": obj.g,
            "classes": [_enc_class(c) for c in obj.classes],
        }
        if obj.flavor != "pgdd2":
            doc["blocks"] = _enc_blocks(obj.base.blocks)
        if obj.r is not None:
            doc["r"] = obj.r
        if obj.special_group is not None:
            doc["special_group"] = obj.special_group
    elif isinstance(obj, CandelabraDesign):
        doc = {
            "kind": "cs",
            "points": [_enc_point(p) for p in obj.points],
            "stem": [_enc_point(p) for p in obj.stem],
            "groups": _enc_blocks(obj.groups),
            "blocks": _enc_blocks(obj.blocks),
        }
    elif isinstance(obj, PilsSquare):
        doc = {
            "kind": "pils",
            "symbols": [_enc_point(p) for p in obj.symbols],
            "holes": _enc_blocks(obj.holes),
            "rows": [[_enc_point(e) if e is not None else None for e in row]
                     for row in obj.rows],
            "symmetric": obj.symmetric,
        }
    elif isinstance(obj, FanDesign):
        doc = {
            "kind": "fan",
            "points": [_enc_point(p) for p in obj.points],
            "groups": _enc_blocks(obj.groups),
            "classes": [_enc_blocks(cls) for cls in obj.classes],
            "transverse": _enc_blocks(obj.transverse),
        }
    else:
        raise TypeError("no JSON form for %r" % (obj,))
    if meta:
        doc["meta"] = meta
    return doc


def structure_from_json(doc: dict):
    kind = doc["kind"]
    if kind == "gdd":
        system = TripleSystem([canonical_point(p) for p in doc["points"]],
                              _dec_blocks(doc["blocks"]),
                              doc.get("multiplicities"))
        return GddDesign(system, _dec_blocks(doc["groups"]), doc["index"])
    if kind == "ngdd":
        system = TripleSystem([canonical_point(p) for p in doc["points"]],
                              _dec_blocks(doc["blocks"]),
                              doc.get("multiplicities"))
        return NgddDesign(system, _dec_blocks(doc["doubled"]),
                          _dec_blocks(doc["uncovered"]),
                          [canonical_point(p) for p in doc["long_group"]])
    if kind == "cs":
        return CandelabraDesign([canonical_point(p) for p in doc["points"]],
                                [canonical_point(p) for p in doc["stem"]],
                                _dec_blocks(doc["groups"]),
                                _dec_blocks(doc["blocks"]))
    if kind in PARTITION_FLAVORS:
        classes = [_dec_class(c) for c in doc["classes"]]
        if kind == "pgdd2":
            blocks = [b for c in classes for b in c.blocks]
        else:
            blocks = _dec_blocks(doc["blocks"])
        base = CandelabraDesign([canonical_point(p) for p in doc["points"]],
                                [canonical_point(p) for p in doc["stem"]],
                                _dec_blocks(doc["groups"]), blocks)
        return PartitionedCandelabra(base, kind, doc["g"], classes,
                                     doc.get("r"), doc.get("special_group"))
    if kind == "pils":
        rows = [[canonical_point(e) if e is not None else None for e in row]
                for row in doc["rows"]]
        return PilsSquare([canonical_point(p) for p in doc["symbols"]],
                          _dec_blocks(doc["holes"]), rows, doc.get("symmetric", False))
    if kind == "fan":
        return FanDesign([canonical_point(p) for p in doc["points"]],
                         _dec_blocks(doc["groups"]),
                         [_dec_blocks(cls) for cls in doc["classes"]],
                         _dec_blocks(doc["transverse"]))
    raise ValueError("unknown design kind %r" % (kind,))
