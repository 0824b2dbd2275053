"""Triple systems with exact integer bookkeeping.

Points are hashable labels: ints, strings, or (nested) tuples of those.
Blocks are unordered triples of distinct points.  A system may contain a
block with multiplicity above one, so block storage is a sorted tuple of
(block, multiplicity) pairs.  All arithmetic is exact; no floats anywhere.
"""

from __future__ import annotations

import json
from collections import Counter
from itertools import combinations

MAX_GROUP_ORDER = 10 ** 6


def point_key(p):
    # total order across the mixed label types we allow
    if isinstance(p, bool):
        raise TypeError("bool is not a point label")
    if isinstance(p, int):
        return (0, p, "")
    if isinstance(p, str):
        return (1, 0, p)
    if isinstance(p, tuple):
        return (2, 0, "") + tuple(point_key(q) for q in p)
    raise TypeError("unsupported point label: %r" % (p,))


def canonical_point(p):
    # JSON round-trip turns tuples into lists; undo that
    if isinstance(p, list):
        return tuple(canonical_point(q) for q in p)
    return p


def canonical_block(block) -> tuple:
    t = tuple(sorted(block, key=point_key))
    if len(t) != 3 or len(set(t)) != 3:
        raise ValueError("block must have three distinct points: %r" % (block,))
    return t


class TripleSystem:
    """An (optionally multi-) set of triples over a fixed point set."""

    __slots__ = ("points", "block_counts", "_point_set")

    def __init__(self, points, blocks, multiplicities=None):
        pts = tuple(sorted(set(points), key=point_key))
        if len(pts) < 3:
            raise ValueError("need at least three points")
        self.points = pts
        self._point_set = frozenset(pts)
        counts: Counter = Counter()
        if multiplicities is None:
            for blk in blocks:
                counts[canonical_block(blk)] += 1
        else:
            blocks = list(blocks)
            if len(blocks) != len(multiplicities):
                raise ValueError("multiplicities must parallel blocks")
            for blk, m in zip(blocks, multiplicities):
                if m < 0:
                    raise ValueError("negative multiplicity")
                if m:
                    counts[canonical_block(blk)] += m
        for blk in counts:
            if not self._point_set.issuperset(blk):
                raise ValueError("block %r uses unknown points" % (blk,))
        self.block_counts = tuple(sorted(counts.items(), key=lambda bm: tuple(map(point_key, bm[0]))))

    @property
    def v(self) -> int:
        return len(self.points)

    @property
    def b(self) -> int:
        return sum(m for _, m in self.block_counts)

    @property
    def distinct_block_count(self) -> int:
        return len(self.block_counts)

    def is_simple(self) -> bool:
        return all(m == 1 for _, m in self.block_counts)

    def blocks(self):
        """Every block, repeated per multiplicity."""
        for blk, m in self.block_counts:
            for _ in range(m):
                yield blk

    def distinct_blocks(self):
        for blk, _ in self.block_counts:
            yield blk

    def multiplicity(self, block) -> int:
        blk = canonical_block(block)
        for candidate, m in self.block_counts:
            if candidate == blk:
                return m
        return 0

    def block_multiset(self) -> Counter:
        return Counter(dict(self.block_counts))

    def point_frequencies(self) -> Counter:
        freq = Counter({p: 0 for p in self.points})
        for blk, m in self.block_counts:
            for p in blk:
                freq[p] += m
        return freq

    def pair_frequencies(self) -> Counter:
        freq = Counter({pair: 0 for pair in combinations(self.points, 2)})
        for blk, m in self.block_counts:
            for pair in combinations(blk, 2):
                freq[pair] += m
        return freq

    def restrict(self, subset) -> "TripleSystem":
        """Blocks lying entirely inside the given point subset."""
        sub = frozenset(subset)
        kept = [(blk, m) for blk, m in self.block_counts if sub.issuperset(blk)]
        return TripleSystem(sub, [b for b, _ in kept], [m for _, m in kept])

    def __eq__(self, other):
        return (isinstance(other, TripleSystem)
                and self.points == other.points
                and self.block_counts == other.block_counts)

    def __hash__(self):
        return hash((self.points, self.block_counts))

    def __repr__(self):
        return "TripleSystem(v=%d, b=%d)" % (self.v, self.b)


def union_systems(*systems: TripleSystem) -> TripleSystem:
    """Multiset union over the common point set."""
    if not systems:
        raise ValueError("need at least one system")
    pts = set()
    for s in systems:
        pts.update(s.points)
    counts: Counter = Counter()
    for s in systems:
        counts.update(s.block_multiset())
    blocks = list(counts)
    return TripleSystem(pts, blocks, [counts[b] for b in blocks])


def complement_system(system: TripleSystem) -> TripleSystem:
    """All triples not present; the input must be simple."""
    if not system.is_simple():
        raise ValueError("complement needs a simple system")
    present = {blk for blk, _ in system.block_counts}
    blocks = [t for t in combinations(system.points, 3) if t not in present]
    return TripleSystem(system.points, blocks)


def disjoint_block_sets(*systems: TripleSystem) -> bool:
    seen = set()
    for s in systems:
        for blk in s.distinct_blocks():
            if blk in seen:
                return False
            seen.add(blk)
    return True


class PermutationGroup:
    """Finite permutation group closed eagerly from generators.

    Elements are stored as tuples of point indices.  Closure is capped so a
    typo in a generator cannot eat all memory.
    """

    def __init__(self, points, generators):
        self.points = tuple(sorted(set(points), key=point_key))
        self._index = {p: i for i, p in enumerate(self.points)}
        n = len(self.points)
        gens = []
        for g in generators:
            img = tuple(self._index[g.get(p, p)] for p in self.points)
            if sorted(img) != list(range(n)):
                raise ValueError("generator is not a permutation of the point set")
            gens.append(img)
        identity = tuple(range(n))
        elements = {identity}
        frontier = [identity]
        while frontier:
            nxt = []
            for e in frontier:
                for g in gens:
                    prod = tuple(g[i] for i in e)
                    if prod not in elements:
                        elements.add(prod)
                        nxt.append(prod)
                        if len(elements) > MAX_GROUP_ORDER:
                            raise ValueError("group closure exceeds cap")
            frontier = nxt
        self.elements = sorted(elements)

    @classmethod
    def cyclic(cls, n: int, fixed=(), offset: int = 1):
        """Z_n acting on 0..n-1 by +offset, fixing the extra labels."""
        pts = list(range(n)) + list(fixed)
        gen = {i: (i + offset) % n for i in range(n)}
        return cls(pts, [gen])

    @property
    def order(self) -> int:
        return len(self.elements)

    def apply(self, element, p):
        return self.points[element[self._index[p]]]

    def apply_block(self, element, block) -> tuple:
        return canonical_block(self.apply(element, p) for p in block)

    def orbit(self, block):
        """Distinct images of a block, in deterministic order."""
        seen = set()
        out = []
        for e in self.elements:
            img = self.apply_block(e, block)
            if img not in seen:
                seen.add(img)
                out.append(img)
        return out


class DevelopmentRule:
    """How base blocks expand: the full orbit, or listed group elements.

    Full orbit mode emits each base block's orbit once (short orbits are not
    repeated).  Translate mode applies exactly the listed elements, one image
    per element per base block.
    """

    def __init__(self, group: PermutationGroup, translates=None):
        self.group = group
        if translates is None:
            self.translates = None
        else:
            self.translates = [self._as_element(t) for t in translates]

    def _as_element(self, t):
        if isinstance(t, tuple) and len(t) == len(self.group.points):
            return t
        if isinstance(t, dict):
            idx = self.group._index
            return tuple(idx[t.get(p, p)] for p in self.group.points)
        raise TypeError("translate must be an element tuple or a point mapping")

    def expand(self, base_blocks):
        out = []
        if self.translates is None:
            for blk in base_blocks:
                out.extend(self.group.orbit(canonical_block(blk)))
        else:
            for blk in base_blocks:
                cb = canonical_block(blk)
                for e in self.translates:
                    out.append(self.group.apply_block(e, cb))
        return out


def develop(base_blocks, rule: DevelopmentRule, points=None) -> TripleSystem:
    blocks = rule.expand(base_blocks)
    pts = rule.group.points if points is None else points
    return TripleSystem(pts, blocks)


def system_to_json(system: TripleSystem, kind: str = "ts", meta=None, **extra) -> dict:
    doc = {
        "kind": kind,
        "points": [list(p) if isinstance(p, tuple) else p for p in system.points],
        "blocks": [],
        "multiplicities": [],
    }
    for blk, m in system.block_counts:
        doc["blocks"].append([list(p) if isinstance(p, tuple) else p for p in blk])
        doc["multiplicities"].append(m)
    if all(m == 1 for m in doc["multiplicities"]):
        del doc["multiplicities"]
    if meta:
        doc["meta"] = meta
    doc.update(extra)
    return doc


def system_from_json(doc: dict) -> TripleSystem:
    points = [canonical_point(p) for p in doc["points"]]
    blocks = [[canonical_point(q) for q in blk] for blk in doc["blocks"]]
    mults = doc.get("multiplicities")
    return TripleSystem(points, blocks, mults)


def save_design(doc: dict, path) -> None:
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=1, sort_keys=True, default=_json_default)
        fh.write("\n")


def _json_default(obj):
    if isinstance(obj, tuple):
        return list(obj)
    raise TypeError("not JSON serializable: %r" % (obj,))


def load_design(path) -> dict:
    with open(path) as fh:
        return json.load(fh)
