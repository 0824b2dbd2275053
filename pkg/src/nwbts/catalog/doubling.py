"""Doubling: NWBTS(2w; b) over Z_w x {0,1} from difference-triple tables.

Each table row holds ordered triples (a, b, c) with a + b + c = 0 (mod w).
A row develops into two cyclic Steiner triple systems on Z_w,

    keyed to the first difference:   {i, a+i, a+b+i}
    keyed to the second difference:  {i, b+i, a+b+i}

and lifting a triple to the doubled point set picks the four subscript
patterns of a fixed parity.  Rows combine into full index-six layers plus
one short layer that lands the block count on the requested target.
"""

from __future__ import annotations

from ..analysis import certify_nwbts, classify_condition
from ..core import TripleSystem, canonical_block
from .data_double import DIFF_TRIPLES, DOUBLE_SEEDS


class DoublingError(ValueError):
    """Raised when a doubled system cannot be assembled as requested."""


# subscript patterns (l, j, k) with l + j + k of the given parity
_PARITY = (
    ((0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)),
    ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)),
)


def develop_a(w, triples):
    """Cyclic development keyed to the first difference of each triple."""
    out = []
    for a, b, _ in triples:
        for i in range(w):
            out.append(canonical_block((i, (a + i) % w, (a + b + i) % w)))
    return out


def develop_b(w, triples):
    """Cyclic development keyed to the second difference of each triple."""
    out = []
    for a, b, _ in triples:
        for i in range(w):
            out.append(canonical_block((i, (b + i) % w, (a + b + i) % w)))
    return out


def lift_blocks(blocks, parity):
    """All subscripted copies of the given parity, four per block."""
    pats = _PARITY[parity]
    out = []
    for x, y, z in blocks:
        for l, j, k in pats:
            out.append(canonical_block(((x, l), (y, j), (z, k))))
    return out


class DifferenceTable:
    """One validated table: rows of difference triples plus the seeds
    (a short parallel class and a distinguished developed triple) that
    steer the short layer."""

    __slots__ = ("w", "classes", "alpha_count", "beta_count",
                 "parallel_class", "special_triple")

    def __init__(self, w):
        if w not in DIFF_TRIPLES:
            raise DoublingError("no difference table for modulus %d" % w)
        self.w = w
        self.classes = {key: tuple(tuple(t) for t in rows)
                        for key, rows in DIFF_TRIPLES[w].items()}
        self.alpha_count = 1 + max(a for a, _ in self.classes)
        self.beta_count = 1 + max(b for _, b in self.classes)
        seeds = DOUBLE_SEEDS[w]
        self.parallel_class = tuple(tuple(t) for t in seeds["C"])
        self.special_triple = tuple(seeds["E"])
        self._validate()

    def bridge_seed(self, alpha):
        """The triple whose differences feed the cross blocks of a layer."""
        return self.classes[(alpha, 0)][0]

    def _validate(self):
        w = self.w
        half = sorted(range(1, (w + 1) // 2))
        for alpha in range(self.alpha_count):
            for beta in range(self.beta_count):
                rows = self.classes.get((alpha, beta))
                if rows is None:
                    raise DoublingError("missing class (%d, %d)" % (alpha, beta))
                residues = []
                for t in rows:
                    if sum(t) % w:
                        raise DoublingError("triple %r does not sum to 0 mod %d"
                                            % (t, w))
                    for x in t:
                        r = x % w
                        if r == 0:
                            raise DoublingError("zero difference in %r" % (t,))
                        residues.append(min(r, w - r))
                if sorted(residues) != half:
                    raise DoublingError(
                        "class (%d, %d) does not cover every residue once up "
                        "to sign" % (alpha, beta))
        head = set(develop_a(w, self.classes[(0, 0)]))
        touched = set()
        for t in self.parallel_class:
            blk = canonical_block(t)
            if blk not in head:
                raise DoublingError("parallel-class triple %r is not a "
                                    "developed block" % (t,))
            if touched & set(blk):
                raise DoublingError("parallel class reuses point in %r" % (t,))
            touched |= set(blk)
        if canonical_block(self.special_triple) not in head:
            raise DoublingError("special triple %r is not a developed block"
                                % (self.special_triple,))


_TABLES = {}


def difference_table(w) -> DifferenceTable:
    if w not in _TABLES:
        _TABLES[w] = DifferenceTable(w)
    return _TABLES[w]


def bridge_blocks(w, seed, negate=False):
    """Blocks joining the two copies of each point to a shifted point.

    The shifts are the three differences of the seed triple, negated for
    the partner layer so the two layers stay disjoint.
    """
    a, b, c = seed
    offsets = [(-a) % w, (-b) % w, (a + b) % w] if negate else \
        [a % w, b % w, (-(a + b)) % w]
    out = []
    for i in range(w):
        for x in offsets:
            for j in (0, 1):
                out.append(canonical_block(
                    ((i, 0), (i, 1), (((i + x) % w), j))))
    return out


def steiner6_layer(table, alpha, parity):
    """One index-six layer on 2w points: bridge blocks plus alternating
    lifted developments of the row's classes.  Parity 0 and 1 give the
    two block-disjoint partners."""
    w = table.w
    head = table.classes[(alpha, 0)]
    out = bridge_blocks(w, table.bridge_seed(alpha), negate=bool(parity))
    out += lift_blocks(develop_a(w, head[1:]), parity)
    out += lift_blocks(develop_b(w, head), 1 - parity)
    for beta in range(1, table.beta_count):
        cls = table.classes[(alpha, beta)]
        out += lift_blocks(develop_a(w, cls), parity)
        out += lift_blocks(develop_b(w, cls), 1 - parity)
    return out


def _gadget_blocks(triples):
    # per ordered (x, y, z): both copies of a point meet one copy of the next
    out = []
    for x, y, z in triples:
        for lead, tail in ((x, y), (y, z), (z, x)):
            for j in (0, 1):
                out.append(canonical_block(((lead, 0), (lead, 1), (tail, j))))
    return out


def _third_point(blocks, x, y):
    for blk in blocks:
        if x in blk and y in blk:
            return next(p for p in blk if p not in (x, y))
    raise DoublingError("no developed block through %r and %r" % (x, y))


def _short_layer_two(table, spare_count):
    """Short layer for overall index 2 mod 6 (two spare blocks at most)."""
    w = table.w
    head = table.classes[(0, 0)]
    par = {canonical_block(t) for t in table.parallel_class}
    dev = develop_a(w, head)
    out = lift_blocks([blk for blk in dev if blk not in par], 0)
    out += _gadget_blocks(table.parallel_class)
    o, p, _ = table.special_triple
    out.append(canonical_block(((o, 0), (o, 1), (p, 0))))
    partner = develop_b(w, head)
    f = _third_point(partner, o, p)
    spare = [canonical_block(((o, 0), (p, 0), (f, 1))),
             canonical_block(((o, 1), (p, 0), (f, 0)))]
    drop = set(spare)
    out += [blk for blk in lift_blocks(partner, 1) if blk not in drop]
    out += spare[:spare_count]
    return out


def _short_layer_four(table, spare_count):
    """Short layer for overall index 4 mod 6."""
    w = table.w
    head = table.classes[(0, 0)]
    nxt = table.classes[(0, 1)]
    o, p, q = table.special_triple
    par = table.parallel_class
    shifted = tuple(tuple((x + p) % w for x in t) for t in par)
    excluded = {canonical_block(t) for t in par + shifted}
    if len(excluded) != 2 * len(par):
        raise DoublingError("parallel class collides with its translate")
    dev = develop_a(w, head)
    drop = {canonical_block(((o, 0), (p, 0), (q, 0))),
            canonical_block(((o, 1), (p, 1), (q, 0)))}
    kept = lift_blocks([blk for blk in dev if blk not in excluded], 0)
    out = [blk for blk in kept if blk not in drop]
    if len(out) != len(kept) - 2:
        raise DoublingError("special triple missing from the lifted blocks")
    out += lift_blocks(develop_b(w, head), 1)
    out += lift_blocks(develop_a(w, nxt), 0)
    out += lift_blocks(develop_b(w, nxt), 1)
    out += _gadget_blocks(par + shifted)
    out.append(canonical_block(((o, 0), (o, 1), (q, 0))))
    out.append(canonical_block(((p, 0), (p, 1), (q, 0))))
    g = _third_point(develop_a(w, table.classes[(0, 2)]), o, p)
    spare = [canonical_block(((o, 0), (o, 1), (p, 0))),
             canonical_block(((o, 1), (p, 1), (g, 0)))]
    out += spare[:spare_count]
    return out


def _short_targets(w):
    """Reachable block counts below one full layer: b -> (index, eps)."""
    full = 2 * w * (2 * w - 1)
    out = {}
    for eps in (-2, 1):
        out[(full + eps) // 3] = (2, eps)
    for eps in (-1, 2):
        out[(2 * full + eps) // 3] = (4, eps)
    return out


def doubled_decomposition(w, b):
    """Split b as (full layers, short target); None when unreachable."""
    full = 2 * w * (2 * w - 1)
    table = difference_table(w)
    for short, (lam_p, eps) in _short_targets(w).items():
        if b >= short and (b - short) % full == 0:
            m = (b - short) // full
            if m // 2 < table.alpha_count:
                return m, short, lam_p, eps
    return None


def build_doubled_nwbts(w, b) -> TripleSystem:
    """Assemble and certify an NWBTS(2w; b) from the stored tables.

    Requires condition C1 at (2w, b) and b at most 2w(2w-1)(2w-2)/12; the
    result is always re-certified before it is returned.
    """
    table = difference_table(w)
    v = 2 * w
    if classify_condition(v, b) != "C1":
        raise DoublingError("(%d, %d) does not satisfy the odd-index "
                            "doubling condition" % (v, b))
    cap = v * (v - 1) * (v - 2) // 12
    if b > cap:
        raise DoublingError("b=%d exceeds the simple-system cap %d" % (b, cap))
    dec = doubled_decomposition(w, b)
    if dec is None:
        raise DoublingError("no layer split reaches b=%d at w=%d" % (b, w))
    m, _, lam_p, eps = dec
    q, extra = divmod(m, 2)
    blocks = []
    for alpha in range(1, q + 1):
        blocks += steiner6_layer(table, alpha, 0)
        blocks += steiner6_layer(table, alpha, 1)
    if extra:
        blocks += steiner6_layer(table, 0, 1)
    if lam_p == 2:
        blocks += _short_layer_two(table, 1 if eps == -2 else 2)
    else:
        blocks += _short_layer_four(table, 1 if eps == -1 else 2)
    points = [(x, i) for x in range(w) for i in (0, 1)]
    system = TripleSystem(points, blocks)
    if system.b != b:
        raise DoublingError("assembled %d blocks, wanted %d" % (system.b, b))
    rep = certify_nwbts(system)
    if not rep.is_nwbts:
        raise DoublingError("doubled system fails certification: %s"
                            % "; ".join(rep.reasons))
    got = (rep.association.lam, rep.association.eps)
    want = (6 * m + lam_p, eps)
    if got != want:
        raise DoublingError("association %r, expected %r" % (got, want))
    return system
