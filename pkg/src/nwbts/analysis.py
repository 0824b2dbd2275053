"""Balance analysis for triple systems.

Covers exact frequency profiles, the block-intersection polynomial, the
(lam, eps) association of a parameter pair, defect graphs, the closed-form
square-sum minima, and certification of nearly well-balanced systems.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .core import TripleSystem, point_key

C1 = "C1"
C2 = "C2"
NEITHER = "neither"


@dataclass(frozen=True)
class Association:
    lam: int
    eps: int


def associate(v: int, b: int):
    """The unique (lam, eps) with 3b = lam*C(v,2) + eps and |eps| < v/2.

    Returns None when no integer pair fits; that can happen only for even v,
    when 3b sits exactly on a +-v/2 boundary (the window is open).
    """
    if v < 3 or b < 0:
        raise ValueError("need v >= 3 and b >= 0")
    c = comb(v, 2)
    guess = (3 * b) // c
    for lam in (guess, guess + 1, guess - 1):
        if lam < 0:
            continue
        eps = 3 * b - lam * c
        if -v < 2 * eps < v:
            return Association(lam, eps)
    return None


def classify_condition(v: int, b: int) -> str:
    """Which impossibility regime (v,b) falls in: C1, C2, or neither."""
    assoc = associate(v, b)
    if assoc is None:
        return NEITHER
    lam, eps = assoc.lam, assoc.eps
    if v % 3 == 2:
        # odd v: lam != 0 mod 3; even v: lam = 2,4 mod 6
        lam_fits = (lam % 3 != 0) if v % 2 else (lam % 6 in (2, 4))
        if lam_fits:
            if lam % 3 == 1 and eps in (-1, 2):
                return C1
            if lam % 3 == 2 and eps in (-2, 1):
                return C1
    if v % 2 == 0 and lam % 2 == 1:
        return C2
    return NEITHER


@dataclass(frozen=True)
class FrequencyProfile:
    v: int
    b: int
    points: dict
    pairs: dict
    triples: dict  # nonzero entries only; zero slots implicit

    def square_sum(self, j: int) -> int:
        src = {1: self.points, 2: self.pairs, 3: self.triples}[j]
        return sum(c * c for c in src.values())

    def slots(self, j: int) -> int:
        return comb(self.v, j)


def profile(system: TripleSystem) -> FrequencyProfile:
    triples = {blk: m for blk, m in system.block_counts}
    return FrequencyProfile(system.v, system.b,
                            dict(system.point_frequencies()),
                            dict(system.pair_frequencies()),
                            triples)


def balanced_square_minimum(total: int, slots: int) -> int:
    # minimum of sum c_i^2 over nonnegative integers with fixed sum
    q, r = divmod(total, slots)
    return (slots - r) * q * q + r * (q + 1) * (q + 1)


def is_j_balanced(prof: FrequencyProfile, j: int) -> bool:
    src = {1: prof.points, 2: prof.pairs, 3: prof.triples}[j]
    nonzero = list(src.values())
    hi = max(nonzero, default=0)
    lo = min(nonzero, default=0)
    if len(src) < prof.slots(j):
        lo = min(lo, 0) if nonzero else 0
    return hi - lo <= 1


def _poly_add(a, b):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return out


def _x_minus_1_pow(j):
    return [comb(j, i) * (-1) ** (j - i) for i in range(j + 1)]


def variance_polynomial(system: TripleSystem):
    """Coefficients (constant first) of the placement-variance polynomial.

    P(F,x) = sum_{j=1..3} sum_S lam_S^2 (x-1)^j - b x^3 + b^2, which for a
    simple system equals the sum of x^{|A ^ B|} over ordered pairs of
    distinct blocks.
    """
    prof = profile(system)
    return general_variance_polynomial(
        [prof.square_sum(j) for j in (1, 2, 3)], system.b, 3)


def general_variance_polynomial(square_sums, b: int, k: int):
    """Same formula for arbitrary block size k, from the k square sums."""
    if len(square_sums) != k:
        raise ValueError("need one square sum per level 1..k")
    coeffs = [b * b]
    for j, s in enumerate(square_sums, start=1):
        coeffs = _poly_add(coeffs, [s * c for c in _x_minus_1_pow(j)])
    coeffs = _poly_add(coeffs, [0] * k + [-b])
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def evaluate_polynomial(coeffs, x: int) -> int:
    total = 0
    for c in reversed(coeffs):
        total = total * x + c
    return total


def block_pair_polynomial_value(system: TripleSystem, x: int) -> int:
    """Reference value: sum over ordered pairs of block copies of
    x^{|A ^ B|}, minus b*x^3.  Equals P(F,x) for every multiset."""
    items = [(frozenset(blk), m) for blk, m in system.block_counts]
    total = 0
    for fa, ma in items:
        for fb, mb in items:
            total += ma * mb * x ** len(fa & fb)
    return total - system.b * x ** 3


@dataclass(frozen=True)
class DefectGraph:
    lam: int
    eps: int
    levels: dict  # nonzero deviation -> tuple of pairs
    beta: int

    def edges(self, level: int):
        return self.levels.get(level, ())

    @property
    def size(self) -> int:
        return sum(len(e) for e in self.levels.values())


def defect_graph(system: TripleSystem, prof: FrequencyProfile = None) -> DefectGraph:
    assoc = associate(system.v, system.b)
    if assoc is None:
        raise ValueError("no (lam, eps) association for (v=%d, b=%d)"
                         % (system.v, system.b))
    if prof is None:
        prof = profile(system)
    levels = {}
    for pair, c in prof.pairs.items():
        if c != assoc.lam:
            levels.setdefault(c - assoc.lam, []).append(pair)
    levels = {i: tuple(sorted(e, key=lambda pr: tuple(map(point_key, pr))))
              for i, e in levels.items()}
    beta = max((abs(i) for i in levels), default=0)
    assert sum(i * len(e) for i, e in levels.items()) == assoc.eps
    return DefectGraph(assoc.lam, assoc.eps, levels, beta)


def min_pair_square_sum(v: int, b: int) -> int:
    """Closed-form minimum of the pair square sum over all TS(v;b)."""
    cond = classify_condition(v, b)
    assoc = associate(v, b)
    if cond == C1:
        lam, eps = assoc.lam, assoc.eps
        return comb(v, 2) * lam ** 2 + 2 * eps * lam + 2 + abs(eps)
    if cond == C2:
        lam, eps = assoc.lam, assoc.eps
        extra = v // 2 if (eps - v // 2) % 2 == 0 else v // 2 + 1
        return comb(v, 2) * lam ** 2 + 2 * eps * lam + extra
    raise ValueError("(v=%d, b=%d) satisfies neither condition" % (v, b))


@dataclass(frozen=True)
class ShapeVerdict:
    accepted: bool
    condition: str
    shape: str = ""
    reasons: tuple = ()
    d1: int = 0
    dm1: int = 0


def _degree_map(edge_lists):
    deg = {}
    for edges in edge_lists:
        for x, y in edges:
            deg[x] = deg.get(x, 0) + 1
            deg[y] = deg.get(y, 0) + 1
    return deg


def _is_single_cycle(edges):
    if not edges:
        return False
    deg = _degree_map([edges])
    if any(d != 2 for d in deg.values()) or len(deg) != len(edges):
        return False
    # connectivity walk
    adj = {}
    for x, y in edges:
        adj.setdefault(x, []).append(y)
        adj.setdefault(y, []).append(x)
    start = next(iter(adj))
    seen = {start}
    stack = [start]
    while stack:
        for nb in adj[stack.pop()]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(deg)


def check_nearly_2_balanced(system: TripleSystem,
                            prof: FrequencyProfile = None) -> ShapeVerdict:
    """Does the defect graph match the minimal shape for its condition?

    C1 accepts the cycle shapes G_eps (triangle for |eps|=1, 4-cycle for
    |eps|=2).  C2 accepts the perfect matching H0 when eps and v/2 agree in
    parity, else the one-degree-3-vertex shape, rejecting the two variants
    that break 1-balance.  A lone pair at deviation +-2 ties the square-sum
    minimum but is rejected: it is not one of the accepted shapes.
    """
    cond = classify_condition(system.v, system.b)
    if cond == NEITHER:
        return ShapeVerdict(False, cond, reasons=("condition is neither C1 nor C2",))
    if prof is None:
        prof = profile(system)
    dg = defect_graph(system, prof)
    if dg.beta != 1:
        return ShapeVerdict(False, cond,
                            reasons=("defect %d, need exactly 1" % dg.beta,),
                            d1=len(dg.edges(1)), dm1=len(dg.edges(-1)))
    d1, dm1 = list(dg.edges(1)), list(dg.edges(-1))
    a1, am1 = len(d1), len(dm1)
    eps = dg.eps
    v = system.v
    if cond == C1:
        want = (1 + eps, 1) if eps > 0 else (1, 1 - eps)
        reasons = []
        if (a1, am1) != want:
            reasons.append("level sizes (%d,%d), expected %s" % (a1, am1, want))
        deg1 = _degree_map([d1])
        degm1 = _degree_map([dm1])
        for x in set(deg1) | set(degm1):
            if (deg1.get(x, 0) - degm1.get(x, 0)) % 2:
                reasons.append("vertex %r has mismatched level parities" % (x,))
                break
        if not _is_single_cycle(d1 + dm1):
            reasons.append("defect graph is not a single cycle")
        if reasons:
            return ShapeVerdict(False, cond, reasons=tuple(reasons), d1=a1, dm1=am1)
        shape = "G%+d" % eps
        return ShapeVerdict(True, cond, shape, d1=a1, dm1=am1)
    # C2
    half = v // 2
    deg = _degree_map([d1, dm1])
    reasons = []
    if (eps - half) % 2 == 0:
        want = ((v + 2 * eps) // 4, (v - 2 * eps) // 4)
        if (a1, am1) != want:
            reasons.append("level sizes (%d,%d), expected %s" % (a1, am1, want))
        if a1 + am1 != half or len(deg) != v or any(d != 1 for d in deg.values()):
            reasons.append("defect graph is not a perfect matching")
        if reasons:
            return ShapeVerdict(False, cond, reasons=tuple(reasons), d1=a1, dm1=am1)
        return ShapeVerdict(True, cond, "H0", d1=a1, dm1=am1)
    want = ((v + 2 + 2 * eps) // 4, (v + 2 - 2 * eps) // 4)
    if (a1, am1) != want:
        reasons.append("level sizes (%d,%d), expected %s" % (a1, am1, want))
    if a1 + am1 != half + 1:
        reasons.append("defect size %d, expected %d" % (a1 + am1, half + 1))
    degrees = sorted(deg.values(), reverse=True)
    if len(deg) != v or degrees[:1] != [3] or any(d != 1 for d in degrees[1:]):
        reasons.append("degrees must be one 3 and the rest 1 on all points")
    if not is_j_balanced(prof, 1):
        reasons.append("not 1-balanced (excluded odd-parity variant)")
    if reasons:
        return ShapeVerdict(False, cond, reasons=tuple(reasons), d1=a1, dm1=am1)
    return ShapeVerdict(True, cond, "H1-H2", d1=a1, dm1=am1)


@dataclass
class BalanceReport:
    v: int
    b: int
    condition: str
    association: Association = None
    j_balanced: dict = field(default_factory=dict)
    square_sums: dict = field(default_factory=dict)
    square_minima: dict = field(default_factory=dict)
    achieves_square_minima: bool = False
    nearly_2_balanced: bool = False
    shape: str = ""
    simple: bool = False
    well_balanced: bool = False
    is_nwbts: bool = False
    reasons: tuple = ()
    defect_levels: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        doc = {
            "v": self.v,
            "b": self.b,
            "condition": self.condition,
            "association": None if self.association is None else
                {"lambda": self.association.lam, "epsilon": self.association.eps},
            "j_balanced": {str(j): bool(f) for j, f in self.j_balanced.items()},
            "square_sums": {str(j): s for j, s in self.square_sums.items()},
            "square_minima": {str(j): s for j, s in self.square_minima.items()},
            "achieves_square_minima": self.achieves_square_minima,
            "nearly_2_balanced": self.nearly_2_balanced,
            "shape": self.shape,
            "simple": self.simple,
            "well_balanced": self.well_balanced,
            "is_nwbts": self.is_nwbts,
            "reasons": list(self.reasons),
            "defect_levels": {str(i): [list(map(_plain, e)) for e in edges]
                              for i, edges in self.defect_levels.items()},
        }
        return doc


def _plain(label):
    return list(label) if isinstance(label, tuple) else label


def certify_nwbts(system: TripleSystem) -> BalanceReport:
    """Full certification: balance flags, square-sum minima, shape verdict.

    is_nwbts follows the strict definition: the defect graph must be one of
    the accepted minimal shapes and the system must be 3-balanced (the shape
    forces 1-balance, which is still verified).  achieves_square_minima is
    the wider optimality statement: all three square sums sit at their
    closed-form minima.
    """
    prof = profile(system)
    v, b = system.v, system.b
    cond = classify_condition(v, b)
    assoc = associate(v, b)
    jb = {j: is_j_balanced(prof, j) for j in (1, 2, 3)}
    sums = {j: prof.square_sum(j) for j in (1, 2, 3)}
    minima = {1: balanced_square_minimum(3 * b, v),
              3: balanced_square_minimum(b, comb(v, 3))}
    if cond in (C1, C2):
        minima[2] = min_pair_square_sum(v, b)
    else:
        minima[2] = balanced_square_minimum(3 * b, comb(v, 2))
    verdict = check_nearly_2_balanced(system, prof) if cond in (C1, C2) else \
        ShapeVerdict(False, cond, reasons=("condition is neither C1 nor C2",))
    reasons = list(verdict.reasons)
    is_nwbts = verdict.accepted and jb[3]
    if verdict.accepted and not jb[1]:
        # cannot happen for accepted shapes; guard the implication anyway
        reasons.append("accepted shape but not 1-balanced")
        is_nwbts = False
    if verdict.accepted and not jb[3]:
        reasons.append("not 3-balanced")
    levels = {}
    if assoc is not None:
        levels = dict(defect_graph(system, prof).levels)
    return BalanceReport(
        v=v, b=b, condition=cond, association=assoc,
        j_balanced=jb, square_sums=sums, square_minima=minima,
        achieves_square_minima=all(sums[j] == minima[j] for j in (1, 2, 3)),
        nearly_2_balanced=verdict.accepted, shape=verdict.shape,
        simple=system.is_simple(),
        well_balanced=jb[1] and jb[2] and jb[3],
        is_nwbts=is_nwbts, reasons=tuple(reasons), defect_levels=levels)
