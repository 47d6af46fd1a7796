"""Subsemimodules of a free semimodule and the lattices they form.

A :class:`Subsemimodule` is a bitset over ``M.elements``.  The canonical
order on subsemimodules is by cardinality, then by the sorted tuple of member
indices; every list returned here follows it.
"""

from __future__ import annotations

from functools import reduce
from itertools import combinations

from .errors import AmbientMismatch, EnumerationCapExceeded
from .semimodule import FreeSemimodule, closure_mask, iter_bits

DEFAULT_ENUMERATION_CAP = 100_000
DEFAULT_FAMILY_SIZE = 3


class Subsemimodule:
    __slots__ = ("ambient", "mask", "_indices")

    def __init__(self, ambient: FreeSemimodule, mask: int):
        self.ambient = ambient
        self.mask = mask
        self._indices = None

    @property
    def indices(self) -> tuple:
        if self._indices is None:
            self._indices = tuple(iter_bits(self.mask))
        return self._indices

    @property
    def members(self) -> list:
        return [self.ambient.elements[i] for i in self.indices]

    @property
    def sort_key(self):
        return (len(self.indices), self.indices)

    def __len__(self):
        return len(self.indices)

    def __contains__(self, vector):
        return bool(self.mask >> self.ambient.index(vector) & 1)

    def __eq__(self, other):
        if not isinstance(other, Subsemimodule):
            return NotImplemented
        return self.ambient is other.ambient and self.mask == other.mask

    def __hash__(self):
        return hash(self.mask)

    def __le__(self, other):
        _same(self, other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other):
        return self <= other and self.mask != other.mask

    def __ge__(self, other):
        return other <= self

    def __gt__(self, other):
        return other < self

    def __add__(self, other):
        return sum_sub(self, other)

    def __and__(self, other):
        return intersect(self, other)

    def perp(self):
        return perp(self.ambient, self)

    def is_closed(self):
        return is_closed(self)

    def __repr__(self):
        return f"Subsemimodule({self.members})"


def _same(U, W):
    if U.ambient is not W.ambient:
        raise AmbientMismatch("subsemimodules live in different semimodules")


def zero_sub(M: FreeSemimodule) -> Subsemimodule:
    return Subsemimodule(M, 1)


def full_sub(M: FreeSemimodule) -> Subsemimodule:
    return Subsemimodule(M, M.full_mask)


def from_vectors(M: FreeSemimodule, vectors) -> Subsemimodule:
    """Wrap a vector set that is already a subsemimodule (checked)."""
    mask = M.mask_of(vectors)
    if closure_mask(M, mask) != mask:
        raise ValueError("vector set is not closed under + and scaling")
    return Subsemimodule(M, mask)


def is_subsemimodule_mask(M: FreeSemimodule, mask: int) -> bool:
    """Direct definitional test: contains 0, closed under + and scaling."""
    if not mask & 1:
        return False
    idx = list(iter_bits(mask))
    add_t, scale_t = M.add_table, M.scale_table
    for i in idx:
        for row in scale_t:
            if not mask >> row[i] & 1:
                return False
        for j in idx:
            if not mask >> add_t[i][j] & 1:
                return False
    return True


def sum_mask(M: FreeSemimodule, a: int, b: int) -> int:
    """Bitset of {x + y | x in a, y in b}."""
    add_t = M.add_table
    out = 0
    bs = list(iter_bits(b))
    for i in iter_bits(a):
        row = add_t[i]
        for j in bs:
            out |= 1 << row[j]
    return out


def sum_sub(U: Subsemimodule, W: Subsemimodule) -> Subsemimodule:
    _same(U, W)
    return Subsemimodule(U.ambient, sum_mask(U.ambient, U.mask, W.mask))


def intersect(U: Subsemimodule, W: Subsemimodule) -> Subsemimodule:
    _same(U, W)
    return Subsemimodule(U.ambient, U.mask & W.mask)


def sum_family(M: FreeSemimodule, family) -> Subsemimodule:
    return reduce(sum_sub, family, zero_sub(M))


def intersect_family(M: FreeSemimodule, family) -> Subsemimodule:
    return reduce(intersect, family, full_sub(M))


def perp_mask(M: FreeSemimodule, mask: int) -> int:
    orth = M.orth_masks
    out = M.full_mask
    for j in iter_bits(mask):
        out &= orth[j]
        if out == 1:
            break
    return out


def perp(M: FreeSemimodule, C) -> Subsemimodule:
    """Orthogonal complement of any subset C of M (vectors or a Subsemimodule)."""
    if isinstance(C, Subsemimodule):
        _check_ambient(M, C)
        mask = C.mask
    else:
        mask = M.mask_of(C)
    return Subsemimodule(M, perp_mask(M, mask))


def _check_ambient(M, U):
    if U.ambient is not M:
        raise AmbientMismatch("subsemimodule belongs to another semimodule")


def is_closed(U: Subsemimodule) -> bool:
    M = U.ambient
    return perp_mask(M, perp_mask(M, U.mask)) == U.mask


def join_closed(U: Subsemimodule, W: Subsemimodule) -> Subsemimodule:
    """U v W = (U + W)^perp-perp."""
    _same(U, W)
    M = U.ambient
    return Subsemimodule(M, perp_mask(M, perp_mask(M, sum_mask(M, U.mask, W.mask))))


def _canonical(M, masks):
    subs = [Subsemimodule(M, m) for m in masks]
    subs.sort(key=lambda U: U.sort_key)
    return subs


def enumerate_subsemimodules(M: FreeSemimodule, *, cap: int = DEFAULT_ENUMERATION_CAP) -> list:
    """All subsemimodules of M in canonical order.

    Saturation from {0}: adjoining a vector x to a subsemimodule U and closing
    gives U + S*x, and every subsemimodule is reached this way.
    """
    lines = M.line_masks
    full = M.full_mask
    seen = {1}
    frontier = [1]
    while frontier:
        nxt = []
        for u in frontier:
            for x in iter_bits(full & ~u):
                v = sum_mask(M, u, lines[x])
                if v not in seen:
                    seen.add(v)
                    if len(seen) > cap:
                        raise EnumerationCapExceeded(
                            f"more than {cap} subsemimodules; raise the cap to continue")
                    nxt.append(v)
        frontier = nxt
    return _canonical(M, seen)


def closed_subsemimodules(M: FreeSemimodule, subs=None, *,
                          cap: int = DEFAULT_ENUMERATION_CAP) -> list:
    """L_c(M) in canonical order.

    With ``subs`` (the full L(M)) this is {U^perp | U in subs}.  Without it,
    L_c(M) is generated as the family of all intersections of the single
    vector complements {x}^perp, which avoids enumerating L(M).
    """
    if subs is not None:
        return _canonical(M, {perp_mask(M, U.mask) for U in subs})
    orth = set(M.orth_masks)
    seen = {M.full_mask}
    frontier = [M.full_mask]
    while frontier:
        nxt = []
        for u in frontier:
            for o in orth:
                v = u & o
                if v not in seen:
                    seen.add(v)
                    if len(seen) > cap:
                        raise EnumerationCapExceeded(
                            f"more than {cap} closed subsemimodules; raise the cap to continue")
                    nxt.append(v)
        frontier = nxt
    return _canonical(M, seen)


def coordinate_subsemimodule(M: FreeSemimodule, J) -> Subsemimodule:
    """U_J: vectors whose coordinates in J are all zero."""
    z = M.semiring.zero
    J = set(J)
    mask = 0
    for i, x in enumerate(M.elements):
        if all(x[j] == z for j in J):
            mask |= 1 << i
    return Subsemimodule(M, mask)


# ------------------------------------------------------------ theorem checks
#
# Reports are lists of {"clause", "status", "witness"?} dicts.  They run over
# an indexed copy of L(M) so that sums, intersections and complements become
# table lookups.


class IndexedLattice:
    """L(M) with precomputed +, intersection and perp as index tables."""

    def __init__(self, M: FreeSemimodule, subs=None):
        self.M = M
        self.subs = subs if subs is not None else enumerate_subsemimodules(M)
        self.masks = [U.mask for U in self.subs]
        self.pos = {m: i for i, m in enumerate(self.masks)}
        self.perp = [self.pos[perp_mask(M, m)] for m in self.masks]
        self.bottom = self.pos[1]
        self.top = self.pos[M.full_mask]

    def __len__(self):
        return len(self.masks)

    def index_of(self, mask: int) -> int:
        return self.pos[mask]

    @property
    def sum_table(self):
        try:
            return self._sum
        except AttributeError:
            M, masks, pos = self.M, self.masks, self.pos
            m = len(masks)
            t = [[0] * m for _ in range(m)]
            for i in range(m):
                for j in range(i, m):
                    t[i][j] = t[j][i] = pos[sum_mask(M, masks[i], masks[j])]
            self._sum = t
            return t

    @property
    def meet_table(self):
        try:
            return self._meet
        except AttributeError:
            masks, pos = self.masks, self.pos
            self._meet = [[pos[a & b] for b in masks] for a in masks]
            return self._meet

    def leq(self, i, j) -> bool:
        return self.masks[i] & ~self.masks[j] == 0

    def cc(self, i) -> int:
        return self.perp[self.perp[i]]

    def closed(self) -> list:
        return sorted({self.perp[i] for i in range(len(self))},
                      key=lambda i: self.subs[i].sort_key)

    def name(self, i) -> list:
        return self.subs[i].members


class Report(list):
    """List of clause results; truthy attribute ``ok`` when all pass."""

    def add(self, clause, witness=None, **extra):
        entry = {"clause": clause, "status": "pass" if witness is None else "fail"}
        if witness is not None:
            entry["witness"] = witness
        entry.update(extra)
        self.append(entry)

    @property
    def ok(self) -> bool:
        return all(e["status"] == "pass" for e in self)

    @property
    def failures(self) -> list:
        return [e for e in self if e["status"] != "pass"]


def _first(pred, items):
    for item in items:
        if pred(*item):
            return item
    return None


def _pairs(m):
    return ((i, j) for i in range(m) for j in range(m))


def check_prop1(M: FreeSemimodule, lat: IndexedLattice | None = None) -> Report:
    """Every clause of the perp closure-operator proposition, over all pairs."""
    lat = lat or IndexedLattice(M)
    masks, pp, m = lat.masks, lat.perp, len(lat)
    sub = lat.leq
    rep = Report()

    def w(item):
        return None if item is None else [lat.name(i) for i in item]

    bad = _first(lambda i: closure_mask(M, masks[pp[i]]) != masks[pp[i]], ((i,) for i in range(m)))
    rep.add("perp-is-subsemimodule", w(bad))
    bad = _first(lambda i, j: sub(i, j) and not sub(pp[j], pp[i]), _pairs(m))
    rep.add("perp-antitone", w(bad))
    bad = _first(lambda i: not sub(i, lat.cc(i)), ((i,) for i in range(m)))
    rep.add("extensive", w(bad))
    bad = _first(lambda i: pp[lat.cc(i)] != pp[i], ((i,) for i in range(m)))
    rep.add("triple-perp", w(bad))
    bad = _first(lambda i, j: sub(i, pp[j]) != sub(j, pp[i]), _pairs(m))
    rep.add("galois", w(bad))
    ok = pp[lat.bottom] == lat.top and pp[lat.top] == lat.bottom
    rep.add("bounds", None if ok else [lat.name(lat.bottom), lat.name(lat.top)])
    # consequences: perp-perp is a closure operator
    bad = _first(lambda i, j: sub(i, j) and not sub(lat.cc(i), lat.cc(j)), _pairs(m))
    rep.add("closure-monotone", w(bad))
    bad = _first(lambda i: lat.cc(lat.cc(i)) != lat.cc(i), ((i,) for i in range(m)))
    rep.add("closure-idempotent", w(bad))
    return rep


def _families(m, max_size):
    for size in range(1, max_size + 1):
        yield from combinations(range(m), size)


def check_lemma3(M: FreeSemimodule, lat: IndexedLattice | None = None,
                 max_family: int = DEFAULT_FAMILY_SIZE) -> Report:
    """Perp of sums/intersections of families, on L(M) and on L_c(M)."""
    lat = lat or IndexedLattice(M)
    S, I, pp = lat.sum_table, lat.meet_table, lat.perp
    sub = lat.leq
    rep = Report()

    def fold(table, fam):
        return reduce(lambda a, b: table[a][b], fam)

    def cjoin(a, b):
        return lat.cc(S[a][b])

    def w(fam):
        return None if fam is None else [lat.name(i) for i in fam]

    fams = list(_families(len(lat), max_family))
    bad = _first(lambda *f: pp[fold(S, f)] != fold(I, [pp[i] for i in f]), fams)
    rep.add("perp-of-sum", w(bad), families=len(fams))
    bad = _first(lambda *f: not sub(fold(S, [pp[i] for i in f]), pp[fold(I, f)]), fams)
    rep.add("perp-of-intersection-contains-sum", w(bad), families=len(fams))

    closed = lat.closed()
    cfams = [tuple(closed[i] for i in f) for f in _families(len(closed), max_family)]
    bad = _first(lambda *f: pp[reduce(cjoin, f)] != fold(I, [pp[i] for i in f]), cfams)
    rep.add("closed-perp-of-join", w(bad), families=len(cfams))
    bad = _first(lambda *f: pp[fold(I, f)] != reduce(cjoin, [pp[i] for i in f]), cfams)
    rep.add("closed-perp-of-intersection", w(bad), families=len(cfams))
    return rep


def check_theorem1(M: FreeSemimodule, lat: IndexedLattice | None = None) -> Report:
    """L(M) is a lattice under (+, intersection); L_c(M) under (v, intersection)
    with perp an antitone involution.  Bounds are checked against every member."""
    lat = lat or IndexedLattice(M)
    S, I, pp = lat.sum_table, lat.meet_table, lat.perp
    sub, m = lat.leq, len(lat)
    rep = Report()

    # up[i] / down[i]: bitsets over indices of the members above / below i
    up = [sum(1 << u for u in range(m) if sub(i, u)) for i in range(m)]
    down = [sum(1 << u for u in range(m) if sub(u, i)) for i in range(m)]

    def is_lub(k, i, j, pool):
        return sub(i, k) and sub(j, k) and up[i] & up[j] & pool & ~up[k] == 0

    def is_glb(k, i, j, pool):
        return sub(k, i) and sub(k, j) and down[i] & down[j] & pool & ~down[k] == 0

    everything = (1 << m) - 1
    bad = _first(lambda i, j: not is_lub(S[i][j], i, j, everything), _pairs(m))
    rep.add("sum-is-join", None if bad is None else [lat.name(i) for i in bad])
    bad = _first(lambda i, j: not is_glb(I[i][j], i, j, everything), _pairs(m))
    rep.add("intersection-is-meet", None if bad is None else [lat.name(i) for i in bad])

    closed = lat.closed()
    cmask = sum(1 << i for i in closed)
    cpairs = [(a, b) for a in closed for b in closed]
    bad = _first(lambda i, j: not is_lub(lat.cc(S[i][j]), i, j, cmask), cpairs)
    rep.add("closed-join", None if bad is None else [lat.name(i) for i in bad])
    bad = _first(lambda i, j: not cmask >> I[i][j] & 1 or not is_glb(I[i][j], i, j, cmask),
                 cpairs)
    rep.add("closed-meet", None if bad is None else [lat.name(i) for i in bad])
    bad = _first(lambda i, j: (sub(i, j) and not sub(pp[j], pp[i])) or pp[pp[i]] != i, cpairs)
    rep.add("closed-antitone-involution", None if bad is None else [lat.name(i) for i in bad])
    return rep


def check_th2_hypothesis(M: FreeSemimodule, lat: IndexedLattice | None = None,
                         max_family: int = DEFAULT_FAMILY_SIZE):
    """Decide whether perp-perp preserves intersections; if it does, verify that
    it is a surjective homomorphism L(M) -> L_c(M).  Returns (holds, report)."""
    lat = lat or IndexedLattice(M)
    S, I, pp, cc = lat.sum_table, lat.meet_table, lat.perp, lat.cc
    m = len(lat)
    rep = Report()

    def w(fam):
        return None if fam is None else [lat.name(i) for i in fam]

    bad_pair = _first(lambda i, j: cc(I[i][j]) != I[cc(i)][cc(j)], _pairs(m))
    rep.add("hypothesis-pairs", w(bad_pair))
    fams = list(_families(m, max_family))
    bad_fam = _first(
        lambda *f: cc(reduce(lambda a, b: I[a][b], f)) != reduce(lambda a, b: I[a][b], [cc(i) for i in f]),
        fams)
    rep.add("hypothesis-families", w(bad_fam), families=len(fams))
    holds = bad_pair is None
    if not holds:
        return False, rep

    bad = _first(lambda i, j: cc(S[i][j]) != cc(S[cc(i)][cc(j)]), _pairs(m))
    rep.add("hom-join", w(bad))
    bad = _first(lambda i, j: cc(I[i][j]) != I[cc(i)][cc(j)], _pairs(m))
    rep.add("hom-meet", w(bad))
    bad = _first(lambda i: cc(pp[i]) != pp[cc(i)], ((i,) for i in range(m)))
    rep.add("hom-perp", w(bad))
    ok = cc(lat.bottom) == lat.bottom and cc(lat.top) == lat.top
    rep.add("hom-bounds", None if ok else [lat.name(lat.bottom), lat.name(lat.top)])
    image = {cc(i) for i in range(m)}
    ok = image == set(lat.closed())
    rep.add("surjective", None if ok else sorted(image))
    if bad_fam is None:
        bad = _first(lambda *f: cc(reduce(lambda a, b: S[a][b], f))
                     != cc(reduce(lambda a, b: S[a][b], [cc(i) for i in f])), fams)
        rep.add("complete-hom-join", w(bad), families=len(fams))
    return True, rep


# ------------------------------------------------------- sampled checks
#
# When L(M) is too large to index, the same laws are checked on all pairs of
# a random sample of subsemimodules, working on bitsets directly.

def sample_subsemimodules(M: FreeSemimodule, count: int, rng) -> list:
    """Closures of 1 to 3 random vectors, plus the bounds, as sorted masks."""
    masks = {1, M.full_mask}
    for _ in range(count):
        seed = 0
        for _ in range(rng.randint(1, 3)):
            seed |= 1 << rng.randrange(M.size)
        masks.add(closure_mask(M, seed))
    return sorted(masks, key=lambda m: (bin(m).count("1"), m))


def check_sampled_laws(M: FreeSemimodule, sample, closed) -> dict:
    """Perp/closure laws on all pairs of ``sample``; closed-lattice laws on ``closed``.

    Both arguments are lists of masks; ``closed`` may itself be a sample of
    L_c(M), so closedness is tested by the fixpoint rather than membership.  Returns reports keyed like the full
    checks with a ``-sampled`` suffix.
    """
    lines, orth = M.line_masks, M.orth_masks
    gens, perp = {}, {}

    def generators(m):
        # greedy: keep a member when it is not yet in the span of those kept
        if m not in gens:
            span, out = 1, []
            for i in iter_bits(m):
                if not span >> i & 1:
                    out.append(i)
                    span = sum_mask(M, span, lines[i])
            gens[m] = out
        return gens[m]

    def add(a, b):
        if len(generators(a)) > len(generators(b)):
            a, b = b, a
        for g in generators(a):
            if not b >> g & 1:
                b = sum_mask(M, b, lines[g])
        return b

    def pp(m):
        if m not in perp:
            out = M.full_mask
            for g in generators(m):
                out &= orth[g]
            perp[m] = out
        return perp[m]

    verdict = {}

    def is_sub(m):
        if m not in verdict:
            verdict[m] = is_subsemimodule_mask(M, m)
        return verdict[m]

    def sub(a, b):
        return a & ~b == 0

    def cc(m):
        return pp(pp(m))

    def w(*ms):
        return [M.vectors_of(m) for m in ms]

    pairs = [(a, b) for a in sample for b in sample]
    p1 = Report()
    p1.add("perp-is-subsemimodule",
           next((w(a) for a in sample if not is_sub(pp(a))), None))
    p1.add("perp-antitone",
           next((w(a, b) for a, b in pairs if sub(a, b) and not sub(pp(b), pp(a))), None))
    p1.add("extensive", next((w(a) for a in sample if not sub(a, cc(a))), None))
    p1.add("triple-perp", next((w(a) for a in sample if pp(cc(a)) != pp(a)), None))
    p1.add("galois", next((w(a, b) for a, b in pairs if sub(a, pp(b)) != sub(b, pp(a))), None))
    ok = pp(1) == M.full_mask and pp(M.full_mask) == 1
    p1.add("bounds", None if ok else "perp of 0 or M")
    p1.add("closure-monotone",
           next((w(a, b) for a, b in pairs if sub(a, b) and not sub(cc(a), cc(b))), None))
    p1.add("closure-idempotent", next((w(a) for a in sample if cc(cc(a)) != cc(a)), None))
    for e in p1:
        e["sample"] = len(sample)

    sums = {(a, b): add(a, b) for a, b in pairs}
    l3 = Report()
    l3.add("perp-of-sum",
           next((w(a, b) for a, b in pairs if pp(sums[a, b]) != pp(a) & pp(b)), None))
    l3.add("perp-of-intersection-contains-sum",
           next((w(a, b) for a, b in pairs if not sub(add(pp(a), pp(b)), pp(a & b))),
                None))
    cpairs = [(a, b) for a in closed for b in closed]
    l3.add("closed-perp-of-join",
           next((w(a, b) for a, b in cpairs if pp(cc(add(a, b))) != pp(a) & pp(b)), None))
    l3.add("closed-perp-of-intersection",
           next((w(a, b) for a, b in cpairs
                 if pp(a & b) != cc(add(pp(a), pp(b)))), None))

    t1 = Report()
    t1.add("sum-is-join", next((w(a, b) for a, b in pairs
                                if not is_sub(sums[a, b])
                                or not sub(a, sums[a, b]) or not sub(b, sums[a, b])
                                or any(sub(a, u) and sub(b, u) and not sub(sums[a, b], u)
                                       for u in sample)), None))
    t1.add("intersection-is-meet",
           next((w(a, b) for a, b in pairs if not is_sub(a & b)), None))
    t1.add("closed-join", next((w(a, b) for a, b in cpairs
                                if any(sub(a, u) and sub(b, u)
                                       and not sub(cc(add(a, b)), u) for u in closed)),
                               None))
    t1.add("closed-meet", next((w(a, b) for a, b in cpairs if cc(a & b) != a & b), None))
    t1.add("closed-antitone-involution",
           next((w(a, b) for a, b in cpairs
                 if (sub(a, b) and not sub(pp(b), pp(a))) or cc(a) != a), None))
    for rep in (l3, t1):
        for e in rep:
            e["sample"] = len(sample)
            e["closed"] = len(closed)
    return {"prop1-sampled": p1, "lemma3-sampled": l3, "theorem1-sampled": t1}
