"""Splitting subsemimodules, projections and the module-only machinery.

A linear self-map of S^k is stored as a k x k matrix (row-major) whose
column i is the image of the i-th basis vector.  Self-adjointness
(Px).y = x.(Py) reduces to symmetry of that matrix: on basis vectors the two
sides are P[j][i] and P[i][j], and both sides are bilinear.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .errors import (AmbientMismatch, NotARing, NotCommuting, NotSplitting,
                     SearchCapExceeded, UniquenessViolation)
from .poset import FinitePoset
from .semimodule import FreeSemimodule, iter_bits
from .semiring import is_ring
from .sublattice import (Report, Subsemimodule, closed_subsemimodules,
                         coordinate_subsemimodule, is_subsemimodule_mask, perp_mask, sum_mask)

DEFAULT_SEARCH_CAP = 10**6


def _require_ring(M):
    if not is_ring(M.semiring):
        raise NotARing(f"{M.semiring.name} is not a ring")


# ------------------------------------------------------------------ splitting

def is_splitting(M: FreeSemimodule, U: Subsemimodule) -> bool:
    """U + U^perp = M and U meets U^perp only in 0."""
    if U.ambient is not M:
        raise AmbientMismatch("subsemimodule belongs to another semimodule")
    p = perp_mask(M, U.mask)
    return U.mask & p == 1 and sum_mask(M, U.mask, p) == M.full_mask


def splitting_subsemimodules(M: FreeSemimodule, subs=None) -> list:
    """L_s(M) in canonical order.

    Filters ``subs`` when given.  Otherwise only the closed subsemimodules are
    scanned: a splitting subsemimodule is always closed, and L_c(M) can be
    produced without enumerating all of L(M).
    """
    pool = subs if subs is not None else closed_subsemimodules(M)
    return [U for U in pool if is_splitting(M, U)]


def _decompositions(M, U):
    """target index -> list of (b, c) index pairs with b in U, c in U^perp."""
    add_t = M.add_table
    perp = list(iter_bits(perp_mask(M, U.mask)))
    table = {}
    for i in U.indices:
        row = add_t[i]
        for j in perp:
            table.setdefault(row[j], []).append((i, j))
    return table


def decompose(M: FreeSemimodule, U: Subsemimodule, a) -> tuple:
    """The unique (b, c) with b in U, c in U^perp and b + c = a (rings only)."""
    _require_ring(M)
    if not is_splitting(M, U):
        raise NotSplitting(f"{U!r} is not splitting")
    found = _decompositions(M, U).get(M.index(a), [])
    if len(found) != 1:
        raise UniquenessViolation(f"{len(found)} decompositions of {a!r}")
    i, j = found[0]
    return M.elements[i], M.elements[j]


# -------------------------------------------------------------- linear maps

@dataclass(frozen=True)
class LinearMap:
    ambient: FreeSemimodule
    matrix: tuple  # matrix[r][c]; column c is the image of basis vector c

    @classmethod
    def from_columns(cls, M, columns):
        k = M.rank
        return cls(M, tuple(tuple(columns[c][r] for c in range(k)) for r in range(k)))

    @classmethod
    def zero(cls, M):
        z = M.semiring.zero
        return cls(M, tuple((z,) * M.rank for _ in range(M.rank)))

    @classmethod
    def identity(cls, M):
        return cls.from_columns(M, M.basis)

    @property
    def columns(self) -> tuple:
        k = self.ambient.rank
        return tuple(tuple(self.matrix[r][c] for r in range(k)) for c in range(k))

    def apply(self, x) -> tuple:
        S = self.ambient.semiring
        add, mul = S.add, S.mul
        out = []
        for row in self.matrix:
            acc = S.zero
            for p, xi in zip(row, x):
                acc = add[acc][mul[p][xi]]
            out.append(acc)
        return tuple(out)

    __call__ = apply

    def __matmul__(self, other: LinearMap) -> LinearMap:
        """Composition: (self @ other)(x) = self(other(x))."""
        S = self.ambient.semiring
        add, mul = S.add, S.mul
        k = self.ambient.rank
        rows = []
        for r in range(k):
            row = []
            for c in range(k):
                acc = S.zero
                for i in range(k):
                    acc = add[acc][mul[self.matrix[r][i]][other.matrix[i][c]]]
                row.append(acc)
            rows.append(tuple(row))
        return LinearMap(self.ambient, tuple(rows))

    def __add__(self, other: LinearMap) -> LinearMap:
        add = self.ambient.semiring.add
        return LinearMap(self.ambient, tuple(
            tuple(add[a][b] for a, b in zip(r1, r2)) for r1, r2 in zip(self.matrix, other.matrix)))

    def __sub__(self, other: LinearMap) -> LinearMap:
        _require_ring(self.ambient)
        S = self.ambient.semiring
        return LinearMap(self.ambient, tuple(
            tuple(S.add[a][S.neg(b)] for a, b in zip(r1, r2))
            for r1, r2 in zip(self.matrix, other.matrix)))

    def is_symmetric(self) -> bool:
        k = self.ambient.rank
        return all(self.matrix[r][c] == self.matrix[c][r] for r in range(k) for c in range(k))

    def is_idempotent(self) -> bool:
        return self @ self == self

    def is_self_adjoint(self) -> bool:
        """Definitional check over all pairs of vectors."""
        M = self.ambient
        images = [self.apply(x) for x in M.elements]
        return all(M.inner(px, y) == M.inner(x, py)
                   for x, px in zip(M.elements, images)
                   for y, py in zip(M.elements, images))

    def image(self) -> Subsemimodule:
        M = self.ambient
        mask = 0
        for x in M.elements:
            mask |= 1 << M.index(self.apply(x))
        return Subsemimodule(M, mask)

    def labels(self) -> list:
        lab = self.ambient.semiring.labels
        return [[lab[v] for v in row] for row in self.matrix]


def projection_of(M: FreeSemimodule, U: Subsemimodule) -> LinearMap:
    """P_U: the map sending x to its U-component (rings only)."""
    return LinearMap.from_columns(M, [decompose(M, U, b)[0] for b in M.basis])


# ------------------------------------------------------------- projections

class ProjectionPoset:
    """All projections of M ordered by image inclusion."""

    def __init__(self, M: FreeSemimodule, projections):
        self.ambient = M
        self.projections = sorted(projections, key=lambda P: P.matrix)
        self.images = [P.image() for P in self.projections]
        self._pos = {P.matrix: i for i, P in enumerate(self.projections)}

    def __len__(self):
        return len(self.projections)

    def __iter__(self):
        return iter(self.projections)

    def __contains__(self, P):
        return P.matrix in self._pos

    def index(self, P: LinearMap) -> int:
        return self._pos[P.matrix]

    @property
    def bottom(self) -> LinearMap:
        return LinearMap.zero(self.ambient)

    @property
    def top(self) -> LinearMap:
        return LinearMap.identity(self.ambient)

    def leq(self, P: LinearMap, Q: LinearMap) -> bool:
        return self.images[self.index(P)] <= self.images[self.index(Q)]

    def complement(self, P: LinearMap) -> LinearMap:
        return proj_complement(P)

    def as_poset(self) -> FinitePoset:
        """The image-inclusion order as a FinitePoset (complement as involution over rings)."""
        m = len(self)
        imgs = self.images
        leq = [[imgs[i] <= imgs[j] for j in range(m)] for i in range(m)]
        inv = None
        if is_ring(self.ambient.semiring):
            inv = [self._pos[proj_complement(P).matrix] for P in self.projections]
        labels = [str(P.labels()) for P in self.projections]
        return FinitePoset(leq, involution=inv, labels=labels)


def enumerate_projections(M: FreeSemimodule, *, cap: int = DEFAULT_SEARCH_CAP,
                          full_scan: bool = False) -> ProjectionPoset:
    """All symmetric idempotent k x k matrices.

    ``full_scan`` instead walks every k x k matrix and tests idempotence and
    self-adjointness definitionally; it is meant as an oracle.
    """
    n, k = M.semiring.n, M.rank
    if full_scan:
        count = n ** (k * k)
        if count > cap:
            raise SearchCapExceeded(f"{count} candidate matrices exceed the cap of {cap}")
        found = []
        for entries in product(range(n), repeat=k * k):
            P = LinearMap(M, tuple(tuple(entries[r * k:(r + 1) * k]) for r in range(k)))
            if P.is_idempotent() and P.is_self_adjoint():
                found.append(P)
        return ProjectionPoset(M, found)

    slots = [(r, c) for r in range(k) for c in range(r, k)]
    count = n ** len(slots)
    if count > cap:
        raise SearchCapExceeded(f"{count} candidate matrices exceed the cap of {cap}")
    found = []
    for entries in product(range(n), repeat=len(slots)):
        rows = [[0] * k for _ in range(k)]
        for (r, c), v in zip(slots, entries):
            rows[r][c] = rows[c][r] = v
        P = LinearMap(M, tuple(map(tuple, rows)))
        if P.is_idempotent():
            found.append(P)
    return ProjectionPoset(M, found)


def proj_complement(P: LinearMap) -> LinearMap:
    """P' = I - P."""
    _require_ring(P.ambient)
    return LinearMap.identity(P.ambient) - P


def proj_perp(P: LinearMap, Q: LinearMap) -> bool:
    """P orthogonal to Q: P <= Q', equivalently PQ = 0, equivalently QP = 0."""
    _require_ring(P.ambient)
    zero = LinearMap.zero(P.ambient)
    by_order = P.image() <= proj_complement(Q).image()
    pq, qp = P @ Q == zero, Q @ P == zero
    if not by_order == pq == qp:
        raise AssertionError(f"orthogonality forms disagree: {by_order}, {pq}, {qp}")
    return by_order


def _require_commuting(P, Q):
    if P @ Q != Q @ P:
        raise NotCommuting("projections do not commute")


def proj_meet(P: LinearMap, Q: LinearMap) -> LinearMap:
    _require_commuting(P, Q)
    return P @ Q


def proj_join(P: LinearMap, Q: LinearMap) -> LinearMap:
    _require_ring(P.ambient)
    _require_commuting(P, Q)
    return P + Q - P @ Q


# ---------------------------------------------------------------- checks

def _names(*maps):
    return [P.labels() for P in maps]


def check_lemma5(M: FreeSemimodule, pro: ProjectionPoset | None = None) -> Report:
    """Order via images agrees with PQ = P and QP = P; commuting pairs meet at PQ."""
    pro = pro or enumerate_projections(M)
    poset = pro.as_poset()
    rep = Report()
    bad = None
    for P, Q in product(pro, pro):
        if not pro.leq(P, Q) == (P @ Q == P) == (Q @ P == P):
            bad = _names(P, Q)
            break
    rep.add("order-equivalences", bad, pairs=len(pro) ** 2)
    bad = None
    commuting = 0
    for P, Q in product(pro, pro):
        if P @ Q != Q @ P:
            continue
        commuting += 1
        R = proj_meet(P, Q)
        if R not in pro or poset.inf(pro.index(P), pro.index(Q)) != pro.index(R):
            bad = _names(P, Q)
            break
    rep.add("commuting-meet", bad, pairs=commuting)
    ok = LinearMap.zero(M) in pro and LinearMap.identity(M) in pro
    rep.add("bounds-are-projections", None if ok else "0 or I missing")
    bad = None
    for P, Q, R in product(pro, pro, pro):
        if pro.leq(P, Q) and pro.leq(Q, R) and not pro.leq(P, R):
            bad = _names(P, Q, R)
            break
        if P != Q and pro.leq(P, Q) and pro.leq(Q, P):
            bad = _names(P, Q)
            break
    rep.add("partial-order", bad)
    return rep


def check_order_homomorphism(M: FreeSemimodule, pro: ProjectionPoset | None = None) -> Report:
    """P -> P(M) is monotone into (L(M), inclusion) and preserves the bounds."""
    pro = pro or enumerate_projections(M)
    rep = Report()
    bad = None
    for P in pro:
        if not is_subsemimodule_mask(M, P.image().mask):
            bad = _names(P)
            break
    rep.add("image-is-subsemimodule", bad)
    bad = None
    for P, Q in product(pro, pro):
        if pro.leq(P, Q) and not P.image() <= Q.image():
            bad = _names(P, Q)
            break
    rep.add("monotone", bad)
    ok = LinearMap.zero(M).image().mask == 1 and LinearMap.identity(M).image().mask == M.full_mask
    rep.add("bounds", None if ok else "0 or I has the wrong image")
    return rep


def check_th4_bijection(M: FreeSemimodule, pro: ProjectionPoset | None = None,
                        splitting=None) -> Report:
    """U -> P_U and P -> P(M) are mutually inverse order isomorphisms (rings only)."""
    _require_ring(M)
    pro = pro or enumerate_projections(M)
    splitting = splitting if splitting is not None else splitting_subsemimodules(M)
    rep = Report()
    ok = len(pro) == len(splitting)
    rep.add("cardinality", None if ok else [len(pro), len(splitting)],
            projections=len(pro), splitting=len(splitting))
    P_of = {U.mask: projection_of(M, U) for U in splitting}
    bad = next((U.members for U in splitting if P_of[U.mask].image() != U), None)
    rep.add("image-of-projection", bad)
    bad = next((_names(P) for P in pro
                if P.image().mask not in P_of or P_of[P.image().mask] != P), None)
    rep.add("projection-of-image", bad)
    bad = next((U.members for U in splitting if P_of[U.mask] not in pro), None)
    rep.add("projection-of-is-projection", bad)
    bad = None
    for U, W in product(splitting, splitting):
        if (U <= W) != pro.leq(P_of[U.mask], P_of[W.mask]):
            bad = [U.members, W.members]
            break
    rep.add("order-isomorphism", bad)
    bad = None
    for U in splitting:
        p = perp_mask(M, U.mask)
        if p not in P_of or P_of[p] != proj_complement(P_of[U.mask]):
            bad = U.members
            break
    rep.add("complement-of-perp", bad)
    return rep


def check_lemma1(M: FreeSemimodule, pro: ProjectionPoset | None = None) -> Report:
    """P -> I - P is an antitone involution on Pro(M) (rings only)."""
    _require_ring(M)
    pro = pro or enumerate_projections(M)
    rep = Report()
    bad = next((_names(P) for P in pro if proj_complement(P) not in pro), None)
    rep.add("complement-is-projection", bad)
    bad = next((_names(P) for P in pro if proj_complement(proj_complement(P)) != P), None)
    rep.add("involution", bad)
    bad = None
    for P, Q in product(pro, pro):
        if pro.leq(P, Q) and not pro.leq(proj_complement(Q), proj_complement(P)):
            bad = _names(P, Q)
            break
    rep.add("antitone", bad)
    return rep


def check_lemma4(M: FreeSemimodule, pro: ProjectionPoset | None = None) -> Report:
    _require_ring(M)
    pro = pro or enumerate_projections(M)
    rep = Report()
    bad = None
    for P, Q in product(pro, pro):
        try:
            proj_perp(P, Q)
        except AssertionError:
            bad = _names(P, Q)
            break
    rep.add("perp-equivalences", bad)
    return rep


def check_lemma6(M: FreeSemimodule, pro: ProjectionPoset | None = None) -> Report:
    """For commuting P, Q over a ring, P + Q - PQ is the supremum in Pro(M)."""
    _require_ring(M)
    pro = pro or enumerate_projections(M)
    poset = pro.as_poset()
    rep = Report()
    bad = None
    commuting = 0
    for P, Q in product(pro, pro):
        if P @ Q != Q @ P:
            continue
        commuting += 1
        J = proj_join(P, Q)
        if J not in pro or poset.sup(pro.index(P), pro.index(Q)) != pro.index(J):
            bad = _names(P, Q)
            break
        if proj_perp(P, Q) and (J != P + Q or proj_meet(P, Q) != LinearMap.zero(M)):
            bad = _names(P, Q)
            break
    rep.add("commuting-join", bad, pairs=commuting)
    return rep


def check_lemma7(M: FreeSemimodule, splitting=None) -> Report:
    """Every vector splits uniquely along every splitting submodule (rings only)."""
    _require_ring(M)
    splitting = splitting if splitting is not None else splitting_subsemimodules(M)
    rep = Report()
    bad = None
    for U in splitting:
        table = _decompositions(M, U)
        for a in range(M.size):
            if len(table.get(a, ())) != 1:
                bad = [U.members, M.elements[a], len(table.get(a, ()))]
                break
        if bad:
            break
    rep.add("unique-decomposition", bad, subsemimodules=len(splitting))
    return rep


def check_splitting_closed(M: FreeSemimodule, splitting=None) -> Report:
    splitting = splitting if splitting is not None else splitting_subsemimodules(M)
    rep = Report()
    bad = next((U.members for U in splitting
                if perp_mask(M, perp_mask(M, U.mask)) != U.mask), None)
    rep.add("splitting-implies-closed", bad)
    bad = next((U.members for U in splitting
                if not is_splitting(M, Subsemimodule(M, perp_mask(M, U.mask)))), None)
    rep.add("perp-of-splitting-is-splitting", bad)
    return rep


def check_orthogonal_join(M: FreeSemimodule, splitting=None) -> Report:
    """In L_s(M) over a ring, U v W exists and equals U + W whenever U <= W^perp."""
    _require_ring(M)
    splitting = splitting if splitting is not None else splitting_subsemimodules(M)
    poset = FinitePoset.from_subsets(splitting)
    pos = {U.mask: i for i, U in enumerate(splitting)}
    rep = Report()
    bad = None
    for U, W in product(splitting, splitting):
        if U.mask & ~perp_mask(M, W.mask):
            continue
        s = sum_mask(M, U.mask, W.mask)
        if s not in pos or poset.sup(pos[U.mask], pos[W.mask]) != pos[s]:
            bad = [U.members, W.members]
            break
    rep.add("orthogonal-join-is-sum", bad)
    return rep


def check_powerset_map(M: FreeSemimodule, splitting=None) -> Report:
    """J -> U_J is an antiisomorphism from (2^I, subset) onto (L_s(M), inclusion)."""
    splitting = splitting if splitting is not None else splitting_subsemimodules(M)
    k = M.rank
    subsets = [frozenset(J) for r in range(k + 1)
               for J in combinations(range(k), r)]
    U = {J: coordinate_subsemimodule(M, J) for J in subsets}
    rep = Report()
    ok = {u.mask for u in U.values()} == {s.mask for s in splitting} and len(splitting) == len(subsets)
    rep.add("bijective", None if ok else [len(splitting), len(subsets)])
    bad = next(([sorted(a), sorted(b)] for a in subsets for b in subsets
                if (a <= b) != (U[b] <= U[a])), None)
    rep.add("order-reversing", bad)
    return rep

