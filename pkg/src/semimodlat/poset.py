"""Finite bounded posets: order-theoretic verdicts, isomorphism search, DOT output.

Suprema and infima are computed from their definitions (least common upper
bound, greatest common lower bound) and reported as ``None`` when they do not
exist.  Nothing here assumes the poset is a lattice unless a function says so.
"""

from __future__ import annotations

from itertools import combinations, product

from .errors import (InvolutionNotClosed, NoBounds, NoInvolution, NotALattice,
                     NotAPartialOrder, NotOrthoposet)


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FinitePoset:
    """Elements are ``0..m-1``; ``leq[i][j]`` is True iff i <= j."""

    def __init__(self, leq, *, involution=None, labels=None):
        self.leq = tuple(tuple(bool(v) for v in row) for row in leq)
        m = self.m = len(self.leq)
        if m == 0 or any(len(row) != m for row in self.leq):
            raise NotAPartialOrder("relation must be a non-empty square matrix")
        # bitsets: bit j of up_mask[i] set iff i <= j
        self.up_mask = [sum(1 << j for j in range(m) if self.leq[i][j]) for i in range(m)]
        self.down_mask = [sum(1 << i for i in range(m) if self.leq[i][j]) for j in range(m)]
        self._check_order()
        full = (1 << m) - 1
        bottoms = [i for i in range(m) if self.up_mask[i] == full]
        tops = [j for j in range(m) if self.down_mask[j] == full]
        if not bottoms or not tops:
            raise NoBounds("poset has no least or no greatest element")
        self.bottom, self.top = bottoms[0], tops[0]
        if involution is not None:
            involution = tuple(involution)
            if len(involution) != m or any(not 0 <= v < m for v in involution):
                raise InvolutionNotClosed("involution does not map the poset into itself")
        self.involution = involution
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(m))

    def _check_order(self):
        up = self.up_mask
        for i in range(self.m):
            if not up[i] >> i & 1:
                raise NotAPartialOrder(f"not reflexive at {i}")
            for j in _bits(up[i]):
                if j != i and up[j] >> i & 1:
                    raise NotAPartialOrder(f"not antisymmetric at {(i, j)}")
                if up[j] & ~up[i]:
                    raise NotAPartialOrder(f"not transitive at {(i, j)}")

    @property
    def up(self):
        return [frozenset(_bits(u)) for u in self.up_mask]

    @property
    def down(self):
        return [frozenset(_bits(d)) for d in self.down_mask]

    @classmethod
    def from_subsets(cls, sets, involution=None, labels=None) -> FinitePoset:
        return poset_from_subsets(sets, involution, labels)

    def __len__(self):
        return self.m

    def __repr__(self):
        return f"FinitePoset(m={self.m})"

    def lt(self, i, j) -> bool:
        return i != j and self.leq[i][j]

    def comparable(self, i, j) -> bool:
        return self.leq[i][j] or self.leq[j][i]

    def sup(self, i, j):
        common = self.up_mask[i] & self.up_mask[j]
        up = self.up_mask
        for u in _bits(common):
            if common & ~up[u] == 0:
                return u
        return None

    def inf(self, i, j):
        common = self.down_mask[i] & self.down_mask[j]
        down = self.down_mask
        for u in _bits(common):
            if common & ~down[u] == 0:
                return u
        return None

    def comp(self, i) -> int:
        if self.involution is None:
            raise NoInvolution("poset carries no involution")
        return self.involution[i]

    def covers(self, i, j) -> bool:
        """j covers i."""
        if not self.lt(i, j):
            return False
        between = self.up_mask[i] & self.down_mask[j]
        return between == (1 << i) | (1 << j)

    @property
    def heights(self) -> list:
        """Length of the longest chain from the bottom to each element."""
        down = self.down_mask
        order = sorted(range(self.m), key=lambda i: bin(down[i]).count("1"))
        h = [0] * self.m
        for j in order:
            h[j] = max((h[i] + 1 for i in _bits(down[j]) if i != j), default=0)
        return h

    def dual(self) -> FinitePoset:
        m = self.m
        return FinitePoset([[self.leq[j][i] for j in range(m)] for i in range(m)],
                           involution=self.involution, labels=self.labels)

    def relabel(self, labels) -> FinitePoset:
        return FinitePoset(self.leq, involution=self.involution, labels=labels)


def poset_from_subsets(sets, involution=None, labels=None) -> FinitePoset:
    """Inclusion order on distinct subsemimodules (or any objects with ``mask``).

    ``involution`` may be a callable on the items or a list of indices.
    """
    sets = list(sets)
    masks = [s.mask if hasattr(s, "mask") else s for s in sets]
    if len(set(masks)) != len(masks):
        raise ValueError("sets must be pairwise distinct")
    leq = [[a & ~b == 0 for b in masks] for a in masks]
    inv = None
    if involution is not None:
        if callable(involution):
            pos = {m: i for i, m in enumerate(masks)}
            inv = []
            for s in sets:
                image = involution(s)
                image = image.mask if hasattr(image, "mask") else image
                if image not in pos:
                    raise InvolutionNotClosed(f"{s!r} maps outside the family")
                inv.append(pos[image])
        else:
            inv = list(involution)
    return FinitePoset(leq, involution=inv, labels=labels)


# ------------------------------------------------------------- involutions

def _need_involution(P):
    if P.involution is None:
        raise NoInvolution("poset carries no involution")


def is_antitone_involution(P: FinitePoset) -> bool:
    _need_involution(P)
    c = P.involution
    if any(c[c[i]] != i for i in range(P.m)):
        return False
    return all(P.leq[c[j]][c[i]] for i, j in product(range(P.m), range(P.m)) if P.leq[i][j])


def is_complementation(P: FinitePoset) -> bool:
    _need_involution(P)
    c = P.involution
    return all(P.sup(i, c[i]) == P.top and P.inf(i, c[i]) == P.bottom for i in range(P.m))


def is_orthoposet(P: FinitePoset) -> bool:
    return is_antitone_involution(P) and is_complementation(P)


def orthomodular_witness(P: FinitePoset):
    """None if P is orthomodular, else ``(x, y, reason)`` for a failing pair x <= y."""
    if not is_orthoposet(P):
        raise NotOrthoposet("orthomodularity is only defined for orthoposets")
    c = P.involution
    for x, y in product(range(P.m), range(P.m)):
        if not P.leq[x][y]:
            continue
        if P.sup(x, y) is None:
            return (x, y, "join of comparable pair missing")
        meet = P.inf(y, c[x])
        if meet is None:
            return (x, y, "meet of y and complement of x missing")
        j = P.sup(x, meet)
        if j is None:
            return (x, y, "join of x with the relative complement missing")
        if j != y:
            return (x, y, "orthomodular law fails")
    return None


def is_orthomodular_poset(P: FinitePoset) -> bool:
    return orthomodular_witness(P) is None


# ----------------------------------------------------------------- lattices

def is_lattice(P: FinitePoset) -> bool:
    return all(P.sup(i, j) is not None and P.inf(i, j) is not None
               for i, j in combinations(range(P.m), 2))


def _need_lattice(P):
    if not is_lattice(P):
        raise NotALattice("poset is not a lattice")


def n5_sublattices(P: FinitePoset):
    """Yield every pentagon sublattice as ``(bottom, a, c, b, top)`` with a < c, b off the chain."""
    _need_lattice(P)
    m = P.m
    for a, c in product(range(m), range(m)):
        if not P.lt(a, c):
            continue
        for b in range(m):
            if P.comparable(a, b) or P.comparable(c, b):
                continue
            top, bot = P.sup(a, b), P.inf(c, b)
            if P.sup(c, b) == top and P.inf(a, b) == bot:
                yield (bot, a, c, b, top)


def m3_sublattices(P: FinitePoset):
    """Yield every diamond sublattice as ``(bottom, a, b, c, top)``."""
    _need_lattice(P)
    for a, b, c in combinations(range(P.m), 3):
        if P.comparable(a, b) or P.comparable(a, c) or P.comparable(b, c):
            continue
        top = P.sup(a, b)
        bot = P.inf(a, b)
        if (P.sup(a, c) == P.sup(b, c) == top and P.inf(a, c) == P.inf(b, c) == bot):
            yield (bot, a, b, c, top)


def n5_witness(P: FinitePoset):
    return next(n5_sublattices(P), None)


def is_modular(P: FinitePoset) -> bool:
    return n5_witness(P) is None


def is_distributive(P: FinitePoset) -> bool:
    return is_modular(P) and next(m3_sublattices(P), None) is None


def is_complemented(P: FinitePoset) -> bool:
    _need_lattice(P)
    return all(any(P.sup(x, y) == P.top and P.inf(x, y) == P.bottom for y in range(P.m))
               for x in range(P.m))


def is_boolean_algebra(P: FinitePoset) -> bool:
    return is_lattice(P) and is_distributive(P) and is_complemented(P)


def atoms(P: FinitePoset) -> list:
    return [a for a in range(P.m) if P.covers(P.bottom, a)]


def is_atomic(P: FinitePoset) -> bool:
    at = atoms(P)
    return all(any(P.leq[a][x] for a in at) for x in range(P.m) if x != P.bottom)


# --------------------------------------------------------------- isomorphism

def _fingerprints(P):
    h = P.heights
    d = P.dual().heights
    return [(h[i], d[i], bin(P.up_mask[i]).count("1"), bin(P.down_mask[i]).count("1"))
            for i in range(P.m)]


def find_isomorphism(P: FinitePoset, Q: FinitePoset, *, respect_involution=True):
    """An order isomorphism P -> Q as a list, or None.

    When ``respect_involution`` is set and both posets carry an involution,
    the map must also commute with it.
    """
    if P.m != Q.m:
        return None
    fp, fq = _fingerprints(P), _fingerprints(Q)
    if sorted(fp) != sorted(fq):
        return None
    use_inv = respect_involution and P.involution is not None and Q.involution is not None
    m = P.m
    order = sorted(range(m), key=lambda i: (fp[i], i))
    f = [None] * m
    used = [False] * m

    def consistent(i, j):
        for i2 in range(m):
            j2 = f[i2]
            if j2 is None:
                continue
            if P.leq[i][i2] != Q.leq[j][j2] or P.leq[i2][i] != Q.leq[j2][j]:
                return False
        if use_inv:
            ci, cj = P.involution[i], Q.involution[j]
            if (ci == i) != (cj == j):
                return False
            if f[ci] is not None and f[ci] != cj:
                return False
        return True

    def search(pos):
        if pos == m:
            return True
        i = order[pos]
        for j in range(m):
            if used[j] or fq[j] != fp[i] or not consistent(i, j):
                continue
            f[i], used[j] = j, True
            if search(pos + 1):
                return True
            f[i], used[j] = None, False
        return False

    if not search(0):
        return None
    if use_inv and any(f[P.involution[i]] != Q.involution[f[i]] for i in range(m)):
        return None
    return list(f)


def mo2() -> FinitePoset:
    """Bottom 0, atoms 1..4 with 1<->2 and 3<->4 complementary, top 5."""
    m = 6
    leq = [[i == j or i == 0 or j == 5 for j in range(m)] for i in range(m)]
    return FinitePoset(leq, involution=[5, 2, 1, 4, 3, 0],
                       labels=["0", "a", "a'", "b", "b'", "1"])


def is_iso_MO2(P: FinitePoset) -> bool:
    return find_isomorphism(P, mo2()) is not None


def powerset_poset(k: int) -> FinitePoset:
    subsets = list(range(1 << k))
    leq = [[a & ~b == 0 for b in subsets] for a in subsets]
    inv = [(~a) & ((1 << k) - 1) for a in subsets]
    labels = ["{" + ",".join(str(i) for i in range(k) if a >> i & 1) + "}" for a in subsets]
    return FinitePoset(leq, involution=inv, labels=labels)


def antiisomorphic_to_powerset(P: FinitePoset, k: int) -> bool:
    """Is there a bijection f: 2^[k] -> P with S <= T iff f(T) <= f(S)?"""
    return find_isomorphism(P.dual(), powerset_poset(k), respect_involution=False) is not None


def benzene() -> FinitePoset:
    """O_6: 0 < a < b < 1 and 0 < b' < a' < 1.  An orthoposet that is not orthomodular."""
    # indices: 0=0, 1=a, 2=b, 3=b', 4=a', 5=1
    below = {0: {0}, 1: {0, 1}, 2: {0, 1, 2}, 3: {0, 3}, 4: {0, 3, 4}, 5: set(range(6))}
    leq = [[i in below[j] for j in range(6)] for i in range(6)]
    return FinitePoset(leq, involution=[5, 4, 3, 2, 1, 0],
                       labels=["0", "a", "b", "b'", "a'", "1"])


def chain(n: int, *, involution=True) -> FinitePoset:
    leq = [[i <= j for j in range(n)] for i in range(n)]
    return FinitePoset(leq, involution=list(reversed(range(n))) if involution else None)


# --------------------------------------------------------------------- Hasse

def hasse_edges(P: FinitePoset) -> list:
    """Cover pairs (lower, upper), sorted."""
    return [(i, j) for i in range(P.m) for j in _bits(P.up_mask[i]) if P.covers(i, j)]


def _quote(s):
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(P: FinitePoset, name: str = "poset") -> str:
    """Graphviz digraph of the Hasse diagram, bottom-up, one rank per height."""
    h = P.heights
    lines = ["digraph " + _quote(name) + " {", "  rankdir=BT;", "  node [shape=plaintext];"]
    for i in range(P.m):
        lines.append(f"  n{i} [label={_quote(P.labels[i])}];")
    for level in sorted(set(h)):
        members = " ".join(f"n{i};" for i in range(P.m) if h[i] == level)
        lines.append(f"  {{ rank=same; {members} }}")
    for i, j in hasse_edges(P):
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
