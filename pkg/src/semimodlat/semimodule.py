"""The free semimodule S^k with its standard basis and inner product.

Vectors are plain tuples of semiring element indices.  The elements of M are
enumerated lexicographically (coordinate 0 most significant), so index 0 is
always the zero vector; most of the heavier machinery works on these indices
and on Python ints used as bitsets over them.
"""

from __future__ import annotations

from functools import cached_property
from itertools import product

from .errors import RankMismatch, SizeCapExceeded
from .semiring import FiniteSemiring

DEFAULT_SIZE_CAP = 4096


class FreeSemimodule:
    """M = S^k over a finite commutative semiring S."""

    def __init__(self, semiring: FiniteSemiring, rank: int, *, size_cap: int = DEFAULT_SIZE_CAP):
        if rank < 1:
            raise ValueError("rank must be a positive integer")
        size = semiring.n ** rank
        if size > size_cap:
            raise SizeCapExceeded(f"|S|^k = {size} exceeds the cap of {size_cap}")
        self.semiring = semiring
        self.rank = rank
        self.elements = tuple(product(range(semiring.n), repeat=rank))
        self._index = {v: i for i, v in enumerate(self.elements)}

    def __repr__(self):
        return f"FreeSemimodule({self.semiring.name}, rank={self.rank})"

    def __len__(self):
        return len(self.elements)

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def zero(self) -> tuple:
        return self.elements[0]

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    @cached_property
    def basis(self) -> tuple:
        S, k = self.semiring, self.rank
        return tuple(tuple(S.one if j == i else S.zero for j in range(k)) for i in range(k))

    def index(self, x) -> int:
        try:
            return self._index[tuple(x)]
        except KeyError:
            raise RankMismatch(f"{x!r} is not an element of {self!r}") from None

    def _check(self, x):
        if len(x) != self.rank:
            raise RankMismatch(f"vector {x!r} does not have length {self.rank}")

    def add(self, x, y) -> tuple:
        self._check(x)
        self._check(y)
        add = self.semiring.add
        return tuple(add[a][b] for a, b in zip(x, y))

    def scale(self, a: int, x) -> tuple:
        self._check(x)
        mul = self.semiring.mul
        return tuple(mul[a][c] for c in x)

    def inner(self, x, y) -> int:
        self._check(x)
        self._check(y)
        S = self.semiring
        acc = S.zero
        for a, b in zip(x, y):
            acc = S.add[acc][S.mul[a][b]]
        return acc

    def orthogonal(self, x, y) -> bool:
        return self.inner(x, y) == self.semiring.zero

    # -- index-level tables, built on first use ----------------------------

    @cached_property
    def add_table(self) -> list:
        """add_table[i][j] = index of elements[i] + elements[j]."""
        els, idx = self.elements, self._index
        return [[idx[self.add(x, y)] for y in els] for x in els]

    @cached_property
    def scale_table(self) -> list:
        """scale_table[a][i] = index of a * elements[i]."""
        return [[self._index[self.scale(a, x)] for x in self.elements]
                for a in self.semiring.elements]

    @cached_property
    def orth_masks(self) -> list:
        """orth_masks[i] = bitset of all j with elements[i] . elements[j] = 0."""
        els = self.elements
        out = []
        for x in els:
            m = 0
            for j, y in enumerate(els):
                if self.orthogonal(x, y):
                    m |= 1 << j
            out.append(m)
        return out

    @cached_property
    def line_masks(self) -> list:
        """line_masks[i] = bitset of the cyclic subsemimodule S * elements[i]."""
        out = []
        for i in range(self.size):
            m = 0
            for row in self.scale_table:
                m |= 1 << row[i]
            out.append(m)
        return out

    def mask_of(self, vectors) -> int:
        m = 0
        for v in vectors:
            m |= 1 << self.index(v)
        return m

    def vectors_of(self, mask: int) -> list:
        return [self.elements[i] for i in iter_bits(mask)]


def iter_bits(mask: int):
    """Indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def free_semimodule(S: FiniteSemiring, k: int, *, size_cap: int = DEFAULT_SIZE_CAP) -> FreeSemimodule:
    return FreeSemimodule(S, k, size_cap=size_cap)


def add(M: FreeSemimodule, x, y):
    return M.add(x, y)


def scale(M: FreeSemimodule, a, x):
    return M.scale(a, x)


def inner_product(M: FreeSemimodule, x, y):
    return M.inner(x, y)


def closure_mask(M: FreeSemimodule, seed: int) -> int:
    """Least bitset containing 0 and ``seed`` closed under + and scaling."""
    add_t, scale_t = M.add_table, M.scale_table
    mask = seed | 1
    members = []
    todo = list(iter_bits(mask))
    while todo:
        i = todo.pop()
        new = []
        for row in scale_t:
            j = row[i]
            if not mask >> j & 1:
                mask |= 1 << j
                new.append(j)
        row = add_t[i]
        for j in members:
            s = row[j]
            if not mask >> s & 1:
                mask |= 1 << s
                new.append(s)
        members.append(i)
        todo.extend(new)
    return mask


def closure(M: FreeSemimodule, generators=()):
    """The subsemimodule generated by ``generators`` (computed to fixpoint)."""
    from .sublattice import Subsemimodule

    return Subsemimodule(M, closure_mask(M, M.mask_of(generators)))


def check_nondegenerate(M: FreeSemimodule) -> bool:
    """Distinct vectors are separated by their inner products with the basis."""
    signatures = {tuple(M.inner(a, b) for b in M.basis) for a in M.elements}
    return len(signatures) == M.size


def semimodule_axiom_violations(M: FreeSemimodule, limit: int | None = None):
    """Exhaustive check of the semimodule axioms; returns ``(axiom, witness)`` pairs."""
    S = M.semiring
    out = []
    scalars, els = S.elements, M.elements
    z = M.zero

    def bad(axiom, witness):
        out.append((axiom, witness))
        return limit is not None and len(out) >= limit

    for x, y in product(els, els):
        if M.add(x, y) != M.add(y, x) and bad("commutativity", (x, y)):
            return out
    for x, y, w in product(els, els, els):
        if M.add(M.add(x, y), w) != M.add(x, M.add(y, w)) and bad("associativity", (x, y, w)):
            return out
    for x in els:
        if M.add(x, z) != x and bad("identity", (x,)):
            return out
        if M.scale(S.one, x) != x and bad("unit", (x,)):
            return out
        if M.scale(S.zero, x) != z and bad("zero-scalar", (x,)):
            return out
    for a in scalars:
        if M.scale(a, z) != z and bad("zero-vector", (a,)):
            return out
        for x, y in product(els, els):
            if M.scale(a, M.add(x, y)) != M.add(M.scale(a, x), M.scale(a, y)) \
                    and bad("vector-distributivity", (a, x, y)):
                return out
        for b in scalars:
            for x in els:
                if M.scale(S.add[a][b], x) != M.add(M.scale(a, x), M.scale(b, x)) \
                        and bad("scalar-distributivity", (a, b, x)):
                    return out
                if M.scale(S.mul[a][b], x) != M.scale(a, M.scale(b, x)) \
                        and bad("compatibility", (a, b, x)):
                    return out
    return out
