"""Finite commutative semirings given by operation tables.

Elements are the integers ``0..n-1``; ``labels`` only matter for display and
serialization.  The zero and one are named explicitly, so they need not sit
at positions 0 and 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from pathlib import Path

from .errors import AxiomViolation, NotALattice, NotARing, ShapeError

DEFAULT_MAX_ELEMENTS = 16

# Checking order; the first failing axiom in this order is the one reported.
AXIOM_ORDER = (
    "add-associativity",
    "add-commutativity",
    "add-identity",
    "mul-associativity",
    "mul-commutativity",
    "mul-identity",
    "distributivity",
    "annihilation",
)


@dataclass(frozen=True, eq=False)
class FiniteSemiring:
    name: str
    labels: tuple
    add: tuple  # add[x][y] = x (+) y
    mul: tuple
    zero: int
    one: int
    _fingerprint: tuple = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_fingerprint", (self.add, self.mul, self.zero, self.one))

    def __eq__(self, other):
        if not isinstance(other, FiniteSemiring):
            return NotImplemented
        return self._fingerprint == other._fingerprint

    def __hash__(self):
        return hash(self._fingerprint)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def elements(self) -> range:
        return range(self.n)

    def plus(self, x: int, y: int) -> int:
        return self.add[x][y]

    def times(self, x: int, y: int) -> int:
        return self.mul[x][y]

    def label(self, x: int) -> str:
        return self.labels[x]

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown element label {label!r}") from None

    @cached_property
    def negation(self):
        """Tuple mapping each element to its additive inverse, or None."""
        neg = []
        for x in self.elements:
            inv = [y for y in self.elements if self.add[x][y] == self.zero]
            if not inv:
                return None
            neg.append(inv[0])
        return tuple(neg)

    def neg(self, x: int) -> int:
        negation = self.negation
        if negation is None:
            raise NotARing(f"{self.name} has no additive inverses")
        return negation[x]

    def to_json(self) -> dict:
        lab = self.labels
        return {
            "name": self.name,
            "elements": list(lab),
            "zero": lab[self.zero],
            "one": lab[self.one],
            "add": [[lab[v] for v in row] for row in self.add],
            "mul": [[lab[v] for v in row] for row in self.mul],
        }


def _check_shape(n, add, mul, zero, one):
    if not isinstance(n, int) or n < 1:
        raise ShapeError(f"element count must be a positive integer, got {n!r}")
    for name, table in (("add", add), ("mul", mul)):
        if len(table) != n or any(len(row) != n for row in table):
            raise ShapeError(f"{name} table is not {n}x{n}")
        for row in table:
            for v in row:
                if not isinstance(v, int) or not 0 <= v < n:
                    raise ShapeError(f"{name} table entry {v!r} outside [0, {n})")
    for name, v in (("zero", zero), ("one", one)):
        if not isinstance(v, int) or not 0 <= v < n:
            raise ShapeError(f"{name} index {v!r} outside [0, {n})")


def axiom_violations(n, add, mul, zero, one, *, full=False):
    """Exhaustively check the commutative semiring axioms.

    Returns a list of ``(axiom, witness)`` in :data:`AXIOM_ORDER`.  Unless
    ``full`` is set, only the first witness of the first failing axiom is
    collected; with ``full`` every failing axiom contributes its first
    witness.
    """
    E = range(n)
    found = []

    def first(axiom, witnesses):
        for w in witnesses:
            found.append((axiom, w))
            return True
        return False

    checks = (
        ("add-associativity", ((x, y, z) for x, y, z in product(E, E, E)
                               if add[add[x][y]][z] != add[x][add[y][z]])),
        ("add-commutativity", ((x, y) for x, y in product(E, E) if add[x][y] != add[y][x])),
        ("add-identity", ((x,) for x in E if add[x][zero] != x or add[zero][x] != x)),
        ("mul-associativity", ((x, y, z) for x, y, z in product(E, E, E)
                               if mul[mul[x][y]][z] != mul[x][mul[y][z]])),
        ("mul-commutativity", ((x, y) for x, y in product(E, E) if mul[x][y] != mul[y][x])),
        ("mul-identity", ((x,) for x in E if mul[x][one] != x or mul[one][x] != x)),
        ("distributivity", ((x, y, z) for x, y, z in product(E, E, E)
                            if mul[add[x][y]][z] != add[mul[x][z]][mul[y][z]])),
        ("annihilation", ((x,) for x in E if mul[x][zero] != zero or mul[zero][x] != zero)),
    )
    for axiom, witnesses in checks:
        if first(axiom, witnesses) and not full:
            break
    return found


def validate_semiring(n, add, mul, zero, one, *, labels=None, name="S",
                      max_elements=DEFAULT_MAX_ELEMENTS, full_report=False) -> FiniteSemiring:
    """Build a :class:`FiniteSemiring`, raising AxiomViolation/ShapeError on bad input."""
    _check_shape(n, add, mul, zero, one)
    if n > max_elements:
        raise ShapeError(f"{n} elements exceeds the cap of {max_elements}")
    if labels is None:
        labels = tuple(str(i) for i in range(n))
    labels = tuple(labels)
    if len(labels) != n or len(set(labels)) != n:
        raise ShapeError("labels must be n distinct names")
    violations = axiom_violations(n, add, mul, zero, one, full=full_report)
    if violations:
        raise AxiomViolation(violations, labels)
    return FiniteSemiring(
        name=name,
        labels=labels,
        add=tuple(tuple(row) for row in add),
        mul=tuple(tuple(row) for row in mul),
        zero=zero,
        one=one,
    )


def is_ring(S: FiniteSemiring) -> bool:
    return S.negation is not None


def lattice_order(S: FiniteSemiring):
    """x <= y iff x (+) y = y, as a set of pairs."""
    return {(x, y) for x in S.elements for y in S.elements if S.add[x][y] == y}


def is_bounded_distributive_lattice(S: FiniteSemiring) -> bool:
    E = S.elements
    add, mul = S.add, S.mul
    if any(add[x][x] != x or mul[x][x] != x for x in E):
        return False
    for x, y in product(E, E):
        if add[x][mul[x][y]] != x or mul[x][add[x][y]] != x:
            return False
    # zero is bottom, one is top of the induced order
    return all(add[S.zero][x] == x and add[x][S.one] == S.one for x in E)


def is_zero_meet_irreducible(S: FiniteSemiring) -> bool:
    """x*y = 0 implies x = 0 or y = 0 (meet is the multiplication)."""
    if not is_bounded_distributive_lattice(S):
        raise NotALattice(f"{S.name} is not a bounded distributive lattice")
    z = S.zero
    return all(S.mul[x][y] != z or z in (x, y) for x, y in product(S.elements, S.elements))


def classify(S: FiniteSemiring) -> dict:
    lattice = is_bounded_distributive_lattice(S)
    return {
        "ring": is_ring(S),
        "bounded_distributive_lattice": lattice,
        "zero_meet_irreducible": is_zero_meet_irreducible(S) if lattice else None,
        "trivial": S.n == 1,
    }


# ---------------------------------------------------------------- builders

def boolean_semiring() -> FiniteSemiring:
    return validate_semiring(
        2, [[0, 1], [1, 1]], [[0, 0], [0, 1]], 0, 1, labels=("0", "1"), name="bool")


def modular_ring(n: int) -> FiniteSemiring:
    """The ring of residues modulo n (n = 1 gives the trivial semiring)."""
    if n < 1:
        raise ValueError("modulus must be >= 1")
    E = range(n)
    return validate_semiring(
        n,
        [[(x + y) % n for y in E] for x in E],
        [[(x * y) % n for y in E] for x in E],
        0,
        1 % n,
        name=f"z{n}",
        max_elements=max(n, DEFAULT_MAX_ELEMENTS),
    )


def chain_lattice(n: int) -> FiniteSemiring:
    """The n-element chain with max as addition and min as multiplication."""
    if n < 2:
        raise ValueError("a chain semiring needs at least 2 elements")
    E = range(n)
    labels = ["0"] + [f"a{i}" for i in range(1, n - 1)] + ["1"]
    return validate_semiring(
        n,
        [[max(x, y) for y in E] for x in E],
        [[min(x, y) for y in E] for x in E],
        0,
        n - 1,
        labels=labels,
        name=f"chain{n}",
        max_elements=max(n, DEFAULT_MAX_ELEMENTS),
    )


def builtin(name: str) -> FiniteSemiring:
    """Resolve ``bool``, ``zN`` or ``chainN``."""
    if name == "bool":
        return boolean_semiring()
    if name.startswith("chain") and name[5:].isdigit():
        return chain_lattice(int(name[5:]))
    if name.startswith("z") and name[1:].isdigit():
        return modular_ring(int(name[1:]))
    raise KeyError(f"unknown builtin semiring {name!r}")


# ------------------------------------------------------------- json input

def semiring_from_json(doc: dict, *, max_elements=DEFAULT_MAX_ELEMENTS,
                       full_report=False) -> FiniteSemiring:
    """Parse ``{"name", "elements", "zero", "one", "add", "mul"}`` (labels throughout)."""
    try:
        labels = [str(x) for x in doc["elements"]]
        pos = {lab: i for i, lab in enumerate(labels)}
        if len(pos) != len(labels):
            raise ShapeError("duplicate element labels")

        def table(key):
            return [[pos[str(v)] for v in row] for row in doc[key]]

        add, mul = table("add"), table("mul")
        zero, one = pos[str(doc["zero"])], pos[str(doc["one"])]
    except KeyError as exc:
        raise ShapeError(f"missing or unknown key/label: {exc}") from None
    except TypeError as exc:
        raise ShapeError(f"malformed semiring document: {exc}") from None
    return validate_semiring(len(labels), add, mul, zero, one, labels=labels,
                             name=str(doc.get("name", "S")), max_elements=max_elements,
                             full_report=full_report)


def load_semiring(path, **kwargs) -> FiniteSemiring:
    with open(Path(path), encoding="utf-8") as fh:
        return semiring_from_json(json.load(fh), **kwargs)
