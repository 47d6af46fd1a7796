import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import semiring_axioms_hold
from semimodlat import (AxiomViolation, NotALattice, NotARing, ShapeError, boolean_semiring,
                        builtin, chain_lattice, is_bounded_distributive_lattice, is_ring,
                        is_zero_meet_irreducible, modular_ring, validate_semiring)
from semimodlat.semiring import (AXIOM_ORDER, axiom_violations, classify, load_semiring,
                                 semiring_from_json)

BUILTINS = ["bool"] + [f"z{n}" for n in range(1, 17)] + [f"chain{n}" for n in range(2, 17)]


@pytest.mark.parametrize("name", BUILTINS)
def test_builtins_satisfy_axioms_by_oracle(name):
    S = builtin(name)
    assert semiring_axioms_hold(S.n, S.add, S.mul, S.zero, S.one)
    assert axiom_violations(S.n, S.add, S.mul, S.zero, S.one, full=True) == []


def test_boolean_tables():
    S = boolean_semiring()
    assert S.add == ((0, 1), (1, 1))
    assert S.mul == ((0, 0), (0, 1))
    assert S.labels == ("0", "1")


def test_gf2_tables_are_accepted():
    # 1 + 1 = 0 gives the field with two elements, a perfectly good semiring
    S = validate_semiring(2, [[0, 1], [1, 0]], [[0, 0], [0, 1]], 0, 1)
    assert is_ring(S)
    assert S == modular_ring(2)


def test_corrupted_boolean_reports_commutativity():
    with pytest.raises(AxiomViolation) as info:
        validate_semiring(2, [[0, 0], [1, 1]], [[0, 0], [0, 1]], 0, 1)
    assert info.value.axiom == "add-commutativity"
    assert info.value.witness == (0, 1)


def test_first_failing_axiom_follows_order():
    # everything wrong: constant tables
    viol = axiom_violations(3, [[1] * 3] * 3, [[2] * 3] * 3, 0, 1, full=True)
    names = [a for a, _ in viol]
    assert names == sorted(names, key=AXIOM_ORDER.index)
    assert viol[0][0] == "add-identity"


@pytest.mark.parametrize("add,mul,zero,one", [
    ([[0, 1]], [[0, 0], [0, 1]], 0, 1),
    ([[0, 1], [1, 2]], [[0, 0], [0, 1]], 0, 1),
    ([[0, 1], [1, 1]], [[0, 0], [0, 1]], 0, 5),
])
def test_shape_errors(add, mul, zero, one):
    with pytest.raises(ShapeError):
        validate_semiring(2, add, mul, zero, one)


def test_element_cap():
    Z = modular_ring(17)
    with pytest.raises(ShapeError):
        validate_semiring(17, Z.add, Z.mul, 0, 1)


def test_ring_and_negation():
    Z = modular_ring(4)
    assert Z.negation == (0, 3, 2, 1)
    assert Z.neg(1) == 3
    B = boolean_semiring()
    assert B.negation is None
    with pytest.raises(NotARing):
        B.neg(1)


def test_classification():
    assert classify(boolean_semiring()) == {
        "ring": False, "bounded_distributive_lattice": True,
        "zero_meet_irreducible": True, "trivial": False}
    assert classify(modular_ring(4))["zero_meet_irreducible"] is None
    assert classify(modular_ring(1))["trivial"]
    assert is_bounded_distributive_lattice(chain_lattice(5))
    assert is_zero_meet_irreducible(chain_lattice(5))
    with pytest.raises(NotALattice):
        is_zero_meet_irreducible(modular_ring(3))


def test_zero_meet_reducible_lattice():
    # the four-element Boolean lattice {0, a, b, 1}: a * b = 0
    join = [[0, 1, 2, 3], [1, 1, 3, 3], [2, 3, 2, 3], [3, 3, 3, 3]]
    meet = [[0, 0, 0, 0], [0, 1, 0, 1], [0, 0, 2, 2], [0, 1, 2, 3]]
    S = validate_semiring(4, join, meet, 0, 3)
    assert is_bounded_distributive_lattice(S)
    assert not is_zero_meet_irreducible(S)


def test_chain_labels():
    assert chain_lattice(3).labels == ("0", "a1", "1")
    with pytest.raises(KeyError):
        builtin("nope")


def test_json_round_trip(tmp_path):
    S = chain_lattice(4)
    path = tmp_path / "s.json"
    path.write_text(json.dumps(S.to_json()))
    T = load_semiring(path)
    assert T == S and T.labels == S.labels


def test_json_errors():
    with pytest.raises(ShapeError):
        semiring_from_json({"elements": ["0", "1"], "zero": "0", "one": "1"})
    with pytest.raises(ShapeError):
        semiring_from_json({"elements": ["0", "1"], "zero": "0", "one": "2",
                            "add": [["0", "1"], ["1", "1"]], "mul": [["0", "0"], ["0", "1"]]})


def test_json_labels_in_violation():
    doc = {"elements": ["o", "i"], "zero": "o", "one": "i",
           "add": [["o", "o"], ["i", "i"]], "mul": [["o", "o"], ["o", "i"]]}
    with pytest.raises(AxiomViolation) as info:
        semiring_from_json(doc)
    assert info.value.labels == ("o", "i")


tables = st.integers(1, 3).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n), min_size=n, max_size=n),
    st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n), min_size=n, max_size=n),
    st.integers(0, n - 1), st.integers(0, n - 1)))


@given(tables)
def test_validator_agrees_with_oracle(t):
    n, add, mul, zero, one = t
    expected = semiring_axioms_hold(n, add, mul, zero, one)
    try:
        validate_semiring(n, add, mul, zero, one)
        got = True
    except AxiomViolation:
        got = False
    assert got == expected
