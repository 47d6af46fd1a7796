import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from semimodlat import (FinitePoset, InvolutionNotClosed, NoBounds, NoInvolution, NotALattice,
                        NotAPartialOrder, NotOrthoposet, hasse_edges, is_antitone_involution,
                        is_atomic, is_boolean_algebra, is_complementation, is_distributive,
                        is_iso_MO2, is_lattice, is_modular, is_orthomodular_poset,
                        is_orthoposet, n5_witness, orthomodular_witness, poset_from_subsets,
                        to_dot)
from semimodlat.poset import (atoms, benzene, chain, find_isomorphism, m3_sublattices, mo2,
                              n5_sublattices, powerset_poset, antiisomorphic_to_powerset)


def from_covers(m, covers, involution=None):
    le = {(i, i) for i in range(m)} | set(covers)
    changed = True
    while changed:
        changed = False
        for a, b in list(le):
            for c, d in list(le):
                if b == c and (a, d) not in le:
                    le.add((a, d))
                    changed = True
    return FinitePoset([[(i, j) in le for j in range(m)] for i in range(m)],
                       involution=involution)


N5 = from_covers(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])
M3 = from_covers(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])


def test_benzene_is_orthoposet_not_orthomodular():
    B = benzene()
    assert is_orthoposet(B)
    assert not is_orthomodular_poset(B)
    x, y, reason = orthomodular_witness(B)
    assert B.leq[x][y] and reason == "orthomodular law fails"


def test_mo2():
    P = mo2()
    assert is_orthomodular_poset(P) and is_iso_MO2(P)
    assert is_modular(P) and not is_distributive(P)
    assert len(hasse_edges(P)) == 8
    assert not is_iso_MO2(powerset_poset(2))


def test_pentagon_and_diamond():
    assert is_lattice(N5) and not is_modular(N5)
    assert n5_witness(N5) == (0, 1, 2, 3, 4)
    assert is_modular(M3) and not is_distributive(M3)
    assert list(m3_sublattices(M3)) == [(0, 1, 2, 3, 4)]
    assert list(n5_sublattices(M3)) == []


def test_boolean_and_atoms():
    P = powerset_poset(3)
    assert is_boolean_algebra(P) and is_atomic(P)
    assert atoms(P) == [1, 2, 4]
    assert is_orthomodular_poset(P)
    assert antiisomorphic_to_powerset(P, 3)
    assert not antiisomorphic_to_powerset(chain(8), 3)


def test_chain():
    C = chain(4)
    assert is_distributive(C) and not is_boolean_algebra(C)
    assert is_antitone_involution(C) and not is_complementation(C)
    with pytest.raises(NotOrthoposet):
        orthomodular_witness(C)
    assert len(hasse_edges(C)) == 3


def test_sup_inf_absent():
    # two incomparable elements with two incomparable upper bounds below top
    P = from_covers(6, [(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 5), (4, 5)])
    assert P.sup(1, 2) is None and P.inf(3, 4) is None
    assert not is_lattice(P)
    with pytest.raises(NotALattice):
        is_modular(P)


def test_errors():
    with pytest.raises(NotAPartialOrder):
        FinitePoset([[True, True], [True, True]])
    with pytest.raises(NotAPartialOrder):
        FinitePoset([[True, False], [False, False]])
    with pytest.raises(NoBounds):
        FinitePoset([[True, False], [False, True]])
    with pytest.raises(NoInvolution):
        is_orthoposet(N5)
    with pytest.raises(InvolutionNotClosed):
        FinitePoset(N5.leq, involution=[4, 3, 2, 1, 7])


def test_intransitive_rejected():
    leq = [[True, True, False], [False, True, True], [False, False, True]]
    with pytest.raises(NotAPartialOrder):
        FinitePoset(leq)


def test_from_subsets_and_dot():
    P = poset_from_subsets([0b1, 0b11, 0b101, 0b111], involution=[3, 2, 1, 0],
                           labels=["0", "a", "b", "1"])
    assert hasse_edges(P) == [(0, 1), (0, 2), (1, 3), (2, 3)]
    dot = to_dot(P, "L")
    assert dot.startswith('digraph "L" {')
    assert "rankdir=BT;" in dot
    assert '{ rank=same; n1; n2; }' in dot
    assert dot.count("->") == 4
    assert to_dot(P, "L") == dot


def test_isomorphism_respects_involution():
    # same order as MO2, but the involution pairs atoms differently: still isomorphic
    Q = FinitePoset(mo2().leq, involution=[5, 3, 4, 1, 2, 0])
    f = find_isomorphism(Q, mo2())
    assert f is not None
    assert all(f[Q.involution[i]] == mo2().involution[f[i]] for i in range(6))
    # an involution with fixed atoms cannot match
    R = FinitePoset(mo2().leq, involution=[5, 1, 2, 3, 4, 0])
    assert find_isomorphism(R, mo2()) is None
    assert find_isomorphism(R, mo2(), respect_involution=False) is not None


def test_dual_and_heights():
    assert benzene().dual().heights == [3, 2, 1, 2, 1, 0]
    assert N5.heights == [0, 1, 2, 1, 3]


def compare(els, le, inv):
    m = len(els)
    P = FinitePoset([[(i, j) in le for j in range(m)] for i in range(m)], involution=inv)
    want = oracles.verdicts(els, le, inv)
    assert is_lattice(P) == want["lattice"]
    if want["lattice"]:
        assert is_modular(P) == want["modular"]
        assert is_distributive(P) == want["distributive"]
        assert is_boolean_algebra(P) == want["boolean"]
    assert atoms(P) == want["atoms"]
    assert is_atomic(P) == want["atomic"]
    if inv is not None:
        assert is_antitone_involution(P) == want["antitone_involution"]
        assert is_complementation(P) == want["complementation"]
        assert is_orthoposet(P) == want["orthoposet"]
        if want["orthoposet"]:
            assert is_orthomodular_poset(P) == want["orthomodular"]


@given(st.integers(2, 10), st.integers(0, 2**32 - 1), st.booleans())
def test_verdicts_match_definitional_oracle(size, seed, symmetric):
    rng = random.Random(seed)
    els, le = oracles.random_bounded_poset(rng, size, symmetric)
    inv = oracles.reverse_involution(size) if symmetric else oracles.random_involution(rng, size)
    compare(els, le, inv)
