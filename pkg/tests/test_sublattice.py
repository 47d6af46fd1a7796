import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from semimodlat import (AmbientMismatch, EnumerationCapExceeded, FreeSemimodule, builtin,
                        closed_subsemimodules, enumerate_subsemimodules, intersect, is_closed,
                        join_closed, perp, sum_family, sum_sub)
from semimodlat.golden import EXAMPLE1, EXAMPLE2
from semimodlat.sublattice import (IndexedLattice, check_lemma3, check_prop1, check_sampled_laws,
                                   check_th2_hypothesis, check_theorem1, coordinate_subsemimodule,
                                   from_vectors, full_sub, is_subsemimodule_mask, perp_mask,
                                   sample_subsemimodules, zero_sub)

SMALL = [("bool", 1), ("bool", 2), ("bool", 3), ("z2", 2), ("z3", 2), ("z4", 2),
         ("z6", 1), ("chain3", 1), ("chain3", 2), ("chain4", 1)]


def as_sets(subs):
    return {frozenset(U.members) for U in subs}


def named(M, ex):
    S = M.semiring
    return {n: frozenset(tuple(S.index(c) for c in v) for v in vs)
            for n, vs in ex["subsemimodules"].items()}


@pytest.mark.parametrize("name,k", SMALL)
def test_enumeration_matches_powerset_oracle(name, k):
    M = FreeSemimodule(builtin(name), k)
    assert as_sets(enumerate_subsemimodules(M)) == oracles.powerset_subsemimodules(M.semiring, k)


def test_canonical_order(bool2):
    subs = enumerate_subsemimodules(bool2)
    keys = [U.sort_key for U in subs]
    assert keys == sorted(keys)
    assert subs[0] == zero_sub(bool2) and subs[-1] == full_sub(bool2)


@pytest.mark.parametrize("ex", [EXAMPLE1, EXAMPLE2], ids=["bool2", "z4_2"])
def test_reference_perp_tables(ex):
    M = FreeSemimodule(builtin(ex["semiring"]), ex["rank"])
    gold = named(M, ex)
    for name, U in gold.items():
        assert oracles.perp_set(M.semiring, 2, U) == gold[ex["perp"][name]]
        assert frozenset(perp(M, list(U)).members) == gold[ex["perp"][name]]


@pytest.mark.parametrize("name,k", SMALL)
def test_closed_routes_agree(name, k):
    M = FreeSemimodule(builtin(name), k)
    subs = enumerate_subsemimodules(M)
    via_perp = closed_subsemimodules(M, subs)
    generated = closed_subsemimodules(M)
    definitional = [U for U in subs if perp_mask(M, perp_mask(M, U.mask)) == U.mask]
    assert via_perp == generated == definitional


def test_closed_of_bool2(bool2):
    gold = named(bool2, EXAMPLE1)
    got = as_sets(closed_subsemimodules(bool2))
    assert got == {gold[n] for n in EXAMPLE1["closed"]}


def test_cap():
    M = FreeSemimodule(builtin("chain3"), 2)
    with pytest.raises(EnumerationCapExceeded):
        enumerate_subsemimodules(M, cap=10)
    with pytest.raises(EnumerationCapExceeded):
        closed_subsemimodules(M, cap=2)


def test_operations(bool2):
    U2 = from_vectors(bool2, [(0, 0), (0, 1)])
    U4 = from_vectors(bool2, [(0, 0), (1, 0)])
    assert (U2 + U4) == full_sub(bool2) == sum_sub(U2, U4)
    assert intersect(U2, U4) == zero_sub(bool2) == (U2 & U4)
    assert U2.perp() == U4 and is_closed(U2) and U2.is_closed()
    assert join_closed(U2, U4) == full_sub(bool2)
    assert sum_family(bool2, []) == zero_sub(bool2)
    with pytest.raises(ValueError):
        from_vectors(bool2, [(1, 1), (1, 0)])


def test_ambient_mismatch(bool2):
    other = FreeSemimodule(builtin("bool"), 2)
    with pytest.raises(AmbientMismatch):
        zero_sub(bool2) + zero_sub(other)


def test_u3_not_closed(bool2):
    U3 = from_vectors(bool2, [(0, 0), (1, 1)])
    assert not is_closed(U3)
    assert U3.perp() == zero_sub(bool2)


def test_coordinate_subsemimodule(bool2):
    assert set(coordinate_subsemimodule(bool2, [0]).members) == {(0, 0), (0, 1)}
    assert coordinate_subsemimodule(bool2, []) == full_sub(bool2)


@pytest.mark.parametrize("name,k", SMALL)
def test_theorem_checks(name, k):
    M = FreeSemimodule(builtin(name), k)
    lat = IndexedLattice(M)
    for rep in (check_prop1(M, lat), check_lemma3(M, lat), check_theorem1(M, lat)):
        assert rep.ok, rep.failures
    holds, rep = check_th2_hypothesis(M, lat)
    assert rep.ok or not holds


def test_prop1_clause_names(bool2):
    clauses = [e["clause"] for e in check_prop1(bool2)]
    assert len(clauses) == 8


def test_is_subsemimodule_mask(bool2):
    assert is_subsemimodule_mask(bool2, 0b0011)
    assert not is_subsemimodule_mask(bool2, 0b0110)
    assert not is_subsemimodule_mask(bool2, 0b1001 ^ 1)


@given(st.sampled_from(SMALL[:6]), st.data())
def test_perp_properties(inst, data):
    M = FreeSemimodule(builtin(inst[0]), inst[1])
    a = data.draw(st.integers(0, M.full_mask))
    b = a | data.draw(st.integers(0, M.full_mask))
    pa, pb = perp_mask(M, a), perp_mask(M, b)
    assert is_subsemimodule_mask(M, pa)
    assert pb & ~pa == 0
    assert a & ~perp_mask(M, pa) == 0
    assert perp_mask(M, perp_mask(M, pa)) == pa


@pytest.mark.parametrize("name,k", [("bool", 2), ("z4", 2), ("chain3", 2)])
def test_sampled_laws_on_full_lattice(name, k):
    M = FreeSemimodule(builtin(name), k)
    masks = [U.mask for U in enumerate_subsemimodules(M)]
    closed = [U.mask for U in closed_subsemimodules(M)]
    reports = check_sampled_laws(M, masks, closed)
    assert set(reports) == {"prop1-sampled", "lemma3-sampled", "theorem1-sampled"}
    assert all(rep.ok for rep in reports.values())


def test_sampled_laws_catch_unclosed_member(bool2):
    closed = [U.mask for U in closed_subsemimodules(bool2)]
    u3 = bool2.mask_of([(0, 0), (1, 1)])
    reports = check_sampled_laws(bool2, closed, closed + [u3])
    failed = {e["clause"] for e in reports["theorem1-sampled"].failures}
    assert "closed-antitone-involution" in failed


def test_sample_is_deterministic():
    M = FreeSemimodule(builtin("z3"), 3)
    a = sample_subsemimodules(M, 20, random.Random("x"))
    b = sample_subsemimodules(M, 20, random.Random("x"))
    assert a == b and all(is_subsemimodule_mask(M, m) for m in a)
