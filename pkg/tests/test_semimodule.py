import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from semimodlat import FreeSemimodule, RankMismatch, SizeCapExceeded, builtin, closure
from semimodlat.semimodule import (check_nondegenerate, closure_mask, iter_bits,
                                   semimodule_axiom_violations)

SMALL = [("bool", 2), ("bool", 3), ("z4", 2), ("z6", 1), ("chain3", 2), ("z2", 3)]


def test_enumeration_order(bool2):
    assert bool2.elements == ((0, 0), (0, 1), (1, 0), (1, 1))
    assert bool2.zero == (0, 0)
    assert bool2.basis == ((1, 0), (0, 1))


def test_size_cap():
    with pytest.raises(SizeCapExceeded):
        FreeSemimodule(builtin("z9"), 4)
    assert FreeSemimodule(builtin("z8"), 4).size == 4096


def test_rank_mismatch(bool2):
    with pytest.raises(RankMismatch):
        bool2.add((0, 1), (0, 1, 1))
    with pytest.raises(RankMismatch):
        bool2.index((0, 2))


@pytest.mark.parametrize("name,k", SMALL)
def test_axioms(name, k):
    M = FreeSemimodule(builtin(name), k)
    assert semimodule_axiom_violations(M) == []


@pytest.mark.parametrize("name,k", SMALL)
def test_tables_match_oracle(name, k):
    M = FreeSemimodule(builtin(name), k)
    S = M.semiring
    for i, x in enumerate(M.elements):
        for j, y in enumerate(M.elements):
            assert M.elements[M.add_table[i][j]] == oracles.vadd(S, x, y)
            assert bool(M.orth_masks[i] >> j & 1) == (oracles.dot(S, x, y) == S.zero)
        for a in S.elements:
            assert M.elements[M.scale_table[a][i]] == oracles.vscale(S, a, x)


@pytest.mark.parametrize("name,k", SMALL)
def test_nondegenerate(name, k):
    assert check_nondegenerate(FreeSemimodule(builtin(name), k))


def test_inner_product_z4(z4_2):
    assert z4_2.inner((1, 2), (3, 2)) == 3
    assert z4_2.orthogonal((2, 1), (2, 0))


def test_closure_of_u6_generator(bool2):
    # the vectors (1,0) and (1,1) generate {0, (1,0), (1,1)} in B^2
    U = closure(bool2, [(1, 1), (1, 0)])
    assert set(U.members) == {(0, 0), (1, 0), (1, 1)}


def test_closure_z4_single_vector(z4_2):
    assert set(closure(z4_2, [(2, 1)]).members) == {(0, 0), (2, 1), (0, 2), (2, 3)}


def test_iter_bits():
    assert list(iter_bits(0b101001)) == [0, 3, 5]
    assert list(iter_bits(0)) == []


instances = st.sampled_from(SMALL).map(lambda t: FreeSemimodule(builtin(t[0]), t[1]))


@given(instances, st.data())
def test_inner_product_bilinear(M, data):
    S = M.semiring
    el = st.sampled_from(M.elements)
    x, y, z = data.draw(el), data.draw(el), data.draw(el)
    a = data.draw(st.sampled_from(list(S.elements)))
    assert M.inner(x, y) == M.inner(y, x)
    assert M.inner(M.add(x, y), z) == S.add[M.inner(x, z)][M.inner(y, z)]
    assert M.inner(M.scale(a, x), y) == S.mul[a][M.inner(x, y)]


@given(instances, st.data())
def test_closure_operator_laws(M, data):
    seed = data.draw(st.integers(0, M.full_mask))
    bigger = seed | data.draw(st.integers(0, M.full_mask))
    c = closure_mask(M, seed)
    assert c & seed == seed
    assert closure_mask(M, c) == c
    assert closure_mask(M, bigger) & c == c
    assert oracles.is_subsemimodule(M.semiring, M.rank, set(M.vectors_of(c)))
