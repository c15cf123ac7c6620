import math
from itertools import product

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from tensorsquare.abelian import (
    AbelianType,
    abelian_invariants,
    abelian_type_from_orders,
    gamma_whitehead,
    nabla_abelian,
    smith_normal_form,
    subgroup_order,
    tensor_abelian,
)

matrices = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(st.integers(-30, 30), min_size=n, max_size=n), min_size=m, max_size=m)
    )
)
types = st.builds(
    AbelianType.from_cyclic, st.lists(st.integers(1, 32), min_size=0, max_size=4)
)


def det(M):
    return round(np.linalg.det(np.array(M, dtype=float)))


def test_snf_examples():
    S, U, V = smith_normal_form([[2, 0], [0, 3]])
    assert [S[0, 0], S[1, 1]] == [1, 6]
    S, _, _ = smith_normal_form([[0, 0], [0, 0]])
    assert not S.any()
    S, _, _ = smith_normal_form([[1, 0], [0, 1]])
    assert [S[0, 0], S[1, 1], S[0, 1], S[1, 0]] == [1, 1, 0, 0]


def test_invariants_examples():
    assert abelian_invariants(np.zeros((0, 2), dtype=int), 2) == AbelianType(2, ())
    assert abelian_invariants([[2, 0], [0, 2]]) == AbelianType(0, (2, 2))
    assert abelian_invariants([[2, 1], [0, 3]]) == AbelianType(0, (6,))


def test_no_wraparound():
    big = 2**70
    S, _, _ = smith_normal_form([[big, 0], [0, big * 3]])
    assert S[1, 1] == big * 3


def test_tensor_examples():
    Z = AbelianType.from_cyclic
    assert tensor_abelian(Z([2]), Z([3])).is_trivial
    assert tensor_abelian(Z([2, 2]), Z([2, 2])) == Z([2, 2, 2, 2])
    assert tensor_abelian(Z([4]), Z([6])) == Z([2])
    assert tensor_abelian(Z([0]), Z([5])) == Z([5])
    assert tensor_abelian(Z([0]), Z([0])) == Z([0])


def test_gamma_examples():
    Z = AbelianType.from_cyclic
    assert gamma_whitehead(Z([0])) == Z([0])
    assert gamma_whitehead(Z([2])) == Z([4])
    assert gamma_whitehead(Z([2, 3])) == Z([4, 3])


def test_nabla_examples():
    Z = AbelianType.from_cyclic
    assert nabla_abelian(Z([7])) == (Z([7]), Z([]))
    for n in range(1, 5):
        assert nabla_abelian(Z([0] * n))[0].free_rank == n * (n + 1) // 2
    nab, e = nabla_abelian(Z([2, 4]))
    assert nab.order == 16 and e == Z([2])


def test_type_rejects_bad_chains():
    with pytest.raises(ValueError):
        AbelianType(0, (4, 6))
    with pytest.raises(ValueError):
        AbelianType(0, (1,))


def lattice_nabla(A: AbelianType):
    """Order of <a_i (x) a_i, a_i (x) a_j + a_j (x) a_i> and type of the cokernel in A (x) A."""
    cyc = A.cyclic()
    k = len(cyc)
    idx = {(i, j): i * k + j for i in range(k) for j in range(k)}
    rel = []
    for (i, j), c in idx.items():
        g = math.gcd(cyc[i], cyc[j])
        if g:
            row = [0] * (k * k)
            row[c] = g
            rel.append(row)
    gens = []
    for i in range(k):
        for j in range(i, k):
            row = [0] * (k * k)
            row[idx[i, j]] += 1
            if i != j:
                row[idx[j, i]] += 1
            gens.append(row)
    return subgroup_order(rel, k * k, gens), abelian_invariants(rel + gens, k * k)


@given(st.lists(st.integers(2, 12), min_size=1, max_size=3))
def test_nabla_matches_lattice_oracle(orders):
    A = AbelianType.from_cyclic(orders)
    nab, e = nabla_abelian(A)
    order, coker = lattice_nabla(A)
    assert nab.order == order
    assert e == coker


@given(matrices)
def test_snf_round_trip(M):
    S, U, V = smith_normal_form(M)
    M = np.array(M, dtype=object)
    assert np.array_equal(U.dot(M).dot(V), S)
    assert abs(det(U.tolist())) == 1 and abs(det(V.tolist())) == 1
    d = [S[i, i] for i in range(min(S.shape))]
    assert all(x >= 0 for x in d)
    nz = [x for x in d if x]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    off = S.copy()
    for i in range(min(S.shape)):
        off[i, i] = 0
    assert not off.any()


@given(types)
def test_type_invariants(A):
    assert all(b % a == 0 for a, b in zip(A.factors, A.factors[1:]))
    assert all(d >= 2 for d in A.factors)
    assert AbelianType.from_cyclic(A.cyclic()) == A
    assert AbelianType.from_dict(A.to_dict()) == A


@given(types, types, types)
def test_tensor_symmetric_and_distributive(A, B, C):
    assert tensor_abelian(A, B) == tensor_abelian(B, A)
    assert tensor_abelian(A, B + C) == tensor_abelian(A, B) + tensor_abelian(A, C)


@given(types)
def test_gamma_nabla_relations(A):
    g = gamma_whitehead(A)
    nab, e = nabla_abelian(A)
    assert g.order % nab.order == 0

    def odd(n):
        while n % 2 == 0:
            n //= 2
        return n

    assert odd(g.order) == odd(nab.order)
    assert nab.order * e.order == tensor_abelian(A, A).order
    if A.order % 2:
        assert g == nab


@given(st.lists(st.integers(1, 16), max_size=3))
def test_type_from_order_histogram(orders):
    A = AbelianType.from_cyclic(orders)
    hist = {}
    for v in product(*(range(n) for n in orders)):
        o = math.lcm(*[n // math.gcd(n, x) for n, x in zip(orders, v)]) if orders else 1
        hist[o] = hist.get(o, 0) + 1
    assert abelian_type_from_orders(hist) == A
