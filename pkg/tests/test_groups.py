import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from tensorsquare import groups as gr
from tensorsquare.catalog import CATALOG, abelian_product, cyclic, dihedral, resolve

from .conftest import group

SMALL = [n for n, e in CATALOG.items() if e.order <= 27 and not n.startswith("gdc")]


def z4_table():
    return [[(i + j) % 4 for j in range(4)] for i in range(4)]


def test_trivial_table():
    G = gr.group_from_mul_table(1, [[0]])
    assert G.order == 1


def test_z4_table_one_generator():
    G = gr.group_from_mul_table(4, z4_table())
    assert G.order == 4 and len(G.generators) == 1


def test_identity_relocated():
    # Z_3 with the identity stored at index 2
    perm = [2, 0, 1]  # index -> residue
    back = {r: i for i, r in enumerate(perm)}
    mul = [[back[(perm[i] + perm[j]) % 3] for j in range(3)] for i in range(3)]
    G = gr.group_from_mul_table(3, mul)
    assert G.order == 3 and G.mul(0, 1) == 1


def test_non_associative_rejected():
    S3 = dihedral(3, "s3")
    mul = S3.mul_table.copy()
    # swap two products in one row to break associativity but keep a Latin square
    a, b = 1, 2
    row = mul[3].copy()
    i, j = int(np.flatnonzero(row == a)[0]), int(np.flatnonzero(row == b)[0])
    mul[3, i], mul[3, j] = b, a
    with pytest.raises(gr.NotAGroup) as e:
        gr.group_from_mul_table(6, mul)
    assert e.value.witness is not None


def test_subgroup_generated_examples():
    S3 = group("s3")
    assert gr.subgroup_generated(S3, []).order == 1
    three = [x for x in range(6) if S3.element_order(x) == 3][0]
    assert gr.subgroup_generated(S3, [three]).order == 3
    assert gr.subgroup_generated(S3, S3.generators).order == 6


def test_commutator_subgroup_examples():
    for name, want in [("z4", 1), ("s3", 3), ("d4", 2)]:
        G = group(name)
        assert gr.commutator_subgroup(G, G.whole(), G.whole()).order == want


def test_series_examples():
    assert [H.order for H in gr.derived_series(group("s3"))] == [6, 3, 1]
    assert [H.order for H in gr.derived_series(group("z6"))] == [6, 1]
    assert [H.order for H in gr.lower_central_series(group("d4"))] == [8, 2, 1]


def test_lambda_series_examples():
    assert [H.order for H in gr.lower_central_p_series(group("z2xz2xz2"), 2)] == [8, 1]
    assert [H.order for H in gr.lower_central_p_series(group("z4"), 2)] == [4, 2, 1]
    assert [H.order for H in gr.lower_central_p_series(group("d4"), 2)] == [8, 2, 1]
    with pytest.raises(gr.NotAPGroup):
        gr.lower_central_p_series(group("s3"))


def test_center_and_quotients():
    assert gr.center(group("s3")).order == 1
    Z4 = group("z4")
    Q, proj = gr.quotient_group(Z4, gr.subgroup_generated(Z4, [Z4.power(Z4.generators[0], 2)]))
    assert Q.order == 2
    D4 = group("d4")
    Q, proj = gr.quotient_group(D4, gr.center(D4))
    assert Q.order == 4 and gr.fingerprint(Q).exponent == 2
    proj.verify()


def test_not_normal_witness():
    S3 = group("s3")
    two = [x for x in range(6) if S3.element_order(x) == 2][0]
    with pytest.raises(gr.NotNormal):
        gr.quotient_group(S3, gr.subgroup_generated(S3, [two]))


def test_minimal_generator_count():
    assert gr.minimal_generator_count(group("z2xz2xz2")) == 3
    assert gr.minimal_generator_count(group("z8")) == 1
    assert gr.minimal_generator_count(group("d4")) == 2


def test_fingerprint_and_homs():
    assert gr.fingerprint(group("z6")).exponent == 6
    Z4, Z2, Z3 = cyclic(4), cyclic(2), cyclic(3)
    h = gr.hom_from_generator_images(Z4, Z2, [Z2.generators[0]])
    assert h.kernel().order == 2
    with pytest.raises(gr.NotAHomomorphism):
        gr.hom_from_generator_images(Z4, Z3, [Z3.generators[0]])


def test_fingerprint_distinguishes_d4_q8():
    assert gr.fingerprint(group("d4")) != gr.fingerprint(group("q8"))


def test_dict_round_trip(tmp_path):
    G = group("q8")
    path = tmp_path / "q8.json"
    path.write_text(json.dumps(gr.table_to_dict(G)))
    H = resolve(f"table:{path}")
    assert gr.fingerprint(H) == gr.fingerprint(G)


@pytest.mark.parametrize("name", SMALL)
def test_table_axioms(name):
    G = group(name)
    n = G.order
    x = np.arange(n)
    assert np.array_equal(G.mul_many(0, x), x) and np.array_equal(G.mul_many(x, 0), x)
    assert np.all(G.mul_many(x, G.inv[x]) == 0)
    assert gr.subgroup_generated(G, G.generators).order == n


@pytest.mark.parametrize("name", SMALL)
def test_series_properties(name):
    G = group(name)
    dseries = gr.derived_series(G)
    assert gr.commutator_subgroup(G, G.whole(), G.whole()) == (dseries[1] if len(dseries) > 1 else dseries[0])
    fp = gr.fingerprint(G)
    assert all(G.order % o == 0 for o in fp.derived_orders + fp.lower_central_orders)
    assert sum(c for _, c in fp.order_histogram) == G.order
    pk = gr.prime_power(G.order)
    if pk and G.order > 1:
        p = pk[0]
        lam = gr.lower_central_p_series(G, p)
        gam = gr.lower_central_series(G)
        for k, L in enumerate(lam):
            if k < len(gam):
                assert gam[k] <= L
            # x^(p^k) lies in lambda_{k+1}
            powers = G.power_many(np.arange(G.order), p**k)
            assert L.contains_all(powers)
        for k in range(len(lam) - 1):
            Q, _ = gr.quotient_group(gr.as_group(lam[k])[0],
                                     gr.restrict(lam[k + 1], gr.as_group(lam[k])[1]))
            assert Q.is_abelian() and gr.fingerprint(Q).exponent in (1, p)


@given(st.sampled_from(SMALL), st.lists(st.integers(0, 10**6), max_size=3))
def test_lagrange_and_quotients(name, seeds):
    G = group(name)
    H = gr.subgroup_generated(G, [s % G.order for s in seeds])
    assert G.order % H.order == 0
    N = gr.normal_closure(G, H.gens, G.generators)
    assert gr.is_normal(N)
    Q, proj = gr.quotient_group(G, N)
    assert Q.order * N.order == G.order
    assert proj.kernel() == N


@given(st.lists(st.integers(2, 6), min_size=1, max_size=3))
def test_abelian_products(orders):
    G = abelian_product(orders)
    assert G.is_abelian()
    from tensorsquare.abelian import AbelianType

    assert gr.abelianization(G) == AbelianType.from_cyclic(orders)
    assert gr.abelian_type_of(G.whole()) == AbelianType.from_cyclic(orders)
