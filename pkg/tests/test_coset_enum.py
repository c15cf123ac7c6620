import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from tensorsquare.catalog import CATALOG
from tensorsquare.coset_enum import (
    CosetOverflow,
    ElementCapExceeded,
    perm_image,
    todd_coxeter,
)
from tensorsquare.presentation import Presentation, parse_presentation

from .conftest import group

S3 = parse_presentation("a, b | a^3, b^2, abab")


def test_cyclic_four():
    T = todd_coxeter(parse_presentation("a | a^4"), ())
    assert T.coset_count == 4
    G, emb = perm_image(T, parse_presentation("a | a^4"))
    assert G.order == 4 and G.is_abelian() and G.element_order(emb["a"]) == 4


def test_s3_over_b():
    T = todd_coxeter(S3, [(2,)])
    assert T.coset_count == 3


def test_trivial_group():
    P = parse_presentation("a | a")
    T = todd_coxeter(P, ())
    assert T.coset_count == 1
    assert perm_image(T, P)[0].order == 1


def test_s3_regular_image():
    G, _ = perm_image(todd_coxeter(S3, ()), S3)
    assert G.order == 6 and not G.is_abelian()


def test_perm_image_over_subgroup():
    # action on the 3 cosets of <b> is faithful for S3
    G, _ = perm_image(todd_coxeter(S3, [(2,)]), S3)
    assert G.order == 6


def test_overflow():
    with pytest.raises(CosetOverflow) as e:
        todd_coxeter(parse_presentation("a, b | a^2, b^3"), (), max_cosets=500)
    assert e.value.max_cosets == 500


def test_element_cap():
    T = todd_coxeter(parse_presentation("a | a^40"), ())
    with pytest.raises(ElementCapExceeded):
        perm_image(T, parse_presentation("a | a^40"), element_cap=10)


def test_table_invariants():
    T = todd_coxeter(S3, ())
    assert T.relators_hold(S3.relators)
    for i in range(T.ngens):
        col = T.rows[:, 2 * i]
        assert sorted(col) == list(range(T.coset_count))
        assert np.array_equal(T.rows[col, 2 * i + 1], np.arange(T.coset_count))


def test_coset_zero_is_subgroup():
    T = todd_coxeter(S3, [(2,)])
    assert T.trace(0, (2,)) == 0


def test_deterministic():
    P = parse_presentation("a, b | a^4, b^2, (ab)^2")
    assert todd_coxeter(P, ()) == todd_coxeter(P, ())
    assert np.array_equal(todd_coxeter(P, ()).rows, todd_coxeter(P, ()).rows)


@given(st.integers(1, 30))
def test_cyclic_index(n):
    assert todd_coxeter(Presentation(("a",), ((1,) * n,)), ()).coset_count == n


@given(st.integers(2, 9), st.integers(1, 4))
def test_dihedral_subgroup_index(n, k):
    # <r, s | r^n, s^2, (rs)^2> over <r^k> has index 2 gcd(n, k)
    P = Presentation(("r", "s"), ((1,) * n, (2, 2), (1, 2, 1, 2)))
    T = todd_coxeter(P, [(1,) * k])
    from math import gcd

    assert T.coset_count == 2 * gcd(n, k)


def cayley_table_presentation(G):
    """One generator per nontrivial element, one relator per product."""
    n = G.order
    gens = tuple(f"g{i}" for i in range(1, n))
    rels = []
    for x in range(1, n):
        for y in range(1, n):
            z = G.mul(x, y)
            rels.append((x, y) if z == 0 else (x, y, -z))
    return Presentation(gens or ("g1",), tuple(rels) or ((1,),))


@pytest.mark.parametrize("name", [n for n, e in CATALOG.items() if e.order <= 16 and not n.startswith("gdc")])
def test_cayley_round_trip(name):
    G = group(name)
    P = cayley_table_presentation(G)
    T = todd_coxeter(P, ())
    assert T.coset_count == G.order
    assert T.relators_hold(P.relators)
