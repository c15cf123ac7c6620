"""Acceptance criteria, one test each; a PASS/FAIL line per criterion is
printed in the terminal summary."""

import functools
import math
import time


from tensorsquare import groups as gr
from tensorsquare import nu as nm
from tensorsquare import theorems as th
from tensorsquare.abelian import AbelianType, gamma_whitehead, nabla_abelian, tensor_abelian
from tensorsquare.catalog import CATALOG, STANDARD_CORPUS, abelian_product, resolve
from tensorsquare.config import RunConfig

from .conftest import ACCEPTANCE

CFG = RunConfig()
_CASES: dict = {}
_SUITES: dict = {}


def criterion(n: int, title: str):
    def deco(fn):
        @functools.wraps(fn)
        def wrapped(*a, **kw):
            try:
                fn(*a, **kw)
            except BaseException:
                ACCEPTANCE[n] = ("FAIL", title)
                raise
            ACCEPTANCE[n] = ("PASS", title)

        return wrapped

    return deco


def suite(name: str):
    if name not in _SUITES:
        _SUITES[name] = th.run_suite(name, STANDARD_CORPUS, CFG, _CASES)
    return _SUITES[name]


def order_of(name: str) -> int:
    return CATALOG[name].order


def only_overflow_skips(outcomes):
    """Outcomes skipped because nu(G) did not fit in the enumeration limits."""
    return sorted({o.group_name for o in outcomes
                   if o.status == "skipped" and ("Overflow" in o.reason or "CapExceeded" in o.reason)})


def fails(outcomes, claims=None):
    return [o.to_dict() for o in outcomes if o.status == "fail" and (claims is None or o.claim_id in claims)]


def cyclic_type(n):
    return AbelianType.from_cyclic([n])


def gamma_oracle(orders):
    """Gamma of Z_{n1} x ... from the rules on each given cyclic factor."""
    parts = []
    for n in orders:
        parts.append(n if n == 0 or n % 2 else 2 * n)
    for i in range(len(orders)):
        for j in range(i + 1, len(orders)):
            parts.append(math.gcd(orders[i], orders[j]))
    return AbelianType.from_cyclic(parts)


@criterion(1, "Gamma functor rules on cyclic groups and two-factor products")
def test_c01_gamma():
    t0 = time.perf_counter()
    assert gamma_whitehead(AbelianType(1, ())) == AbelianType(1, ())
    for n in range(1, 13):
        want = AbelianType.from_cyclic([n if n % 2 else 2 * n])
        assert gamma_whitehead(cyclic_type(n)) == want == gamma_oracle([n])
    for m in range(1, 13):
        for n in range(1, 13):
            A = AbelianType.from_cyclic([m, n])
            assert gamma_whitehead(A) == gamma_oracle([m, n]), (m, n)
    assert time.perf_counter() - t0 < 1.0


@criterion(2, "nabla of a free abelian group of rank n has rank n(n+1)/2")
def test_c02_nabla_free():
    t0 = time.perf_counter()
    for n in range(1, 5):
        nab, _ = nabla_abelian(AbelianType(n, ()))
        assert nab.free_rank == n * (n + 1) // 2
    assert time.perf_counter() - t0 < 1.0


@criterion(3, "A3 (x) A3 has order 3 through nu(Z_3)")
def test_c03_a3():
    G = resolve("z3")
    nm.nu_image(resolve("z2"))  # load compiled kernels
    t0 = time.perf_counter()
    ni = nm.nu_image(G)
    assert ni.T.order == 3
    assert time.perf_counter() - t0 < 1.0


@criterion(4, "|(Z_p)^d (x) (Z_p)^d| = p^(d^2) for p in {2,3}, d in {1,2} via nu and d = 3 via the abelian oracle")
def test_c04_lower_bound():
    for p in (2, 3):
        for d in (1, 2):
            G = abelian_product([p] * d)
            assert nm.nu_image(G).T.order == p ** (d * d)
        A = AbelianType.from_cyclic([p] * 3)
        assert tensor_abelian(A, A).order == p**9
    # the nu route agrees for (Z_2)^3 as well
    assert nm.nu_image(abelian_product([2, 2, 2])).T.order == 2**9


@criterion(5, "|(Z_4)^2 (x) (Z_4)^2| = 2^8 with |nu| = 65536")
def test_c05_homocyclic():
    t0 = time.perf_counter()
    ni = nm.nu_image(resolve("z4xz4"))
    assert ni.nu.order == 65536
    assert ni.T.order == 2**8
    d, n = 2, 4
    assert ni.T.order == 2 ** (n * d)
    assert time.perf_counter() - t0 < 30.0


@criterion(6, "G_{2,2} (p=2) has order 32 and |G (x) G| = 2^10")
def test_c06_gdc22():
    t0 = time.perf_counter()
    G = th.build_gdc(th.GdcSpec(2, 2, 2))
    assert G.order == 32
    ni = nm.nu_image(G, "generators")
    assert ni.T.order == 2**10
    assert ni.stats["certificate"] == "exhaustive"
    assert time.perf_counter() - t0 < 600.0


@criterion(7, "direct presentation and nu route give equal fingerprints for corpus groups of order <= 12")
def test_c07_dual_oracle():
    outs = suite("oracle")
    small = {n for n in STANDARD_CORPUS if order_of(n) <= 12}
    got = {o.group_name: o.status for o in outs}
    assert {n for n in small if got[n] != "pass"} == set()
    assert not fails(outs)


@criterion(8, "identity suites: exhaustive up to order 16, >= 10^4 samples above, zero violations")
def test_c08_identities():
    outs = suite("identities")
    assert not fails(outs)
    skipped = only_overflow_skips(outs)
    assert all(o.status != "skipped" or o.group_name in skipped for o in outs)
    for o in outs:
        if o.status == "pass" and o.claim_id == "conjugation-by-tensors":
            n = order_of(o.group_name)
            assert o.detail["checked"] == (n**4 if n <= 16 else 10_000)
    print("groups beyond the enumeration limits:", skipped)


@criterion(9, "derived/lower central series equalities and the length and class bounds on the corpus")
def test_c09_series():
    outs = suite("series")
    assert not fails(outs)
    skipped = only_overflow_skips(outs)
    for o in outs:
        if o.status == "skipped" and o.group_name not in skipped:
            assert o.claim_id in ("tensor-derived-length", "tensor-class-bound")
    # every solvable corpus group is checked; the nilpotent ones for class
    for o in outs:
        if o.claim_id == "tensor-derived-length" and o.group_name not in skipped:
            assert o.status == "pass"


@criterion(10, "splitting under odd |G^ab| or a complement; N elementary abelian of bounded 2-rank")
def test_c10_splitting():
    outs = suite("splitting")
    assert not fails(outs, {"splitting", "n-elementary-abelian", "nabla-modulo-n",
                            "tensor-modulo-n-order", "order-matching-transversal"})
    skipped = only_overflow_skips(outs)
    ne = {o.group_name: o.status for o in outs if o.claim_id == "n-elementary-abelian"}
    assert all(s == "pass" for g, s in ne.items() if g not in skipped)
    sp = {o.group_name: o for o in outs if o.claim_id == "splitting"}
    for must in ("s3", "heis27", "z3xz3", "z2", "z4", "z2xz2"):
        assert sp[must].status == "pass"


@criterion(11, "AbelianType(J) = Gamma(G^ab) + M(G) for odd |G^ab|")
def test_c11_j():
    outs = [o for o in suite("splitting") if o.claim_id == "j-decomposition"]
    assert not fails(outs)
    skipped = only_overflow_skips(outs)
    for o in outs:
        if o.group_name in skipped:
            continue
        odd = gr.abelianization(_CASES[o.group_name].G).order % 2 == 1
        assert o.status == ("pass" if odd else "skipped")
    assert sum(o.status == "pass" for o in outs) >= 6


@criterion(12, "tensor center = exterior center meet G' when N = 1; (Z_2)^2 capable, Z_4 not")
def test_c12_centers():
    outs = suite("centers")
    assert not fails(outs)
    assert nm.is_capable(nm.nu_image(resolve("z2xz2")))
    assert not nm.is_capable(nm.nu_image(resolve("z4")))


@criterion(13, "p-group suite: lambda swap, order bounds and Schur bounds on every corpus p-group")
def test_c13_pgroups():
    outs = suite("bounds")
    bad = fails(outs)
    for b in bad:
        print("violation:", b["claim_id"], b["group_name"], b["witness"])
    assert not bad


@criterion(14, "G_{2,1} exterior square matches (G_{2,2})' and the tensor square order, p = 2, 3")
def test_c14_lambdagroups():
    t0 = time.perf_counter()
    for p in (2, 3):
        (o,) = th.verify_lambdagroups(th.GdcSpec(2, 1, p), CFG, _CASES)
        assert o.status == "pass", o.detail
        assert o.detail["nabla"] == AbelianType.from_cyclic([p] * 3)
        assert o.detail["tensor_order"] == p**3 * o.detail["next_derived_order"]
    assert time.perf_counter() - t0 < 60.0


def _mobius(n):
    mu, m, q = 1, n, 2
    while q * q <= m:
        if m % q == 0:
            m //= q
            if m % q == 0:
                return 0
            mu = -mu
        q += 1
    return -mu if m > 1 else mu


@criterion(15, "witt_rank sums divide exactly for d <= 6, i <= 8 and m_2 = 2, 1, 2")
def test_c15_witt():
    for d in range(1, 7):
        for i in range(1, 9):
            s = sum(_mobius(t) * d ** (i // t) for t in range(1, i + 1) if i % t == 0)
            assert s % i == 0
            assert th.witt_rank(d, i) == s // i
    assert [th.witt_rank(2, i) for i in (1, 2, 3)] == [2, 1, 2]
