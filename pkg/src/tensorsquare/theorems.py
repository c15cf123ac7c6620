"""Witt ranks, the groups G_{d,c}, and the verification suites.

Every check returns a :class:`VerificationOutcome`; a failing outcome
carries a witness that reproduces the failure (a tuple of element indices
or the orders that disagree).  Checks whose hypotheses do not apply to a
group are reported as skipped with the reason.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Callable, Iterable, Sequence

import numpy as np
from sympy import divisors, mobius

from . import groups as gr
from . import nu as nm
from .abelian import AbelianType, gamma_whitehead, nabla_abelian
from .config import RunConfig
from .coset_enum import (
    DEFAULT_ELEMENT_CAP,
    DEFAULT_MAX_COSETS,
    CosetOverflow,
    ElementCapExceeded,
    perm_image,
    todd_coxeter,
)
from .groups import GroupTable, Subgroup
from .presentation import Presentation, Word, commutator, power

SAMPLES = 10_000


# --------------------------------------------------------------------------
# Witt ranks and G_{d,c}


def witt_rank(d: int, i: int) -> int:
    """Rank of the i-th lower central factor of the free group of rank d."""
    if d < 1 or i < 1:
        raise ValueError("witt_rank needs d >= 1 and i >= 1")
    total = sum(int(mobius(t)) * d ** (i // t) for t in divisors(i))
    if total % i:
        raise AssertionError(f"Moebius sum {total} not divisible by {i}")
    return total // i


def gdc_order_exponent(d: int, c: int) -> int:
    return sum((c + 1 - j) * witt_rank(d, j) for j in range(1, c + 1))


class OrderMismatch(AssertionError):
    pass


@dataclass(frozen=True)
class GdcSpec:
    d: int
    c: int
    p: int
    expected_order_exponent: int | None = None

    def __post_init__(self):
        if self.d < 1 or self.c < 1:
            raise ValueError("G_{d,c} needs d >= 1 and c >= 1")
        if gr.prime_power(self.p) != (self.p, 1):
            raise ValueError(f"{self.p} is not prime")
        m = gdc_order_exponent(self.d, self.c)
        if self.expected_order_exponent is None:
            object.__setattr__(self, "expected_order_exponent", m)
        elif self.expected_order_exponent != m:
            raise ValueError(f"stored exponent {self.expected_order_exponent} differs from {m}")

    @property
    def name(self) -> str:
        return f"gdc:{self.d},{self.c},{self.p}"

    @property
    def order(self) -> int:
        return self.p ** self.expected_order_exponent


def left_normed_commutators(d: int, weight: int) -> list[Word]:
    """``[x_{i1}, ..., x_{iw}]`` for every index tuple, as words."""
    out = []
    for idx in product(range(1, d + 1), repeat=weight):
        w: Word = (idx[0],)
        for i in idx[1:]:
            w = commutator(w, (i,))
        out.append(w)
    return out


def gdc_presentation(spec: GdcSpec) -> Presentation:
    d, c, p = spec.d, spec.c, spec.p
    rels: list[Word] = [w for w in left_normed_commutators(d, c + 1) if w]
    for j in range(1, c + 1):
        for w in left_normed_commutators(d, j):
            if w:
                rels.append(power(w, p ** (c + 1 - j)))
    names = tuple(f"x{i}" for i in range(1, d + 1))
    return Presentation(names, tuple(rels), spec.name)


def build_gdc(spec: GdcSpec, max_cosets: int = DEFAULT_MAX_COSETS,
              element_cap: int = DEFAULT_ELEMENT_CAP) -> GroupTable:
    """Enumerate G_{d,c} and check order, class, abelianization and lambda-series."""
    if spec.order > element_cap:
        raise ElementCapExceeded(f"{spec.name} has order {spec.order} > cap {element_cap}")
    P = gdc_presentation(spec)
    T = todd_coxeter(P, (), max_cosets)
    G, _ = perm_image(T, P, element_cap)
    G.name = spec.name
    if G.order != spec.order:
        raise OrderMismatch(f"{spec.name}: enumerated order {G.order}, expected {spec.order}")
    d, c, p = spec.d, spec.c, spec.p
    if gr.nilpotency_class(G) != c:
        raise OrderMismatch(f"{spec.name}: class {gr.nilpotency_class(G)} instead of {c}")
    ab = gr.abelianization(G)
    if ab != AbelianType(0, (p ** c,) * d):
        raise OrderMismatch(f"{spec.name}: abelianization {ab} instead of (Z_{p ** c})^{d}")
    lam = gr.lower_central_p_series(G, p)
    if len(lam) != c + 1:
        raise OrderMismatch(f"{spec.name}: lambda-series has {len(lam)} terms, expected {c + 1}")
    for k in range(1, c + 1):
        want = p ** sum(witt_rank(d, j) for j in range(1, k + 1))
        if lam[k - 1].order // lam[k].order != want:
            raise OrderMismatch(f"{spec.name}: lambda factor {k} has order "
                                f"{lam[k - 1].order // lam[k].order}, expected {want}")
    return G


# --------------------------------------------------------------------------
# outcomes


@dataclass
class VerificationOutcome:
    claim_id: str
    group_name: str
    status: str  # pass | fail | skipped
    witness: object = None
    reason: str = ""
    elapsed: float = 0.0
    detail: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in ("pass", "fail", "skipped"):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == "fail" and self.witness is None:
            raise ValueError("a failing outcome needs a witness")

    @property
    def key(self):
        return (self.claim_id, self.group_name)

    def to_dict(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "group_name": self.group_name,
            "status": self.status,
            "witness": _jsonable(self.witness),
            "reason": self.reason,
            "elapsed": round(self.elapsed, 4),
            "detail": _jsonable(self.detail),
        }


def _jsonable(v):
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, np.generic):
        return v.item()
    if isinstance(v, AbelianType):
        return v.to_dict()
    return v


def _outcome(claim: str, group: str, ok: bool, witness=None, t0: float = 0.0, **detail) -> VerificationOutcome:
    return VerificationOutcome(claim, group, "pass" if ok else "fail",
                               None if ok else (witness if witness is not None else detail),
                               elapsed=time.perf_counter() - t0 if t0 else 0.0, detail=detail)


def _skip(claim: str, group: str, reason: str) -> VerificationOutcome:
    return VerificationOutcome(claim, group, "skipped", reason=reason)


# --------------------------------------------------------------------------
# per-group workspace


class Case:
    """One corpus group with its nu image and analysis, built on demand."""

    def __init__(self, name: str, config: RunConfig, group: GroupTable | None = None):
        self.name = name
        self.config = config
        self._group = group
        self.error: str | None = None

    @cached_property
    def G(self) -> GroupTable:
        if self._group is not None:
            return self._group
        from .catalog import resolve

        return resolve(self.name, self.config.max_cosets, self.config.element_cap)

    @cached_property
    def ni(self) -> nm.NuImage | None:
        try:
            return nm.nu_image(self.G, self.config.nu_mode, self.config.max_cosets,
                               self.config.element_cap, seed=self.config.seed)
        except (CosetOverflow, ElementCapExceeded) as e:
            self.error = f"{type(e).__name__}: {e}"
            return None

    @cached_property
    def an(self) -> nm.TensorAnalysis | None:
        return None if self.ni is None else nm.TensorAnalysis(self.ni)

    @cached_property
    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.config.seed)

    def tuples(self, arity: int) -> np.ndarray:
        n = self.G.order
        if n <= nm.EXHAUSTIVE_LIMIT:
            grids = np.meshgrid(*([np.arange(n)] * arity), indexing="ij")
            return np.stack([g.ravel() for g in grids], axis=1)
        return self.rng.integers(0, n, size=(SAMPLES, arity))


def _needs_nu(fn: Callable) -> Callable:
    def wrapped(case: Case, *args, **kw) -> list[VerificationOutcome]:
        if case.ni is None:
            return [_skip(cid, case.name, case.error or "nu(G) unavailable") for cid in fn.claims]
        return fn(case, *args, **kw)

    wrapped.claims = fn.claims
    wrapped.__name__ = fn.__name__
    wrapped.__doc__ = fn.__doc__
    return wrapped


def claims(*ids):
    def deco(fn):
        fn.claims = ids
        return fn

    return deco


def _central(nu: GroupTable, zs: np.ndarray, gens: Sequence[int]) -> np.ndarray:
    ok = np.ones(zs.shape[0], dtype=bool)
    for g in gens:
        ok &= nu.mul_many(zs, g) == nu.mul_many(g, zs)
    return ok


def _first_bad(mask: np.ndarray, rows: np.ndarray):
    bad = np.flatnonzero(~mask)
    return None if bad.size == 0 else [int(v) for v in np.atleast_1d(rows[bad[0]])]


# --------------------------------------------------------------------------
# identities in nu(G)


@_needs_nu
@claims("conjugation-by-tensors", "mixed-triple-commutators", "bracket-inversion",
        "diagonal-central", "symmetric-product-central", "diagonal-trivial-on-derived",
        "commuting-pairs-central", "derived-antisymmetry", "subgroup-bracket-symmetry",
        "derived-center-bracket")
def verify_identities(case: Case) -> list[VerificationOutcome]:
    ni, G, nu = case.ni, case.G, case.ni.nu
    a, b = ni.a, ni.b
    out = []
    name = case.name

    t0 = time.perf_counter()
    q = case.tuples(4)
    g1, g2, g3, g4 = q.T
    t = ni.tensor(g1, g2)
    c1 = nu.conj_many(ni.tensor(g3, g4), t)
    c2 = nu.conj_many(a(G.comm_many(g3, g4)), t)
    c3 = nu.conj_many(nu.comm_many(b(g3), a(g4)), t)
    out.append(_outcome("conjugation-by-tensors", name, bool(np.all((c1 == c2) & (c2 == c3))),
                        _first_bad((c1 == c2) & (c2 == c3), q), t0, checked=len(q)))

    t0 = time.perf_counter()
    r = case.tuples(3)
    g1, g2, g3 = r.T
    variants = [
        nu.comm_many(nu.comm_many(b(g1), a(g2)), a(g3)),
        nu.comm_many(nu.comm_many(a(g1), b(g2)), a(g3)),
        nu.comm_many(nu.comm_many(a(g1), a(g2)), b(g3)),
        nu.comm_many(nu.comm_many(b(g1), b(g2)), a(g3)),
        nu.comm_many(nu.comm_many(b(g1), a(g2)), b(g3)),
        nu.comm_many(nu.comm_many(a(g1), b(g2)), b(g3)),
    ]
    same = np.all(np.stack(variants) == variants[0], axis=0)
    out.append(_outcome("mixed-triple-commutators", name, bool(same.all()), _first_bad(same, r), t0,
                        checked=len(r)))

    t0 = time.perf_counter()
    lhs = nu.comm_many(a(g1), b(G.comm_many(g2, g3)))
    rhs = nu.inv[nu.comm_many(nu.comm_many(a(g2), a(g3)), b(g1))]
    out.append(_outcome("bracket-inversion", name, bool(np.all(lhs == rhs)), _first_bad(lhs == rhs, r), t0,
                        checked=len(r)))

    t0 = time.perf_counter()
    allg = np.arange(G.order)
    diag = ni.tensor(allg, allg)
    ok = _central(nu, diag, nu.generators)
    out.append(_outcome("diagonal-central", name, bool(ok.all()), _first_bad(ok, allg), t0))

    t0 = time.perf_counter()
    pr = case.tuples(2)
    h1, h2 = pr.T
    sym = nu.mul_many(ni.tensor(h1, h2), ni.tensor(h2, h1))
    ok = _central(nu, sym, nu.generators)
    out.append(_outcome("symmetric-product-central", name, bool(ok.all()), _first_bad(ok, pr), t0,
                        checked=len(pr)))

    t0 = time.perf_counter()
    D = nm.derived_subgroup(G)
    dv = ni.tensor(D.elements, D.elements)
    out.append(_outcome("diagonal-trivial-on-derived", name, bool(np.all(dv == 0)),
                        _first_bad(dv == 0, D.elements), t0))

    t0 = time.perf_counter()
    T = ni.T
    commute = G.mul_many(h1, h2) == G.mul_many(h2, h1)
    c_rows = pr[commute]
    zs = np.concatenate([ni.tensor(c_rows[:, 0], c_rows[:, 1]), ni.tensor(c_rows[:, 1], c_rows[:, 0])])
    ok = _central(nu, zs, T.gens)
    rows2 = np.concatenate([c_rows, c_rows[:, ::-1]])
    out.append(_outcome("commuting-pairs-central", name, bool(ok.all()), _first_bad(ok, rows2), t0,
                        checked=int(len(rows2))))

    t0 = time.perf_counter()
    either = D.mask[h1] | D.mask[h2]
    rows = pr[either]
    lhs = nu.inv[ni.tensor(rows[:, 0], rows[:, 1])]
    rhs = ni.tensor(rows[:, 1], rows[:, 0])
    out.append(_outcome("derived-antisymmetry", name, bool(np.all(lhs == rhs)), _first_bad(lhs == rhs, rows), t0,
                        checked=int(len(rows))))

    t0 = time.perf_counter()
    witness = None
    A_list = [G.whole()] + [gr.subgroup_generated(G, [int(g)]) for g in _spread(G.order, 12)]
    B_list = [D] + [gr.subgroup_generated(G, [int(h)]) for h in D.elements[_spread(D.order, 6)]]
    for A in A_list:
        for B in B_list:
            if ni.bracket(A, B) != ni.bracket(B, A):
                witness = {"A_gens": list(A.gens), "B_gens": list(B.gens)}
                break
        if witness:
            break
    out.append(_outcome("subgroup-bracket-symmetry", name, witness is None, witness, t0,
                        pairs=len(A_list) * len(B_list)))

    t0 = time.perf_counter()
    Z = gr.center(G)
    v = ni.tensor(*[m.ravel() for m in np.meshgrid(D.elements, Z.elements, indexing="ij")])
    out.append(_outcome("derived-center-bracket", name, bool(np.all(v == 0)),
                        {"nontrivial": int(np.count_nonzero(v))}, t0))
    return out


def _spread(n: int, k: int) -> np.ndarray:
    """Up to k evenly spaced indices in range(n)."""
    return np.unique(np.linspace(0, n - 1, num=min(n, k)).astype(np.int64))


# --------------------------------------------------------------------------
# series


@_needs_nu
@claims("derived-series-of-tensor", "lower-central-of-tensor", "tensor-derived-length", "tensor-class-bound")
def verify_series(case: Case) -> list[VerificationOutcome]:
    ni, G = case.ni, case.G
    T = ni.T
    out = []
    t0 = time.perf_counter()
    dG = gr.derived_series(G)
    dT = gr.derived_series(T)
    witness = None
    for n in range(max(len(dG), len(dT))):
        Gn = dG[min(n, len(dG) - 1)]
        Tn = dT[min(n, len(dT) - 1)]
        if Tn != ni.bracket(Gn, Gn):
            witness = {"n": n, "tensor_term": Tn.order, "bracket": ni.bracket(Gn, Gn).order}
            break
    out.append(_outcome("derived-series-of-tensor", case.name, witness is None, witness, t0,
                        orders=[s.order for s in dT]))

    t0 = time.perf_counter()
    D = nm.derived_subgroup(G)
    gD = gr.lower_central_series(gr.as_group(D)[0]) if D.order > 1 else [D]
    # gamma_n(G') as subgroups of G
    if D.order > 1:
        Dg, emb = gr.as_group(D)
        gD = [gr.subgroup_from_elements(G, emb.image[s.elements]) for s in gr.lower_central_series(Dg)]
    gT = gr.lower_central_series(T)
    witness = None
    for n in range(1, max(len(gD), len(gT)) + 1):
        lhs = gT[min(n, len(gT) - 1)]
        Dn = gD[min(n - 1, len(gD) - 1)]
        r1, r2 = ni.bracket(Dn, D), ni.bracket(D, Dn)
        if not (lhs == r1 == r2):
            witness = {"n": n, "gamma": lhs.order, "left": r1.order, "right": r2.order}
            break
    out.append(_outcome("lower-central-of-tensor", case.name, witness is None, witness, t0,
                        orders=[s.order for s in gT]))

    t0 = time.perf_counter()
    d = gr.derived_length(G)
    if d is None:
        out.append(_skip("tensor-derived-length", case.name, "G is not solvable"))
    else:
        dt = gr.derived_length(T)
        out.append(_outcome("tensor-derived-length", case.name, dt in (d - 1, d),
                            {"G": d, "T": dt}, t0, G=d, T=dt))
    c = gr.nilpotency_class(G)
    if c is None:
        out.append(_skip("tensor-class-bound", case.name, "G is not nilpotent"))
    else:
        ct = gr.nilpotency_class(T)
        out.append(_outcome("tensor-class-bound", case.name, ct is not None and ct <= (c + 1) // 2,
                            {"G": c, "T": ct}, t0, G=c, T=ct))
    return out


# --------------------------------------------------------------------------
# splitting, J(G), centers


def two_rank(A: AbelianType) -> int:
    return A.rank(2)


def order_matching_transversal(G: GroupTable, ab: nm.Abelianization,
                               budget: int = 200_000) -> list[int] | None:
    """A transversal x_1..x_k with |x_i| = |x_i G'|, if one exists.

    Backtracks over bases of G^ab whose orders match the invariant factors,
    keeping only images whose coset holds an element of the same order.
    """
    Q, proj = ab.quotient, ab.projection
    qorders = Q.orders()
    gorders = G.orders()
    lift: dict[int, int] = {}
    for x in np.argsort(gorders, kind="stable"):
        y = int(proj.image[x])
        if y not in lift and gorders[x] == qorders[y]:
            lift[y] = int(x)
    want = list(ab.orders)
    steps = 0

    def extend(chosen: list[int], H: Subgroup) -> list[int] | None:
        nonlocal steps
        if len(chosen) == len(want):
            return chosen if H.order == Q.order else None
        o = want[len(chosen)]
        for y in sorted(lift):
            steps += 1
            if steps > budget:
                return None
            if qorders[y] != o:
                continue
            K = gr.subgroup_generated(Q, chosen + [y])
            if K.order != H.order * o:  # independence
                continue
            got = extend(chosen + [y], K)
            if got is not None:
                return got
        return None

    found = extend([], Q.trivial())
    return None if found is None else [lift[y] for y in found]


@_needs_nu
@claims("n-elementary-abelian", "nabla-modulo-n", "tensor-modulo-n-order", "splitting",
        "order-matching-transversal")
def verify_splitting(case: Case) -> list[VerificationOutcome]:
    an, ni, G = case.an, case.ni, case.G
    out = []
    name = case.name
    t0 = time.perf_counter()
    N = an.N
    Nt = gr.abelian_type_of(N)
    gab = an.ab.atype
    elem2 = all(f == 2 for f in Nt.factors)
    central = bool(_central(ni.nu, N.elements, an.T.gens).all())
    ok = elem2 and central and len(Nt.factors) <= two_rank(gab)
    out.append(_outcome("n-elementary-abelian", name, ok, {"N": Nt, "rk2_Gab": two_rank(gab)}, t0,
                        N=Nt, rk2_Gab=two_rank(gab)))

    t0 = time.perf_counter()
    nab_ab = nabla_abelian(gab)[0]
    got = nm.quotient_type(an.nabla, N)
    out.append(_outcome("nabla-modulo-n", name, got == nab_ab, {"nabla/N": got, "nabla(G^ab)": nab_ab}, t0))

    t0 = time.perf_counter()
    lhs = an.T.order // N.order
    rhs = nab_ab.order * an.exterior.order
    out.append(_outcome("tensor-modulo-n-order", name, lhs == rhs, {"|T/N|": lhs, "product": rhs}, t0))

    t0 = time.perf_counter()
    odd = gab.order % 2 == 1
    comp = None if odd else nm.has_complement(G, an.derived)
    if not odd and comp is None:
        out.append(_skip("splitting", name, "G^ab has even order and no complement to G' was found"))
    else:
        why = "odd |G^ab|" if odd else f"complement of order {comp.order}"
        direct = N.is_trivial and gr.join(an.nabla, an.E) == an.T
        iso_nabla = gr.abelian_type_of(an.nabla) == nab_ab
        ext_match = gr.fingerprint(an.E) == gr.fingerprint(an.exterior)
        ok = direct and iso_nabla and ext_match
        out.append(_outcome("splitting", name, ok,
                            {"N": N.order, "nabla_iso": iso_nabla, "E_vs_exterior": ext_match}, t0,
                            hypothesis=why))

    t0 = time.perf_counter()
    tr = order_matching_transversal(G, an.ab)
    if tr is None:
        out.append(_skip("order-matching-transversal", name,
                         "no lift of the canonical generators keeps its order"))
    else:
        E2 = nm.e_subgroup(ni, tr)
        N2 = gr.intersection(an.nabla, E2)
        ok = N2.is_trivial and gr.abelian_type_of(an.nabla) == nab_ab
        out.append(_outcome("order-matching-transversal", name, ok, {"transversal": tr, "N": N2.order}, t0,
                            transversal=tr))
    return out


@_needs_nu
@claims("j-decomposition")
def verify_j_decomposition(case: Case) -> list[VerificationOutcome]:
    an = case.an
    gab = an.ab.atype
    if gab.order % 2 == 0:
        return [_skip("j-decomposition", case.name, "G^ab has even order")]
    t0 = time.perf_counter()
    got = gr.abelian_type_of(an.J)
    want = gamma_whitehead(gab) + an.M
    return [_outcome("j-decomposition", case.name, got == want, {"J": got, "Gamma+M": want}, t0)]


@_needs_nu
@claims("center-nesting", "center-identity")
def verify_centers(case: Case) -> list[VerificationOutcome]:
    an, G = case.an, case.G
    t0 = time.perf_counter()
    Zt, Ze = an.tensor_center, an.exterior_center
    nested = Zt <= Ze and Ze <= gr.center(G) and Zt <= an.derived
    out = [_outcome("center-nesting", case.name, nested,
                    {"tensor_center": list(Zt.elements), "exterior_center": list(Ze.elements)}, t0,
                    capable=bool(Ze.is_trivial))]
    t0 = time.perf_counter()
    if not an.N.is_trivial:
        out.append(_skip("center-identity", case.name, "N is nontrivial"))
    else:
        meet = gr.intersection(Ze, an.derived)
        out.append(_outcome("center-identity", case.name, Zt == meet,
                            {"tensor_center": list(Zt.elements), "meet": list(meet.elements)}, t0))
    return out


# --------------------------------------------------------------------------
# p-group bounds


def _pgroup(case: Case):
    pk = gr.prime_power(case.G.order)
    return pk


@_needs_nu
@claims("lambda-swap")
def verify_lambda_swap(case: Case) -> list[VerificationOutcome]:
    pk = _pgroup(case)
    if pk is None:
        return [_skip("lambda-swap", case.name, "not a p-group")]
    t0 = time.perf_counter()
    G, ni = case.G, case.ni
    lam = gr.lower_central_p_series(G)
    for k, L in enumerate(lam, start=1):
        lhs, rhs = ni.bracket(L, G.whole()), ni.bracket(G.whole(), L)
        if lhs != rhs:
            return [_outcome("lambda-swap", case.name, False, {"k": k, "left": lhs.order, "right": rhs.order}, t0)]
    return [_outcome("lambda-swap", case.name, True, t0=t0, terms=len(lam))]


@_needs_nu
@claims("order-bounds")
def verify_order_bounds(case: Case) -> list[VerificationOutcome]:
    pk = _pgroup(case)
    if pk is None:
        return [_skip("order-bounds", case.name, "not a p-group")]
    t0 = time.perf_counter()
    p, n = pk
    d = gr.minimal_generator_count(case.G)
    t = case.ni.T.order
    lo, hi = p ** (d * d), p ** (n * d)
    return [_outcome("order-bounds", case.name, lo <= t <= hi, {"T": t, "lower": lo, "upper": hi}, t0,
                     T=t, lower=lo, upper=hi, lower_attained=t == lo, upper_attained=t == hi)]


def schur_bound_exponent(p: int, n: int, d: int) -> int:
    """Exponent e with |M(G)| <= p^e claimed for a p-group of order p^n, rank d."""
    twice = d * (2 * n - d - (1 if p % 2 else 3))
    return twice // 2


@_needs_nu
@claims("schur-bound")
def verify_schur_bound(case: Case) -> list[VerificationOutcome]:
    pk = _pgroup(case)
    if pk is None:
        return [_skip("schur-bound", case.name, "not a p-group")]
    t0 = time.perf_counter()
    p, n = pk
    d = gr.minimal_generator_count(case.G)
    e = schur_bound_exponent(p, n, d)
    bound = p ** max(e, 0)
    m = case.an.M.order
    detail = {"M": case.an.M, "bound": bound, "exponent": e, "n": n, "d": d,
              "nabla": case.an.nabla.order}
    return [_outcome("schur-bound", case.name, m <= bound, detail, t0, **detail)]


# --------------------------------------------------------------------------
# G_{d,c} exterior squares


LAMBDA_SPECS = (GdcSpec(2, 1, 2), GdcSpec(2, 1, 3), GdcSpec(2, 2, 2))


def verify_lambdagroups(spec: GdcSpec, config: RunConfig,
                        cases: dict[str, Case] | None = None) -> list[VerificationOutcome]:
    cid = "lambda-groups"
    name = spec.name
    t0 = time.perf_counter()
    cases = cases if cases is not None else {}
    case = cases.get(name) or Case(name, config)
    cases[name] = case
    try:
        case.G  # build now so an overflow lands in this handler
        H = build_gdc(GdcSpec(spec.d, spec.c + 1, spec.p), config.max_cosets, config.element_cap)
    except (CosetOverflow, ElementCapExceeded) as e:
        return [_skip(cid, name, f"{type(e).__name__}: {e}")]
    if case.ni is None:
        return [_skip(cid, name, case.error or "nu(G) unavailable")]
    an = case.an
    p, c, d = spec.p, spec.c, spec.d
    Hd = nm.derived_subgroup(H)
    fp_ok = gr.fingerprint(an.exterior) == gr.fingerprint(Hd)
    nab_want = AbelianType(0, (p ** c,) * (d * (d + 1) // 2))
    nab_got = gr.abelian_type_of(an.nabla)
    order_ok = an.T.order == p ** (c * d * (d + 1) // 2) * Hd.order
    ok = fp_ok and nab_got == nab_want and order_ok and an.splits
    return [_outcome(cid, name, ok, None, t0, exterior_matches=fp_ok, nabla=nab_got, nabla_expected=nab_want,
                     tensor_order=an.T.order, next_derived_order=Hd.order, splits=an.splits)]


# --------------------------------------------------------------------------
# oracle and question


@_needs_nu
@claims("dual-oracle")
def verify_dual_oracle(case: Case, limit: int = 12) -> list[VerificationOutcome]:
    G = case.G
    if G.order > limit:
        return [_skip("dual-oracle", case.name, f"|G| > {limit}")]
    t0 = time.perf_counter()
    D = nm.direct_tensor_square(G, case.config.max_cosets)
    f1, f2 = gr.fingerprint(D), gr.fingerprint(case.ni.T)
    return [_outcome("dual-oracle", case.name, f1 == f2, {"direct": f1.to_dict(), "nu": f2.to_dict()}, t0)]


@_needs_nu
@claims("question")
def explore(case: Case) -> list[VerificationOutcome]:
    t0 = time.perf_counter()
    rec = nm.explore_question(case.ni)
    return [VerificationOutcome("question", case.name, "pass", elapsed=time.perf_counter() - t0,
                                detail=rec.to_dict())]


# --------------------------------------------------------------------------
# suites


SUITES: dict[str, tuple[Callable, ...]] = {
    "identities": (verify_identities,),
    "series": (verify_series,),
    "splitting": (verify_splitting, verify_j_decomposition),
    "centers": (verify_centers,),
    "bounds": (verify_lambda_swap, verify_order_bounds, verify_schur_bound),
    "oracle": (verify_dual_oracle,),
    "question": (explore,),
}
ASSERTIVE = ("identities", "series", "splitting", "centers", "bounds", "oracle", "lambdagroups")


def run_suite(selector: str, groups: Iterable[str], config: RunConfig,
              cases: dict[str, Case] | None = None,
              progress: Callable[[VerificationOutcome], None] | None = None) -> list[VerificationOutcome]:
    """Run one suite (or ``all``) over the named groups, sorted by (claim, group)."""
    names = ASSERTIVE if selector == "all" else (selector,)
    for s in names:
        if s not in SUITES and s != "lambdagroups":
            raise ValueError(f"unknown suite {s!r}")
    cases = cases if cases is not None else {}
    outcomes: list[VerificationOutcome] = []

    def emit(batch):
        for o in batch:
            outcomes.append(o)
            if progress:
                progress(o)

    groups = list(groups)
    for s in names:
        if s == "lambdagroups":
            for spec in LAMBDA_SPECS:
                emit(verify_lambdagroups(spec, config, cases))
            continue
        for g in groups:
            case = cases.get(g)
            if case is None:
                case = cases[g] = Case(g, config)
            for fn in SUITES[s]:
                try:
                    emit(fn(case))
                except (CosetOverflow, ElementCapExceeded) as e:
                    emit([_skip(cid, g, f"{type(e).__name__}: {e}") for cid in fn.claims])
    outcomes.sort(key=lambda o: o.key)
    return outcomes
