"""The group nu(G) and the tensor square realized inside it.

nu(G) is generated by two copies of G, written g and g^phi, subject to
the defining relations of each copy and the compatibility relations

    ^{g3}[g1, g2^phi] = [^{g3}g1, (^{g3}g2)^phi] = ^{g3^phi}[g1, g2^phi].

The commutator subgroup T = [G, G^phi] is isomorphic to G (x) G with
g (x) h corresponding to [g, h^phi].  Everything here is computed on a
concrete permutation image of nu(G) obtained by coset enumeration.
"""

from __future__ import annotations

import enum
import math
import time
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Sequence

import numpy as np

from . import groups as gr
from .abelian import AbelianType, abelian_invariants, smith_with_inverses
from .coset_enum import (
    DEFAULT_ELEMENT_CAP,
    DEFAULT_MAX_COSETS,
    CosetOverflow,
    ElementCapExceeded,
    base_image,
    perm_image,
    todd_coxeter,
)
from .groups import GroupTable, Homomorphism, Subgroup
from .presentation import Presentation, Word, commutator, conjugate, free_reduce, invert

# groups up to this order use the all-triples presentation in auto mode
FULL_MODE_LIMIT = 16
DIRECT_ORACLE_LIMIT = 16
EXHAUSTIVE_LIMIT = 16
CERTIFICATE_TRIPLES = 2**20
MAX_REFINEMENTS = 4
REFINE_CAP_FACTOR = 4


class NuMode(enum.Enum):
    FULL = "full"
    GENERATORS = "generators"
    AUTO = "auto"


class EmbeddingNotInjective(AssertionError):
    pass


class BadTransversal(ValueError):
    pass


def _mode(mode) -> NuMode:
    return mode if isinstance(mode, NuMode) else NuMode(mode)


def resolve_mode(G: GroupTable, mode) -> NuMode:
    mode = _mode(mode)
    if mode is NuMode.AUTO:
        return NuMode.FULL if 1 < G.order <= FULL_MODE_LIMIT else NuMode.GENERATORS
    if mode is NuMode.FULL and G.order == 1:
        raise ValueError("the all-elements presentation needs a nontrivial group")
    return mode


# --------------------------------------------------------------------------
# presentations


def _letters(columns: Sequence[int], shift: int = 0) -> Word:
    return tuple((c // 2 + 1 + shift) * (1 if c % 2 == 0 else -1) for c in columns)


def cayley_relators(G: GroupTable) -> list[Word]:
    """Relators ``w(x) g w(xg)^-1`` over the spanning tree; they present G."""
    words = [_letters(G.word(x)) for x in range(G.order)]
    out = []
    for x in range(G.order):
        for i in range(len(G.generators)):
            r = free_reduce(words[x] + (i + 1,) + invert(words[int(G.action[x, 2 * i])]))
            if r:
                out.append(r)
    return out


def group_presentation(G: GroupTable, minimize: bool = True) -> Presentation:
    """A presentation of G on its generators, verified by enumeration.

    With ``minimize`` relators are dropped greedily (longest first) while
    the enumerated order stays |G|.
    """
    names = tuple(f"x{i}" for i in range(len(G.generators)))
    rels = sorted(set(cayley_relators(G)), key=lambda w: (len(w), w))
    P = Presentation(names, tuple(rels), G.name)
    cap = max(64, 16 * G.order)

    def ok(rs):
        try:
            return todd_coxeter(Presentation(names, tuple(rs)), (), cap).coset_count == G.order
        except CosetOverflow:
            return False

    if not ok(rels):
        raise AssertionError("Cayley relators do not present the group")
    if minimize:
        keep = list(rels)
        for r in sorted(rels, key=len, reverse=True):
            trial = [w for w in keep if w != r]
            if trial and ok(trial):
                keep = trial
        P = Presentation(names, tuple(sorted(keep, key=len)), G.name)
    return P


def _shift(word: Word, k: int) -> Word:
    return tuple(x + k if x > 0 else x - k for x in word)


def build_nu_presentation(G: GroupTable, mode="full",
                          extra_triples: Sequence[tuple[int, int, int]] = ()) -> Presentation:
    """Presentation of nu(G).

    ``full`` uses one generator per nontrivial element in each copy, both
    multiplication tables and the compatibility relators for every triple.
    ``generators`` uses the generators of G in each copy, a presentation of
    G in each copy and the compatibility relators for triples of generators
    plus any ``extra_triples`` (conjugator first).  The group this presents
    maps onto nu(G); :func:`nu_image` certifies that it is nu(G) itself.
    """
    mode = resolve_mode(G, mode)
    n = G.order
    if mode is NuMode.FULL:
        names = tuple(f"g{e}" for e in range(1, n)) + tuple(f"h{e}" for e in range(1, n))
        k = n - 1

        def elem(e):
            return (int(e),) if e else ()

        def phi(e):
            return (int(e) + k,) if e else ()

        mul = G.mul_table
        rels: list[Word] = []
        for word in (elem, phi):
            for a in range(n):
                for b in range(n):
                    rels.append(free_reduce(word(a) + word(b) + invert(word(int(mul[a, b])))))
        for g1 in range(n):
            for g2 in range(n):
                for g3 in range(n):
                    c = commutator(elem(g1), phi(g2))
                    rhs = invert(commutator(elem(G.conj(g3, g1)), phi(G.conj(g3, g2))))
                    rels.append(free_reduce(conjugate(elem(g3), c) + rhs))
                    rels.append(free_reduce(conjugate(phi(g3), c) + rhs))
        meta = {"mode": "full", "gen_elements": list(range(1, n)) * 2}
        return Presentation(names, tuple(rels), f"nu({G.name})", meta)

    G = gr.with_generators(G, gr.small_generating_set(G))
    k = len(G.generators)
    base = group_presentation(G)
    words = [_letters(G.word(x)) for x in range(n)]

    def elem(e):
        return words[int(e)]

    def phi(e):
        return _shift(words[int(e)], k)

    names = tuple(f"x{i}" for i in range(k)) + tuple(f"y{i}" for i in range(k))
    rels = list(base.relators) + [_shift(r, k) for r in base.relators]
    gens = G.generators
    triples = [(x, y, z) for x in gens for y in gens for z in gens] + [tuple(t) for t in extra_triples]
    for g3, g1, g2 in dict.fromkeys(triples):
        # ^{g3}[g1, g2^phi] = [^{g3}g1, (^{g3}g2)^phi] = ^{g3^phi}[g1, g2^phi]
        c = commutator(elem(g1), phi(g2))
        rhs = invert(commutator(elem(G.conj(g3, g1)), phi(G.conj(g3, g2))))
        rels.append(free_reduce(conjugate(elem(g3), c) + rhs))
        rels.append(free_reduce(conjugate(phi(g3), c) + rhs))
    meta = {"mode": "generators", "gen_elements": list(gens) * 2, "base_relators": len(base.relators),
            "triples": len(dict.fromkeys(triples))}
    return Presentation(names, tuple(rels), f"nu({G.name})", meta)


def direct_tensor_presentation(G: GroupTable, cap: int = DIRECT_ORACLE_LIMIT) -> Presentation:
    """The defining presentation of G (x) G on symbols g (x) h."""
    n = G.order
    if n > cap:
        raise ValueError(f"direct oracle limited to |G| <= {cap}")
    mul = G.mul_table

    def s(g, h):
        return (int(g) * n + int(h) + 1,)

    def conj(g, h):
        return int(mul[mul[g, h], G.inv[g]])

    names = tuple(f"t{g}_{h}" for g in range(n) for h in range(n))
    rels: list[Word] = []
    for g in range(n):
        for h in range(n):
            for k in range(n):
                # gh (x) k = (^g h (x) ^g k)(g (x) k)
                rels.append(free_reduce(s(mul[g, h], k) + invert(s(g, k)) + invert(s(conj(g, h), conj(g, k)))))
                # g (x) hk = (g (x) h)(^h g (x) ^h k)
                rels.append(free_reduce(s(g, mul[h, k]) + invert(s(conj(h, g), conj(h, k))) + invert(s(g, h))))
    return Presentation(names, tuple(rels), f"{G.name}(x){G.name}")


def direct_tensor_square(G: GroupTable, max_cosets: int = DEFAULT_MAX_COSETS,
                         cap: int = DIRECT_ORACLE_LIMIT) -> GroupTable:
    P = direct_tensor_presentation(G, cap)
    T = todd_coxeter(P, (), max_cosets)
    return perm_image(T, P)[0]


# --------------------------------------------------------------------------
# the concrete image


@dataclass(eq=False)
class NuImage:
    source: GroupTable
    nu: GroupTable
    embed_g: Homomorphism
    embed_gphi: Homomorphism
    mode: NuMode
    stats: dict = field(default_factory=dict)

    # element-level maps into nu
    def a(self, g):
        return self.embed_g.image[np.asarray(g, dtype=np.int64)]

    def b(self, g):
        return self.embed_gphi.image[np.asarray(g, dtype=np.int64)]

    def tensor(self, g, h):
        """``[g, h^phi]``, the image of g (x) h."""
        return self.nu.comm_many(self.a(g), self.b(h))

    @cached_property
    def g_sub(self) -> Subgroup:
        return gr.subgroup_generated(self.nu, self.a(self.source.generators))

    @cached_property
    def gphi_sub(self) -> Subgroup:
        return gr.subgroup_generated(self.nu, self.b(self.source.generators))

    def image_of(self, H: Subgroup, phi: bool = False) -> Subgroup:
        f = self.b if phi else self.a
        return gr.subgroup_generated(self.nu, f(H.gens if H.gens else [0]))

    def bracket(self, A: Subgroup, B: Subgroup) -> Subgroup:
        """``[A, B^phi]`` for subgroups A, B of G."""
        return gr.commutator_subgroup(self.nu, self.image_of(A), self.image_of(B, phi=True))

    @cached_property
    def T(self) -> Subgroup:
        return gr.commutator_subgroup(self.nu, self.g_sub, self.gphi_sub)


class Route(enum.Enum):
    REGULAR = "regular"
    COSETS = "cosets"


def _enumerate(G: GroupTable, P: Presentation, route: Route, max_cosets: int, element_cap: int):
    k = len(P.generators) // 2
    if route is Route.REGULAR:
        table = todd_coxeter(P, (), max_cosets)
        nu, _ = perm_image(table, P, element_cap)
        return nu, {"cosets": table.coset_count, **table.stats}
    t_g = todd_coxeter(P, [(i + 1,) for i in range(k)], max_cosets)
    t_phi = todd_coxeter(P, [(k + i + 1,) for i in range(k)], max_cosets)
    nu, _ = base_image([t_g, t_phi], P, element_cap)
    if nu.order != t_g.coset_count * G.order or nu.order != t_phi.coset_count * G.order:
        raise AssertionError("pair orbit is not the regular action of nu(G)")
    return nu, {"cosets": t_g.coset_count + t_phi.coset_count,
                "defined": t_g.stats["defined"] + t_phi.stats["defined"],
                "max_live": max(t_g.stats["max_live"], t_phi.stats["max_live"]),
                "relators": t_g.stats["relators"]}


def _embed(G: GroupTable, nu: GroupTable, P: Presentation, mode: NuMode) -> tuple[Homomorphism, Homomorphism]:
    k = len(P.generators) // 2
    owners = np.asarray(P.meta["gen_elements"][:k], dtype=np.int64)
    try:
        if mode is NuMode.GENERATORS:
            # G regenerated by the elements behind the presentation generators
            src = gr.with_generators(G, owners)
            embed_g = gr.hom_from_generator_images(src, nu, nu.generators[:k])
            embed_gphi = gr.hom_from_generator_images(src, nu, nu.generators[k:])
        else:
            where = {int(e): i for i, e in enumerate(owners)}
            idx = [where[g] for g in G.generators]
            embed_g = gr.hom_from_generator_images(G, nu, [nu.generators[i] for i in idx])
            embed_gphi = gr.hom_from_generator_images(G, nu, [nu.generators[k + i] for i in idx])
    except gr.NotAHomomorphism as e:
        raise EmbeddingNotInjective(f"copy of G is not a homomorphic image: {e}") from e
    embed_g = Homomorphism(G, nu, embed_g.image)
    embed_gphi = Homomorphism(G, nu, embed_gphi.image)
    for h in (embed_g, embed_gphi):
        if not h.is_injective():
            raise EmbeddingNotInjective("a copy of G collapses in nu(G)")
    if mode is NuMode.FULL:
        # every presentation generator must be the image of its element
        for i, e in enumerate(owners):
            if embed_g.image[e] != nu.generators[i] or embed_gphi.image[e] != nu.generators[k + i]:
                raise EmbeddingNotInjective("element generators disagree with generator words")
    return embed_g, embed_gphi


def nu_image(G: GroupTable, mode="auto", max_cosets: int = DEFAULT_MAX_COSETS,
             element_cap: int = DEFAULT_ELEMENT_CAP, seed: int = 0,
             check_triples: bool = True, route="cosets") -> NuImage:
    """Concrete nu(G).

    ``route="regular"`` enumerates over the trivial subgroup.  ``"cosets"``
    enumerates over each copy of G (index |G| |T| instead of |G|^2 |T|) and
    reads elements off as pairs of cosets, which is exact because the two
    copies intersect trivially in nu(G).

    In generators mode the enumerated group K maps onto nu(G); if every
    compatibility relation holds in K then the inverse map is defined too,
    so K is nu(G).  Violated triples are added as relators and K is
    enumerated again.
    """
    mode = resolve_mode(G, mode)
    route = route if isinstance(route, Route) else Route(route)
    t0 = time.perf_counter()
    extra: list[tuple[int, int, int]] = []
    rounds = 0
    while True:
        rounds += 1
        t1 = time.perf_counter()
        P = build_nu_presentation(G, mode, extra)
        t2 = time.perf_counter()
        # a group still being refined may be larger than nu(G)
        cap = element_cap if mode is NuMode.FULL else REFINE_CAP_FACTOR * element_cap
        nu, enum_stats = _enumerate(G, P, route, max_cosets, cap)
        t3 = time.perf_counter()
        nu.name = P.name
        embed_g, embed_gphi = _embed(G, nu, P, mode)
        ni = NuImage(G, nu, embed_g, embed_gphi, mode, {
            "route": route.value,
            "presentation_s": round(t2 - t1, 4),
            "enumeration_s": round(t3 - t2, 4),
            **enum_stats,
        })
        certify = check_triples or mode is NuMode.GENERATORS
        bad = relation_violations(ni, seed=seed) if certify else []
        if not bad:
            break
        if mode is NuMode.FULL:
            raise AssertionError(f"compatibility relation fails on triple {bad[0]}")
        if rounds >= MAX_REFINEMENTS:
            raise AssertionError(f"relations still failing after {rounds} refinements: {bad[0]}")
        extra.extend(bad)
    if nu.order > element_cap:
        raise ElementCapExceeded(f"nu({G.name}) has {nu.order} elements > cap {element_cap}")
    if nu.order != G.order ** 2 * ni.T.order:
        raise AssertionError(f"|nu| = {nu.order} differs from |G|^2 |T| = {G.order ** 2 * ni.T.order}")
    ni.stats["refinements"] = rounds - 1
    ni.stats["certificate"] = "exhaustive" if _exhaustive(G.order) else "sampled"
    ni.stats["total_s"] = round(time.perf_counter() - t0, 4)
    return ni


def _triples(n: int, exhaustive: bool, samples: int, rng, arity: int = 3) -> np.ndarray:
    if exhaustive:
        grids = np.meshgrid(*([np.arange(n)] * arity), indexing="ij")
        return np.stack([g.ravel() for g in grids], axis=1)
    return rng.integers(0, n, size=(samples, arity))


def _exhaustive(n: int) -> bool:
    return n ** 3 <= CERTIFICATE_TRIPLES


def relation_violations(ni: NuImage, seed: int = 0, samples: int = 10_000, limit: int = 64,
                        chunk: int = 1 << 16) -> list[tuple[int, int, int]]:
    """Triples (g3, g1, g2) breaking ^{g3}[g1, g2^phi] = [^{g3}g1, (^{g3}g2)^phi] = ^{g3^phi}[g1, g2^phi].

    All triples are checked when |G|^3 <= CERTIFICATE_TRIPLES, a seeded
    sample otherwise.
    """
    G, nu = ni.source, ni.nu
    rng = np.random.default_rng(seed)
    t = _triples(G.order, _exhaustive(G.order), samples, rng)
    out: list[tuple[int, int, int]] = []
    for s in range(0, len(t), chunk):
        g3, g1, g2 = t[s:s + chunk].T
        c = ni.tensor(g1, g2)
        rhs = ni.tensor(G.conj_many(g3, g1), G.conj_many(g3, g2))
        bad = (nu.conj_many(ni.a(g3), c) != rhs) | (nu.conj_many(ni.b(g3), c) != rhs)
        for i in np.flatnonzero(bad)[: limit - len(out)]:
            out.append(tuple(int(v) for v in t[s + i]))
        if len(out) >= limit:
            break
    return out


def relation_violation(ni: NuImage, seed: int = 0, samples: int = 10_000):
    """First triple breaking a compatibility relation, or None."""
    bad = relation_violations(ni, seed, samples, limit=1)
    return bad[0] if bad else None


def tensor_square(G: GroupTable, mode="auto", max_cosets: int = DEFAULT_MAX_COSETS,
                  element_cap: int = DEFAULT_ELEMENT_CAP) -> tuple[NuImage, Subgroup]:
    ni = nu_image(G, mode, max_cosets, element_cap)
    T = ni.T
    w = gr.normality_witness(T, ni.nu.generators)
    if w is not None:
        raise AssertionError(f"T is not normal in nu(G): {w}")
    return ni, T


# --------------------------------------------------------------------------
# subgroups of the tensor square


def derived_subgroup(G: GroupTable) -> Subgroup:
    return gr.commutator_subgroup(G, G.whole(), G.whole())


def nabla_subgroup(ni: NuImage) -> Subgroup:
    """Subgroup generated by all ``[g, g^phi]``."""
    G = ni.source
    D = gr.subgroup_generated(ni.nu, np.unique(ni.tensor(np.arange(G.order), np.arange(G.order))))
    return D


@dataclass(frozen=True)
class Abelianization:
    """``G^ab`` with an independent generating set lifted to G."""

    quotient: GroupTable
    projection: Homomorphism
    atype: AbelianType
    transversal: tuple[int, ...]
    orders: tuple[int, ...]


def abelianization_data(G: GroupTable) -> Abelianization:
    """Canonical transversal of G^ab from the Smith form of its relation matrix."""
    Dn = derived_subgroup(G)
    Q, proj = gr.quotient_group(G, Dn, name=f"{G.name}^ab")
    k = len(G.generators)
    # relations among the images of G's generators: Cayley relators of Q
    qgens = [int(proj.image[g]) for g in G.generators]
    # exponent vectors of spanning-tree words of Q in the images of G's generators
    words = {0: np.zeros(k, dtype=object)}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for i, g in enumerate(qgens):
                y = Q.mul(x, g)
                if y not in words:
                    words[y] = words[x].copy()
                    words[y][i] += 1
                    nxt.append(y)
        frontier = nxt
    rows = []
    for x in range(Q.order):
        for i, g in enumerate(qgens):
            r = words[x].copy()
            r[i] += 1
            r = r - words[Q.mul(x, g)]
            if any(r):
                rows.append(list(r))
    if not rows:
        rows = [[0] * k]
    S, U, V, Ui, Vi = smith_with_inverses(rows)
    atype = abelian_invariants(rows, k)
    if atype.free_rank:
        raise AssertionError("abelianization of a finite group has a free part")
    diag = [int(S[j, j]) if j < min(S.shape) else 0 for j in range(k)]
    transversal, orders = [], []
    for j in range(k):
        if diag[j] == 1:
            continue
        x = 0
        for i, g in enumerate(G.generators):
            x = G.mul(x, G.power(g, int(Vi[j, i])))
        transversal.append(x)
        orders.append(diag[j])
    return Abelianization(Q, proj, atype, tuple(transversal), tuple(orders))


def validate_transversal(G: GroupTable, transversal: Sequence[int], ab: Abelianization | None = None) -> None:
    """The images must form an independent generating set of G^ab."""
    ab = ab or abelianization_data(G)
    Q, proj = ab.quotient, ab.projection
    imgs = [int(proj.image[int(x)]) for x in transversal]
    if any(i == 0 for i in imgs):
        raise BadTransversal("transversal element lies in the derived subgroup")
    H = gr.subgroup_generated(Q, imgs)
    if H.order != Q.order:
        raise BadTransversal("transversal does not generate G^ab")
    if math.prod(int(o) for o in Q.orders(imgs)) != Q.order:
        raise BadTransversal("transversal images are not independent")


def e_subgroup(ni: NuImage, transversal: Sequence[int] | None = None) -> Subgroup:
    """``<[x_i, x_j^phi] : i < j> [G', G^phi]`` for the given transversal."""
    G = ni.source
    if transversal is None:
        transversal = abelianization_data(G).transversal
    else:
        validate_transversal(G, transversal)
    xs = list(transversal)
    seeds = [ni.tensor([xs[i]], [xs[j]])[0] for i in range(len(xs)) for j in range(i + 1, len(xs))]
    brk = ni.bracket(derived_subgroup(G), G.whole())
    return gr._extend(brk, seeds)


def nabla_restricted(ni: NuImage, transversal: Sequence[int]) -> Subgroup:
    """Subgroup generated by ``[x_i, x_i^phi]`` and ``[x_i, x_j^phi][x_j, x_i^phi]``."""
    xs = list(transversal)
    seeds = [int(ni.tensor([x], [x])[0]) for x in xs]
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            u = ni.tensor([xs[i]], [xs[j]])
            v = ni.tensor([xs[j]], [xs[i]])
            seeds.append(int(ni.nu.mul_many(u, v)[0]))
    return gr.subgroup_generated(ni.nu, seeds)


def kappa_map(ni: NuImage) -> Homomorphism:
    """The map nu(G) -> G sending both g and g^phi to g; on T it is the commutator map."""
    return gr.hom_from_generator_images(ni.nu, ni.source, _nu_generator_images(ni))


def _nu_generator_images(ni: NuImage) -> list[int]:
    """Images in G of nu's generators under the folding map."""
    nu = ni.nu
    back = np.full(nu.order, -1, dtype=np.int64)
    back[ni.embed_g.image] = np.arange(ni.source.order)
    back_phi = np.full(nu.order, -1, dtype=np.int64)
    back_phi[ni.embed_gphi.image] = np.arange(ni.source.order)
    half = len(nu.generators) // 2
    out = []
    for i, g in enumerate(nu.generators):
        e = back[g] if i < half else back_phi[g]
        if e < 0:
            raise AssertionError("nu generator outside its copy of G")
        out.append(int(e))
    return out


def j_kernel(ni: NuImage, rho: Homomorphism | None = None) -> Subgroup:
    rho = rho or kappa_map(ni)
    T = ni.T
    return gr.subgroup_from_elements(ni.nu, T.elements[rho.image[T.elements] == 0])


def quotient_type(big: Subgroup, small: Subgroup) -> AbelianType:
    """AbelianType of ``big / small`` (the quotient must be abelian)."""
    H, emb = gr.as_group(big)
    Q, _ = gr.quotient_group(H, gr.restrict(small, emb))
    return gr.abelian_type_of(Q)


def multiplicator(ni: NuImage, J: Subgroup | None = None, nabla: Subgroup | None = None) -> AbelianType:
    J = J or j_kernel(ni)
    nabla = nabla or nabla_subgroup(ni)
    return quotient_type(J, nabla)


def exterior_square(ni: NuImage, nabla: Subgroup | None = None) -> GroupTable:
    nabla = nabla or nabla_subgroup(ni)
    H, emb = gr.as_group(ni.T, name=f"T({ni.source.name})")
    Q, _ = gr.quotient_group(H, gr.restrict(nabla, emb), name=f"{ni.source.name}^{ni.source.name}")
    return Q


def tensor_center(ni: NuImage) -> Subgroup:
    """``{g : [g, x^phi] = 1 for all x}``, tested against every x."""
    G = ni.source
    g, x = np.meshgrid(np.arange(G.order), np.arange(G.order), indexing="ij")
    vals = ni.tensor(g.ravel(), x.ravel()).reshape(g.shape)
    Z = gr.subgroup_from_elements(G, np.flatnonzero(np.all(vals == 0, axis=1)))
    if not Z <= derived_subgroup(G):
        raise AssertionError("tensor center escapes the derived subgroup")
    return Z


def exterior_center(ni: NuImage, nabla: Subgroup | None = None) -> Subgroup:
    """``{g : [g, x^phi] in nabla for all x}``, tested against every x."""
    nabla = nabla or nabla_subgroup(ni)
    G = ni.source
    g, x = np.meshgrid(np.arange(G.order), np.arange(G.order), indexing="ij")
    vals = ni.tensor(g.ravel(), x.ravel()).reshape(g.shape)
    return gr.subgroup_from_elements(G, np.flatnonzero(np.all(nabla.mask[vals], axis=1)))


def is_capable(ni: NuImage, nabla: Subgroup | None = None) -> bool:
    return exterior_center(ni, nabla).is_trivial


def has_complement(G: GroupTable, N: Subgroup) -> Subgroup | None:
    """A complement to the normal subgroup N, searched among small subgroups.

    Candidates are generated by at most three elements whose order equals
    the order of their image modulo N (a complement maps isomorphically);
    groups of order <= 24 fall back to all subgroups found this way.
    """
    if N.is_trivial:
        return G.whole()
    if N.order == G.order:
        return G.trivial()
    pk = gr.prime_power(G.order)
    if pk is not None:
        # anything inside the Frattini subgroup has no complement
        lam = gr.lower_central_p_series(G)
        if len(lam) > 1 and N <= lam[1]:
            return None
    target = G.order // N.order
    Q, proj = gr.quotient_group(G, N)
    qord = Q.orders(proj.image)
    cand = np.flatnonzero(G.orders() == qord)
    cand = cand[cand != 0]
    seen = set()

    def check(els):
        H = gr.subgroup_generated(G, els)
        if H.order == target and not np.any(N.mask[H.elements[1:]]):
            return H
        return None

    for r in (1, 2, 3):
        for combo in _combos(cand, r):
            key = tuple(combo)
            if key in seen:
                continue
            seen.add(key)
            H = check(combo)
            if H is not None:
                return H
    return None


def _combos(cand, r):
    return combinations([int(c) for c in cand], r)


# --------------------------------------------------------------------------
# reports


def _fp_dict(G: GroupTable | Subgroup) -> dict:
    return gr.fingerprint(G).to_dict()


@dataclass
class TensorReport:
    group: str
    order: int
    tensor_order: int
    tensor: dict
    nabla: AbelianType
    e_order: int
    n_subgroup: AbelianType
    j_kernel: AbelianType
    multiplicator: AbelianType
    exterior: dict
    derived_order: int
    tensor_center: list[int]
    exterior_center: list[int]
    splits: bool
    capable: bool
    transversal: list[int]
    nu_order: int
    nu_mode: str
    notes: list[str] = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {}
        for k, v in self.__dict__.items():
            out[k] = v.to_dict() if isinstance(v, AbelianType) else v
        return out


class TensorAnalysis:
    """Lazily computed subgroups of G (x) G for one nu image and transversal."""

    def __init__(self, ni: NuImage, transversal: Sequence[int] | None = None):
        self.ni = ni
        self.G = ni.source
        self.ab = abelianization_data(self.G)
        if transversal is None:
            transversal = self.ab.transversal
        else:
            validate_transversal(self.G, transversal, self.ab)
        self.transversal = tuple(int(x) for x in transversal)

    @property
    def T(self) -> Subgroup:
        return self.ni.T

    @cached_property
    def derived(self) -> Subgroup:
        return derived_subgroup(self.G)

    @cached_property
    def nabla(self) -> Subgroup:
        return nabla_subgroup(self.ni)

    @cached_property
    def E(self) -> Subgroup:
        return e_subgroup(self.ni, self.transversal)

    @cached_property
    def N(self) -> Subgroup:
        return gr.intersection(self.nabla, self.E)

    @cached_property
    def rho(self) -> Homomorphism:
        return kappa_map(self.ni)

    @cached_property
    def J(self) -> Subgroup:
        return j_kernel(self.ni, self.rho)

    @cached_property
    def M(self) -> AbelianType:
        return quotient_type(self.J, self.nabla)

    @cached_property
    def exterior(self) -> GroupTable:
        return exterior_square(self.ni, self.nabla)

    @cached_property
    def tensor_center(self) -> Subgroup:
        return tensor_center(self.ni)

    @cached_property
    def exterior_center(self) -> Subgroup:
        return exterior_center(self.ni, self.nabla)

    @cached_property
    def splits(self) -> bool:
        return self.N.is_trivial and gr.join(self.nabla, self.E) == self.T

    def check(self) -> None:
        """Structural assertions that hold for every group."""
        T, nab = self.T, self.nabla
        if gr.join(nab, self.E) != T:
            raise AssertionError("T differs from nabla * E")
        if nabla_restricted(self.ni, self.transversal) != nab:
            raise AssertionError("nabla is not generated by the transversal elements")
        if T.order != self.J.order * self.derived.order:
            raise AssertionError(f"|T| = {T.order} but |J| |G'| = {self.J.order * self.derived.order}")
        if self.J.order != nab.order * self.M.order:
            raise AssertionError(f"|J| = {self.J.order} but |nabla| |M| = {nab.order * self.M.order}")
        if not (self.tensor_center <= self.exterior_center and self.exterior_center <= gr.center(self.G)):
            raise AssertionError("tensor center, exterior center and center are not nested")

    def report(self) -> TensorReport:
        t0 = time.perf_counter()
        self.check()
        G, T = self.G, self.T
        notes = []
        if G.order == 6 and not G.is_abelian():
            Tg = gr.as_group(T)[0]
            notes.append(
                f"S3 (x) S3 has order {T.order} and abelianization {gr.abelianization(Tg)}; "
                f"the commutator map sends it onto G' of order {self.derived.order}"
            )
        return TensorReport(
            group=G.name,
            order=G.order,
            tensor_order=T.order,
            tensor=_fp_dict(T),
            nabla=gr.abelian_type_of(self.nabla),
            e_order=self.E.order,
            n_subgroup=gr.abelian_type_of(self.N),
            j_kernel=gr.abelian_type_of(self.J),
            multiplicator=self.M,
            exterior=_fp_dict(self.exterior),
            derived_order=self.derived.order,
            tensor_center=[int(v) for v in self.tensor_center.elements],
            exterior_center=[int(v) for v in self.exterior_center.elements],
            splits=bool(self.splits),
            capable=bool(self.exterior_center.is_trivial),
            transversal=list(self.transversal),
            nu_order=self.ni.nu.order,
            nu_mode=self.ni.mode.value,
            notes=notes,
            timings={"nu_s": self.ni.stats.get("total_s"), "report_s": round(time.perf_counter() - t0, 4)},
        )


def full_report(G: GroupTable, mode="auto", max_cosets: int = DEFAULT_MAX_COSETS,
                element_cap: int = DEFAULT_ELEMENT_CAP, transversal: Sequence[int] | None = None,
                ni: NuImage | None = None) -> TensorReport:
    ni = ni or nu_image(G, mode, max_cosets, element_cap)
    return TensorAnalysis(ni, transversal).report()


@dataclass(frozen=True)
class QuestionRecord:
    group: str
    n_subgroup: int
    bracket_subgroup: int
    equal: bool

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def explore_question(ni: NuImage) -> QuestionRecord:
    """Compare N = nabla cap E with ``[Z^wedge(G) cap G', G^phi]``; nothing is asserted."""
    G = ni.source
    nab = nabla_subgroup(ni)
    N = gr.intersection(nab, e_subgroup(ni))
    H = gr.intersection(exterior_center(ni, nab), derived_subgroup(G))
    B = ni.bracket(H, G.whole())
    return QuestionRecord(G.name, N.order, B.order, N == B)
