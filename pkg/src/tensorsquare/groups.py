"""Concrete finite groups.

A :class:`GroupTable` stores a group through the right regular action of a
generating set: ``action[x, 2*i]`` is ``x * g_i`` and ``action[x, 2*i + 1]``
is ``x * g_i^-1``.  Element 0 is the identity.  Products of arbitrary
elements are computed by tracing a word for the right factor along a
breadth-first spanning tree, so groups of order ~10^6 fit in memory; small
groups additionally carry a dense multiplication table.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import _kernels as K
from .abelian import AbelianType, abelian_type_from_orders, histogram_of

DENSE_LIMIT = 2048
# subgroup pairs up to this many are commuted exhaustively
PAIR_LIMIT = 4096
ASSOC_EXHAUSTIVE = 256


class GroupError(Exception):
    pass


class NotAGroup(GroupError):
    def __init__(self, msg: str, witness=None):
        self.witness = witness
        super().__init__(f"{msg} (witness {witness})" if witness is not None else msg)


class NotNormal(GroupError):
    def __init__(self, conjugator: int, element: int):
        self.witness = (conjugator, element)
        super().__init__(f"not normal: conjugating {element} by {conjugator} leaves the subgroup")


class NotAHomomorphism(GroupError):
    def __init__(self, x: int, y: int):
        self.witness = (x, y)
        super().__init__(f"map is not multiplicative on the pair {(x, y)}")


class NotAPGroup(GroupError):
    pass


def prime_power(n: int) -> tuple[int, int] | None:
    """``(p, k)`` with ``n == p**k``, ``k >= 1``; None otherwise (also for n == 1)."""
    if n < 2:
        return None
    p = 2
    while p * p <= n and n % p:
        p += 1
    if n % p:
        p = n
    k = 0
    m = n
    while m % p == 0:
        m //= p
        k += 1
    return (p, k) if m == 1 else None


class GroupTable:
    def __init__(self, action, generators: Sequence[int], name: str = "G"):
        action = np.ascontiguousarray(action, dtype=np.int32)
        if action.ndim != 2 or action.shape[1] != 2 * len(generators) or action.shape[1] == 0:
            raise ValueError("action needs two columns per generator")
        self.action = action
        self.order = int(action.shape[0])
        self.generators = tuple(int(g) for g in generators)
        self.name = name
        parent, pcol, depth, bfs = K.bfs_tree(action)
        if bfs.shape[0] != self.order:
            raise NotAGroup("generators do not reach every element")
        self.parent = parent
        self.pcol = pcol
        self.depth = depth
        self.bfs_order = bfs
        self.maxdepth = int(depth.max())
        self._mul: np.ndarray | None = None
        self.inv = K.inverses(action, parent, pcol)

    identity = 0

    def __repr__(self):
        return f"GroupTable({self.name!r}, order={self.order})"

    def __len__(self):
        return self.order

    # -- arithmetic ---------------------------------------------------------

    @property
    def is_dense(self) -> bool:
        return self.order <= DENSE_LIMIT

    @property
    def mul_table(self) -> np.ndarray:
        if self._mul is None:
            if not self.is_dense:
                raise MemoryError(f"no dense table for a group of order {self.order}")
            n = self.order
            cols = np.empty((n, n), dtype=np.int32)
            cols[0] = np.arange(n)
            for y in self.bfs_order[1:]:
                cols[y] = self.action[cols[self.parent[y]], self.pcol[y]]
            self._mul = np.ascontiguousarray(cols.T)
        return self._mul

    def mul(self, x: int, y: int) -> int:
        if self.is_dense:
            return int(self.mul_table[x, y])
        return int(self.mul_many(np.array([x]), np.array([y]))[0])

    def mul_many(self, xs, ys) -> np.ndarray:
        xs, ys = np.broadcast_arrays(np.asarray(xs, dtype=np.int64), np.asarray(ys, dtype=np.int64))
        shape = xs.shape
        if self.is_dense:
            return self.mul_table[xs, ys].astype(np.int64)
        out = K.mul_many(self.action, self.parent, self.pcol, self.maxdepth, xs.ravel(), ys.ravel())
        return out.reshape(shape)

    def inverse(self, x: int) -> int:
        return int(self.inv[x])

    def comm_many(self, a, b) -> np.ndarray:
        """``[a, b] = a b a^-1 b^-1`` elementwise."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        return self.mul_many(self.mul_many(a, b), self.inv[self.mul_many(b, a)])

    def conj_many(self, g, h) -> np.ndarray:
        """``g h g^-1`` elementwise."""
        g = np.asarray(g, dtype=np.int64)
        return self.mul_many(self.mul_many(g, h), self.inv[g])

    def comm(self, a: int, b: int) -> int:
        return int(self.comm_many([a], [b])[0])

    def conj(self, g: int, h: int) -> int:
        return int(self.conj_many([g], [h])[0])

    def power_many(self, xs, k: int) -> np.ndarray:
        xs = np.asarray(xs, dtype=np.int64)
        if k < 0:
            xs, k = self.inv[xs], -k
        result = np.zeros_like(xs)
        base = xs.copy()
        while k:
            if k & 1:
                result = self.mul_many(result, base)
            base = self.mul_many(base, base)
            k >>= 1
        return result

    def power(self, x: int, k: int) -> int:
        return int(self.power_many([x], k)[0])

    def orders(self, xs=None) -> np.ndarray:
        xs = np.arange(self.order) if xs is None else np.asarray(xs, dtype=np.int64)
        return K.element_orders(self.action, self.parent, self.pcol, self.maxdepth, xs)

    def element_order(self, x: int) -> int:
        return int(self.orders([x])[0])

    def word(self, x: int) -> list[int]:
        """Columns of the spanning-tree word for ``x``."""
        out = []
        while x != 0:
            out.append(int(self.pcol[x]))
            x = int(self.parent[x])
        return out[::-1]

    def trace(self, x: int, columns: Iterable[int]) -> int:
        for c in columns:
            x = int(self.action[x, c])
        return x

    def is_abelian(self) -> bool:
        g = np.array(self.generators)
        a, b = np.meshgrid(g, g)
        return bool(np.all(self.mul_many(a, b) == self.mul_many(b, a)))

    # -- convenience ---------------------------------------------------------

    def whole(self) -> "Subgroup":
        return Subgroup(self, np.arange(self.order, dtype=np.int64), self.generators)

    def trivial(self) -> "Subgroup":
        return Subgroup(self, np.zeros(1, dtype=np.int64), ())


def _closure_mask(G: GroupTable, seeds: Sequence[int]) -> np.ndarray:
    seeds = np.asarray(seeds, dtype=np.int64)
    if seeds.size == 0:
        m = np.zeros(G.order, dtype=bool)
        m[0] = True
        return m
    return K.closure(G.action, G.parent, G.pcol, G.maxdepth, seeds)


@dataclass(frozen=True, eq=False)
class Subgroup:
    parent: GroupTable
    elements: np.ndarray
    gens: tuple[int, ...] = ()

    @cached_property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.parent.order, dtype=bool)
        m[self.elements] = True
        return m

    @property
    def order(self) -> int:
        return int(self.elements.shape[0])

    def __len__(self):
        return self.order

    def __contains__(self, x) -> bool:
        return bool(self.mask[int(x)])

    def contains_all(self, xs) -> bool:
        return bool(np.all(self.mask[np.asarray(xs, dtype=np.int64)]))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subgroup)
            and other.parent is self.parent
            and np.array_equal(self.elements, other.elements)
        )

    def __hash__(self):
        return hash((id(self.parent), self.elements.tobytes()))

    def __le__(self, other: "Subgroup") -> bool:
        return other.contains_all(self.elements)

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def __repr__(self):
        return f"Subgroup(of {self.parent.name!r}, order={self.order})"


def _subgroup_from_mask(G: GroupTable, mask: np.ndarray, gens: Sequence[int]) -> Subgroup:
    return Subgroup(G, np.flatnonzero(mask).astype(np.int64), tuple(int(g) for g in gens))


def subgroup_generated(G: GroupTable, seeds: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing ``seeds``; generators kept greedily in seed order."""
    gens: list[int] = []
    mask = _closure_mask(G, [])
    for s in seeds:
        s = int(s)
        if not mask[s]:
            gens.append(s)
            mask = _closure_mask(G, gens)
    return _subgroup_from_mask(G, mask, gens)


def _extend(H: Subgroup, extra: Iterable[int]) -> Subgroup:
    gens = list(H.gens)
    mask = H.mask
    changed = False
    for s in extra:
        s = int(s)
        if not mask[s]:
            gens.append(s)
            mask = _closure_mask(H.parent, gens)
            changed = True
    return _subgroup_from_mask(H.parent, mask, gens) if changed else H


def subgroup_from_elements(G: GroupTable, elements: Iterable[int]) -> Subgroup:
    """Wrap an element set already known to be a subgroup (checked)."""
    els = np.unique(np.asarray(list(elements), dtype=np.int64))
    H = subgroup_generated(G, els)
    if H.order != els.shape[0]:
        raise GroupError("element set is not closed under multiplication")
    return H


def intersection(A: Subgroup, B: Subgroup) -> Subgroup:
    return subgroup_from_elements(A.parent, A.elements[B.mask[A.elements]])


def join(*subgroups: Subgroup) -> Subgroup:
    G = subgroups[0].parent
    return subgroup_generated(G, [g for H in subgroups for g in H.gens])


def normal_closure(G: GroupTable, seeds: Iterable[int], conjugators: Sequence[int]) -> Subgroup:
    """Smallest subgroup containing ``seeds`` normalized by ``conjugators``."""
    H = subgroup_generated(G, seeds)
    conjugators = np.asarray(conjugators, dtype=np.int64)
    while True:
        if not H.gens or conjugators.size == 0:
            return H
        t, h = np.meshgrid(conjugators, np.array(H.gens))
        c = G.conj_many(t.ravel(), h.ravel())
        new = c[~H.mask[c]]
        if new.size == 0:
            return H
        H = _extend(H, new)


def _as_subgroup(H) -> Subgroup:
    return H.whole() if isinstance(H, GroupTable) else H


def commutator_subgroup(G: GroupTable, A: Subgroup, B: Subgroup, all_pairs: bool | None = None) -> Subgroup:
    """``[A, B]``.

    Small cases commute every pair of elements; larger ones take the normal
    closure in ``<A, B>`` of the commutators of generators, which is the
    same subgroup.
    """
    A, B = _as_subgroup(A), _as_subgroup(B)
    if all_pairs is None:
        all_pairs = A.order * B.order <= PAIR_LIMIT
    if all_pairs:
        a, b = np.meshgrid(A.elements, B.elements, indexing="ij")
        return subgroup_generated(G, np.unique(G.comm_many(a.ravel(), b.ravel())))
    if not A.gens or not B.gens:
        return G.trivial()
    a, b = np.meshgrid(np.array(A.gens), np.array(B.gens), indexing="ij")
    seeds = G.comm_many(a.ravel(), b.ravel())
    return normal_closure(G, seeds, list(A.gens) + list(B.gens))


def derived_series(G) -> list[Subgroup]:
    H = _as_subgroup(G)
    series = [H]
    while True:
        nxt = commutator_subgroup(H.parent, series[-1], series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def lower_central_series(G) -> list[Subgroup]:
    H = _as_subgroup(G)
    series = [H]
    while True:
        nxt = commutator_subgroup(H.parent, series[-1], H)
        if nxt == series[-1]:
            return series
        series.append(nxt)


def derived_length(G) -> int | None:
    """Length of the derived series down to 1, None if it stalls above 1."""
    s = derived_series(G)
    return len(s) - 1 if s[-1].is_trivial else None


def nilpotency_class(G) -> int | None:
    s = lower_central_series(G)
    return len(s) - 1 if s[-1].is_trivial else None


def p_group_prime(G) -> tuple[int, int]:
    H = _as_subgroup(G)
    pk = prime_power(H.order)
    if pk is None:
        if H.order == 1:
            raise NotAPGroup("the trivial group has no distinguished prime")
        raise NotAPGroup(f"order {H.order} is not a prime power")
    return pk


def lower_central_p_series(G, p: int | None = None) -> list[Subgroup]:
    """Fastest descending central series with exponent-p factors.

    Each term is generated by the commutators with the whole group and the
    p-th powers of the previous term.
    """
    H = _as_subgroup(G)
    q, _ = p_group_prime(H)
    if p is not None and p != q:
        raise NotAPGroup(f"order {H.order} is not a power of {p}")
    P = H.parent
    series = [H]
    while not series[-1].is_trivial:
        L = series[-1]
        comm = commutator_subgroup(P, L, H)
        nxt = _extend(comm, P.power_many(L.elements, q))
        # factor must be elementary abelian
        if not nxt.contains_all(P.power_many(np.array(L.gens), q)) or not nxt >= commutator_subgroup(P, L, L):
            raise AssertionError("lower central p-series factor is not elementary abelian")
        series.append(nxt)
    return series


def centralizer(G, S: Subgroup, of: Sequence[int]) -> Subgroup:
    """Elements of ``S`` commuting with every element of ``of``."""
    P = S.parent
    keep = np.ones(S.order, dtype=bool)
    for g in of:
        keep &= P.mul_many(S.elements, g) == P.mul_many(g, S.elements)
    return subgroup_from_elements(P, S.elements[keep])


def center(G) -> Subgroup:
    H = _as_subgroup(G)
    return centralizer(None, H, H.gens)


def normality_witness(N: Subgroup, conjugators: Sequence[int]) -> tuple[int, int] | None:
    P = N.parent
    for t in conjugators:
        for n in N.gens:
            if not N.mask[P.conj(int(t), int(n))]:
                return int(t), int(n)
    return None


def is_normal(N: Subgroup, in_group=None) -> bool:
    H = N.parent.whole() if in_group is None else _as_subgroup(in_group)
    return normality_witness(N, H.gens) is None


@dataclass(frozen=True, eq=False)
class Homomorphism:
    source: GroupTable
    target: GroupTable
    image: np.ndarray

    def __call__(self, x):
        return self.image[x]

    def kernel(self) -> Subgroup:
        return subgroup_from_elements(self.source, np.flatnonzero(self.image == 0))

    def image_subgroup(self) -> Subgroup:
        return subgroup_from_elements(self.target, np.unique(self.image))

    def is_injective(self) -> bool:
        return np.unique(self.image).shape[0] == self.source.order

    def verify(self) -> None:
        """Check ``f(x g) = f(x) f(g)`` for every x and generator column g.

        Multiplicativity against a generating set (with inverses) forces it
        on all pairs by induction on word length.
        """
        src, tgt, f = self.source, self.target, self.image
        if f.shape[0] != src.order or f[0] != 0:
            raise NotAHomomorphism(0, 0)
        for c in range(src.action.shape[1]):
            gi = c // 2
            g = src.generators[gi]
            img_c = f[g] if c % 2 == 0 else tgt.inv[f[g]]
            lhs = f[src.action[:, c]]
            rhs = tgt.mul_many(f, img_c)
            bad = np.flatnonzero(lhs != rhs)
            if bad.size:
                x = int(bad[0])
                raise NotAHomomorphism(x, int(g if c % 2 == 0 else src.inv[g]))


def hom_from_generator_images(src: GroupTable, tgt: GroupTable, images: Sequence[int]) -> Homomorphism:
    """Extend generator images along words and verify multiplicativity."""
    images = np.asarray(images, dtype=np.int64)
    if images.shape[0] != len(src.generators):
        raise ValueError("one image per source generator required")
    colimg = np.empty(src.action.shape[1], dtype=np.int64)
    colimg[0::2] = images
    colimg[1::2] = tgt.inv[images]
    f = np.zeros(src.order, dtype=np.int64)
    order = src.bfs_order
    depth = src.depth[order]
    bounds = np.searchsorted(depth, np.arange(src.maxdepth + 2))
    for d in range(1, src.maxdepth + 1):
        xs = order[bounds[d]:bounds[d + 1]]
        f[xs] = tgt.mul_many(f[src.parent[xs]], colimg[src.pcol[xs]])
    h = Homomorphism(src, tgt, f)
    h.verify()
    return h


def as_group(H: Subgroup, name: str | None = None) -> tuple[GroupTable, Homomorphism]:
    """Materialize a subgroup as a group of its own, with its embedding."""
    P = H.parent
    gens = list(H.gens) or [0]
    local = np.full(P.order, -1, dtype=np.int64)
    local[H.elements] = np.arange(H.order)
    cols = []
    for g in gens:
        cols.append(local[P.mul_many(H.elements, g)])
        cols.append(local[P.mul_many(H.elements, P.inv[g])])
    action = np.stack(cols, axis=1)
    G = GroupTable(action, [int(local[g]) for g in gens], name=name or f"sub({P.name})")
    emb = Homomorphism(G, P, H.elements.copy())
    emb.verify()
    return G, emb


def restrict(H: Subgroup, emb: Homomorphism) -> Subgroup:
    """``H`` (a subgroup of the embedding's target) in source coordinates."""
    local = np.full(emb.target.order, -1, dtype=np.int64)
    local[emb.image] = np.arange(emb.source.order)
    pulled = local[H.elements]
    if np.any(pulled < 0):
        raise GroupError("subgroup is not contained in the embedded group")
    return subgroup_from_elements(emb.source, pulled)


def quotient_group(G: GroupTable, N: Subgroup, name: str | None = None) -> tuple[GroupTable, Homomorphism]:
    """``G / N`` with its canonical projection; ``N`` must be normal."""
    w = normality_witness(N, G.generators)
    if w is not None:
        raise NotNormal(*w)
    labels = np.full(G.order, -1, dtype=np.int64)
    reps = []
    for x in range(G.order):
        if labels[x] >= 0:
            continue
        labels[G.mul_many(x, N.elements)] = len(reps)
        reps.append(x)
    reps = np.array(reps, dtype=np.int64)
    action = labels[G.action[reps]]
    Q = GroupTable(action, [int(labels[g]) for g in G.generators], name=name or f"{G.name}/N")
    proj = Homomorphism(G, Q, labels)
    proj.verify()
    return Q, proj


def minimal_generator_count(G) -> int:
    """Rank of the Frattini quotient of a p-group."""
    H = _as_subgroup(G)
    p, _ = p_group_prime(H)
    lam = lower_central_p_series(H, p)
    index = H.order // (lam[1].order if len(lam) > 1 else 1)
    return round(math.log(index, p)) if index > 1 else 0


def with_generators(G: GroupTable, gens: Sequence[int], name: str | None = None) -> GroupTable:
    """Same elements and labels as G, regenerated by ``gens``."""
    gens = [int(g) for g in gens]
    els = np.arange(G.order)
    cols = []
    for g in gens:
        cols.append(G.mul_many(els, g))
        cols.append(G.mul_many(els, G.inv[g]))
    H = GroupTable(np.stack(cols, axis=1), gens, name=name or G.name)
    if G._mul is not None:
        H._mul = G._mul
    return H


def small_generating_set(G: GroupTable) -> tuple[int, ...]:
    """A generating set of minimum size for p-groups, small otherwise.

    For a p-group any lift of a basis of the Frattini quotient generates.
    Other groups try subsets of up to three elements, larger orders first.
    """
    if G.order == 1:
        return G.generators
    if prime_power(G.order) is not None:
        lam = lower_central_p_series(G)
        frat = lam[1] if len(lam) > 1 else G.trivial()
        chosen: list[int] = []
        H = frat
        for x in np.argsort(-G.orders(), kind="stable"):
            if not H.mask[x]:
                chosen.append(int(x))
                H = _extend(H, [int(x)])
                if H.order == G.order:
                    return tuple(chosen)
        raise AssertionError("Frattini lift failed to generate")
    if len(G.generators) <= 1:
        return G.generators
    from itertools import combinations

    orders = G.orders()
    cand = [int(x) for x in np.argsort(-orders, kind="stable") if x != 0]
    # one representative per cyclic subgroup
    seen = np.zeros(G.order, dtype=bool)
    reps = []
    for x in cand:
        if not seen[x]:
            reps.append(x)
            seen[_closure_mask(G, [x])] = True
    for r in range(1, min(3, len(G.generators) - 1) + 1):
        for combo in combinations(reps, r):
            if _closure_mask(G, list(combo)).all():
                return tuple(combo)
    return G.generators


def abelianization(G) -> AbelianType:
    H = _as_subgroup(G)
    P = H.parent
    D = commutator_subgroup(P, H, H)
    if H.order == P.order:
        Q, _ = quotient_group(P, D)
    else:
        sub, emb = as_group(H)
        Q, _ = quotient_group(sub, restrict(D, emb))
    return abelian_type_of(Q)


def abelian_type_of(G) -> AbelianType:
    """Isomorphism type of an abelian group (or subgroup)."""
    H = _as_subgroup(G)
    P = H.parent
    a, b = np.meshgrid(np.array(H.gens or [0]), np.array(H.gens or [0]))
    if not np.all(P.mul_many(a, b) == P.mul_many(b, a)):
        raise GroupError("abelian_type_of needs an abelian group")
    return abelian_type_from_orders(histogram_of(P.orders(H.elements)))


@dataclass(frozen=True)
class Fingerprint:
    order: int
    abelianization: tuple[int, ...]
    derived_orders: tuple[int, ...]
    lower_central_orders: tuple[int, ...]
    exponent: int
    center_order: int
    order_histogram: tuple[tuple[int, int], ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "abelianization": list(self.abelianization),
            "derived_orders": list(self.derived_orders),
            "lower_central_orders": list(self.lower_central_orders),
            "exponent": self.exponent,
            "center_order": self.center_order,
            "order_histogram": {str(k): v for k, v in self.order_histogram},
        }


def fingerprint(G) -> Fingerprint:
    H = _as_subgroup(G)
    if H.order != H.parent.order:
        H = as_group(H)[0].whole()
    P = H.parent
    orders = P.orders()
    hist = histogram_of(orders)
    return Fingerprint(
        order=P.order,
        abelianization=abelianization(P).factors,
        derived_orders=tuple(S.order for S in derived_series(P)),
        lower_central_orders=tuple(S.order for S in lower_central_series(P)),
        exponent=math.lcm(*hist.keys()),
        center_order=center(P).order,
        order_histogram=tuple(hist.items()),
    )


# --------------------------------------------------------------------------
# construction from a multiplication table


def _greedy_generators(mul: np.ndarray) -> list[int]:
    n = mul.shape[0]
    if n == 1:
        return [0]
    gens: list[int] = []
    mask = np.zeros(n, dtype=bool)
    mask[0] = True
    for x in range(1, n):
        if mask[x]:
            continue
        gens.append(x)
        frontier = np.array([0])
        mask = np.zeros(n, dtype=bool)
        mask[0] = True
        while frontier.size:
            nxt = mul[frontier][:, gens].ravel()
            nxt = np.unique(nxt[~mask[nxt]])
            mask[nxt] = True
            frontier = nxt
        if mask.all():
            break
    return gens


def group_from_mul_table(order: int, mul, name: str = "G", seed: int = 0) -> GroupTable:
    """Validate a Cayley table and return the group with its identity at index 0."""
    mul = np.asarray(mul)
    n = int(order)
    if n < 1 or mul.shape != (n, n):
        raise NotAGroup(f"expected a {n}x{n} table, got shape {mul.shape}")
    if not np.issubdtype(mul.dtype, np.integer) or mul.min() < 0 or mul.max() >= n:
        raise NotAGroup("table entries must be indices in range")
    mul = mul.astype(np.int64)
    ar = np.arange(n)
    ids = [e for e in range(n) if np.array_equal(mul[e], ar) and np.array_equal(mul[:, e], ar)]
    if not ids:
        raise NotAGroup("no two-sided identity")
    e = ids[0]
    for x in range(n):
        if not np.any(mul[x] == e):
            raise NotAGroup("element without right inverse", witness=(x,))
    _check_associative(mul, seed)
    # relabel so the identity is 0
    perm = np.arange(n)
    perm[[0, e]] = perm[[e, 0]]
    new = np.empty_like(mul)
    new[np.ix_(perm, perm)] = perm[mul]
    inv = np.argmax(new == 0, axis=1)
    if not np.all(new[ar, inv] == 0) or not np.all(new[inv, ar] == 0):
        raise NotAGroup("inverses are not two-sided")
    gens = _greedy_generators(new)
    action = np.empty((n, 2 * len(gens)), dtype=np.int32)
    for i, g in enumerate(gens):
        action[:, 2 * i] = new[:, g]
        action[:, 2 * i + 1] = new[:, inv[g]]
    G = GroupTable(action, gens, name=name)
    if G.is_dense:
        G._mul = np.ascontiguousarray(new.astype(np.int32))
    return G


def _check_associative(mul: np.ndarray, seed: int) -> None:
    n = mul.shape[0]
    if n <= ASSOC_EXHAUSTIVE:
        for a in range(n):
            lhs = mul[mul[a]]          # (a b) c  indexed [b, c]
            rhs = mul[a][mul]          # a (b c)
            bad = np.argwhere(lhs != rhs)
            if bad.size:
                b, c = bad[0]
                raise NotAGroup("multiplication is not associative", witness=(a, int(b), int(c)))
        return
    rng = np.random.default_rng(seed)
    t = rng.integers(0, n, size=(10 * n * n, 3))
    a, b, c = t.T
    bad = np.flatnonzero(mul[mul[a, b], c] != mul[a, mul[b, c]])
    if bad.size:
        i = bad[0]
        raise NotAGroup("multiplication is not associative", witness=(int(a[i]), int(b[i]), int(c[i])))


def group_from_elements(elements: Sequence, op, name: str = "G") -> GroupTable:
    """Cayley table of a finite set of hashable elements under ``op`` (first is identity)."""
    index = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    mul = np.empty((n, n), dtype=np.int64)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            mul[i, j] = index[op(a, b)]
    return group_from_mul_table(n, mul, name=name)


def table_to_dict(G: GroupTable) -> dict:
    return {"order": G.order, "mul": G.mul_table.tolist(), "name": G.name}


def group_from_dict(data: dict) -> GroupTable:
    return group_from_mul_table(int(data["order"]), np.array(data["mul"]), name=data.get("name", "G"))
