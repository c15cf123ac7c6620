"""Todd-Coxeter coset enumeration and permutation images of coset tables."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import _kernels as K
from .groups import GroupTable
from .presentation import Presentation, Word, cyclic_reduce, free_reduce, to_columns

DEFAULT_MAX_COSETS = 2**20
DEFAULT_MAX_LOOKAHEADS = 8
DEFAULT_ELEMENT_CAP = 2**20


class Strategy(enum.Enum):
    HLT = "hlt"


class CosetOverflow(RuntimeError):
    """Enumeration needed more than ``max_cosets`` cosets."""

    def __init__(self, max_cosets: int, what: str = ""):
        self.max_cosets = max_cosets
        super().__init__(f"coset enumeration {what}exceeded {max_cosets} cosets")


class ElementCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True, eq=False)
class CosetTable:
    """A complete, standardized coset table.

    ``rows[c, 2*i]`` is coset ``c`` times generator ``i`` and
    ``rows[c, 2*i + 1]`` coset ``c`` times its inverse.  Coset 0 is the
    subgroup itself.
    """

    rows: np.ndarray
    ngens: int
    subgroup_words: tuple[Word, ...] = ()
    status: str = "complete"
    stats: dict = field(default_factory=dict, compare=False)

    @property
    def coset_count(self) -> int:
        return self.rows.shape[0]

    def __eq__(self, other):
        return (
            isinstance(other, CosetTable)
            and self.ngens == other.ngens
            and np.array_equal(self.rows, other.rows)
        )

    def trace(self, coset: int, word: Word) -> int:
        for c in to_columns(word):
            coset = int(self.rows[coset, c])
        return coset

    def relators_hold(self, relators: Sequence[Word]) -> bool:
        flat, off = _flatten([cyclic_reduce(r) for r in relators])
        c, _ = K.relator_violation(self.rows, flat, off)
        return c < 0


def _flatten(words: Sequence[Word]) -> tuple[np.ndarray, np.ndarray]:
    flat: list[int] = []
    off = [0]
    for w in words:
        flat.extend(to_columns(w))
        off.append(len(flat))
    return np.array(flat, dtype=np.int32), np.array(off, dtype=np.int64)


def prepare_relators(relators: Sequence[Word]) -> list[Word]:
    """Cyclically reduce, drop trivial and repeated relators, shortest first."""
    seen = set()
    out = []
    for r in relators:
        w = cyclic_reduce(r)
        if w and w not in seen:
            seen.add(w)
            out.append(w)
    out.sort(key=len)
    return out


def todd_coxeter(
    P: Presentation,
    subgroup_words: Sequence[Word] = (),
    max_cosets: int = DEFAULT_MAX_COSETS,
    strategy: Strategy = Strategy.HLT,
    max_lookaheads: int = DEFAULT_MAX_LOOKAHEADS,
) -> CosetTable:
    """Enumerate the cosets of ``<subgroup_words>`` in the group presented by ``P``."""
    if max_cosets < 1:
        raise ValueError("max_cosets must be positive")
    if strategy is not Strategy.HLT:
        raise ValueError(f"unsupported strategy {strategy}")
    rels = prepare_relators(P.relators)
    subs = [w for w in (free_reduce(s) for s in subgroup_words) if w]
    rflat, roff = _flatten(rels)
    sflat, soff = _flatten(subs)
    # give up rather than thrash: each lookahead scans the whole table
    min_free = max(1, max_cosets // 32)
    status, rows, st = K.hlt_enumerate(2 * P.ngens, rflat, roff, sflat, soff, max_cosets, min_free,
                                       max_lookaheads)
    if status != K.OK:
        raise CosetOverflow(max_cosets, f"of {P.name!r} " if P.name else "")
    stats = {
        "defined": int(st[2]),
        "max_live": int(st[3]),
        "lookaheads": int(st[4]),
        "relators": len(rels),
    }
    c, r = K.relator_violation(rows, rflat, roff)
    if c >= 0:
        raise AssertionError(f"enumeration finished with relator {r} open at coset {c}")
    return CosetTable(np.ascontiguousarray(rows), P.ngens, tuple(subs), "complete", stats)


def perm_image(
    T: CosetTable, P: Presentation, element_cap: int = DEFAULT_ELEMENT_CAP
) -> tuple[GroupTable, dict[str, int]]:
    """The permutation group generated by the generator actions on cosets.

    Returns the group and the element representing each presentation
    generator.  Over the trivial subgroup the action is regular and the
    cosets themselves are the elements.
    """
    k = T.ngens
    if not T.subgroup_words:
        if T.coset_count > element_cap:
            raise ElementCapExceeded(f"{T.coset_count} elements > cap {element_cap}")
        G = GroupTable(T.rows, [int(T.rows[0, 2 * i]) for i in range(k)], name=P.name)
        return G, {P.generators[i]: G.generators[i] for i in range(k)}

    # general case: close the generator permutations under composition
    n = T.coset_count
    rows = T.rows
    ident = np.arange(n, dtype=np.int32)
    perms = [ident]
    index = {ident.tobytes(): 0}
    edges: list[list[int]] = []
    i = 0
    while i < len(perms):
        p = perms[i]
        row = []
        for c in range(2 * k):
            q = rows[p, c]
            key = q.tobytes()
            j = index.get(key)
            if j is None:
                if len(perms) >= element_cap:
                    raise ElementCapExceeded(f"permutation image exceeds {element_cap} elements")
                j = len(perms)
                index[key] = j
                perms.append(q)
            row.append(j)
        edges.append(row)
        i += 1
    action = np.array(edges, dtype=np.int32).reshape(len(perms), 2 * k)
    G = GroupTable(action, [int(action[0, 2 * i]) for i in range(k)], name=P.name)
    return G, {P.generators[i]: G.generators[i] for i in range(k)}


def group_from_presentation(
    P: Presentation,
    max_cosets: int = DEFAULT_MAX_COSETS,
    element_cap: int = DEFAULT_ELEMENT_CAP,
) -> GroupTable:
    T = todd_coxeter(P, (), max_cosets)
    G, _ = perm_image(T, P, element_cap)
    return G


def base_image(
    tables: Sequence[CosetTable], P: Presentation, element_cap: int = DEFAULT_ELEMENT_CAP
) -> tuple[GroupTable, dict[str, int]]:
    """The group acting on two coset spaces whose subgroups meet trivially.

    Each element is identified with the pair of cosets it sends the two
    base cosets to, which gives the right regular action directly.  The
    caller must know the intersection of the two subgroups is trivial.
    """
    A, B = tables
    if A.ngens != B.ngens or A.ngens != P.ngens:
        raise ValueError("coset tables do not match the presentation")
    status, action = K.pair_orbit(A.rows, B.rows, element_cap)
    if status != K.OK:
        raise ElementCapExceeded(f"orbit exceeds {element_cap} elements")
    k = P.ngens
    G = GroupTable(action, [int(action[0, 2 * i]) for i in range(k)], name=P.name)
    return G, {P.generators[i]: G.generators[i] for i in range(k)}
