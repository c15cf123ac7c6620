"""Built-in groups and group-reference resolution.

References accepted by :func:`resolve`:

* a catalog name such as ``s3``, ``z2xz4`` or ``heis27``;
* ``table:FILE`` for a JSON multiplication table;
* ``presentation:FILE`` for a text or JSON presentation;
* ``gdc:d,c,p`` for the free class-c exponent-p-central quotient on d generators.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

import numpy as np

from .coset_enum import DEFAULT_ELEMENT_CAP, DEFAULT_MAX_COSETS, group_from_presentation
from .groups import GroupTable, group_from_dict, group_from_elements
from .presentation import load_presentation


class UnknownGroup(ValueError):
    pass


def cyclic(n: int, name: str | None = None) -> GroupTable:
    return abelian_product([n], name or f"z{n}")


def abelian_product(orders, name: str | None = None) -> GroupTable:
    orders = tuple(int(n) for n in orders)
    elements = list(itertools.product(*(range(n) for n in orders)))

    def op(a, b):
        return tuple((x + y) % n for x, y, n in zip(a, b, orders))

    return group_from_elements(elements, op, name or "x".join(f"z{n}" for n in orders))


def metacyclic(m: int, r: int, s: int, name: str) -> GroupTable:
    """``<a, b | a^m, b^2 = a^s, b a b^-1 = a^r>`` as pairs ``a^i b^j``."""
    r %= m
    if (r * r) % m != 1 or (r * s - s) % m:
        raise ValueError("parameters do not define a group of order 2m")
    elements = [(i, j) for j in range(2) for i in range(m)]

    def op(x, y):
        i, j = x
        k, l = y
        e = i + (k * r if j else k)
        if j + l == 2:
            e += s
        return (e % m, (j + l) % 2)

    return group_from_elements(elements, op, name)


def dihedral(n: int, name: str | None = None) -> GroupTable:
    """Symmetries of the n-gon, order 2n."""
    return metacyclic(n, -1, 0, name or f"d{n}")


def heisenberg(p: int = 3, name: str | None = None) -> GroupTable:
    """Upper unitriangular 3x3 matrices over Z_p, stored as (x, y, z)."""
    elements = list(itertools.product(range(p), repeat=3))

    def op(a, b):
        return ((a[0] + b[0]) % p, (a[1] + b[1]) % p, (a[2] + b[2] + a[0] * b[1]) % p)

    return group_from_elements(elements, op, name or f"heis{p**3}")


def gdc(d: int, c: int, p: int, max_cosets: int = DEFAULT_MAX_COSETS,
        element_cap: int = DEFAULT_ELEMENT_CAP) -> GroupTable:
    from .theorems import GdcSpec, build_gdc

    return build_gdc(GdcSpec(d, c, p), max_cosets=max_cosets, element_cap=element_cap)


@dataclass(frozen=True)
class Entry:
    name: str
    order: int
    build: Callable[[], GroupTable]
    description: str


def _entries() -> list[Entry]:
    out = [Entry(f"z{n}", n, (lambda n=n: cyclic(n)), f"cyclic of order {n}") for n in range(1, 13)]
    for orders in [(2, 2), (3, 3), (2, 2, 2), (2, 4), (4, 4)]:
        name = "x".join(f"z{n}" for n in orders)
        out.append(Entry(name, int(np.prod(orders)), (lambda o=orders: abelian_product(o)), "abelian"))
    out += [
        Entry("s3", 6, lambda: dihedral(3, "s3"), "symmetric group on 3 points"),
        Entry("d4", 8, lambda: dihedral(4), "dihedral of order 8"),
        Entry("q8", 8, lambda: metacyclic(4, -1, 2, "q8"), "quaternion"),
        Entry("d6", 12, lambda: dihedral(6), "dihedral of order 12"),
        Entry("q16", 16, lambda: metacyclic(8, -1, 4, "q16"), "generalized quaternion"),
        Entry("sd16", 16, lambda: metacyclic(8, 3, 0, "sd16"), "semidihedral"),
        Entry("heis27", 27, lambda: heisenberg(3), "unitriangular 3x3 over Z_3"),
    ]
    for p in (2, 3):
        for c in (1, 2):
            order = {1: p**2, 2: p**5}[c]
            out.append(Entry(f"gdc:2,{c},{p}", order, (lambda c=c, p=p: gdc(2, c, p)),
                             f"2-generator, class {c}, exponent-{p} central series"))
    return out


CATALOG: dict[str, Entry] = {e.name: e for e in _entries()}
ALIASES = {"a3": "z3", "c2": "z2", "klein": "z2xz2", "v4": "z2xz2", "d3": "s3", "heis": "heis27"}
STANDARD_CORPUS: tuple[str, ...] = tuple(CATALOG)


def resolve(ref: str, max_cosets: int = DEFAULT_MAX_COSETS,
            element_cap: int = DEFAULT_ELEMENT_CAP) -> GroupTable:
    ref = ref.strip()
    key = ALIASES.get(ref.lower(), ref.lower())
    if key.startswith("gdc:"):
        try:
            d, c, p = (int(v) for v in key[4:].split(","))
        except ValueError:
            raise UnknownGroup(f"expected gdc:d,c,p, got {ref!r}") from None
        G = gdc(d, c, p, max_cosets, element_cap)
        return G
    if key in CATALOG:
        return CATALOG[key].build()
    if ref.startswith("table:"):
        path = Path(ref[6:])
        data = json.loads(path.read_text())
        data.setdefault("name", path.stem)
        return group_from_dict(data)
    if ref.startswith("presentation:"):
        P = load_presentation(ref[len("presentation:"):])
        return group_from_presentation(P, max_cosets, element_cap)
    raise UnknownGroup(f"unknown group {ref!r}; try the catalog command")


def load_corpus(spec: str) -> list[str]:
    """``standard`` or a file with one group reference per line."""
    if spec == "standard":
        return list(STANDARD_CORPUS)
    lines = Path(spec).read_text().splitlines()
    return [ln.strip() for ln in lines if ln.strip() and not ln.lstrip().startswith("#")]
