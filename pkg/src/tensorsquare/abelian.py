"""Finitely generated abelian groups: Smith normal form, invariant factors,
tensor products, Whitehead's quadratic functor and the diagonal/off-diagonal
split of ``A (x) A``.

Integer matrices are numpy ``object`` arrays of Python ints, so arithmetic
never wraps.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

import numpy as np
from sympy import factorint


def as_int_matrix(M, ncols: int | None = None) -> np.ndarray:
    A = np.array(M, dtype=object)
    if A.size == 0:
        return np.zeros((0 if A.ndim < 2 else A.shape[0], ncols or 0), dtype=object)
    if A.ndim != 2:
        raise ValueError("expected a 2-d integer matrix")
    for v in A.flat:
        if not isinstance(v, (int, np.integer)):
            raise TypeError(f"non-integer entry {v!r}")
    return np.vectorize(int, otypes=[object])(A)


def identity(n: int) -> np.ndarray:
    I = np.zeros((n, n), dtype=object)
    for i in range(n):
        I[i, i] = 1
    return I


def _snf(M: np.ndarray):
    """Return S, U, V, U^-1, V^-1 with S = U M V."""
    A = M.copy()
    m, n = A.shape
    U, Ui, V, Vi = identity(m), identity(m), identity(n), identity(n)

    def swap_rows(i, j):
        if i != j:
            A[[i, j]] = A[[j, i]]
            U[[i, j]] = U[[j, i]]
            Ui[:, [i, j]] = Ui[:, [j, i]]

    def swap_cols(i, j):
        if i != j:
            A[:, [i, j]] = A[:, [j, i]]
            V[:, [i, j]] = V[:, [j, i]]
            Vi[[i, j]] = Vi[[j, i]]

    def add_row(dst, src, q):  # row dst += q * row src
        A[dst] = A[dst] + q * A[src]
        U[dst] = U[dst] + q * U[src]
        Ui[:, src] = Ui[:, src] - q * Ui[:, dst]

    def add_col(dst, src, q):  # col dst += q * col src
        A[:, dst] = A[:, dst] + q * A[:, src]
        V[:, dst] = V[:, dst] + q * V[:, src]
        Vi[src] = Vi[src] - q * Vi[dst]

    for t in range(min(m, n)):
        sub = A[t:, t:]
        nz = [(abs(sub[i, j]), i, j) for i in range(m - t) for j in range(n - t) if sub[i, j] != 0]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(t, t + i)
        swap_cols(t, t + j)
        while True:
            p = A[t, t]
            for i in range(t + 1, m):
                if A[i, t] != 0:
                    add_row(i, t, -(A[i, t] // p))
            for j in range(t + 1, n):
                if A[t, j] != 0:
                    add_col(j, t, -(A[t, j] // p))
            rest = [(abs(A[i, t]), i, "r") for i in range(t + 1, m) if A[i, t] != 0]
            rest += [(abs(A[t, j]), j, "c") for j in range(t + 1, n) if A[t, j] != 0]
            if rest:
                _, k, kind = min(rest)
                (swap_rows if kind == "r" else swap_cols)(t, k)
                continue
            bad = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i, j] % p != 0),
                None,
            )
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if A[t, t] < 0:
            A[t] = -A[t]
            U[t] = -U[t]
            Ui[:, t] = -Ui[:, t]
    return A, U, V, Ui, Vi


def smith_normal_form(M) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Smith normal form ``S = U @ M @ V`` with unimodular ``U``, ``V``.

    The diagonal of ``S`` is nonnegative with each entry dividing the next.
    Unimodularity is certified by the explicitly accumulated inverses.
    """
    M = as_int_matrix(M)
    S, U, V, Ui, Vi = _snf(M)
    m, n = M.shape
    if not (np.array_equal(U.dot(M).dot(V), S) if M.size else True):
        raise AssertionError("Smith normal form round trip failed")
    if not np.array_equal(U.dot(Ui), identity(m)) or not np.array_equal(V.dot(Vi), identity(n)):
        raise AssertionError("Smith transforms are not unimodular")
    return S, U, V


def smith_with_inverses(M):
    M = as_int_matrix(M)
    return _snf(M)


@dataclass(frozen=True, order=True)
class AbelianType:
    """``Z^free_rank x Z_{d1} x ... x Z_{dk}`` with ``d1 | d2 | ... | dk``."""

    free_rank: int = 0
    factors: tuple[int, ...] = ()

    def __post_init__(self):
        fs = tuple(int(d) for d in self.factors)
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        if any(d < 2 for d in fs):
            raise ValueError(f"invariant factors must be >= 2, got {fs}")
        if any(b % a for a, b in zip(fs, fs[1:])):
            raise ValueError(f"factors {fs} do not form a divisibility chain")
        object.__setattr__(self, "factors", fs)

    @classmethod
    def from_cyclic(cls, orders: Iterable[int]) -> "AbelianType":
        """Normalize a direct product of cyclic groups (0 means infinite cyclic)."""
        free = 0
        primes: dict[int, list[int]] = {}
        for n in orders:
            n = int(n)
            if n < 0:
                raise ValueError("negative cyclic order")
            if n == 0:
                free += 1
                continue
            for p, e in _factorize(n).items():
                primes.setdefault(p, []).append(p**e)
        k = max((len(v) for v in primes.values()), default=0)
        inv = [1] * k
        for p, powers in primes.items():
            powers.sort(reverse=True)
            for i, q in enumerate(powers):
                inv[k - 1 - i] *= q
        return cls(free, tuple(d for d in inv if d > 1))

    @property
    def order(self) -> int | None:
        return None if self.free_rank else math.prod(self.factors)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.factors

    def cyclic(self) -> list[int]:
        """Canonical cyclic decomposition: invariant factors, then the free part."""
        return list(self.factors) + [0] * self.free_rank

    def rank(self, p: int) -> int:
        return self.free_rank + sum(1 for d in self.factors if d % p == 0)

    def exponent(self) -> int | None:
        if self.free_rank:
            return None
        return self.factors[-1] if self.factors else 1

    def __add__(self, other: "AbelianType") -> "AbelianType":
        return AbelianType.from_cyclic(self.cyclic() + other.cyclic())

    def to_dict(self) -> dict:
        return {"free_rank": self.free_rank, "factors": list(self.factors)}

    @classmethod
    def from_dict(cls, data: Mapping) -> "AbelianType":
        return cls(int(data.get("free_rank", 0)), tuple(data.get("factors", ())))

    def __str__(self) -> str:
        parts = [f"Z_{d}" for d in self.factors]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " x ".join(parts) if parts else "1"


def _factorize(n: int) -> dict[int, int]:
    return {int(p): int(e) for p, e in factorint(n).items()}


def abelian_invariants(relations, ngens: int | None = None) -> AbelianType:
    """Type of ``Z^g / rowspace(relations)``."""
    M = as_int_matrix(relations, ngens)
    g = M.shape[1] if ngens is None else ngens
    if M.shape[1] != g:
        raise ValueError(f"relation matrix has {M.shape[1]} columns, expected {g}")
    if M.shape[0] == 0 or g == 0:
        return AbelianType(g, ())
    S = smith_with_inverses(M)[0]
    diag = [S[i, i] for i in range(min(S.shape))]
    nonzero = [d for d in diag if d != 0]
    return AbelianType(g - len(nonzero), tuple(int(d) for d in nonzero if d != 1))


def abelian_type_from_orders(histogram: Mapping[int, int]) -> AbelianType:
    """Type of a finite abelian group from its element-order histogram.

    For each prime ``p`` the number of elements killed by ``p^j`` is
    ``p^(sum_i min(j, e_i))``, which pins down the exponents ``e_i``.
    """
    n = sum(histogram.values())
    cyclic: list[int] = []
    for p, e_total in _factorize(n).items():
        counts = [1]
        j = 1
        while True:
            c = sum(v for o, v in histogram.items() if (p**j) % o == 0)
            counts.append(c)
            if c == p**e_total:
                break
            j += 1
        # at_least[j] = number of cyclic p-factors of exponent >= j
        at_least = []
        for j in range(1, len(counts)):
            ratio = counts[j] // counts[j - 1]
            at_least.append(round(math.log(ratio, p)) if ratio > 1 else 0)
        for j, m in enumerate(at_least, start=1):
            nxt = at_least[j] if j < len(at_least) else 0
            cyclic.extend([p**j] * (m - nxt))
    return AbelianType.from_cyclic(cyclic)


def tensor_abelian(A: AbelianType, B: AbelianType) -> AbelianType:
    # Z_m (x) Z_n = Z_gcd(m,n), with 0 standing for Z on either side
    return AbelianType.from_cyclic(math.gcd(a, b) for a in A.cyclic() for b in B.cyclic())


def gamma_whitehead(A: AbelianType) -> AbelianType:
    """Whitehead's quadratic functor applied to ``A``."""
    cyc = A.cyclic()
    diag = [n if n == 0 or n % 2 else 2 * n for n in cyc]
    cross = [math.gcd(a, b) for a, b in combinations(cyc, 2)]
    return AbelianType.from_cyclic(diag + cross)


def nabla_abelian(A: AbelianType) -> tuple[AbelianType, AbelianType]:
    """Split ``A (x) A`` into the part generated by ``a (x) a`` and a complement.

    With ``A = prod C_i`` the diagonal part is ``prod C_i x prod_{i<j} C_i (x) C_j``
    and the complement spanned by the ``a_i (x) a_j`` (``i < j``) is
    ``prod_{i<j} C_i (x) C_j``.
    """
    cyc = A.cyclic()
    cross = [math.gcd(a, b) for a, b in combinations(cyc, 2)]
    return AbelianType.from_cyclic(cyc + cross), AbelianType.from_cyclic(cross)


def subgroup_order(relations, ngens: int, generators) -> int:
    """Order of the subgroup of ``Z^g / rows(relations)`` spanned by ``generators``.

    Both quotients must be finite.
    """
    whole = abelian_invariants(relations, ngens)
    rel = [list(r) for r in as_int_matrix(relations, ngens)]
    quot = abelian_invariants(rel + [list(g) for g in generators], ngens)
    if whole.free_rank or quot.free_rank:
        raise ValueError("subgroup_order needs a finite ambient group")
    return whole.order // quot.order


def histogram_of(values: Iterable[int]) -> dict[int, int]:
    return dict(sorted(Counter(int(v) for v in values).items()))
