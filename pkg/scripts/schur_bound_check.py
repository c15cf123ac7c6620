#!/usr/bin/env python3
"""Compare the Schur multiplier of the corpus p-groups with the exponent bound
p^(d(2n-d-c)/2), where c = 1 for odd p and c = 3 for p = 2, and a negative
exponent reads as |M(G)| = 1.  For p = 2 the table also lists |nabla(G)| next
to 2^(d(d+3)/2).

Elementary abelian 2-groups break the p = 2 bound: (Z_2)^2 has M = Z_2 while
the bound is 1, and (Z_2)^3 has M = (Z_2)^3 while the bound is 1.
"""

from tensorsquare import nu as nm
from tensorsquare.catalog import STANDARD_CORPUS, resolve
from tensorsquare.coset_enum import CosetOverflow, ElementCapExceeded
from tensorsquare.theorems import schur_bound_exponent


def main() -> None:
    print(f"{'group':<12} {'|G|':>5} {'d':>2} {'|M|':>6} {'bound':>6} {'|nabla|':>8} {'2^(d(d+3)/2)':>13}  verdict")
    for ref in STANDARD_CORPUS:
        G = resolve(ref)
        if G.order == 1:
            continue
        n, p = _pn(G.order)
        if p is None:
            continue
        try:
            an = nm.TensorAnalysis(nm.nu_image(G))
        except (CosetOverflow, ElementCapExceeded):
            print(f"{ref:<12} {G.order:>5}  skipped (enumeration limits)")
            continue
        d = an.ab.atype.rank(p)
        e = schur_bound_exponent(p, n, d)
        bound = p ** e if e > 0 else 1
        m = an.M.order
        nab = an.nabla.order
        ref2 = 2 ** (d * (d + 3) // 2) if p == 2 else None
        verdict = "ok" if m <= bound else "VIOLATED"
        print(f"{ref:<12} {G.order:>5} {d:>2} {m:>6} {bound:>6} {nab:>8} {ref2 if ref2 else '-':>13}  {verdict}")


def _pn(order: int):
    for p in range(2, order + 1):
        if order % p == 0:
            n, m = 0, order
            while m % p == 0:
                m //= p
                n += 1
            return (n, p) if m == 1 else (None, None)
    return None, None


if __name__ == "__main__":
    main()
