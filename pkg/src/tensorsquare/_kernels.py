"""Compiled inner loops: coset enumeration and Cayley-graph element arithmetic.

Tables use one column per generator and one per inverse generator; column
``2*i`` is generator ``i`` and ``2*i + 1`` its inverse, so ``c ^ 1`` is the
inverse column of ``c``.  Undefined entries are ``-1``.
"""

import numpy as np
from numba import njit, types
from numba.typed import Dict

# status codes returned by the enumerators
OK = 0
OVERFLOW = 1

# slots of the enumerator state vector
_NXT, _LIVE, _DEFINED, _MAXLIVE, _LOOKAHEADS = 0, 1, 2, 3, 4


@njit(cache=True)
def _rep(fwd, c):
    r = c
    while fwd[r] != r:
        r = fwd[r]
    while fwd[c] != r:
        n = fwd[c]
        fwd[c] = r
        c = n
    return r


@njit(cache=True)
def _merge(fwd, queue, qlen, st, a, b):
    a = _rep(fwd, a)
    b = _rep(fwd, b)
    if a == b:
        return qlen
    lo = min(a, b)
    hi = max(a, b)
    fwd[hi] = lo
    queue[qlen] = hi
    st[_LIVE] -= 1
    return qlen + 1


@njit(cache=True)
def _coincidence(table, fwd, queue, st, a, b):
    ncols = table.shape[1]
    qlen = _merge(fwd, queue, 0, st, a, b)
    i = 0
    while i < qlen:
        g = queue[i]
        i += 1
        for x in range(ncols):
            d = table[g, x]
            if d < 0:
                continue
            xi = x ^ 1
            table[d, xi] = -1
            mu = _rep(fwd, g)
            nu = _rep(fwd, d)
            if table[mu, x] >= 0:
                qlen = _merge(fwd, queue, qlen, st, nu, table[mu, x])
            elif table[nu, xi] >= 0:
                qlen = _merge(fwd, queue, qlen, st, mu, table[nu, xi])
            else:
                table[mu, x] = nu
                table[nu, xi] = mu


@njit(cache=True)
def _define(table, fwd, st, f, x):
    c = st[_NXT]
    st[_NXT] += 1
    st[_LIVE] += 1
    st[_DEFINED] += 1
    if st[_LIVE] > st[_MAXLIVE]:
        st[_MAXLIVE] = st[_LIVE]
    fwd[c] = c
    table[f, x] = c
    table[c, x ^ 1] = f
    return c


@njit(cache=True)
def _scan(table, fwd, queue, st, alpha, word, s, e, fill):
    """Scan ``word[s:e]`` from ``alpha``.

    With ``fill`` the gaps are closed by definitions; returns 1 when a
    definition is needed but the table is full, else 0.
    """
    cap = table.shape[0]
    f = alpha
    i = s
    b = alpha
    j = e - 1
    while True:
        while i <= j and table[f, word[i]] >= 0:
            f = table[f, word[i]]
            i += 1
        if i > j:
            if f != alpha:
                _coincidence(table, fwd, queue, st, f, alpha)
            return 0
        while j >= i and table[b, word[j] ^ 1] >= 0:
            b = table[b, word[j] ^ 1]
            j -= 1
        if j < i:
            _coincidence(table, fwd, queue, st, f, b)
            return 0
        if i == j:
            table[f, word[i]] = b
            table[b, word[i] ^ 1] = f
            return 0
        if not fill:
            return 0
        if st[_NXT] >= cap:
            return 1
        _define(table, fwd, st, f, word[i])


@njit(cache=True)
def _compress(table, fwd, newidx, st):
    nxt = st[_NXT]
    ncols = table.shape[1]
    k = 0
    for c in range(nxt):
        if fwd[c] == c:
            newidx[c] = k
            k += 1
        else:
            newidx[c] = -1
    for c in range(nxt):
        if fwd[c] != c:
            continue
        nc = newidx[c]
        for x in range(ncols):
            t = table[c, x]
            if t >= 0:
                table[nc, x] = newidx[_rep(fwd, t)]
            else:
                table[nc, x] = -1
    for c in range(k, nxt):
        for x in range(ncols):
            table[c, x] = -1
    for c in range(nxt):
        fwd[c] = c
    st[_NXT] = k
    st[_LIVE] = k
    return k


@njit(cache=True)
def _make_room(table, fwd, queue, newidx, st, rel, roff, alpha, min_free, max_lookaheads):
    """Lookahead over every live coset, then compress.

    Returns the renumbered ``alpha`` or -1 if too little space was freed
    or the lookahead budget is spent.
    """
    if st[_LOOKAHEADS] >= max_lookaheads:
        return -1
    st[_LOOKAHEADS] += 1
    nrel = roff.shape[0] - 1
    nxt = st[_NXT]
    for beta in range(nxt):
        if fwd[beta] != beta:
            continue
        for r in range(nrel):
            _scan(table, fwd, queue, st, beta, rel, roff[r], roff[r + 1], False)
            if fwd[beta] != beta:
                break
    below = 0
    for c in range(min(alpha, nxt)):
        if fwd[c] == c:
            below += 1
    _compress(table, fwd, newidx, st)
    if table.shape[0] - st[_NXT] < min_free:
        return -1
    return below


@njit(cache=True)
def hlt_enumerate(ncols, rel, roff, sub, soff, cap, min_free, max_lookaheads):
    """HLT coset enumeration with lookahead.

    Returns ``(status, table, stats)``; on success ``table`` is standardized
    (cosets numbered in order of first appearance scanning rows in order).
    """
    table = np.full((cap, ncols), -1, np.int32)
    fwd = np.arange(cap).astype(np.int32)
    queue = np.empty(cap, np.int32)
    newidx = np.empty(cap, np.int32)
    st = np.zeros(5, np.int64)
    st[_NXT] = 1
    st[_LIVE] = 1
    st[_DEFINED] = 1
    st[_MAXLIVE] = 1
    nrel = roff.shape[0] - 1
    nsub = soff.shape[0] - 1

    w = 0
    while w < nsub:
        if _scan(table, fwd, queue, st, 0, sub, soff[w], soff[w + 1], True):
            if _make_room(table, fwd, queue, newidx, st, rel, roff, 0, min_free, max_lookaheads) < 0:
                return OVERFLOW, table[:0], st
            w = 0
            continue
        w += 1

    alpha = 0
    while alpha < st[_NXT]:
        if fwd[alpha] != alpha:
            alpha += 1
            continue
        restart = False
        r = 0
        while r < nrel and fwd[alpha] == alpha:
            if _scan(table, fwd, queue, st, alpha, rel, roff[r], roff[r + 1], True):
                alpha = _make_room(table, fwd, queue, newidx, st, rel, roff, alpha, min_free, max_lookaheads)
                if alpha < 0:
                    return OVERFLOW, table[:0], st
                restart = True
                break
            r += 1
        if restart:
            continue
        x = 0
        while x < ncols and fwd[alpha] == alpha:
            if table[alpha, x] < 0:
                if st[_NXT] >= cap:
                    alpha = _make_room(table, fwd, queue, newidx, st, rel, roff, alpha, min_free, max_lookaheads)
                    if alpha < 0:
                        return OVERFLOW, table[:0], st
                    restart = True
                    break
                _define(table, fwd, st, alpha, x)
            x += 1
        if restart:
            continue
        alpha += 1

    _compress(table, fwd, newidx, st)
    n = st[_NXT]
    return OK, standardize(table[:n]), st


@njit(cache=True)
def standardize(table):
    """Renumber cosets in order of first appearance, scanning rows in order."""
    n, ncols = table.shape
    new = np.full(n, -1, np.int32)
    old = np.empty(n, np.int32)
    new[0] = 0
    old[0] = 0
    nxt = 1
    for i in range(n):
        if i >= nxt:
            break
        c = old[i]
        for x in range(ncols):
            t = table[c, x]
            if t >= 0 and new[t] < 0:
                new[t] = nxt
                old[nxt] = t
                nxt += 1
    out = np.full((nxt, ncols), -1, np.int32)
    for i in range(nxt):
        c = old[i]
        for x in range(ncols):
            t = table[c, x]
            if t >= 0:
                out[i, x] = new[t]
    return out


@njit(cache=True)
def relator_violation(table, rel, roff):
    """First ``(coset, relator)`` whose trace does not close, else (-1, -1)."""
    n = table.shape[0]
    nrel = roff.shape[0] - 1
    for c in range(n):
        for r in range(nrel):
            f = c
            for i in range(roff[r], roff[r + 1]):
                f = table[f, rel[i]]
                if f < 0:
                    return c, r
            if f != c:
                return c, r
    return -1, -1


# ---------------------------------------------------------------------------
# Cayley-graph arithmetic.  ``action[x, c]`` is x times column generator c;
# ``parent``/``pcol`` form a breadth-first spanning tree rooted at 0 with
# x == action[parent[x], pcol[x]].


@njit(cache=True)
def bfs_tree(action):
    n, ncols = action.shape
    parent = np.full(n, -1, np.int64)
    pcol = np.full(n, -1, np.int64)
    depth = np.full(n, -1, np.int64)
    order = np.empty(n, np.int64)
    order[0] = 0
    depth[0] = 0
    parent[0] = 0
    head = 0
    tail = 1
    while head < tail:
        x = order[head]
        head += 1
        for c in range(ncols):
            y = action[x, c]
            if depth[y] < 0:
                depth[y] = depth[x] + 1
                parent[y] = x
                pcol[y] = c
                order[tail] = y
                tail += 1
    return parent, pcol, depth, order[:tail]


@njit(cache=True)
def _word(parent, pcol, y, buf):
    k = 0
    while y != 0:
        buf[k] = pcol[y]
        y = parent[y]
        k += 1
    return k


@njit(cache=True)
def mul_many(action, parent, pcol, maxdepth, xs, ys):
    out = np.empty(xs.shape[0], np.int64)
    buf = np.empty(maxdepth + 1, np.int64)
    for t in range(xs.shape[0]):
        k = _word(parent, pcol, ys[t], buf)
        f = xs[t]
        for i in range(k - 1, -1, -1):
            f = action[f, buf[i]]
        out[t] = f
    return out


@njit(cache=True)
def inverses(action, parent, pcol):
    n = action.shape[0]
    out = np.empty(n, np.int64)
    for x in range(n):
        f = 0
        y = x
        while y != 0:
            f = action[f, pcol[y] ^ 1]
            y = parent[y]
        out[x] = f
    return out


@njit(cache=True)
def element_orders(action, parent, pcol, maxdepth, xs):
    out = np.empty(xs.shape[0], np.int64)
    buf = np.empty(maxdepth + 1, np.int64)
    for t in range(xs.shape[0]):
        k = _word(parent, pcol, xs[t], buf)
        f = xs[t]
        m = 1
        while f != 0:
            for i in range(k - 1, -1, -1):
                f = action[f, buf[i]]
            m += 1
        out[t] = m
    return out


@njit(cache=True)
def closure(action, parent, pcol, maxdepth, seeds):
    """Mask of the subgroup generated by ``seeds`` (right-multiplication BFS)."""
    n = action.shape[0]
    ns = seeds.shape[0]
    lens = np.zeros(ns, np.int64)
    words = np.empty((ns, maxdepth + 1), np.int64)
    buf = np.empty(maxdepth + 1, np.int64)
    for s in range(ns):
        k = _word(parent, pcol, seeds[s], buf)
        lens[s] = k
        for i in range(k):
            words[s, i] = buf[k - 1 - i]
    mask = np.zeros(n, np.bool_)
    queue = np.empty(n, np.int64)
    mask[0] = True
    queue[0] = 0
    head = 0
    tail = 1
    while head < tail:
        x = queue[head]
        head += 1
        for s in range(ns):
            f = x
            for i in range(lens[s]):
                f = action[f, words[s, i]]
            if not mask[f]:
                mask[f] = True
                queue[tail] = f
                tail += 1
    return mask


@njit(cache=True)
def pair_orbit(A, B, cap):
    """Right regular action on the orbit of the base pair (0, 0).

    ``A`` and ``B`` are coset tables of one group over two subgroups with
    trivial intersection, so an element is determined by the pair of
    cosets it moves the base points to.  Returns ``(status, action)``.
    """
    ncols = A.shape[1]
    nb = B.shape[0]
    index = Dict.empty(key_type=types.int64, value_type=types.int64)
    ps = np.empty(cap, np.int64)
    qs = np.empty(cap, np.int64)
    action = np.empty((cap, ncols), np.int32)
    index[0] = 0
    ps[0] = 0
    qs[0] = 0
    n = 1
    head = 0
    while head < n:
        p = ps[head]
        q = qs[head]
        for c in range(ncols):
            p2 = A[p, c]
            q2 = B[q, c]
            key = p2 * nb + q2
            j = index.get(key, -1)
            if j < 0:
                if n >= cap:
                    return OVERFLOW, action[:0]
                j = n
                index[key] = j
                ps[n] = p2
                qs[n] = q2
                n += 1
            action[head, c] = j
        head += 1
    return OK, action[:n].copy()
