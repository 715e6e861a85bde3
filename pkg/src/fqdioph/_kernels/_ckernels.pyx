# cython: language_level=3, boundscheck=False, cdivision=True, initializedcheck=False
"""Compiled twins of the kernels in ``_pykernels`` (same signatures, same results)."""

import numpy as np

from libc.stdint cimport int64_t, uint64_t, uint8_t, int8_t
from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memcpy

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil

BACKEND = "cython"

cdef enum:
    MAXN = 64


# -- scalar field arithmetic -------------------------------------------------

cdef inline void _decode(int64_t code, int64_t p, int n, int64_t* out) noexcept nogil:
    cdef int i
    for i in range(n):
        out[i] = code % p
        code = code // p


cdef inline int64_t _encode(const int64_t* d, int64_t p, int n) noexcept nogil:
    cdef int64_t code = 0
    cdef int i
    for i in range(n - 1, -1, -1):
        code = code * p + d[i]
    return code


cdef void _mul_digits(const int64_t* x, const int64_t* y, int64_t p, int n,
                      const int64_t* negtail, int64_t* out) noexcept nogil:
    cdef int64_t prod[2 * MAXN]
    cdef int i, j, k, base
    cdef int64_t c, xi
    for i in range(2 * n - 1):
        prod[i] = 0
    for i in range(n):
        xi = x[i]
        if xi:
            for j in range(n):
                prod[i + j] = (prod[i + j] + xi * y[j]) % p
    for k in range(2 * n - 2, n - 1, -1):
        c = prod[k]
        if c:
            base = k - n
            for i in range(n):
                prod[base + i] = (prod[base + i] + c * negtail[i]) % p
    for i in range(n):
        out[i] = prod[i]


cdef int _load_tail(int64_t p, int n, tail, int64_t* negtail) except -1:
    cdef int i
    if n < 1 or n > MAXN:
        raise ValueError("extension degree out of kernel range")
    for i in range(n):
        negtail[i] = (p - (<int64_t> tail[i]) % p) % p
    return 0


def mul(int64_t p, int n, tail, int64_t a, int64_t b):
    cdef int64_t negtail[MAXN]
    cdef int64_t x[MAXN]
    cdef int64_t y[MAXN]
    if n == 1:
        return a * b % p
    _load_tail(p, n, tail, negtail)
    _decode(a, p, n, x)
    _decode(b, p, n, y)
    _mul_digits(x, y, p, n, negtail, x)
    return _encode(x, p, n)


def power(int64_t p, int n, tail, int64_t a, e):
    cdef int64_t negtail[MAXN]
    cdef int64_t res[MAXN]
    cdef int64_t base[MAXN]
    cdef int i
    cdef unsigned long long ee
    if n == 1:
        return pow(a, e, p)
    ee = e
    _load_tail(p, n, tail, negtail)
    for i in range(n):
        res[i] = 0
    res[0] = 1
    _decode(a, p, n, base)
    while ee:
        if ee & 1:
            _mul_digits(res, base, p, n, negtail, res)
        ee >>= 1
        if ee:
            _mul_digits(base, base, p, n, negtail, base)
    return _encode(res, p, n)


# -- full-field scans ----------------------------------------------------------

def chi_table(int64_t p, int n, tail):
    cdef int64_t q = p ** n
    cdef int64_t negtail[MAXN]
    cdef int64_t d[MAXN]
    cdef int64_t x, s
    out = np.full(q, -1, dtype=np.int8)
    cdef int8_t[::1] chi = out
    if n > 1:
        _load_tail(p, n, tail, negtail)
    with nogil:
        for x in range(q):
            if n == 1:
                s = x * x % p
            else:
                _decode(x, p, n, d)
                _mul_digits(d, d, p, n, negtail, d)
                s = _encode(d, p, n)
            chi[s] = 1
        chi[0] = 0
    return out


def mul_all(int64_t p, int n, tail, int64_t a):
    cdef int64_t q = p ** n
    cdef int64_t negtail[MAXN]
    cdef int64_t ad[MAXN]
    cdef int64_t d[MAXN]
    cdef int64_t x
    out = np.empty(q, dtype=np.int64)
    cdef int64_t[::1] res = out
    if n > 1:
        _load_tail(p, n, tail, negtail)
        _decode(a, p, n, ad)
    with nogil:
        for x in range(q):
            if n == 1:
                res[x] = a * x % p
            else:
                _decode(x, p, n, d)
                _mul_digits(ad, d, p, n, negtail, d)
                res[x] = _encode(d, p, n)
    return out


def eval_all(int64_t p, int n, tail, coeffs):
    cdef int64_t q = p ** n
    cdef int64_t negtail[MAXN]
    cdef int64_t xd[MAXN]
    cdef int64_t acc[MAXN]
    cdef int64_t x, v
    cdef int i, j, deg
    cs = np.array([int(k) % p for k in coeffs], dtype=np.int64)
    cdef int64_t[::1] c = cs
    deg = cs.shape[0] - 1
    out = np.zeros(q, dtype=np.int64)
    cdef int64_t[::1] res = out
    if deg < 0:
        return out
    if n > 1:
        _load_tail(p, n, tail, negtail)
    with nogil:
        for x in range(q):
            if n == 1:
                v = c[deg]
                for j in range(deg - 1, -1, -1):
                    v = (v * x + c[j]) % p
                res[x] = v
            else:
                _decode(x, p, n, xd)
                for i in range(n):
                    acc[i] = 0
                acc[0] = c[deg]
                for j in range(deg - 1, -1, -1):
                    _mul_digits(acc, xd, p, n, negtail, acc)
                    acc[0] = (acc[0] + c[j]) % p
                res[x] = _encode(acc, p, n)
    return out


def add_all(int64_t p, int n, int64_t a):
    cdef int64_t q = p ** n
    cdef int64_t ad[MAXN]
    cdef int64_t d[MAXN]
    cdef int64_t x
    cdef int i
    out = np.empty(q, dtype=np.int64)
    cdef int64_t[::1] res = out
    if n < 1 or n > MAXN:
        raise ValueError("extension degree out of kernel range")
    _decode(a, p, n, ad)
    with nogil:
        for x in range(q):
            _decode(x, p, n, d)
            for i in range(n):
                d[i] = (d[i] + ad[i]) % p
            res[x] = _encode(d, p, n)
    return out


def neighbor_mask(int64_t p, int n, tail, chi_arr, int64_t a):
    cdef const int8_t[::1] chi = chi_arr
    cdef int64_t[::1] prod = mul_all(p, n, tail, a)
    cdef int64_t q = prod.shape[0]
    cdef int64_t x, v
    out = np.empty(q, dtype=np.bool_)
    cdef uint8_t[::1] res = out.view(np.uint8)
    with nogil:
        for x in range(q):
            v = prod[x]
            v = v - v % p + (v % p + 1) % p
            res[x] = chi[v] >= 0
    return out


def adjacency(int64_t p, int n, tail, chi_arr):
    cdef const int8_t[::1] chi = chi_arr
    cdef int64_t q = p ** n
    cdef int64_t negtail[MAXN]
    cdef int64_t ad[MAXN]
    cdef int64_t d[MAXN]
    cdef int64_t a, b, v
    out = np.zeros((q - 1, q - 1), dtype=np.uint8)
    cdef uint8_t[:, ::1] adj = out
    if n > 1:
        _load_tail(p, n, tail, negtail)
    with nogil:
        for a in range(1, q):
            if n > 1:
                _decode(a, p, n, ad)
            for b in range(a + 1, q):
                if n == 1:
                    v = (a * b + 1) % p
                else:
                    _decode(b, p, n, d)
                    _mul_digits(ad, d, p, n, negtail, d)
                    d[0] = (d[0] + 1) % p
                    v = _encode(d, p, n)
                if chi[v] >= 0:
                    adj[a - 1, b - 1] = 1
                    adj[b - 1, a - 1] = 1
    return out


# -- maximum clique on uint64 bitsets ----------------------------------------------

cdef struct Graph:
    int k
    int W
    uint64_t* nb
    int best
    long long nodes
    int target
    int* chosen
    int nchosen


cdef inline bint _any(const uint64_t* s, int W) noexcept nogil:
    cdef int w
    for w in range(W):
        if s[w]:
            return True
    return False


cdef inline int _count(const uint64_t* s, int W) noexcept nogil:
    cdef int w, c = 0
    for w in range(W):
        c += __builtin_popcountll(s[w])
    return c


cdef int _expand(Graph* g, int depth, uint64_t* cand) noexcept nogil:
    cdef int W = g.W
    cdef int total = _count(cand, W)
    cdef int* verts = <int*> malloc(total * sizeof(int) + 1)
    cdef int* cols = <int*> malloc(total * sizeof(int) + 1)
    cdef uint64_t* unc = <uint64_t*> malloc(3 * W * sizeof(uint64_t))
    cdef uint64_t* avail = unc + W
    cdef uint64_t* sub = unc + 2 * W
    cdef int c = 0, color = 0, w, v, idx, w0
    cdef uint64_t* row
    g.nodes += 1
    memcpy(unc, cand, W * sizeof(uint64_t))
    w0 = 0
    while True:
        while w0 < W and unc[w0] == 0:
            w0 += 1
        if w0 == W:
            break
        color += 1
        memcpy(avail, unc, W * sizeof(uint64_t))
        w = w0
        while w < W:
            if avail[w] == 0:
                w += 1
                continue
            v = w * 64 + __builtin_ctzll(avail[w])
            unc[w] &= ~(<uint64_t> 1 << (v & 63))
            avail[w] &= ~(<uint64_t> 1 << (v & 63))
            row = g.nb + v * W
            for idx in range(w, W):
                avail[idx] &= ~row[idx]
            verts[c] = v
            cols[c] = color
            c += 1
    for idx in range(c - 1, -1, -1):
        if depth + cols[idx] <= g.best:
            break
        v = verts[idx]
        row = g.nb + v * W
        for w in range(W):
            sub[w] = cand[w] & row[w]
        if _any(sub, W):
            _expand(g, depth + 1, sub)
        elif depth + 1 > g.best:
            g.best = depth + 1
        cand[v >> 6] &= ~(<uint64_t> 1 << (v & 63))
    free(verts)
    free(cols)
    free(unc)
    return 0


cdef int _search(Graph* g, uint64_t* cand) noexcept nogil:
    """1 if a clique of size g.target extending g.chosen exists (left in g.chosen)."""
    cdef int W = g.W
    cdef int total = _count(cand, W)
    cdef int* verts = <int*> malloc(total * sizeof(int) + 1)
    cdef int* suffix = <int*> malloc(total * sizeof(int) + 1)
    cdef uint64_t* classes = <uint64_t*> calloc(total * W + 1, sizeof(uint64_t))
    cdef uint64_t* sub = <uint64_t*> malloc(W * sizeof(uint64_t))
    cdef int c = 0, nclass = 0, running = 0, w, v, i, j, found = 0
    cdef uint64_t bits
    cdef uint64_t* row
    cdef uint64_t* cls
    cdef bint clash
    g.nodes += 1
    for w in range(W):
        bits = cand[w]
        while bits:
            verts[c] = w * 64 + __builtin_ctzll(bits)
            bits &= bits - 1
            c += 1
    for i in range(c - 1, -1, -1):
        v = verts[i]
        row = g.nb + v * W
        j = 0
        while j < nclass:
            cls = classes + j * W
            clash = False
            for w in range(W):
                if cls[w] & row[w]:
                    clash = True
                    break
            if not clash:
                break
            j += 1
        if j == nclass:
            nclass += 1
        classes[j * W + (v >> 6)] |= <uint64_t> 1 << (v & 63)
        if j + 1 > running:
            running = j + 1
        suffix[i] = running
    free(classes)
    for i in range(c):
        if g.nchosen + suffix[i] < g.target:
            break
        v = verts[i]
        cand[v >> 6] &= ~(<uint64_t> 1 << (v & 63))
        g.chosen[g.nchosen] = v
        g.nchosen += 1
        if g.nchosen == g.target:
            found = 1
            break
        row = g.nb + v * W
        for w in range(W):
            sub[w] = cand[w] & row[w]
        if _any(sub, W) and _search(g, sub):
            found = 1
            break
        g.nchosen -= 1
    free(verts)
    free(suffix)
    free(sub)
    return found


cdef uint64_t* _pack(const uint8_t[:, ::1] adj, order, int W):
    cdef int k = adj.shape[0]
    cdef uint64_t* nb = <uint64_t*> calloc(k * W + 1, sizeof(uint64_t))
    cdef int[::1] pos = np.empty(k, dtype=np.intc)
    cdef int[::1] ordv = np.asarray(order, dtype=np.intc)
    cdef int i, j, u, v
    for i in range(k):
        pos[ordv[i]] = i
    for i in range(k):
        v = ordv[i]
        for u in range(k):
            if u != v and adj[v, u]:
                j = pos[u]
                nb[i * W + (j >> 6)] |= <uint64_t> 1 << (j & 63)
    return nb


def max_clique(adj_arr):
    cdef const uint8_t[:, ::1] adj = np.ascontiguousarray(adj_arr, dtype=np.uint8)
    cdef int k = adj.shape[0]
    cdef int W = (k + 63) // 64 if k else 1
    cdef Graph g
    cdef uint64_t* cand
    cdef int i
    if k == 0:
        return 0, [], 0
    deg = np.asarray(adj).sum(axis=1)
    order = sorted(range(k), key=lambda v: (-int(deg[v]), v))
    g.k = k
    g.W = W
    g.best = 0
    g.nodes = 0
    g.nchosen = 0
    g.chosen = <int*> malloc((k + 1) * sizeof(int))
    cand = <uint64_t*> calloc(W, sizeof(uint64_t))
    g.nb = _pack(adj, order, W)
    for i in range(k):
        cand[i >> 6] |= <uint64_t> 1 << (i & 63)
    with nogil:
        _expand(&g, 0, cand)
    free(g.nb)
    g.nb = _pack(adj, list(range(k)), W)
    g.target = g.best
    for i in range(k):
        cand[i >> 6] |= <uint64_t> 1 << (i & 63)
    with nogil:
        _search(&g, cand)
    witness = sorted(g.chosen[i] for i in range(g.nchosen))
    free(g.nb)
    free(g.chosen)
    free(cand)
    return g.best, witness, g.nodes


# -- polynomials over F_p --------------------------------------------------------------

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_mul(int64_t p, a, b):
    cdef int la = len(a), lb = len(b), i, j
    cdef int64_t ai
    if la == 0 or lb == 0:
        return ()
    cdef int64_t[::1] x = np.asarray(a, dtype=np.int64) % p
    cdef int64_t[::1] y = np.asarray(b, dtype=np.int64) % p
    out = np.zeros(la + lb - 1, dtype=np.int64)
    cdef int64_t[::1] r = out
    with nogil:
        for i in range(la):
            ai = x[i]
            if ai:
                for j in range(lb):
                    r[i + j] = (r[i + j] + ai * y[j]) % p
    return _trim(out.tolist())


cdef int _divmod_inplace(int64_t p, int64_t[::1] rem, const int64_t[::1] b,
                         int64_t[::1] quot) noexcept nogil:
    cdef int db = b.shape[0] - 1, k, i, base
    cdef int64_t c, inv_lead, e, x, r
    # inverse of the leading coefficient by Fermat
    inv_lead = 1
    x = b[db] % p
    e = p - 2
    while e:
        if e & 1:
            inv_lead = inv_lead * x % p
        x = x * x % p
        e >>= 1
    for k in range(rem.shape[0] - 1, db - 1, -1):
        c = rem[k] % p
        if c:
            c = c * inv_lead % p
            base = k - db
            if quot.shape[0] > 0:
                quot[base] = c
            for i in range(db + 1):
                r = (rem[base + i] - c * b[i]) % p
                if r < 0:
                    r += p
                rem[base + i] = r
    return 0


def poly_divmod(int64_t p, a, b):
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = _trim(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return (), tuple(c % p for c in a)
    rem = np.asarray(a, dtype=np.int64) % p
    bb = np.asarray(b, dtype=np.int64) % p
    quot = np.zeros(len(a) - db, dtype=np.int64)
    _divmod_inplace(p, rem, bb, quot)
    return _trim(quot.tolist()), _trim(rem[:db].tolist())


def poly_gcd(int64_t p, a, b):
    a, b = _trim(a), _trim(b)
    empty = np.zeros(0, dtype=np.int64)
    while b:
        if len(a) < len(b):
            a, b = b, a
            continue
        rem = np.asarray(a, dtype=np.int64) % p
        _divmod_inplace(p, rem, np.asarray(b, dtype=np.int64) % p, empty)
        a, b = b, _trim(rem[:len(b) - 1].tolist())
    if not a:
        return ()
    inv_lead = pow(int(a[-1]), -1, int(p))
    return tuple(int(c) * inv_lead % p for c in a)
