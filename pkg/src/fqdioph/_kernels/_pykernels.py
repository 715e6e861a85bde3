"""Pure-Python/numpy implementations of the hot kernels.

Every function here has a twin with the same signature in the compiled
``_ckernels`` extension.  Field elements are integer codes: the element
``c_0 + c_1 t + ... + c_{n-1} t^{n-1}`` has code ``sum c_i p^i``.  A field
is passed around as ``(p, n, tail)`` where ``tail = (c_0, ..., c_{n-1})`` are
the non-leading coefficients of the monic modulus ``t^n + sum c_i t^i``.
"""

import numpy as np

BACKEND = "python"


# -- scalar field arithmetic -------------------------------------------------

def _decode(code, p, n):
    out = [0] * n
    for i in range(n):
        code, out[i] = divmod(code, p)
    return out


def _encode(digits, p):
    code = 0
    for c in reversed(digits):
        code = code * p + c
    return code


def _mul_digits(x, y, p, n, tail):
    prod = [0] * (2 * n - 1)
    for i, xi in enumerate(x):
        if xi:
            for j, yj in enumerate(y):
                prod[i + j] += xi * yj
    for k in range(2 * n - 2, n - 1, -1):
        c = prod[k] % p
        if c:
            base = k - n
            for i in range(n):
                prod[base + i] -= c * tail[i]
    return [c % p for c in prod[:n]]


def mul(p, n, tail, a, b):
    if n == 1:
        return a * b % p
    return _encode(_mul_digits(_decode(a, p, n), _decode(b, p, n), p, n, tail), p)


def power(p, n, tail, a, e):
    """a**e for e >= 0 by square-and-multiply."""
    if n == 1:
        return pow(a, e, p)
    result = [1] + [0] * (n - 1)
    base = _decode(a, p, n)
    while e:
        if e & 1:
            result = _mul_digits(result, base, p, n, tail)
        e >>= 1
        if e:
            base = _mul_digits(base, base, p, n, tail)
    return _encode(result, p)


# -- vectorised full-field scans ---------------------------------------------

def _all_digits(p, n):
    q = p ** n
    codes = np.arange(q, dtype=np.int64)
    digits = np.empty((q, n), dtype=np.int64)
    for i in range(n):
        codes, digits[:, i] = np.divmod(codes, p)
    return digits


def _encode_rows(digits, p):
    n = digits.shape[1]
    codes = np.zeros(digits.shape[0], dtype=np.int64)
    for i in range(n - 1, -1, -1):
        codes = codes * p + digits[:, i]
    return codes


def _vmul(x, y, p, n, tail):
    rows = x.shape[0]
    prod = np.zeros((rows, 2 * n - 1), dtype=np.int64)
    for i in range(n):
        xi = x[:, i]
        for j in range(n):
            prod[:, i + j] += xi * y[:, j]
    # keep entries small before the reduction step
    prod %= p
    for k in range(2 * n - 2, n - 1, -1):
        c = prod[:, k] % p
        base = k - n
        for i in range(n):
            if tail[i]:
                prod[:, base + i] = (prod[:, base + i] - c * tail[i]) % p
    return prod[:, :n] % p


def _add_const(codes, p, c):
    low = codes % p
    return codes - low + (low + c) % p


def chi_table(p, n, tail):
    """int8 array: quadratic character of every code 0..q-1."""
    q = p ** n
    if n == 1:
        x = np.arange(q, dtype=np.int64)
        squares = x * x % p
    else:
        d = _all_digits(p, n)
        squares = _encode_rows(_vmul(d, d, p, n, tail), p)
    chi = np.full(q, -1, dtype=np.int8)
    chi[squares] = 1
    chi[0] = 0
    return chi


def mul_all(p, n, tail, a):
    """int64 array with a*x for every code x."""
    q = p ** n
    if n == 1:
        return a * np.arange(q, dtype=np.int64) % p
    # multiplication by a is F_p-linear: images of the basis t^j
    images = np.empty((n, n), dtype=np.int64)
    t_j = 1
    for j in range(n):
        images[j] = _decode(mul(p, n, tail, a, t_j), p, n)
        t_j *= p
    d = _all_digits(p, n)
    return _encode_rows(d @ images % p, p)


def eval_all(p, n, tail, coeffs):
    """int64 array with f(x) for every code x; coeffs are residues mod p, low to high."""
    q = p ** n
    coeffs = [c % p for c in coeffs]
    if not coeffs:
        return np.zeros(q, dtype=np.int64)
    if n == 1:
        x = np.arange(q, dtype=np.int64)
        acc = np.full(q, coeffs[-1], dtype=np.int64)
        for c in reversed(coeffs[:-1]):
            acc = (acc * x + c) % p
        return acc
    xd = _all_digits(p, n)
    acc = np.zeros((q, n), dtype=np.int64)
    acc[:, 0] = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = _vmul(acc, xd, p, n, tail)
        acc[:, 0] = (acc[:, 0] + c) % p
    return _encode_rows(acc, p)


def add_all(p, n, a):
    """int64 array with x + a for every code x."""
    q = p ** n
    x = np.arange(q, dtype=np.int64)
    if n == 1:
        return (x + a) % p
    xd = _all_digits(p, n)
    ad = np.array(_decode(a, p, n), dtype=np.int64)
    return _encode_rows((xd + ad) % p, p)


def neighbor_mask(p, n, tail, chi, a):
    """bool array: chi(a*x + 1) >= 0 for every code x."""
    return chi[_add_const(mul_all(p, n, tail, a), p, 1)] >= 0


def adjacency(p, n, tail, chi):
    """uint8 (q-1)x(q-1) matrix; entry [a-1, b-1] is 1 iff a*b + 1 is a square."""
    q = p ** n
    adj = np.zeros((q - 1, q - 1), dtype=np.uint8)
    for a in range(1, q):
        adj[a - 1] = neighbor_mask(p, n, tail, chi, a)[1:]
        adj[a - 1, a - 1] = 0
    return adj


# -- maximum clique ------------------------------------------------------------

def _bitsets(adj, order):
    pos = {v: i for i, v in enumerate(order)}
    nb = []
    for v in order:
        bits = 0
        for u in np.flatnonzero(adj[v]):
            if u != v:
                bits |= 1 << pos[int(u)]
        nb.append(bits)
    return nb


def _max_clique_size(adj):
    k = adj.shape[0]
    deg = adj.sum(axis=1)
    order = sorted(range(k), key=lambda v: (-int(deg[v]), v))
    nb = _bitsets(adj, order)
    best = 0
    nodes = 0

    def expand(depth, cand):
        nonlocal best, nodes
        nodes += 1
        verts = []
        cols = []
        uncolored = cand
        color = 0
        while uncolored:
            color += 1
            avail = uncolored
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                avail &= ~low
                uncolored &= ~low
                avail &= ~nb[v]
                verts.append(v)
                cols.append(color)
        for idx in range(len(verts) - 1, -1, -1):
            if depth + cols[idx] <= best:
                return
            v = verts[idx]
            sub = cand & nb[v]
            if sub:
                expand(depth + 1, sub)
            elif depth + 1 > best:
                best = depth + 1
            cand &= ~(1 << v)

    if k:
        expand(0, (1 << k) - 1)
    return best, nodes


def _lex_least_clique(adj, target):
    k = adj.shape[0]
    nb = _bitsets(adj, list(range(k)))
    nodes = 0
    chosen = []

    def search(cand):
        nonlocal nodes
        nodes += 1
        verts = []
        bits = cand
        while bits:
            low = bits & -bits
            verts.append(low.bit_length() - 1)
            bits &= ~low
        # sequential colouring from the top so every suffix is properly coloured
        classes = []
        suffix = {}
        running = 0
        for v in reversed(verts):
            for c, members in enumerate(classes):
                if not members & nb[v]:
                    classes[c] = members | (1 << v)
                    break
            else:
                c = len(classes)
                classes.append(1 << v)
            running = max(running, c + 1)
            suffix[v] = running
        for v in verts:
            if len(chosen) + suffix[v] < target:
                return False
            cand &= ~(1 << v)
            chosen.append(v)
            if len(chosen) == target:
                return True
            sub = cand & nb[v]
            if sub and search(sub):
                return True
            chosen.pop()
        return False

    if target == 0:
        return [], nodes
    search((1 << k) - 1)
    return sorted(chosen), nodes


def max_clique(adj):
    """Exact maximum clique of a symmetric 0/1 matrix.

    Returns ``(size, witness, nodes)`` where ``witness`` is the
    lexicographically least maximum clique (ascending indices).
    """
    adj = np.asarray(adj, dtype=np.uint8)
    size, n1 = _max_clique_size(adj)
    witness, n2 = _lex_least_clique(adj, size)
    return size, witness, n1 + n2


# -- polynomials over F_p (tuples, low to high, no trailing zeros) ---------------

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_mul(p, a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim(c % p for c in out)


def poly_divmod(p, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    db = len(b) - 1
    if len(rem) - 1 < db:
        return (), _trim(rem)
    inv_lead = pow(b[-1], -1, p)
    quot = [0] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k] % p
        if c:
            c = c * inv_lead % p
            quot[k - db] = c
            base = k - db
            for i in range(db + 1):
                rem[base + i] -= c * b[i]
    return _trim(quot), _trim(c % p for c in rem[:db])


def poly_gcd(p, a, b):
    """Monic gcd; the zero polynomial is returned only if both inputs are zero."""
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, poly_divmod(p, a, b)[1]
    if not a:
        return ()
    inv_lead = pow(a[-1], -1, p)
    return tuple(c * inv_lead % p for c in a)
