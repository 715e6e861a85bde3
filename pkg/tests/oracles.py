"""Slow, obviously-correct reference implementations used only by tests."""

from itertools import combinations, product


def naive_field(p, modulus):
    """Multiplication table of F_p[t]/(modulus) built from plain polynomial arithmetic."""
    n = len(modulus) - 1
    elems = list(product(range(p), repeat=n))
    code = {e: sum(c * p ** i for i, c in enumerate(e)) for e in elems}

    def mul(a, b):
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod[i + j] += x * y
        for k in range(len(prod) - 1, n - 1, -1):
            c = prod[k] % p
            if c:
                for i in range(n + 1):
                    prod[k - n + i] -= c * modulus[i]
        return tuple(c % p for c in prod[:n])

    table = {}
    for a in elems:
        for b in elems:
            table[code[a], code[b]] = code[mul(a, b)]
    return table


def naive_squares(q, mul):
    return {mul(x, x) for x in range(q)}


def naive_max_clique(q, edge):
    """Largest subset of 1..q-1 with every pair an edge, by brute subset search."""
    verts = list(range(1, q))
    best = (verts[0],)
    size = 2
    while True:
        found = None
        for c in combinations(verts, size):
            if all(edge(a, b) for a, b in combinations(c, 2)):
                found = c
                break
        if found is None:
            return best
        best = found
        size += 1


def mobius(n):
    res, d = 1, 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            res = -res
        d += 1
    return -res if n > 1 else res


def cyclo_mobius(n):
    """Phi_n = prod_{d|n} (x^d - 1)^mu(n/d), with integer series division."""
    num, den = [1], [1]
    for d in range(1, n + 1):
        if n % d:
            continue
        f = [-1] + [0] * (d - 1) + [1]
        mu = mobius(n // d)
        if mu == 1:
            num = _imul(num, f)
        elif mu == -1:
            den = _imul(den, f)
    return _idiv(num, den)


def _imul(f, g):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] += a * b
    return out


def _idiv(f, g):
    f = list(f)
    q = [0] * (len(f) - len(g) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = f[k + len(g) - 1] // g[-1]
        q[k] = c
        for i, b in enumerate(g):
            f[k + i] -= c * b
    assert not any(f), "division not exact"
    return tuple(q)
