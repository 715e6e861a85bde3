"""Dense polynomials over F_p.

A polynomial is a tuple of residues, lowest degree first, with no trailing
zeros; the zero polynomial is ``()``.  Multiplication, division and gcd go
through the kernel backend.
"""

from ._kernels import kernels

ONE = (1,)
X = (0, 1)


def trim(coeffs, p):
    c = [x % p for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(f):
    return len(f) - 1


def add(p, f, g):
    n = max(len(f), len(g))
    return trim([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)], p)


def sub(p, f, g):
    n = max(len(f), len(g))
    return trim([(f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0) for i in range(n)], p)


def mul(p, f, g):
    return kernels.poly_mul(p, f, g)


def divmod_(p, f, g):
    return kernels.poly_divmod(p, f, g)


def mod(p, f, g):
    return kernels.poly_divmod(p, f, g)[1]


def exact_div(p, f, g):
    quot, rem = kernels.poly_divmod(p, f, g)
    if rem:
        raise ArithmeticError("division leaves a nonzero remainder")
    return quot


def gcd(p, f, g):
    return kernels.poly_gcd(p, f, g)


def power(p, f, e):
    result = ONE
    while e:
        if e & 1:
            result = mul(p, result, f)
        e >>= 1
        if e:
            f = mul(p, f, f)
    return result


def powmod(p, f, e, modulus):
    result = ONE
    f = mod(p, f, modulus)
    while e:
        if e & 1:
            result = mod(p, mul(p, result, f), modulus)
        e >>= 1
        if e:
            f = mod(p, mul(p, f, f), modulus)
    return result


def derivative(p, f):
    return trim([i * c for i, c in enumerate(f)][1:], p)


def monic(p, f):
    if not f:
        return f
    inv = pow(f[-1], -1, p)
    return tuple(c * inv % p for c in f)


def pth_root(p, f):
    """g with g(x)^p = f(x), for f whose exponents are all multiples of p."""
    if any(c for i, c in enumerate(f) if i % p):
        raise ValueError("not a p-th power")
    # Frobenius fixes F_p, so coefficients are unchanged
    return tuple(f[::p])


def squarefree_decomposition(p, f):
    """Pairs (g, k) with f = lc * prod g^k, each g monic square-free and pairwise coprime."""
    f = monic(p, f)
    if len(f) <= 1:
        return []
    out = []
    c = gcd(p, f, derivative(p, f))
    w = exact_div(p, f, c)
    k = 1
    while len(w) > 1:
        y = gcd(p, w, c)
        factor = exact_div(p, w, y)
        if len(factor) > 1:
            out.append((factor, k))
        w = y
        c = exact_div(p, c, y)
        k += 1
    if len(c) > 1:
        for g, j in squarefree_decomposition(p, pth_root(p, c)):
            out.append((g, j * p))
    return out


def radical(p, f):
    r = ONE
    for g, _ in squarefree_decomposition(p, f):
        r = mul(p, r, g)
    return r


def is_squarefree(p, f):
    return len(f) > 1 and all(k == 1 for _, k in squarefree_decomposition(p, f))


def is_perfect_square(p, f):
    """Whether monic f is the square of a polynomial (every multiplicity even)."""
    return all(k % 2 == 0 for _, k in squarefree_decomposition(p, f))


def sqrt(p, f):
    """Monic square root of a monic perfect square, or None."""
    parts = squarefree_decomposition(p, f)
    if any(k % 2 for _, k in parts):
        return None
    r = ONE
    for g, k in parts:
        r = mul(p, r, power(p, g, k // 2))
    return r


def evaluate(p, f, x):
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def encode_tail(f, p):
    """Base-p code of the non-leading coefficients of monic f."""
    code = 0
    for c in reversed(f[:-1]):
        code = code * p + c
    return code


def decode_tail(code, p, n):
    tail = []
    for _ in range(n):
        code, c = divmod(code, p)
        tail.append(c)
    if code:
        raise ValueError("modulus code too large for degree")
    return tuple(tail) + (1,)


def format_poly(f, var="x"):
    if not f:
        return "0"
    terms = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if not c:
            continue
        mono = "" if i == 0 else var if i == 1 else f"{var}^{i}"
        if not mono:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(f"{c}*{mono}")
    return " + ".join(terms)
