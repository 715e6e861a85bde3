"""Cyclotomic polynomials over Z and over F_p.

Both routes compute Phi_n by exact division of x^n - 1 by the Phi_d for the
proper divisors d of n, so every intermediate stays in the base ring.
"""

from functools import lru_cache
import threading

from . import polyfp
from .errors import ParameterError
from .ffcore import factorize, is_prime

INT_LIMIT = 3000
_INT64_MAX = 2 ** 63 - 1


def divisors(n):
    divs = [1]
    for r, e in factorize(n):
        divs = [d * r ** k for d in divs for k in range(e + 1)]
    return sorted(divs)


@lru_cache(maxsize=None)
def euler_phi(n):
    if not isinstance(n, int) or n < 1:
        raise ParameterError(f"euler_phi needs n >= 1, got {n!r}")
    out = n
    for r, _ in factorize(n):
        out = out // r * (r - 1)
    return out


# -- integer polynomials (overflow-checked against int64) ----------------------

def _int_checked(coeffs):
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    for x in c:
        if abs(x) > _INT64_MAX:
            raise OverflowError("cyclotomic coefficient exceeds 64-bit range")
    return tuple(c)


def int_mul(f, g):
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return _int_checked(out)


def int_exact_div(f, g):
    """f / g over Z for monic g; raises if the remainder is nonzero."""
    if not g or g[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(f)
    dg = len(g) - 1
    if len(rem) - 1 < dg:
        quot = []
    else:
        quot = [0] * (len(rem) - dg)
        for k in range(len(rem) - 1, dg - 1, -1):
            c = rem[k]
            if c:
                quot[k - dg] = c
                for i in range(dg + 1):
                    rem[k - dg + i] -= c * g[i]
    if any(rem[:dg]):
        raise ArithmeticError("inexact cyclotomic division")
    return _int_checked(quot)


class CycloCache:
    """Thread-safe memo of Phi_n, keyed by n (over Z) or (p, n) (over F_p)."""

    def __init__(self):
        self._memo = {}
        self._lock = threading.Lock()

    def get(self, key, compute):
        with self._lock:
            hit = self._memo.get(key)
        if hit is not None:
            return hit
        value = compute()
        with self._lock:
            return self._memo.setdefault(key, value)

    def clear(self):
        with self._lock:
            self._memo.clear()


_cache = CycloCache()


def _x_n_minus_1(n, modulus=None):
    c = [0] * (n + 1)
    c[0] = -1 if modulus is None else modulus - 1
    c[n] = 1
    return tuple(c)


def cyclo_int(n):
    """Phi_n over Z, coefficients low to high."""
    if not isinstance(n, int) or n < 1:
        raise ParameterError(f"cyclotomic index must be >= 1, got {n!r}")
    if n > INT_LIMIT:
        raise ParameterError(f"integer cyclotomic capped at n <= {INT_LIMIT}")

    def compute():
        f = _x_n_minus_1(n)
        for d in divisors(n)[:-1]:
            f = int_exact_div(f, cyclo_int(d))
        return f

    return _cache.get(n, compute)


def cyclo_mod(p, n):
    """Phi_n reduced mod p, computed natively over F_p."""
    if not is_prime(p) or p == 2:
        raise ParameterError(f"p must be an odd prime, got {p}")
    if not isinstance(n, int) or n < 1:
        raise ParameterError(f"cyclotomic index must be >= 1, got {n!r}")

    def compute():
        f = _x_n_minus_1(n, p)
        for d in divisors(n)[:-1]:
            f = polyfp.exact_div(p, f, cyclo_mod(p, d))
        return f

    return _cache.get((p, n), compute)


def cyclo_mod_or_x(p, k):
    """Phi_k mod p with the convention Phi_0 = x."""
    return polyfp.X if k == 0 else cyclo_mod(p, k)


def phi_properties_check(p, n, n2=None):
    """Evaluate the three structural clauses for Phi_n, Phi_n2 over F_p.

    Clauses whose hypothesis does not apply are reported as holding.
    ``is_square_when_p_divides`` and ``is_squarefree_when_p_coprime`` are
    checked on every supplied index; ``coprime_pair`` needs both indices
    prime to p and distinct.
    """
    indices = [n] if n2 is None else [n, n2]
    square_ok = True
    squarefree_ok = True
    for k in indices:
        f = cyclo_mod(p, k)
        if k % p == 0:
            square_ok = square_ok and polyfp.is_perfect_square(p, f)
        else:
            squarefree_ok = squarefree_ok and len(polyfp.gcd(p, f, polyfp.derivative(p, f))) == 1
    coprime_ok = True
    if n2 is not None and n != n2 and n % p and n2 % p:
        coprime_ok = len(polyfp.gcd(p, cyclo_mod(p, n), cyclo_mod(p, n2))) == 1
    return {
        "is_square_when_p_divides": square_ok,
        "is_squarefree_when_p_coprime": squarefree_ok,
        "coprime_pair": coprime_ok,
    }

