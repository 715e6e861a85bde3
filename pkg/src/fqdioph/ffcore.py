"""Exact arithmetic in F_{p^n} on integer element codes.

An element ``c_0 + c_1 t + ... + c_{n-1} t^{n-1}`` (reduced modulo the field's
monic irreducible modulus) is stored as the integer ``sum c_i p^i``.  Zero has
code 0 and one has code 1.  For n = 1 the codes are just residues mod p.
"""

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
import re

from . import polyfp
from ._kernels import kernels
from .errors import DomainError, ParameterError, SizePolicyError

MAX_Q = 2 ** 31
# largest field for which whole-field tables (chi, neighbour masks) are built
SCAN_LIMIT = 2 ** 24


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n):
    """Prime factorisation by trial division, as a sorted list of (prime, exponent)."""
    if n < 1:
        raise ParameterError("can only factor positive integers")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def prime_power(q):
    """(p, n) with q = p^n, or None."""
    if q < 2:
        return None
    f = factorize(q)
    if len(f) != 1:
        return None
    return f[0]


def _check_params(p, n):
    if not isinstance(p, int) or not isinstance(n, int):
        raise ParameterError("p and n must be integers")
    if n < 1:
        raise ParameterError(f"extension degree must be >= 1, got {n}")
    if p == 2 or not is_prime(p):
        raise ParameterError(f"characteristic must be an odd prime, got {p}")
    q = 1
    for _ in range(n):
        q *= p
        if q > MAX_Q:
            raise SizePolicyError(f"{p}^{n} exceeds the size policy q <= 2^31")
    return q


def is_irreducible(p, f):
    """Rabin's test for a monic polynomial over F_p."""
    n = polyfp.degree(f)
    if n < 1:
        return False
    if n == 1:
        return True
    x = polyfp.X

    def frob(k):
        h = x
        for _ in range(k):
            h = polyfp.powmod(p, h, p, f)
        return h

    if polyfp.sub(p, frob(n), x):
        return False
    for r, _ in factorize(n):
        h = polyfp.sub(p, frob(n // r), x)
        if len(polyfp.gcd(p, h, f)) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def find_irreducible(p, n):
    """Monic irreducible of degree n over F_p, least in the base-p order of its tail."""
    q = _check_params(p, n)
    if n == 1:
        return (0, 1)
    for code in range(q):
        f = polyfp.decode_tail(code, p, n)
        if is_irreducible(p, f):
            return f
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


@dataclass(frozen=True)
class Field:
    """The finite field F_{p^n} with a fixed modulus. Build with :func:`make_field`."""

    p: int
    n: int
    modulus: tuple
    q: int = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "q", _check_params(self.p, self.n))
        m = self.modulus
        if len(m) != self.n + 1 or m[-1] != 1:
            raise ParameterError("modulus must be monic of degree n")

    def __repr__(self):
        return f"Field({self.ident})"

    @property
    def tail(self):
        return self.modulus[:-1]

    @property
    def ident(self):
        return f"{self.p}^{self.n}/{polyfp.encode_tail(self.modulus, self.p)}"

    # -- validation and encoding -------------------------------------------

    def check(self, a):
        if not 0 <= a < self.q:
            raise ParameterError(f"code {a} out of range for F_{self.q}")
        return a

    def digits(self, a):
        out = []
        for _ in range(self.n):
            a, c = divmod(a, self.p)
            out.append(c)
        return out

    def from_digits(self, digits):
        code = 0
        for c in reversed(list(digits)):
            code = code * self.p + c % self.p
        return code

    def const(self, c):
        """Code of the prime-subfield element c mod p."""
        return c % self.p

    # -- arithmetic ---------------------------------------------------------

    def add(self, a, b):
        if self.n == 1:
            return (a + b) % self.p
        return self.from_digits(x + y for x, y in zip(self.digits(a), self.digits(b)))

    def sub(self, a, b):
        if self.n == 1:
            return (a - b) % self.p
        return self.from_digits(x - y for x, y in zip(self.digits(a), self.digits(b)))

    def neg(self, a):
        if self.n == 1:
            return -a % self.p
        return self.from_digits(-x for x in self.digits(a))

    def mul(self, a, b):
        if self.n == 1:
            return a * b % self.p
        return kernels.mul(self.p, self.n, self.tail, a, b)

    def inv(self, a):
        if a % self.q == 0:
            raise DomainError("zero has no inverse")
        if self.n == 1:
            return pow(a, -1, self.p)
        return kernels.power(self.p, self.n, self.tail, a, self.q - 2)

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 1 if e == 0 else 0
        # exponents only matter mod q - 1 on F_q^*
        e = e % (self.q - 1) if e >= self.q - 1 else e
        if self.n == 1:
            return pow(a, e, self.p)
        return kernels.power(self.p, self.n, self.tail, a, e)

    # -- squares --------------------------------------------------------------

    def chi(self, a):
        """Quadratic character: 0 at zero, +1 on nonzero squares, -1 otherwise."""
        if a == 0:
            return 0
        return 1 if self.pow(a, (self.q - 1) // 2) == 1 else -1

    def is_square(self, a):
        """Zero counts as a square."""
        return self.chi(a) >= 0

    @cached_property
    def chi_table(self):
        """int8 array of chi over all codes (full scan; cached)."""
        if self.q > SCAN_LIMIT:
            raise SizePolicyError(f"full-field table for q={self.q} exceeds {SCAN_LIMIT}")
        table = kernels.chi_table(self.p, self.n, self.tail)
        table.setflags(write=False)
        return table

    @cached_property
    def _nonresidue(self):
        for z in range(2, self.q):
            if self.chi(z) == -1:
                return z
        raise AssertionError("no quadratic non-residue")  # pragma: no cover

    def sqrt(self, a):
        """Square root with the smaller code of the pair {s, -s}, or None."""
        a = self.check(a)
        if a == 0:
            return 0
        if self.chi(a) != 1:
            return None
        q = self.q
        if q % 4 == 3:
            s = self.pow(a, (q + 1) // 4)
        else:
            # Tonelli-Shanks in F_q^*
            t, s2 = q - 1, 0
            while t % 2 == 0:
                t //= 2
                s2 += 1
            c = self.pow(self._nonresidue, t)
            s = self.pow(a, (t + 1) // 2)
            b = self.pow(a, t)
            m = s2
            while b != 1:
                i, b2 = 0, b
                while b2 != 1:
                    b2 = self.mul(b2, b2)
                    i += 1
                g = self.pow(c, 1 << (m - i - 1))
                s = self.mul(s, g)
                c = self.mul(g, g)
                b = self.mul(b, c)
                m = i
        return min(s, self.neg(s))

    # -- multiplicative order --------------------------------------------------

    @cached_property
    def group_order_factors(self):
        return factorize(self.q - 1)

    def order(self, a):
        if a % self.q == 0:
            raise DomainError("zero has no multiplicative order")
        e = self.q - 1
        for r, _ in self.group_order_factors:
            while e % r == 0 and self.pow(a, e // r) == 1:
                e //= r
        return e


@lru_cache(maxsize=256)
def make_field(p, n, modulus=None):
    """Field F_{p^n}; the canonical modulus is used unless one is given."""
    _check_params(p, n)
    if modulus is None:
        modulus = find_irreducible(p, n)
    else:
        modulus = polyfp.trim(modulus, p)
        if polyfp.degree(modulus) != n or modulus[-1] != 1:
            raise ParameterError("modulus must be monic of degree n")
        if n == 1:
            if modulus != (0, 1):
                raise ParameterError("degree-1 modulus must be t")
        elif not is_irreducible(p, modulus):
            raise ParameterError("modulus is reducible")
    return Field(p, n, tuple(modulus))


_SPEC = re.compile(r"^\s*(\d+)(?:\s*\^\s*(\d+))?(?:\s*/\s*(\d+))?\s*$")


def parse_field(spec):
    """Parse ``p^n``, ``p^n/modcode`` or ``p``."""
    m = _SPEC.match(str(spec))
    if not m:
        raise ParameterError(f"bad field spec {spec!r}; expected p^n or p^n/modcode")
    p = int(m.group(1))
    n = int(m.group(2) or 1)
    if m.group(3) is None:
        return make_field(p, n)
    _check_params(p, n)
    try:
        modulus = polyfp.decode_tail(int(m.group(3)), p, n)
    except ValueError as exc:
        raise ParameterError(str(exc)) from None
    return make_field(p, n, modulus)
