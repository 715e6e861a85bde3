"""Complete quadratic character sums over F_q and their Weil-type bounds.

Polynomials have F_p coefficients (see :mod:`polyfp`).  All bound checks are
decided exactly by squaring, never in floating point.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
import math

import numpy as np

from . import polyfp
from ._kernels import kernels
from .constructions import bound_terms
from .cyclotomic import cyclo_mod_or_x
from .errors import HypothesisError, ParameterError
from .exact import le_sqrt


@dataclass(frozen=True)
class CharSumResult:
    sum: int
    degree: int
    distinct_roots: int
    bound: float
    within_bound: bool


def char_sum(F, f):
    """sum over x in F_q of chi(f(x)), by full scan."""
    f = polyfp.trim(f, F.p)
    if not f:
        raise ParameterError("character sum of the zero polynomial")
    values = kernels.eval_all(F.p, F.n, F.tail, f)
    return int(F.chi_table[values].astype(np.int64).sum())


def weil_check(F, f):
    f = polyfp.trim(f, F.p)
    if len(f) < 2 or f[-1] != 1:
        raise ParameterError("Weil check needs a monic polynomial of positive degree")
    if polyfp.is_perfect_square(F.p, f):
        raise HypothesisError("polynomial is a perfect square; the bound does not apply")
    s = char_sum(F, f)
    roots = polyfp.degree(polyfp.radical(F.p, f))
    return CharSumResult(
        sum=s,
        degree=polyfp.degree(f),
        distinct_roots=roots,
        bound=(roots - 1) * math.sqrt(F.q),
        within_bound=le_sqrt(abs(s), roots - 1, F.q),
    )


def pattern_bound_ok(q, k, N):
    """|N - q/2^k| <= (k - 1 - k/2 + 1/2^k) sqrt(q) + k/2, decided exactly."""
    lhs = abs(Fraction(N) - Fraction(q, 2 ** k)) - Fraction(k, 2)
    coeff = k - 1 - Fraction(k, 2) + Fraction(1, 2 ** k)
    return le_sqrt(lhs, coeff, q)


def pattern_count(F, shifts, signs):
    """Number of x with chi(x + a_i) = eps_i for all i, and the bound verdict."""
    shifts = [F.check(int(a)) for a in shifts]
    signs = [int(e) for e in signs]
    if not shifts:
        raise ParameterError("need at least one shift")
    if len(set(shifts)) != len(shifts):
        raise ParameterError("shifts must be distinct")
    if len(signs) != len(shifts) or any(e not in (-1, 1) for e in signs):
        raise ParameterError("signs must be +1/-1, one per shift")
    chi = F.chi_table
    hit = np.ones(F.q, dtype=bool)
    for a, e in zip(shifts, signs):
        hit &= chi[kernels.add_all(F.p, F.n, a)] == e
    N = int(hit.sum())
    return {"N": N, "bound_ok": pattern_bound_ok(F.q, len(shifts), N)}


def enum_construction_polys(p, m):
    """All 2^T - 1 nonconstant products of distinct Phi_2i, i in I(m), with Phi_0 = x.

    Yields ``(exponents, f)``; exponent bit j switches on the j-th index of I(m)
    (ascending), enumerated by binary counting.
    """
    I = bound_terms(p, m).I_set
    factors = [cyclo_mod_or_x(p, 2 * i) for i in I]
    for mask in range(1, 2 ** len(I)):
        f = polyfp.ONE
        ks = tuple((mask >> j) & 1 for j in range(len(I)))
        for k, g in zip(ks, factors):
            if k:
                f = polyfp.mul(p, f, g)
        if polyfp.is_perfect_square(p, f):
            raise AssertionError(f"construction polynomial {f} is a perfect square")
        yield ks, f


def all_sign_patterns(k):
    return list(product((1, -1), repeat=k))
