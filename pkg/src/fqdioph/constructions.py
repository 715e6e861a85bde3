"""Explicit Diophantine tuples from geometric progressions, and the bound they meet.

The progression constructions take a square y of large enough multiplicative
order and use the set of its powers {y^k : |k| <= m/2} (optionally scaled by a
square root of -1).  Every tuple is passed through :func:`verify_tuple` before
it is returned; the constructions never rely on their own correctness.
"""

from dataclasses import dataclass
from fractions import Fraction
import math

import mpmath
import numpy as np

from . import diophantine
from ._kernels import kernels
from .cyclotomic import cyclo_mod, euler_phi
from .errors import ConstructionError, DistinctnessError, ParameterError
from .exact import le_sqrt
from .ffcore import prime_power

METHODS = ("case1", "case2", "mod8_3", "subfield", "greedy_fallback")
VARIANTS = {"thm1": 1, "thm35": 2}
HALF_CLAIM = "remark-3.6"  # q = 3 mod 8: no bound asserted
GREEDY_SEED_CANDIDATES = 8


# -- the bound Q ----------------------------------------------------------------

def _q_float(q, p, offset):
    L = math.log(q)
    return p / (p - 1) * ((0.5 * L - 2 * math.log(L)) / math.log(2) + offset)


def _q_mp(q, p, offset):
    with mpmath.workdps(60):
        L = mpmath.log(q)
        return mpmath.mpf(p) / (p - 1) * ((L / 2 - 2 * mpmath.log(L)) / mpmath.log(2) + offset)


def compute_Q(q, p, variant="thm1"):
    """(Q_value, Q_floor); natural logs, floor recomputed at 60 digits near integers."""
    if variant not in VARIANTS:
        raise ParameterError(f"unknown variant {variant!r}")
    pp = prime_power(q)
    if pp is None or pp[0] != p or p == 2:
        raise ParameterError(f"q={q} is not a power of the odd prime p={p}")
    if q <= 7:
        raise ParameterError("the bound needs q > 7")
    offset = VARIANTS[variant]
    value = _q_float(q, p, offset)
    if abs(value - round(value)) < 1e-9:
        floor = int(mpmath.floor(_q_mp(q, p, offset)))
    else:
        floor = math.floor(value)
    return value, floor


# -- combinatorial terms ---------------------------------------------------------

@dataclass(frozen=True)
class BoundTerms:
    p: int
    m: int
    I_set: tuple
    T: int
    S: int
    s_small: int

    def inequality_holds(self):
        """S < p/(p-1) T^2, compared in integers."""
        return self.S * (self.p - 1) < self.p * self.T * self.T


def index_set(p, m):
    """{0} together with 1 <= i <= m-1 prime to p."""
    return (0,) + tuple(i for i in range(1, m) if i % p)


def bound_terms(p, m):
    if m < 2:
        raise ParameterError("bound terms need m >= 2")
    I = index_set(p, m)
    T = m - (m - 1) // p
    S = sum(euler_phi(2 * i) for i in I if i)
    s_small = sum(euler_phi(i) for i in I if i)
    return BoundTerms(p, m, I, T, S, s_small)


# -- predicates on y ------------------------------------------------------------------

def _check_even(m):
    if m < 2 or m % 2:
        raise ParameterError(f"m must be even and >= 2, got {m}")


def _order_exceeds(F, y, k):
    """ord(y) > k, i.e. y^j != 1 for 1 <= j <= k."""
    if k >= F.q - 1:
        return False
    yj = 1
    for _ in range(k):
        yj = F.mul(yj, y)
        if yj == 1:
            return False
    return True


def eval_fp_poly(F, f, y):
    """f(y) for f with F_p coefficients (low to high) at the field code y."""
    acc = 0
    for c in reversed(f):
        acc = F.add(F.mul(acc, y), c)
    return acc


def _phi_squares(F, y, m):
    for i in range(1, m):
        if i % F.p and not F.is_square(eval_fp_poly(F, cyclo_mod(F.p, 2 * i), y)):
            return False
    return True


def case1_predicate(F, y, m):
    if F.chi(y) != 1 or not _order_exceeds(F, y, m):
        return False
    yi = 1
    for _ in range(m):
        yi = F.mul(yi, y)
        if not F.is_square(F.sub(yi, 1)):
            return False
    return True


def case2_predicate(F, y, m, min_order=None):
    """y square, ord(y) >= min_order (default m + 1), Phi_2i(y) square for i in I(m), i > 0."""
    if min_order is None:
        min_order = m + 1
    if F.chi(y) != 1 or not _order_exceeds(F, y, min_order - 1):
        return False
    return _phi_squares(F, y, m)


def mod8_3_predicate(F, y, m):
    """ord(y) > m/2 and Phi_2i(y) square for i in I(m), i > 0; y need not be a square."""
    if y == 0 or not _order_exceeds(F, y, m // 2):
        return False
    return _phi_squares(F, y, m)


def _first(F, pred, start=1):
    for y in range(start, F.q):
        if pred(y):
            return y
    return None


def find_y_case1(F, m):
    if F.q % 4 != 1:
        raise ParameterError("case 1 needs q = 1 mod 4")
    _check_even(m)
    return _first(F, lambda y: case1_predicate(F, y, m))


def find_y_case2(F, m):
    if not F.is_square(F.const(2)):
        raise ParameterError("case 2 needs 2 to be a square in F_q")
    _check_even(m)
    return _first(F, lambda y: case2_predicate(F, y, m))


def find_y_mod8_3(F, m, start=1):
    _check_even(m)
    return _first(F, lambda y: mod8_3_predicate(F, y, m), start)


def largest_mod8_3(F):
    """(m, y) with the largest even m admitting a qualifying y, or (None, None).

    The condition for m + 2 implies the one for m, so one mask over the whole
    field is narrowed step by step; y is always the least qualifying code, the
    same witness find_y_mod8_3 returns.
    """
    chi = F.chi_table
    alive = np.ones(F.q, dtype=bool)
    alive[0] = False
    best = (None, None)
    m = 2
    while m // 2 + 1 <= F.q - 1:
        # ord(y) > m/2 adds y^(m/2) != 1; Phi_2i for the new i in {m-2, m-1} must be square
        alive &= kernels.eval_all(F.p, F.n, F.tail, [0] * (m // 2) + [1]) != 1
        for i in (m - 2, m - 1):
            if i >= 1 and i % F.p:
                vals = kernels.eval_all(F.p, F.n, F.tail, cyclo_mod(F.p, 2 * i))
                alive &= chi[vals] >= 0
        hits = np.flatnonzero(alive)
        if hits.size == 0:
            break
        best = (m, int(hits[0]))
        m += 2
    return best


# -- builders ----------------------------------------------------------------------

def _finish(F, elements):
    if len(set(elements)) != len(elements):
        raise DistinctnessError("construction produced repeated elements; order of y too small")
    report = diophantine.verify_tuple(F, elements)
    if not report.ok:
        i, j = report.violating_pair
        raise ConstructionError(
            f"constructed set fails at pair ({report.elements[i]}, {report.elements[j]})")
    return report


def sqrt_minus_one(F):
    if F.q % 4 != 1:
        raise ParameterError("-1 is a square only when q = 1 mod 4")
    return F.sqrt(F.neg(1))


def build_case1(F, y, m):
    """{r y^k : -m/2 <= k <= m/2} with r^2 = -1 (smallest such r)."""
    _check_even(m)
    r = sqrt_minus_one(F)
    return _finish(F, [F.mul(r, F.pow(y, k)) for k in range(-m // 2, m // 2 + 1)])


def build_case2(F, y, m):
    """{y^k : -m/2 <= k <= m/2}."""
    _check_even(m)
    return _finish(F, [F.pow(y, k) for k in range(-m // 2, m // 2 + 1)])


def build_3mod8(F, y, m):
    """{y^k : 0 <= k <= m/2}; no negative exponents, so 2 need not be a square."""
    if F.q % 8 != 3:
        raise ParameterError("the half construction is for q = 3 mod 8")
    _check_even(m)
    return _finish(F, [F.pow(y, k) for k in range(m // 2 + 1)])


def build_subfield_tuple(F):
    """The nonzero elements of the subfield of size sqrt(q)."""
    if F.n % 2:
        raise ParameterError("subfield tuple needs an even extension degree")
    k = F.p ** (F.n // 2) - 1
    # the subgroup of order k is the image of z -> z^(sqrt(q)+1)
    for z in range(2, F.q):
        h = F.pow(z, k + 2)
        if F.order(h) == k:
            break
    else:
        h = 1
    elements = [1]
    while len(elements) < k:
        elements.append(F.mul(elements[-1], h))
    return _finish(F, elements)


# -- the counting function -------------------------------------------------------------

@dataclass(frozen=True)
class NCount:
    q: int
    m: int
    T: int
    S: int
    exact: int
    product_sum: int  # sum over y of prod_{i in I} (1 + chi(Phi_2i(y)))
    vanishing: int  # part of product_sum from y where some factor is 0
    analytic_lower_bound: float

    @property
    def literal(self):
        return Fraction(self.product_sum, 2 ** self.T)

    def bound_holds(self):
        """exact >= 2^-T (q - B sqrt q) - S, decided exactly."""
        q = self.q
        B = 2 ** (self.T - 1) * self.S - (2 ** self.T - 1)
        # 2^T (exact + S) >= q - B sqrt q  <=>  q - 2^T (exact + S) <= B sqrt q
        return le_sqrt(q - 2 ** self.T * (self.exact + self.S), B, q)


def analytic_lower_bound(q, T, S):
    return 2.0 ** -T * (q - (2 ** (T - 1) * S - (2 ** T - 1)) * math.sqrt(q)) - S


def count_N_range(F, m_max, m_min=2):
    """count_N for every m in [m_min, m_max], sharing one set of full-field evaluations."""
    if m_min < 2:
        raise ParameterError("count_N needs m >= 2")
    chi = F.chi_table
    # ord(y) >= m  <=>  y^k != 1 for 1 <= k < m
    first_one = np.full(F.q, m_max + 1, dtype=np.int64)
    for k in range(m_max, 0, -1):
        is_one = kernels.eval_all(F.p, F.n, F.tail, [0] * k + [1]) == 1
        first_one[is_one] = k
    chis = {}
    for i in bound_terms(F.p, m_max).I_set:
        f = (0, 1) if i == 0 else cyclo_mod(F.p, 2 * i)
        chis[i] = chi[kernels.eval_all(F.p, F.n, F.tail, f)].astype(np.int64)
    out = []
    for m in range(m_min, m_max + 1):
        terms = bound_terms(F.p, m)
        order_ok = first_one >= m
        order_ok[0] = False
        factors = np.array([chis[i][order_ok] for i in terms.I_set])
        exact = int(np.all(factors == 1, axis=0).sum())
        prods = np.prod(1 + factors, axis=0)
        has_zero = np.any(factors == 0, axis=0)
        out.append(NCount(F.q, m, terms.T, terms.S, exact, int(prods.sum()),
                          int(prods[has_zero].sum()),
                          analytic_lower_bound(F.q, terms.T, terms.S)))
    return out


def count_N(F, m):
    """Exact count of admissible y by full scan, with its product-form companion."""
    return count_N_range(F, m, m)[0]


# -- reports -------------------------------------------------------------------------------

@dataclass
class ConstructionReport:
    field: object
    method: str
    m: int
    Q_value: float
    Q_floor: int
    variant: str
    tuple: tuple
    certificate: object
    y: int = None
    r: int = None
    bound_satisfied: bool = False
    bound_claim: str = "thm1"
    rng_seed: int = None

    def to_json(self):
        out = {
            "field": self.field.ident,
            "q": self.field.q,
            "method": self.method,
            "m": self.m,
            "Q": self.Q_value,
            "Q_floor": self.Q_floor,
            "variant": self.variant,
            "y": self.y,
            "r": self.r,
            "elements": list(self.tuple),
            "certificate": self.certificate.as_list(),
            "bound_satisfied": self.bound_satisfied,
            "bound_claim": self.bound_claim,
        }
        if self.rng_seed is not None:
            out["rng"] = {"name": diophantine.RNG_NAME, "seed": self.rng_seed}
        return out

    @property
    def bound_failed(self):
        """True only when an asserted bound is violated."""
        return self.bound_claim != HALF_CLAIM and not self.bound_satisfied


def _claim(F, variant):
    return HALF_CLAIM if F.q % 8 == 3 else variant


def _even_part(m0):
    return m0 if m0 % 2 == 0 else m0 - 1


def _greedy(F, rng_seed):
    top = min(F.q - 1, GREEDY_SEED_CANDIDATES)
    sizes = [(len(diophantine.extension_set(F, [a])), -a) for a in range(1, top + 1)]
    seed = -max(sizes)[1]
    return diophantine.greedy_maximal(F, [seed], rng_seed)


def _report(F, method, m, Qv, Qf, variant, verification, y=None, r=None, rng_seed=None):
    size = len(verification.elements)
    return ConstructionReport(
        field=F, method=method, m=m, Q_value=Qv, Q_floor=Qf, variant=variant,
        tuple=verification.elements, certificate=verification.certificate, y=y, r=r,
        bound_satisfied=size >= max(1, Qf), bound_claim=_claim(F, variant), rng_seed=rng_seed)


def construct_auto(F, variant="thm1", rng_seed=0):
    """Largest explicit tuple the progression constructions give, with bound bookkeeping."""
    Qv, Qf = compute_Q(F.q, F.p, variant)
    m = _even_part(Qf)
    r8 = F.q % 8
    if r8 == 3:
        m3, y = largest_mod8_3(F)
        if m3 is not None:
            return _report(F, "mod8_3", m3, Qv, Qf, variant, build_3mod8(F, y, m3), y=y)
    elif m >= 2:
        attempts = []
        if r8 in (1, 5):
            attempts.append("case1")
        if r8 in (1, 7):
            attempts.append("case2")
        for method in attempts:
            if method == "case1":
                y = find_y_case1(F, m)
                if y is not None:
                    return _report(F, "case1", m, Qv, Qf, variant, build_case1(F, y, m),
                                   y=y, r=sqrt_minus_one(F))
            else:
                y = find_y_case2(F, m)
                if y is not None:
                    return _report(F, "case2", m, Qv, Qf, variant, build_case2(F, y, m), y=y)
    tup = _greedy(F, rng_seed)
    return _report(F, "greedy_fallback", len(tup), Qv, Qf, variant,
                   diophantine.verify_tuple(F, tup), rng_seed=rng_seed)


def construct(F, method="auto", variant="thm1", m=None, rng_seed=0):
    """Dispatch on ``method``; explicit methods default to m = max(2, even part of Q_floor)."""
    method = method.replace("-", "_")
    if method == "auto":
        return construct_auto(F, variant, rng_seed)
    Qv, Qf = compute_Q(F.q, F.p, variant)
    if method == "subfield":
        v = build_subfield_tuple(F)
        return _report(F, "subfield", None, Qv, Qf, variant, v)
    if method == "mod8_3":
        if m is None:
            m, y = largest_mod8_3(F)
        else:
            y = find_y_mod8_3(F, m)
        if y is None:
            raise ConstructionError("no qualifying y for the half construction")
        return _report(F, "mod8_3", m, Qv, Qf, variant, build_3mod8(F, y, m), y=y)
    if m is None:
        m = max(2, _even_part(Qf))
    if method == "case1":
        y = find_y_case1(F, m)
        if y is None:
            raise ConstructionError(f"no qualifying y for case 1 with m={m}")
        return _report(F, "case1", m, Qv, Qf, variant, build_case1(F, y, m),
                       y=y, r=sqrt_minus_one(F))
    if method == "case2":
        y = find_y_case2(F, m)
        if y is None:
            raise ConstructionError(f"no qualifying y for case 2 with m={m}")
        return _report(F, "case2", m, Qv, Qf, variant, build_case2(F, y, m), y=y)
    raise ParameterError(f"unknown method {method!r}")
