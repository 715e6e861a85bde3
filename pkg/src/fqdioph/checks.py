"""Property suites behind ``fqdioph check``.

Each suite yields ``(name, ok, detail)`` lines.  Randomness flows from the
``seed`` argument only.
"""

import random

import numpy as np

from . import charsum, constructions, cyclotomic, diophantine, polyfp
from ._kernels import kernels
from .ffcore import is_prime, make_field, prime_power
from .oracle import build_graph

CYCLO_PRIMES = (3, 5, 7, 11, 13)


def odd_prime_powers(lo, hi):
    out = []
    for q in range(max(lo, 3), hi + 1):
        if q % 2:
            pp = prime_power(q)
            if pp:
                out.append(pp)
    return out


def field_for(q):
    p, n = prime_power(q)
    return make_field(p, n)


# -- cyclotomic identities ----------------------------------------------------------

def cyclo_suite(n_max=300, pair_max=200, primes=CYCLO_PRIMES):
    bad = []
    for n in range(1, n_max + 1):
        prod = (1,)
        for d in cyclotomic.divisors(n):
            prod = cyclotomic.int_mul(prod, cyclotomic.cyclo_int(d))
        if prod != (-1,) + (0,) * (n - 1) + (1,):
            bad.append(n)
    yield "prod Phi_d = x^n - 1 over Z, n <= %d" % n_max, not bad, bad[:5]

    for p in primes:
        bad = []
        target_deg = []
        for n in range(1, n_max + 1):
            prod = polyfp.ONE
            for d in cyclotomic.divisors(n):
                prod = polyfp.mul(p, prod, cyclotomic.cyclo_mod(p, d))
            if prod != polyfp.trim((-1,) + (0,) * (n - 1) + (1,), p):
                bad.append(n)
            if polyfp.degree(cyclotomic.cyclo_mod(p, n)) != cyclotomic.euler_phi(n):
                target_deg.append(n)
        yield f"prod Phi_d = x^n - 1 over F_{p}, n <= {n_max}", not bad, bad[:5]
        yield f"deg Phi_n mod {p} = phi(n)", not target_deg, target_deg[:5]

    for p in primes:
        sq_bad, sf_bad, cp_bad, closed_bad = [], [], [], []
        for n in range(1, pair_max + 1):
            f = cyclotomic.cyclo_mod(p, n)
            if n % p == 0:
                if not polyfp.is_perfect_square(p, f):
                    sq_bad.append(n)
                r, e = n, 0
                while r % p == 0:
                    r //= p
                    e += 1
                closed = polyfp.power(p, cyclotomic.cyclo_mod(p, r), (p - 1) * p ** (e - 1))
                if closed != f:
                    closed_bad.append(n)
            elif len(polyfp.gcd(p, f, polyfp.derivative(p, f))) != 1:
                sf_bad.append(n)
        coprime = [n for n in range(1, pair_max + 1) if n % p]
        for i, n in enumerate(coprime):
            fn = cyclotomic.cyclo_mod(p, n)
            for n2 in coprime[i + 1:]:
                if len(polyfp.gcd(p, fn, cyclotomic.cyclo_mod(p, n2))) != 1:
                    cp_bad.append((n, n2))
        yield f"p={p}: Phi_n square when p | n (n <= {pair_max})", not sq_bad, sq_bad[:5]
        yield f"p={p}: Phi_n = Phi_r^((p-1)p^(e-1)) when n = p^e r", not closed_bad, closed_bad[:5]
        yield f"p={p}: Phi_n square-free when p does not divide n", not sf_bad, sf_bad[:5]
        yield f"p={p}: Phi_n, Phi_n' coprime (both prime to p)", not cp_bad, cp_bad[:5]


# -- Weil and pattern counting ---------------------------------------------------------

def random_squarefree_monic(rng, p, max_deg=8):
    while True:
        d = rng.randint(1, max_deg)
        f = tuple(rng.randrange(p) for _ in range(d)) + (1,)
        if polyfp.is_squarefree(p, f):
            return f


def weil_suite(trials=1000, q_max=2003, max_deg=8, seed=0):
    rng = random.Random(seed)
    fields = odd_prime_powers(3, q_max)
    failures = []
    for _ in range(trials):
        p, n = rng.choice(fields)
        F = make_field(p, n)
        f = random_squarefree_monic(rng, p, max_deg)
        res = charsum.weil_check(F, f)
        if not res.within_bound:
            failures.append((F.ident, f, res.sum))
    yield f"Weil bound, {trials} random square-free f, deg <= {max_deg}, q <= {q_max}", \
        not failures, failures[:3]


def pattern_fields(q_max=1009, count=24, seed=0):
    rng = random.Random(seed)
    pool = odd_prime_powers(3, q_max)
    extensions = [pp for pp in pool if pp[1] > 1]
    primes = [pp for pp in pool if pp[1] == 1]
    picked = set(rng.sample(extensions, min(len(extensions), count // 2)))
    picked |= set(rng.sample(primes, count - len(picked)))
    picked.add(prime_power(q_max) or primes[-1])
    return sorted(picked, key=lambda pp: pp[0] ** pp[1])


def pattern_suite(q_max=1009, shift_sets=20, seed=0, fields=None):
    rng = random.Random(seed)
    bad, sum_bad = [], []
    cases = 0
    for p, n in fields or pattern_fields(q_max, seed=seed):
        F = make_field(p, n)
        for k in (1, 2, 3):
            for _ in range(shift_sets):
                shifts = rng.sample(range(F.q), k)
                total = 0
                for signs in charsum.all_sign_patterns(k):
                    res = charsum.pattern_count(F, shifts, signs)
                    cases += 1
                    total += res["N"]
                    if not res["bound_ok"]:
                        bad.append((F.ident, shifts, signs, res["N"]))
                # every x is counted once unless some x + a_i = 0
                if total != F.q - k:
                    sum_bad.append((F.ident, shifts, total))
    yield f"pattern-count bound (d = 2), {cases} cases", not bad, bad[:3]
    yield "pattern counts sum to q - k", not sum_bad, sum_bad[:3]


# -- S_p(m) against T_p(m) -------------------------------------------------------------------

def bounds_suite(p_max=97, m_max=500):
    bad, t_bad = [], []
    for p in range(3, p_max + 1):
        if not is_prime(p):
            continue
        for m in range(2, m_max + 1):
            bt = constructions.bound_terms(p, m)
            if not bt.inequality_holds():
                bad.append((p, m))
            if bt.T != len(bt.I_set):
                t_bad.append((p, m))
    yield f"S(p-1) < p T^2 for p <= {p_max}, 2 <= m <= {m_max}", not bad, bad[:5]
    yield "T = |I(m)|", not t_bad, t_bad[:5]


# -- maximal tuples --------------------------------------------------------------------

def maximal_cliques(adj):
    """All maximal cliques (Bron-Kerbosch with pivoting) as sorted index tuples."""
    k = adj.shape[0]
    nb = [0] * k
    for v in range(k):
        bits = 0
        for u in range(k):
            if u != v and adj[v, u]:
                bits |= 1 << u
        nb[v] = bits
    out = []

    def bk(R, P, X):
        if not P and not X:
            out.append(tuple(sorted(R)))
            return
        pivot_src = P | X
        pivot = max((u for u in _bits(pivot_src)), key=lambda u: (nb[u] & P).bit_count())
        for v in list(_bits(P & ~nb[pivot])):
            bk(R + [v], P & nb[v], X & nb[v])
            P &= ~(1 << v)
            X |= 1 << v

    bk([], (1 << k) - 1, 0)
    return out


def _bits(x):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x &= ~low


def maximal_suite(q_max=200, samples=100, exhaustive_max=100, seed=0):
    bad, contra_bad, closure_bad = [], [], []
    for p, n in odd_prime_powers(3, q_max):
        F = make_field(p, n)
        sizes = set()
        for s in range(samples):
            trace = []
            start = 1 + (seed + s) % (F.q - 1)
            tup = diophantine.greedy_maximal(F, [start], rng_seed=seed * 100003 + s, trace=trace)
            sizes.add(len(tup))
            if not diophantine.maximal_bound_check(F.q, len(tup)):
                bad.append((F.q, tup))
            for partial in trace:
                if not diophantine.maximal_bound_check(F.q, len(partial)):
                    if not diophantine.extension_set(F, partial):
                        contra_bad.append((F.q, partial))
        if F.q <= exhaustive_max:
            cliques = maximal_cliques(build_graph(F).adjacency)
            all_sizes = {len(c) for c in cliques}
            for c in cliques:
                if not diophantine.maximal_bound_check(F.q, len(c)):
                    bad.append((F.q, tuple(v + 1 for v in c)))
            if not sizes <= all_sizes:
                closure_bad.append((F.q, sorted(sizes), sorted(all_sizes)))
    yield f"maximal m-tuples satisfy q < 2^(2m-2) m^2 (q <= {q_max})", not bad, bad[:3]
    yield "tuples past the size bound always extend", not contra_bad, contra_bad[:3]
    yield f"greedy maximal sizes occur among exhaustive maximal cliques (q <= {exhaustive_max})", \
        not closure_bad, closure_bad[:3]


# -- N(m) ------------------------------------------------------------------------------

NCOUNT_PRIMES = (3, 5, 7, 11, 13)
NCOUNT_EXTRA = (10007, 65537, 99991)


def ncount_grid(q_max=10 ** 5):
    grid = []
    for p in NCOUNT_PRIMES:
        q, n = p, 1
        while q <= q_max:
            if q > 7:
                grid.append((p, n))
            q *= p
            n += 1
    grid += [(p, 1) for p in NCOUNT_EXTRA if p <= q_max]
    return grid


def expanded_product_sum(F, m):
    """sum_{y, ord y >= m} (1 + sum_f chi(f(y))) over the construction polynomials f."""
    first_ok = np.ones(F.q, dtype=bool)
    first_ok[0] = False
    for k in range(1, m):
        first_ok &= kernels.eval_all(F.p, F.n, F.tail, [0] * k + [1]) != 1
    total = int(first_ok.sum())
    for _, f in charsum.enum_construction_polys(F.p, m):
        vals = F.chi_table[kernels.eval_all(F.p, F.n, F.tail, f)].astype(np.int64)
        total += int(vals[first_ok].sum())
    return total


def ncount_suite(q_max=10 ** 5, m_max=12, expand_q_max=2000, expand_m_max=8):
    below, recon_bad, expand_bad = [], [], []
    cells = 0
    for p, n in ncount_grid(q_max):
        F = make_field(p, n)
        for nc in constructions.count_N_range(F, m_max):
            cells += 1
            if not nc.bound_holds():
                below.append((F.q, nc.m, nc.exact, round(nc.analytic_lower_bound, 3)))
            if nc.product_sum != 2 ** nc.T * nc.exact + nc.vanishing:
                recon_bad.append((F.q, nc.m))
            if F.q <= expand_q_max and nc.m <= expand_m_max:
                if expanded_product_sum(F, nc.m) != nc.product_sum:
                    expand_bad.append((F.q, nc.m))
    yield f"N(m) exact >= displayed analytic bound ({cells} cells)", not below, below[:8]
    yield "product form = 2^T exact + vanishing-factor terms", not recon_bad, recon_bad[:5]
    yield f"product form = expanded character-sum form (q <= {expand_q_max})", \
        not expand_bad, expand_bad[:5]


SUITES = {
    "cyclo": cyclo_suite,
    "weil": weil_suite,
    "pattern": pattern_suite,
    "bounds": bounds_suite,
    "maximal": maximal_suite,
    "ncount": ncount_suite,
}
SEEDED = {"weil", "pattern", "maximal"}
