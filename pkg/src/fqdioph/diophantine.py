"""Diophantine tuples over F_q: verification with certificates, extension, maximality."""

from dataclasses import dataclass, field
import random

import numpy as np

from ._kernels import kernels
from .errors import ParameterError

RNG_NAME = "python-random-mt19937"


@dataclass(frozen=True)
class Certificate:
    """Witness square roots: ``witnesses[(i, j)] = s`` with s^2 = a_i a_j + 1."""

    witnesses: dict = field(default_factory=dict)

    def as_list(self):
        return [[i, j, s] for (i, j), s in sorted(self.witnesses.items())]

    def recheck(self, F, elements):
        """Independent re-squaring of every witness."""
        k = len(elements)
        if set(self.witnesses) != {(i, j) for i in range(k) for j in range(i + 1, k)}:
            return False
        for (i, j), s in self.witnesses.items():
            target = F.add(F.mul(elements[i], elements[j]), 1)
            if F.mul(s, s) != target:
                return False
        return True


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    elements: tuple
    violating_pair: tuple = None
    certificate: Certificate = None

    def to_json(self, F):
        out = {"field": F.ident, "ok": self.ok, "elements": list(self.elements)}
        if self.ok:
            out["certificate"] = self.certificate.as_list()
        else:
            i, j = self.violating_pair
            out["violating_pair"] = [i, j]
            out["violating_elements"] = [self.elements[i], self.elements[j]]
        return out


def canonical(F, elements):
    """Sorted tuple of codes; rejects zero, repeats and out-of-range codes."""
    elems = [int(a) for a in elements]
    for a in elems:
        F.check(a)
        if a == 0:
            raise ParameterError("Diophantine tuples live in F_q^*; 0 is not allowed")
    if len(set(elems)) != len(elems):
        raise ParameterError("tuple elements must be distinct")
    return tuple(sorted(elems))


def verify_tuple(F, elements):
    """Check every pair a_i a_j + 1 is a square (0 included), emitting witnesses.

    Elements are canonicalised to ascending order; the violating pair, if any,
    is the lexicographically first (i, j) in that order.
    """
    elems = canonical(F, elements)
    witnesses = {}
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            s = F.sqrt(F.add(F.mul(elems[i], elems[j]), 1))
            if s is None:
                return VerificationReport(False, elems, violating_pair=(i, j))
            witnesses[(i, j)] = s
    return VerificationReport(True, elems, certificate=Certificate(witnesses))


def neighbor_mask(F, a):
    """bool array over codes: a*x + 1 is a square."""
    return kernels.neighbor_mask(F.p, F.n, F.tail, F.chi_table, a)


def _extension_mask(F, elems):
    mask = np.ones(F.q, dtype=bool)
    for a in elems:
        mask &= neighbor_mask(F, a)
    mask[0] = False
    mask[list(elems)] = False
    return mask


def extension_set(F, A):
    """All x in F_q^* outside A with A + {x} still Diophantine (full scan)."""
    elems = canonical(F, A)
    return [int(x) for x in np.flatnonzero(_extension_mask(F, elems))]


def is_maximal(F, A):
    elems = canonical(F, A)
    return not _extension_mask(F, elems).any()


def greedy_maximal(F, seed, rng_seed=0, trace=None):
    """Adjoin uniformly random extension elements until the tuple is maximal.

    ``trace``, if a list, receives every intermediate tuple (as sorted tuples).
    """
    rng = random.Random(rng_seed)
    elems = list(canonical(F, seed))
    mask = _extension_mask(F, elems)
    while True:
        if trace is not None:
            trace.append(tuple(sorted(elems)))
        cand = np.flatnonzero(mask)
        if cand.size == 0:
            return tuple(sorted(elems))
        x = int(cand[rng.randrange(cand.size)])
        elems.append(x)
        mask &= neighbor_mask(F, x)
        mask[x] = False


def maximal_bound_check(q, m):
    """q < 2^(2m-2) m^2, the size constraint every maximal m-tuple obeys."""
    if m < 1:
        raise ParameterError("m must be >= 1")
    return q < (1 << (2 * m - 2)) * m * m
