"""Compiled and numpy backends must agree exactly."""

import numpy as np
import pytest

from fqdioph._kernels import available_backends, python
from fqdioph.ffcore import make_field

FIELDS = [(3, 1), (7, 1), (3, 2), (5, 2), (3, 5), (7, 3), (101, 1), (11, 2)]


def ref_chi(F):
    return np.array([F.chi(a) for a in range(F.q)], dtype=np.int8)


@pytest.mark.parametrize("p,n", FIELDS)
def test_scalar_and_tables(backend, p, n):
    F = make_field(p, n)
    t = F.tail
    chi = backend.chi_table(p, n, t)
    assert np.array_equal(np.asarray(chi), ref_chi(F))
    for a in range(0, F.q, max(1, F.q // 13)):
        for b in range(0, F.q, max(1, F.q // 7)):
            assert backend.mul(p, n, t, a, b) == python.mul(p, n, t, a, b)
        assert backend.power(p, n, t, a, F.q + 5) == python.power(p, n, t, a, F.q + 5)
        assert np.array_equal(backend.mul_all(p, n, t, a), python.mul_all(p, n, t, a))
        assert np.array_equal(backend.add_all(p, n, a), python.add_all(p, n, a))
        assert np.array_equal(backend.neighbor_mask(p, n, t, chi, a),
                              python.neighbor_mask(p, n, t, chi, a))
    for coeffs in ([1], [0, 1], [1, 2, 0, 1], [p - 1, 0, 0, 0, 0, 0, 1]):
        assert np.array_equal(backend.eval_all(p, n, t, coeffs), python.eval_all(p, n, t, coeffs))


@pytest.mark.parametrize("p,n", [(3, 2), (7, 1), (5, 2), (3, 3), (29, 1), (7, 2), (61, 1)])
def test_graph_and_clique(backend, p, n):
    F = make_field(p, n)
    adj = backend.adjacency(p, n, F.tail, F.chi_table)
    ref = python.adjacency(p, n, F.tail, F.chi_table)
    assert np.array_equal(adj, ref)
    size, wit, _ = backend.max_clique(adj)
    rsize, rwit, _ = python.max_clique(ref)
    assert (size, list(wit)) == (rsize, list(rwit))


def test_edgeless_graph(backend):
    size, wit, _ = backend.max_clique(np.zeros((4, 4), dtype=np.uint8))
    assert size == 1 and list(wit) == [0]


def test_poly_ops(backend):
    a, b = (1, 2, 0, 1), (2, 1)
    assert tuple(backend.poly_mul(5, a, b)) == tuple(python.poly_mul(5, a, b))
    q1, r1 = backend.poly_divmod(5, a, b)
    q2, r2 = python.poly_divmod(5, a, b)
    assert (tuple(q1), tuple(r1)) == (tuple(q2), tuple(r2))
    assert tuple(backend.poly_gcd(3, (1, 0, 1, 0, 1), (2, 0, 1))) == \
        tuple(python.poly_gcd(3, (1, 0, 1, 0, 1), (2, 0, 1)))


def test_backends_listed():
    names = [k.BACKEND for k in available_backends()]
    assert "python" in names
