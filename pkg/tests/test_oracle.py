import math

import pytest

from fqdioph import oracle
from fqdioph.diophantine import verify_tuple
from fqdioph.errors import SizePolicyError
from fqdioph.ffcore import make_field

from oracles import naive_max_clique


def test_graph_examples():
    assert oracle.build_graph(make_field(5, 1)).edges() == [(1, 3), (1, 4), (2, 4)]
    g7 = oracle.build_graph(make_field(7, 1))
    assert g7.edges() == [(1, 3), (1, 6), (2, 3), (2, 4), (2, 5), (3, 5), (4, 5), (4, 6)]
    assert g7.edge_count() == 8 and g7.has_edge(3, 1) and not g7.has_edge(1, 1)


def test_clique_examples():
    r5 = oracle.max_clique(oracle.build_graph(make_field(5, 1)))
    assert (r5.size, r5.witness) == (2, (1, 3))
    r7 = oracle.max_clique(oracle.build_graph(make_field(7, 1)))
    assert r7.size == 3 and r7.witness in {(2, 3, 5), (2, 4, 5)}
    m9 = oracle.exact_M(make_field(3, 2)).size
    assert 2 <= m9 <= 3 + 2.5


ODD_Q_31 = [(3, 1), (5, 1), (7, 1), (3, 2), (11, 1), (13, 1), (17, 1), (19, 1), (23, 1),
            (5, 2), (3, 3), (29, 1), (31, 1)]


@pytest.mark.parametrize("p,n", ODD_Q_31)
def test_branch_and_bound_matches_subset_search(p, n):
    F = make_field(p, n)
    g = oracle.build_graph(F)
    res = oracle.max_clique(g)
    naive = naive_max_clique(F.q, g.has_edge)
    assert res.size == len(naive)
    assert res.witness == naive  # both are lexicographically least
    assert verify_tuple(F, res.witness).ok


def test_size_policy():
    with pytest.raises(SizePolicyError):
        oracle.build_graph(make_field(5003, 1))


def test_cache_file(tmp_path):
    path = tmp_path / "m.jsonl"
    F = make_field(7, 2)
    a = oracle.exact_M(F, cache_path=str(path))
    oracle._cache.memo.clear()
    b = oracle.exact_M(F, cache_path=str(path))
    assert a == b
    assert len(path.read_text().splitlines()) == 1


def test_upper_bound_small():
    for p, n in ODD_Q_31:
        F = make_field(p, n)
        assert oracle.exact_M(F).size <= math.sqrt(F.q) + 2.5
