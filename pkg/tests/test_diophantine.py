from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from fqdioph import diophantine as D
from fqdioph.errors import ParameterError
from fqdioph.ffcore import make_field


def brute_is_tuple(F, elems):
    squares = {F.mul(x, x) for x in range(F.q)}
    return all(F.add(F.mul(a, b), 1) in squares for a, b in combinations(elems, 2))


def test_fermat_quadruple():
    F = make_field(1009, 1)
    rep = D.verify_tuple(F, [1, 3, 8, 120])
    assert rep.ok
    assert sorted(s * s % 1009 for s in rep.certificate.witnesses.values()) == \
        sorted([4, 9, 121, 25, 361, 961])
    assert rep.certificate.recheck(F, rep.elements)


def test_singleton_and_zero_square():
    F9 = make_field(3, 2)
    rep = D.verify_tuple(F9, [1])
    assert rep.ok and rep.certificate.witnesses == {}
    rep = D.verify_tuple(F9, [1, 2])
    assert rep.ok and rep.certificate.witnesses[(0, 1)] == 0


def test_violation_reports_pair():
    F = make_field(7, 1)
    rep = D.verify_tuple(F, [5, 2, 1])
    assert not rep.ok
    assert rep.elements == (1, 2, 5)
    i, j = rep.violating_pair
    assert (rep.elements[i], rep.elements[j]) == (1, 2)
    js = rep.to_json(F)
    assert js["violating_elements"] == [1, 2]


def test_rejections():
    F = make_field(7, 1)
    for bad in ([0, 1], [1, 1], [1, 9]):
        with pytest.raises(ParameterError):
            D.verify_tuple(F, bad)


def test_extension_and_maximality():
    F5 = make_field(5, 1)
    assert D.extension_set(F5, [1, 3]) == []
    assert D.extension_set(F5, [1]) == [3, 4]
    assert D.extension_set(F5, []) == [1, 2, 3, 4]
    assert D.is_maximal(F5, [1, 3])
    assert not D.is_maximal(F5, [1])


def test_greedy_examples():
    F5 = make_field(5, 1)
    for s in range(10):
        assert D.greedy_maximal(F5, [1], rng_seed=s) in {(1, 3), (1, 4)}
    F7 = make_field(7, 1)
    assert D.greedy_maximal(F7, [2, 4, 5], rng_seed=3) == (2, 4, 5)


def test_greedy_is_deterministic():
    F = make_field(3, 4)
    assert D.greedy_maximal(F, [1], rng_seed=42) == D.greedy_maximal(F, [1], rng_seed=42)


def test_maximal_bound_check():
    assert D.maximal_bound_check(29, 3)
    assert not D.maximal_bound_check(1009, 3)
    assert not D.maximal_bound_check(3, 1)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([(5, 1), (7, 1), (3, 2), (13, 1), (5, 2), (3, 3)]), st.data())
def test_against_brute_force(pn, data):
    F = make_field(*pn)
    elems = data.draw(st.sets(st.integers(1, F.q - 1), min_size=1, max_size=4))
    rep = D.verify_tuple(F, elems)
    assert rep.ok == brute_is_tuple(F, elems)
    if rep.ok:
        ext = D.extension_set(F, elems)
        brute = [x for x in range(1, F.q) if x not in elems
                 and brute_is_tuple(F, list(elems) + [x])]
        assert ext == brute
        assert D.is_maximal(F, elems) == (not brute)
        tup = D.greedy_maximal(F, elems, rng_seed=data.draw(st.integers(0, 99)))
        assert set(elems) <= set(tup) and D.is_maximal(F, tup)
