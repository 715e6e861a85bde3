import math

import pytest
from hypothesis import given, settings, strategies as st

from fqdioph import charsum, polyfp
from fqdioph.errors import HypothesisError, ParameterError
from fqdioph.ffcore import make_field


def direct_sum(F, f):
    total = 0
    for x in range(F.q):
        acc = 0
        for c in reversed(f):
            acc = F.add(F.mul(acc, x), c)
        total += F.chi(acc)
    return total


def test_char_sum_examples():
    for pn in [(5, 1), (3, 2), (7, 3)]:
        F = make_field(*pn)
        assert charsum.char_sum(F, (0, 1)) == 0
        assert charsum.char_sum(F, (0, 0, 1)) == F.q - 1
    assert charsum.char_sum(make_field(5, 1), (0, 1, 1)) == -1


def test_weil_examples():
    r = charsum.weil_check(make_field(5, 1), (0, 1, 1))
    assert r.sum == -1 and r.within_bound
    assert abs(r.bound - math.sqrt(5)) < 1e-12
    with pytest.raises(HypothesisError):
        charsum.weil_check(make_field(7, 1), (0, 0, 1))
    with pytest.raises(ParameterError):
        charsum.weil_check(make_field(7, 1), (1, 2))


def test_pattern_examples():
    F9 = make_field(3, 2)
    r = charsum.pattern_count(F9, [0], [1])
    assert r == {"N": 4, "bound_ok": True}
    F = make_field(13, 1)
    assert charsum.pattern_count(F, [0], [-1])["N"] == 6
    with pytest.raises(ParameterError):
        charsum.pattern_count(F, [1, 1], [1, 1])
    with pytest.raises(ParameterError):
        charsum.pattern_count(F, [1], [0])


def test_pattern_bound_is_tight_for_k1():
    # |4 - 4.5| = 0.5 equals the right-hand side exactly
    assert charsum.pattern_bound_ok(9, 1, 4)
    assert not charsum.pattern_bound_ok(9, 1, 6)


def test_construction_polys():
    got = [f for _, f in charsum.enum_construction_polys(3, 2)]
    assert got == [(0, 1), (1, 1), (0, 1, 1)]
    assert len(list(charsum.enum_construction_polys(5, 7))) == 2 ** 6 - 1


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([(3, 2), (5, 1), (7, 2), (11, 1), (3, 4)]),
       st.lists(st.integers(0, 10), min_size=1, max_size=5))
def test_sum_matches_direct(pn, coeffs):
    F = make_field(*pn)
    f = polyfp.trim(tuple(c % F.p for c in coeffs) + (1,), F.p)
    assert charsum.char_sum(F, f) == direct_sum(F, f)
    if polyfp.degree(f) >= 1 and not polyfp.is_perfect_square(F.p, f):
        assert charsum.weil_check(F, f).within_bound
