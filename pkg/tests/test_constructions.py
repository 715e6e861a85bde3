import math

import pytest

from fqdioph import constructions as C
from fqdioph.errors import ParameterError
from fqdioph.ffcore import make_field


def test_compute_Q():
    v, f = C.compute_Q(59049, 3)
    assert f == 3 and abs(v - 3.0144) < 1e-3
    v, f = C.compute_Q(390625, 5)
    assert f == 3 and abs(v - 3.643) < 1e-3
    assert C.compute_Q(101, 101)[1] <= 0
    L = math.log(59049)
    direct = 1.5 * ((0.5 * L - 2 * math.log(L)) / math.log(2) + 2)
    assert abs(C.compute_Q(59049, 3, "thm35")[0] - direct) < 1e-12
    with pytest.raises(ParameterError):
        C.compute_Q(7, 7)
    with pytest.raises(ParameterError):
        C.compute_Q(27, 5)


def test_bound_terms():
    bt = C.bound_terms(3, 4)
    assert (bt.I_set, bt.T, bt.S) == ((0, 1, 2), 3, 3) and bt.inequality_holds()
    bt = C.bound_terms(5, 6)
    assert (bt.T, bt.S) == (5, 9) and bt.inequality_holds()
    bt = C.bound_terms(3, 2)
    assert (bt.I_set, bt.T, bt.S) == ((0, 1), 2, 1)


def test_case1():
    F25 = make_field(5, 2)
    assert C.find_y_case1(F25, 2) == 2
    assert C.build_case1(F25, 2, 2).elements == (1, 2, 4)
    assert C.find_y_case1(make_field(13, 1), 2) is None
    assert C.find_y_case1(make_field(17, 1), 2) is None
    with pytest.raises(ParameterError):
        C.build_case1(make_field(7, 1), 2, 2)


def test_case2():
    F23 = make_field(23, 1)
    assert C.find_y_case2(F23, 2) == 2
    assert C.build_case2(F23, 2, 2).elements == (1, 2, 12)
    with pytest.raises(ParameterError):
        C.find_y_case2(make_field(5, 1), 2)


def test_half_construction():
    F11 = make_field(11, 1)
    assert C.build_3mod8(F11, 3, 2).elements == (1, 3)
    m, y = C.largest_mod8_3(F11)
    assert len(C.build_3mod8(F11, y, m).elements) == m // 2 + 1
    with pytest.raises(ParameterError):
        C.build_3mod8(make_field(13, 1), 3, 2)


def test_subfield():
    assert C.build_subfield_tuple(make_field(3, 2)).elements == (1, 2)
    assert C.build_subfield_tuple(make_field(5, 2)).elements == (1, 2, 3, 4)
    assert len(C.build_subfield_tuple(make_field(3, 4)).elements) == 8
    with pytest.raises(ParameterError):
        C.build_subfield_tuple(make_field(3, 3))


def brute_N(F, m):
    # squares y of order >= m with Phi_2i(y) a nonzero square for every 1 <= i < m, p !| i
    bt = C.bound_terms(F.p, m)
    count = 0
    for y in range(1, F.q):
        if F.order(y) < m or F.chi(y) != 1:
            continue
        if all(F.chi(C.eval_fp_poly(F, C.cyclo_mod(F.p, 2 * i), y)) == 1
               for i in bt.I_set if i):
            count += 1
    return count


def test_count_N():
    F23 = make_field(23, 1)
    nc = C.count_N(F23, 2)
    assert nc.exact == 4
    assert nc.exact <= (F23.q - 1) // 2


@pytest.mark.parametrize("p,n", [(3, 3), (5, 2), (11, 1), (7, 2), (13, 1), (3, 5)])
def test_count_N_against_brute(p, n):
    F = make_field(p, n)
    for nc in C.count_N_range(F, 7):
        assert nc.exact == brute_N(F, nc.m)
        assert nc.product_sum == 2 ** nc.T * nc.exact + nc.vanishing


def test_construct_auto():
    rep = C.construct_auto(make_field(3, 10))
    assert rep.method in ("case1", "case2")
    assert len(rep.tuple) >= 3 and rep.bound_satisfied
    rep = C.construct_auto(make_field(101, 1))
    assert rep.Q_floor <= 0 and rep.bound_satisfied and len(rep.tuple) >= 1
    with pytest.raises(ParameterError):
        C.construct_auto(make_field(7, 1))


def test_report_json_is_self_contained():
    from fqdioph.diophantine import verify_tuple
    from fqdioph.ffcore import parse_field

    js = C.construct(make_field(5, 4), "case1").to_json()
    F = parse_field(js["field"])
    assert verify_tuple(F, js["elements"]).ok


def test_explicit_methods():
    rep = C.construct(make_field(23, 1), "case2")
    assert rep.tuple == (1, 2, 12) and rep.m == 2
    rep = C.construct(make_field(3, 2 * 3), "subfield")
    assert len(rep.tuple) == 26
    rep = C.construct(make_field(19, 1), "mod8-3")
    assert rep.method == "mod8_3" and rep.bound_claim == "remark-3.6"
