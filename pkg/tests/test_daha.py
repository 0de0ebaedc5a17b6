from fractions import Fraction
from itertools import product

import pytest
import sympy

from fockyangian import mutations
from fockyangian.coeff import C, T, Parameters
from fockyangian.daha import (
    DahaConfig, apply_dunkl, apply_r, apply_s, apply_word, apply_x, apply_y,
    check_daha_relations, divided_difference,
)
from fockyangian.verify import divided_difference_oracle, laurent_quotient, symbolic_nu

z1, z2 = sympy.symbols("z1 z2")
SHIFT = 5


def sympy_oracle(e1, e2):
    """(z2/(z1 - z2)) (P - K12 P) for P = z1^e1 z2^e2, by exact division."""
    num = z2 * (z1**e1 * z2**e2 - z1**e2 * z2**e1) * z1**SHIFT * z2**SHIFT
    q, r = sympy.div(sympy.expand(num), z1 - z2, z1, z2)
    assert r == 0
    out = {}
    for (a, b), coeff in sympy.Poly(q, z1, z2).terms():
        if coeff:
            out[(a - SHIFT, b - SHIFT)] = int(coeff)
    return out


def as_exps(vec):
    return {exps: c for (exps, _), c in vec.items()}


def test_divided_difference_examples():
    w = (1, 1)
    assert divided_difference(1, 2, {((1, 1), w): 1}) == {}
    assert as_exps(divided_difference(1, 2, {((0, 2), w): 1})) == {(0, 2): -1, (1, 1): -1}
    assert as_exps(divided_difference(1, 2, {((2, 0), w): 1})) == {(0, 2): 1, (1, 1): 1}


def test_divided_difference_matches_sympy():
    for e1, e2 in product(range(-4, 5), repeat=2):
        got = as_exps(divided_difference(1, 2, {((e1, e2), (1, 2)): 1}))
        assert got == sympy_oracle(e1, e2), (e1, e2)


def test_laurent_quotient_oracle_matches_sympy():
    for e1, e2 in product(range(-4, 5), repeat=2):
        assert divided_difference_oracle(e1, e2) == sympy_oracle(e1, e2)


def test_laurent_quotient_rejects_non_multiples():
    with pytest.raises(ArithmeticError):
        laurent_quotient({(1, 0): 1})


def test_r_operator():
    assert apply_r(1, 2, {((0, 0), (1, 1)): 1}) == {((0, 0), (1, 1)): Fraction(1, 2)}
    assert apply_r(1, 2, {((3, 1), (2, 1)): 1}) == {((3, 1), (1, 2)): 1}
    assert apply_r(1, 2, {((0, 0), (1, 2)): 1}) == {}


def test_dunkl_examples():
    P = Parameters()
    one = DahaConfig(1, 1)
    for m in (-2, 0, 3):
        expected = {((m,), (1,)): T * m} if m else {}
        assert apply_dunkl(1, {((m,), (1,)): 1}, one, P) == expected
    two = DahaConfig(2, 1)
    assert apply_dunkl(1, {((0, 1), (1, 1)): 1}, two, P) == {}


def test_y_examples():
    P = Parameters()
    cfg = DahaConfig(2, 1)
    v = {((1, 1), (1, 1)): 1}
    d = apply_dunkl(1, v, cfg, P)[((1, 1), (1, 1))]
    assert apply_y(1, v, cfg, P) == {((1, 1), (1, 1)): -d - C / 2}
    one = DahaConfig(1, 1)
    w = {((2,), (1,)): 1}
    assert apply_y(1, w, one, P) == {((2,), (1,)): -2 * T}


def test_y_at_c_zero_is_euler_operator():
    P = Parameters(1, 0)
    cfg = DahaConfig(3, 2)
    for exps in product(range(-1, 2), repeat=3):
        v = {(exps, (1, 2, 1)): 1}
        for i in (1, 2, 3):
            m = exps[i - 1]
            assert apply_y(i, v, cfg, P) == ({(exps, (1, 2, 1)): -m} if m else {})


def test_dunkl_operators_commute():
    P = Parameters()
    cfg = DahaConfig(3, 2)
    for exps in product(range(-1, 2), repeat=3):
        v = {(exps, (2, 1, 1)): 1}
        for i, j in ((1, 2), (1, 3), (2, 3)):
            a = apply_dunkl(j, apply_dunkl(i, v, cfg, P), cfg, P)
            b = apply_dunkl(i, apply_dunkl(j, v, cfg, P), cfg, P)
            assert a == b


def test_dunkl_preserves_exponent_bounds():
    P = Parameters()
    cfg = DahaConfig(3, 1)
    for exps in product(range(-2, 1), repeat=3):
        out = apply_dunkl(2, {(exps, (1, 1, 1)): 1}, cfg, P)
        for (e, _), _c in out.items():
            assert max(e) <= 0 and sum(e) == sum(exps)


def test_s_is_an_involution():
    P = Parameters()
    cfg = DahaConfig(3, 2)
    v = {((2, -1, 0), (1, 2, 2)): 1}
    assert apply_s(1, 2, apply_s(1, 2, v)) == v
    assert apply_word([("s", 1), ("s", 1)], v, cfg, P) == v
    assert apply_x(1, v, power=2) == {((4, -1, 0), (1, 2, 2)): 1}


@pytest.mark.parametrize("n,L", [(1, 1), (2, 1), (3, 1), (2, 2), (3, 2)])
def test_relations_hold(n, L):
    for nu in ((), symbolic_nu(L)):
        report = check_daha_relations(DahaConfig(n, L, nu), 2 if n < 3 else 1)
        assert report["status"] == "pass", report


def test_relations_detect_dunkl_fault():
    # y_exchange_sign only touches y_k, which the u/s/x relations never see
    with mutations.seeded("dunkl_r_sign"):
        report = check_daha_relations(DahaConfig(2, 2), 1)
    assert report["status"] == "fail"
