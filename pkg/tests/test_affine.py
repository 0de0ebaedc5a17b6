from itertools import product

import pytest
from hypothesis import given, strategies as st

from fockyangian import mutations
from fockyangian.affine import (
    AffineYangianAction, apply_T, apply_T_infinity, apply_T_infinity_inverse, from_multi,
    node0_operator, rho_expand, t_index, t_infinity_basis, t_infinity_inverse_basis,
    t_inverse_index, to_multi, v_LN, v_LN_minus,
)
from fockyangian.coeff import C, T, Parameters
from fockyangian.combinatorics import (
    ChargedMultipartition, addable_cells, chevalley_action, fock_basis, partitions_up_to,
    removable_cells,
)
from fockyangian.generators import CARTAN, H, X
from fockyangian.wedge import GlobalConfig, decode_index, word_to_partition

SYM = Parameters()
BETA3 = T / 2 - C / 4


def test_rho_examples():
    assert rho_expand(X("+", 2), 4, SYM) == [(1, X("+", 1))]
    assert rho_expand(X("-", 2), 4, SYM) == [(1, X("-", 1))]
    assert rho_expand(X("+", 0, 1), 3, SYM) == [(BETA3, X("+", 2, 0)), (1, X("+", 2, 1))]
    assert rho_expand(H(3, 1), 5, SYM) == [(C / 2, H(2, 0)), (1, H(2, 1))]


def test_rho_binomial_and_square():
    terms = dict((g, c) for c, g in rho_expand(H(2, 2), 4, SYM))
    assert terms == {H(1, 0): (C / 2) ** 2, H(1, 1): C, H(1, 2): 1}
    # rho^2 of X_{1,1}: first gamma = beta (node 1), then beta again (node 0)
    beta = SYM.beta(4)
    sq = dict((g, c) for c, g in rho_expand(X("-", 1, 1), 4, SYM, power=2))
    assert sq == {X("-", 3, 0): 2 * beta, X("-", 3, 1): 1}
    for c, g in rho_expand(X("+", 1, 2), 5, SYM):
        assert g.node == 0


def test_t_index_examples():
    assert t_index(5, 3, 2) == 6
    assert t_index(0, 3, 2) == 4
    assert t_index(6, 3, 2) == 10
    # k = 3 is z^0 w_2 v_3 (a = N), which is not 0 mod NL
    assert t_index(3, 3, 2) == 7
    with mutations.seeded("T_mod_NL"):
        assert t_index(3, 3, 2) == 4


@given(st.integers(-100, 100), st.integers(3, 5), st.integers(1, 3))
def test_t_index_is_bijective(k, N, L):
    assert t_inverse_index(t_index(k, N, L), N, L) == k
    assert t_index(t_inverse_index(k, N, L), N, L) == k


def test_v_words():
    assert v_LN(0, 3, 2) == (0, -3)
    assert v_LN(1, 3, 2) == (-6, -9)
    assert v_LN_minus(0, 3, 2) == (0, -1, -3, -4)
    for k in v_LN(2, 4, 3):
        assert decode_index(k, 4, 3)[0::2] == (2, 4)


@given(
    st.integers(3, 4), st.integers(1, 2), st.integers(0, 2),
    st.lists(st.integers(0, 40), min_size=2, max_size=6, unique=True), st.data(),
)
def test_critical_factor_is_annihilated(N, L, m, offsets, data):
    """A factor z^m w_b v_a with a <= N-1 at the tail exponent m is pushed into the tail."""
    NL = N * L
    n = len(offsets) + 1
    M = n - m * NL
    a = data.draw(st.integers(1, N - 1))
    b = data.draw(st.integers(1, L))
    critical = a - N * (b + L * m)
    others = [-m * NL + 1 + o for o in offsets]
    res = apply_T(others + [critical], N, L)
    assert res is not None
    assert word_to_partition(res[1], M) is None


@pytest.mark.parametrize("M", range(-3, 4))
def test_t_infinity_level_one_is_index_shift(M):
    cfg = GlobalConfig(3, 1, M)
    for lam in partitions_up_to(4):
        assert apply_T_infinity({lam: 1}, cfg) == {lam: 1}
    cfg4 = GlobalConfig(4, 1, M)
    assert apply_T_infinity({(): 1}, cfg4) == {(): 1}


@pytest.mark.parametrize("N,L", [(3, 1), (4, 1), (3, 2), (4, 2), (3, 3)])
def test_t_infinity_round_trip(N, L):
    for M in range(-3, 4):
        cfg = GlobalConfig(N, L, M)
        for lam in partitions_up_to(4):
            sign, image = t_infinity_basis(lam, cfg)
            sign2, back = t_infinity_inverse_basis(image, cfg.shifted(L))
            assert back == lam and sign * sign2 == 1
            assert t_infinity_basis(lam, cfg, extra_levels=1) == (sign, image)
            vec = {lam: 3}
            assert apply_T_infinity_inverse(apply_T_infinity(vec, cfg), cfg.shifted(L)) == vec


def test_t_infinity_inverse_rejects_wrong_index_map():
    cfg = GlobalConfig(3, 2, 0)
    with mutations.seeded("T_mod_NL"):
        with pytest.raises(ArithmeticError):
            for lam in partitions_up_to(3):
                t_infinity_inverse_basis(lam, cfg)


@pytest.mark.parametrize("N,L,charges", [(3, 2, (-1, 1)), (4, 2, (0, 1)), (3, 3, (-1, 0, 1))])
def test_multi_basis_round_trip(N, L, charges):
    for lam in fock_basis(charges, 3):
        vec, M = from_multi({lam: 2}, N, L)
        assert to_multi(vec, GlobalConfig(N, L, M)) == {lam: 2}
    assert from_multi({}, N, L) == ({}, None)


def _all_gens(N, max_mode):
    for i, r in product(range(N), range(max_mode + 1)):
        yield X("+", i, r)
        yield X("-", i, r)
        yield H(i, r)


@pytest.mark.parametrize("N,L,charges", [(3, 1, (0,)), (3, 2, (-1, 1))])
def test_charges_are_preserved(N, L, charges):
    model = AffineYangianAction(N, L)
    for lam in fock_basis(charges, 2):
        for gen in _all_gens(N, 1):
            for mu in model.act_multi(gen, {lam: 1}):
                assert mu.charges == charges


@pytest.mark.parametrize("N,L,charges", [(3, 1, (0,)), (3, 2, (-1, 1)), (4, 2, (0, 1))])
def test_raising_operators_kill_the_vacuum(N, L, charges):
    model = AffineYangianAction(N, L)
    vac = ChargedMultipartition(tuple(() for _ in charges), charges)
    for i, r in product(range(N), range(3)):
        assert model.act_multi(X("+", i, r), {vac: 1}) == {}


@pytest.mark.parametrize("N,L,charges", [(3, 1, (0,)), (3, 2, (-1, 1)), (4, 2, (0, 1))])
def test_level_identity(N, L, charges):
    model = AffineYangianAction(N, L, node0="tinf")
    for lam in fock_basis(charges, 4):
        total = {}
        for i in range(N):
            for mu, c in model.act_multi(H(i), {lam: 1}).items():
                total[mu] = total.get(mu, 0) + c
        assert {k: v for k, v in total.items() if v} == {lam: L}


@pytest.mark.parametrize("N,L,charges", [(3, 1, (0,)), (3, 2, (-1, 1))])
def test_node0_cartan_modes_on_vacuum(N, L, charges):
    model = AffineYangianAction(N, L)
    vac = ChargedMultipartition(tuple(() for _ in charges), charges)
    for r in (1, 2):
        assert set(model.act_multi(H(0, r), {vac: 1})) <= {vac}


def test_node0_examples_level_one():
    model = AffineYangianAction(3, 1, node0="tinf")
    assert node0_operator(X("-", 0), {(): 1}, 0, model) == {(1,): 1}
    for lam in fock_basis((0,), 3):
        w = len(addable_cells(lam, 0, 3)) - len(removable_cells(lam, 0, 3))
        assert model.act_multi(H(0), {lam: 1}) == ({lam: w} if w else {})


def test_node0_rejects_finite_node():
    model = AffineYangianAction(3, 1)
    with pytest.raises(ValueError):
        node0_operator(X("-", 1), {(): 1}, 0, model)


@pytest.mark.parametrize("N,L,charges", [(3, 1, (0,)), (3, 2, (-1, 1)), (4, 2, (0, 1)), (3, 3, (-1, 0, 1))])
def test_node0_wedge_path_matches_cells(N, L, charges):
    wedge = AffineYangianAction(N, L, node0="tinf")
    for lam in fock_basis(charges, 3 if L == 3 else 4):
        for kind in ("+", "-", CARTAN):
            gen = X(kind, 0) if kind != CARTAN else H(0)
            assert wedge.act_multi(gen, {lam: 1}) == chevalley_action(gen, {lam: 1}, N)


def test_sign_gauge_is_needed_without_multi_basis():
    """In the raw wedge basis the node-0 action differs from the cell formula by a sign."""
    model = AffineYangianAction(3, 2, node0="tinf")
    cfg = GlobalConfig(3, 2, -2)
    out = model.act(X("-", 0), {(): 1}, -2)
    assert out == {(3, 1): -1}
    assert to_multi(out, cfg) == {ChargedMultipartition(((), (1,)), (-2, 0)): 1}


def test_apply_word_order():
    model = AffineYangianAction(3, 1)
    # rightmost acts first: X^+_0 X^-_0 |0> = H_0 |0> + X^-_0 X^+_0 |0> = |0>
    assert model.apply_word([X("+", 0), X("-", 0)], {(): 1}, 0) == {(): 1}
    assert model.apply_word([X("-", 0), X("+", 0)], {(): 1}, 0) == {}
