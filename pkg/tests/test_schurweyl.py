from itertools import product

import pytest

from fockyangian.affine import AffineYangianAction
from fockyangian.coeff import Parameters, T
from fockyangian.combinatorics import ChargedMultipartition, chevalley_action, fock_basis
from fockyangian.daha import combine
from fockyangian.generators import H, X
from fockyangian.schurweyl import (
    chevalley_matrix, current_action, finite_mode_operator, gl_current, j_action, to_wedge,
    word_triples, yangian_on_fock,
)
from fockyangian.wedge import GlobalConfig, charge_compose, decode_index, normal_order, partition_to_word

SYM = Parameters()


def test_to_wedge_examples():
    assert to_wedge((0,), (1,), (3,), 3, 2) == (1, (0,))
    assert to_wedge((0, 0), (1, 1), (3, 3), 3, 2) is None
    assert to_wedge((0, 0), (1, 2), (3, 1), 3, 2) == (1, (0, -5))
    assert to_wedge((0, 0), (2, 1), (1, 3), 3, 2) == (-1, (0, -5))


def test_balanced_tensor_is_well_defined():
    """x.s_i (x) v and x (x) s_i.v have the same image, with s_i = -K P on the left."""
    N, L = 3, 2
    for exps in product(range(-1, 2), repeat=3):
        for colors in product((1, 2), repeat=3):
            for vcolors in product((1, 3), repeat=3):
                for i in (0, 1):
                    def sw(t):
                        t = list(t)
                        t[i], t[i + 1] = t[i + 1], t[i]
                        return tuple(t)
                    left = to_wedge(sw(exps), sw(colors), vcolors, N, L)
                    right = to_wedge(exps, colors, sw(vcolors), N, L)
                    if left is None:
                        assert right is None
                    else:
                        assert right == (-left[0], left[1])


def test_word_triples_inverts_to_wedge():
    word = (4, 0, -3, -7)
    e, c, v = word_triples(word, 3, 2)
    assert to_wedge(e, c, v, 3, 2) == (1, word)


def test_current_examples():
    vac = {(0, -1, -2): 1}
    assert gl_current(1, 2, 0, vac, 3, 1) == {}
    for i in (1, 2):
        # weight count: vacuum word holds one index of each color a
        h = current_action(chevalley_matrix(H(i), 3), vac, 3, 1)
        assert h == {}
    word = (0, -1, -3)  # colors a = 3, 2, 3
    h1 = current_action(chevalley_matrix(H(1), 3), {word: 1}, 3, 1)
    h2 = current_action(chevalley_matrix(H(2), 3), {word: 1}, 3, 1)
    assert h1 == {word: -1}
    assert h2 == {word: -1}


def test_j_single_site():
    for m, b in product((-2, 0, 1, 3), (1,)):
        k = 2 - 3 * (b + m)  # z^m w_b v_2
        out = j_action(X("+", 1), {(k,): 1}, 3, 1, (0,), SYM)
        expected = {(1 - 3 * (b + m),): -m * T} if m else {}
        assert out == expected


def _euler_oracle(gen, word, N, L):
    """J(X) at c = 0, t = 1: sum_k (-m_k) (X)_k."""
    out = {}
    for coeff, p, q, _ in chevalley_matrix(gen, N):
        for pos, k in enumerate(word):
            m, b, a = decode_index(k, N, L)
            if a != q or m == 0:
                continue
            new = list(word)
            new[pos] = p - N * (b + L * m)
            res = normal_order(new)
            if res:
                out = combine((1, out), (-m * coeff * res[0], {res[1]: 1}))
    return out


def test_j_at_c_zero_is_degree_weighted_current():
    params = Parameters(1, 0)
    cfg = GlobalConfig(3, 2, 0)
    for lam in [(), (1,), (2, 1), (3,), (1, 1, 1)]:
        word = partition_to_word(lam, 0, cfg.length(1))
        for gen in (X("+", 1), X("-", 2), H(1)):
            assert j_action(gen, {word: 1}, 3, 2, (0, 0), params) == _euler_oracle(gen, word, 3, 2)


def test_mode_zero_is_current():
    word = partition_to_word((2, 1), 0, 6)
    for gen in (X("+", 1), X("-", 2), H(2)):
        assert finite_mode_operator(gen, {word: 1}, 3, 2, (0, 0), SYM) == current_action(
            chevalley_matrix(gen, 3), {word: 1}, 3, 2
        )


def test_node_zero_is_rejected():
    with pytest.raises(ValueError):
        finite_mode_operator(X("+", 0), {(0,): 1}, 3, 1, (0,), SYM)
    with pytest.raises(ValueError):
        j_action(H(0), {(0,): 1}, 3, 1, (0,), SYM)


def test_level_too_small_is_rejected():
    cfg = GlobalConfig(3, 1, 0)
    with pytest.raises(ValueError):
        yangian_on_fock(X("-", 1, 1), {(4,): 1}, cfg, (0,), SYM, level=1)


@pytest.mark.parametrize("N,L,charges", [(3, 1, (0,)), (3, 2, (-1, 1)), (4, 2, (0, 1))])
def test_mode_zero_on_fock_matches_cells(N, L, charges):
    model = AffineYangianAction(N, L)
    for lam in fock_basis(charges, 3):
        for i, kind in product(range(1, N), ("+", "-", "H")):
            gen = H(i) if kind == "H" else X(kind, i)
            assert model.act_multi(gen, {lam: 1}) == chevalley_action(gen, {lam: 1}, N)


@pytest.mark.parametrize("N,L,M", [(3, 1, 0), (3, 2, 0), (3, 2, 1)])
def test_truncation_levels_agree(N, L, M):
    cfg = GlobalConfig(N, L, M)
    for lam in [(), (1,), (2,), (1, 1), (2, 1)]:
        for i, kind in product(range(1, N), ("+", "-", "H")):
            gen = (H(i) if kind == "H" else X(kind, i)).with_mode(1)
            lvl = max(1, -(-len(lam) // cfg.NL))
            a = yangian_on_fock(gen, {lam: 1}, cfg, (), SYM, level=lvl + 1)
            b = yangian_on_fock(gen, {lam: 1}, cfg, (), SYM, level=lvl + 2)
            assert a == b


def test_h1_vacuum_eigenvector():
    model = AffineYangianAction(3, 2)
    vac, M = charge_compose(ChargedMultipartition(((), ()), (-1, 1)), 3, 2)
    for i in (1, 2):
        out = model.act(H(i, 1), {vac: 1}, M)
        assert set(out) <= {vac}


def _bracket(model, a, b, vec, M):
    return combine((1, model.apply_word([a, b], vec, M)), (-1, model.apply_word([b, a], vec, M)))


@pytest.mark.parametrize("N,L,M", [(3, 1, 0), (3, 2, 0)])
def test_cartan_modes_from_any_splitting(N, L, M):
    model = AffineYangianAction(N, L)
    for lam in [(), (1,), (2,), (1, 1), (2, 1)]:
        vec = {lam: 1}
        for i in range(1, N):
            for total in range(1, 4):
                results = [
                    _bracket(model, X("+", i, r), X("-", i, total - r), vec, M) for r in range(total + 1)
                ]
                h = model.act(H(i, total), vec, M)
                assert all(res == h for res in results)


def test_box_count_shifts_and_cartans_commute():
    model = AffineYangianAction(3, 2)
    charges = (-1, 1)
    for lam in fock_basis(charges, 2):
        for i in (1, 2):
            for r in (0, 1):
                for kind, shift in (("+", -1), ("-", 1)):
                    for mu in model.act_multi(X(kind, i, r), {lam: 1}):
                        assert mu.size() == lam.size() + shift
                        assert mu.charges == charges
                for mu in model.act_multi(H(i, r), {lam: 1}):
                    assert mu.size() == lam.size()
    for lam in fock_basis(charges, 2):
        for i, j, r, s in product((1, 2), (1, 2), (0, 1), (0, 1)):
            a = model.act_multi(H(i, r), model.act_multi(H(j, s), {lam: 1}))
            b = model.act_multi(H(j, s), model.act_multi(H(i, r), {lam: 1}))
            assert a == b
