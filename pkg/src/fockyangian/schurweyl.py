"""Drinfeld's functor on finite wedges and the finite-node Yangian on F_M.

A finite wedge vector is a dict ``{word: coeff}`` with ``word`` a strictly
decreasing index tuple.  The wedge ``u_{k_1} ^ ... ^ u_{k_n}`` is the image of
``z^m (x) w_b (x) v_a`` in ``(C[z^{+-1}] (x) W^{(x)n}) (x)_{S_n} V^{(x)n}``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from . import mutations
from .coeff import Parameters
from .daha import DahaConfig, add_to, combine, y_terms
from .generators import CARTAN, MINUS, PLUS, GeneratorId
from .wedge import (
    GlobalConfig,
    Word,
    decode_index,
    degree,
    encode_index,
    normal_order,
    partition_to_word,
    required_level,
    word_to_partition,
)

WedgeVector = Dict[Word, object]


def to_wedge(exps, colors, vcolors, N: int, L: int) -> Optional[Tuple[int, Word]]:
    """Normal-ordered image of the mixed tensor ``z^exps w_colors v_vcolors``."""
    ks = [a - N * (b + L * m) for m, b, a in zip(exps, colors, vcolors)]
    return normal_order(ks)


def word_triples(word: Word, N: int, L: int):
    exps, colors, vcolors = [], [], []
    for k in word:
        m, b, a = decode_index(k, N, L)
        exps.append(m)
        colors.append(b)
        vcolors.append(a)
    return tuple(exps), tuple(colors), tuple(vcolors)


def chevalley_matrix(gen: GeneratorId, N: int) -> List[Tuple[int, int, int, int]]:
    """Chevalley generator as ``[(coeff, p, q, z_power)]`` meaning coeff * E_pq z^power.

    Node 0 uses X_0^+ = E_{N1} z, X_0^- = E_{1N} z^{-1}; its Cartan part on a
    finite wedge is E_NN - E_11 (no central term).
    """
    i = gen.node % N
    if i == 0:
        if gen.kind == PLUS:
            return [(1, N, 1, 1)]
        if gen.kind == MINUS:
            return [(1, 1, N, -1)]
        return [(1, N, N, 0), (-1, 1, 1, 0)]
    if gen.kind == PLUS:
        return [(1, i, i + 1, 0)]
    if gen.kind == MINUS:
        return [(1, i + 1, i, 0)]
    return [(1, i, i, 0), (-1, i + 1, i + 1, 0)]


def gl_current(p: int, q: int, r: int, vec: WedgeVector, N: int, L: int) -> WedgeVector:
    """``E_pq z^r`` acting as ``sum_k z_k^r (E_pq)_k`` on a finite wedge."""
    out: WedgeVector = {}
    for word, coeff in vec.items():
        for pos, k in enumerate(word):
            m, b, a = decode_index(k, N, L)
            if a != q:
                continue
            new = list(word)
            new[pos] = encode_index(m + r, b, p, N, L)
            res = normal_order(new)
            if res is not None:
                add_to(out, res[1], coeff * res[0])
    return out


def current_action(terms, vec: WedgeVector, N: int, L: int) -> WedgeVector:
    """Apply ``sum coeff * E_pq z^r`` given as ``[(coeff, p, q, r)]``."""
    return combine(*((c, gl_current(p, q, r, vec, N, L)) for c, p, q, r in terms))


def j_gl(p: int, q: int, vec: WedgeVector, N: int, L: int, nu, params: Parameters) -> WedgeVector:
    """``J(E_pq)``: ``m (x) v -> sum_k m y_k^{(n)} (x) (E_pq)_k v``."""
    out: WedgeVector = {}
    for word, coeff in vec.items():
        exps, colors, vcolors = word_triples(word, N, L)
        cfg = DahaConfig(len(word), L, nu)
        for pos in range(len(word)):
            if vcolors[pos] != q:
                continue
            new_v = list(vcolors)
            new_v[pos] = p
            for (e, w), v in y_terms(pos, (exps, colors), cfg, params).items():
                res = to_wedge(e, w, new_v, N, L)
                if res is not None:
                    add_to(out, res[1], coeff * v * res[0])
    return out


def j_action(gen: GeneratorId, vec: WedgeVector, N: int, L: int, nu, params: Parameters) -> WedgeVector:
    if not 1 <= gen.node <= N - 1:
        raise ValueError("J is only defined for finite nodes 1..N-1")
    return combine(
        *((c, j_gl(p, q, vec, N, L, nu, params)) for c, p, q, _ in chevalley_matrix(gen, N))
    )


def _quadratic(pairs, vec, N, L):
    """``sum sign * E_ab E_cd`` applied to ``vec`` for pairs ``(sign, (a,b), (c,d))``."""
    parts = []
    for sign, (a, b), (c, d) in pairs:
        inner = gl_current(c, d, 0, vec, N, L)
        parts.append((sign, gl_current(a, b, 0, inner, N, L)))
    return combine(*parts)


def omega_terms(gen: GeneratorId, N: int):
    """The quadratic correction with J(X) = X_{i,1} + (hbar/4) * omega."""
    i = gen.node
    pairs = []

    def sym(sign, x, y):
        pairs.append((sign, x, y))
        pairs.append((sign, y, x))

    if gen.kind == PLUS:
        for p in range(i + 1, N + 1):
            sym(1, (i, p), (p, i + 1))
        for p in range(1, i + 1):
            sym(-1, (i, p), (p, i + 1))
    elif gen.kind == MINUS:
        for p in range(i + 1, N + 1):
            sym(1, (i + 1, p), (p, i))
        for p in range(1, i + 1):
            sym(-1, (i + 1, p), (p, i))
    else:
        for p in range(i + 1, N + 1):
            sym(1, (i, p), (p, i))
        for p in range(1, i):
            sym(-1, (i, p), (p, i))
        for p in range(1, i + 1):
            sym(1, (i + 1, p), (p, i + 1))
        for p in range(i + 2, N + 1):
            sym(-1, (i + 1, p), (p, i + 1))
    return pairs


def omega(gen: GeneratorId, vec: WedgeVector, N: int, L: int) -> WedgeVector:
    out = _quadratic(omega_terms(gen, N), vec, N, L)
    if gen.kind == CARTAN and not mutations.active("omega_H_square_dropped"):
        h = chevalley_matrix(gen.with_mode(0), N)
        hh = current_action(h, current_action(h, vec, N, L), N, L)
        out = combine((1, out), (-2, hh))
    return out


def finite_mode_operator(gen: GeneratorId, vec: WedgeVector, N: int, L: int, nu, params: Parameters) -> WedgeVector:
    """Mode 0 and mode 1 generators at a finite node on a finite wedge."""
    if not 1 <= gen.node <= N - 1:
        raise ValueError("node 0 is not a finite node")
    if gen.mode == 0:
        return current_action(chevalley_matrix(gen, N), vec, N, L)
    if gen.mode != 1:
        raise ValueError("finite wedge operators are built for modes 0 and 1; higher modes are recursive")
    quarter_hbar = params.hbar * Fraction(1, 4)
    if gen.kind == MINUS and mutations.active("omega_minus_dropped"):
        quarter_hbar = 0
    if gen.kind == PLUS and mutations.active("omega_plus_sign"):
        quarter_hbar = -quarter_hbar
    j = j_action(gen.with_mode(0), vec, N, L, nu, params)
    return combine((1, j), (-quarter_hbar, omega(gen, vec, N, L)))


def fock_to_wedge(vec, cfg: GlobalConfig, level: int) -> WedgeVector:
    n = cfg.length(level)
    return {partition_to_word(lam, cfg.M, n): c for lam, c in vec.items()}


def wedge_to_fock(vec: WedgeVector, cfg: GlobalConfig) -> dict:
    """Wedge each word with the vacuum tail; words meeting the tail vanish."""
    out: dict = {}
    for word, c in vec.items():
        lam = word_to_partition(word, cfg.M)
        if lam is not None:
            add_to(out, lam, c)
    return out


def yangian_on_fock(gen: GeneratorId, vec, cfg: GlobalConfig, nu, params: Parameters, level: Optional[int] = None) -> dict:
    """Finite-node generator of mode 0 or 1 on a Fock vector ``{partition: coeff}``.

    Each basis vector is cut to ``n = s + level*NL`` factors, acted on in the
    finite wedge, and wedged back with the tail ``|M - n>``.  Without an
    explicit level the smallest admissible one, ``max(degree, 1)``, is used.
    """
    out: dict = {}
    for lam, c in vec.items():
        lvl = required_level(lam, cfg) if level is None else level
        if lvl < degree(lam, cfg) or cfg.length(lvl) < len(lam):
            raise ValueError(f"level {lvl} is too small for {lam} (degree {degree(lam, cfg)})")
        word = partition_to_word(lam, cfg.M, cfg.length(lvl))
        res = finite_mode_operator(gen, {word: 1}, cfg.N, cfg.L, nu, params)
        for key, v in wedge_to_fock(res, cfg).items():
            add_to(out, key, c * v)
    return out
