"""The affine node: rotation rho, shift maps T and T_inf, and the full action.

Fock vectors are dicts ``{partition: coeff}`` inside a fixed ``F_M``; the
charge M travels alongside them.  ``T_inf`` maps ``F_M`` to ``F_{M+L}`` and
node-0 generators on ``F_M`` are ``T_inf o rho(X_0) o T_inf^{-1}`` with
``rho(X_0)`` acting on ``F_{M-L}`` through node ``N-1``.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from . import mutations
from .coeff import Parameters
from .combinatorics import ChargedMultipartition, chevalley_action
from .daha import add_to, combine
from .generators import CARTAN, MINUS, PLUS, GeneratorId
from .schurweyl import yangian_on_fock
from .wedge import (
    GlobalConfig,
    Word,
    basis_sign,
    charge_compose,
    charge_decompose,
    decode_index,
    encode_index,
    normal_order,
    partition_to_word,
    word_to_partition,
)

FockVector = Dict[tuple, object]


# rho ----------------------------------------------------------------------


def rho_expand(gen: GeneratorId, N: int, params: Parameters, power: int = 1) -> List[Tuple[object, GeneratorId]]:
    """``rho(gen)`` (or ``rho^2``) as ``[(coeff, generator)]``.

    rho(X_{i,r}) = sum_s C(r,s) gamma^{r-s} X_{i-1,s} with gamma = beta for
    i in {0, 1} and gamma = hbar/2 otherwise; H is treated the same way.
    """
    terms: List[Tuple[object, GeneratorId]] = [(1, gen)]
    for _ in range(power):
        nxt: Dict[GeneratorId, object] = {}
        for coeff, g in terms:
            i = g.node % N
            gamma = params.beta(N) if i in (0, 1) else params.hbar / 2
            for s in range(g.mode + 1):
                w = coeff * comb(g.mode, s) * gamma ** (g.mode - s) if g.mode - s else coeff * comb(g.mode, s)
                add_to(nxt, GeneratorId(g.kind, (i - 1) % N, s), w)
        terms = [(c, g) for g, c in nxt.items()]
    return sorted(terms, key=lambda cg: cg[1].mode)


# T on indices and finite wedges ---------------------------------------------


def t_index(k: int, N: int, L: int) -> int:
    """``z^m w_b v_a -> z^{m - delta_{a,N}} w_b v_{a+1}`` on indices."""
    if mutations.active("T_mod_NL"):
        return k + 1 + N * (L - 1) if k % (N * L) == 0 else k + 1
    m, b, a = decode_index(k, N, L)
    if a < N:
        return k + 1
    return encode_index(m - 1, b, 1, N, L)


def t_inverse_index(k: int, N: int, L: int) -> int:
    if mutations.active("T_mod_NL"):
        j = k - 1 - N * (L - 1)
        return j if j % (N * L) == 0 else k - 1
    m, b, a = decode_index(k, N, L)
    if a > 1:
        return k - 1
    return encode_index(m + 1, b, N, N, L)


def _signed(res):
    if res is None or not mutations.active("T_drop_sign"):
        return res
    return 1, res[1]


def apply_T(word: Sequence[int], N: int, L: int) -> Optional[Tuple[int, Word]]:
    return _signed(normal_order([t_index(k, N, L) for k in word]))


def apply_T_inverse(word: Sequence[int], N: int, L: int) -> Optional[Tuple[int, Word]]:
    return _signed(normal_order([t_inverse_index(k, N, L) for k in word]))


def v_LN(m: int, N: int, L: int) -> Word:
    """``z^m w_1 v_N ^ z^m w_2 v_N ^ ... ^ z^m w_L v_N``."""
    return tuple(-m * N * L - j * N for j in range(L))


def v_LN_minus(m: int, N: int, L: int) -> Word:
    """``v_{L,N-1}``: pairs ``z^m w_j v_N ^ z^m w_j v_{N-1}``."""
    out = []
    for j in range(L):
        out += [-m * N * L - j * N, -m * N * L - j * N - 1]
    return tuple(out)


# T_inf ----------------------------------------------------------------------


def _prefix_length(lam, cfg: GlobalConfig, extra_blocks: int = 0) -> int:
    level = 0
    while cfg.length(level) < len(lam) + extra_blocks * cfg.NL:
        level += 1
    return cfg.length(level)


def t_infinity_basis(lam, cfg: GlobalConfig, extra_levels: int = 0) -> Tuple[int, tuple]:
    """``T_inf |lam, M> = sign * |lam', M + L>``.

    ``T_inf(v ^ |-mNL>) = T(v ^ v_{L,N}) ^ |-mNL>``; ``extra_levels`` pads the
    prefix to test independence of the truncation.
    """
    N, L = cfg.N, cfg.L
    n = _prefix_length(lam, cfg) + extra_levels * cfg.NL
    m = (n - cfg.M) // cfg.NL
    word = partition_to_word(lam, cfg.M, n) + v_LN(m, N, L)
    res = apply_T(word, N, L)
    if res is None:
        raise ArithmeticError("T produced a repeated index")
    sign, new = res
    target = word_to_partition(new, cfg.M + L)
    if target is None:
        raise ArithmeticError("T(v ^ v_LN) meets the tail")
    return sign, target


def t_infinity_inverse_basis(lam, cfg: GlobalConfig, extra_levels: int = 0) -> Tuple[int, tuple]:
    """Inverse of :func:`t_infinity_basis`: ``F_M -> F_{M-L}``."""
    N, L = cfg.N, cfg.L
    n = _prefix_length(lam, cfg, extra_blocks=1) + extra_levels * cfg.NL
    m = (n - cfg.M) // cfg.NL
    res = apply_T_inverse(partition_to_word(lam, cfg.M, n), N, L)
    if res is None:
        raise ArithmeticError("T^{-1} produced a repeated index")
    sign, word = res
    if word[n - L:] != v_LN(m, N, L):
        raise ArithmeticError(f"{lam} at M={cfg.M} is not of the form T(v ^ v_LN) ^ |-mNL>")
    target = word_to_partition(word[: n - L], cfg.M - L)
    if target is None:
        raise ArithmeticError("T^{-1} image meets the tail")
    return sign, target


def apply_T_infinity(vec: FockVector, cfg: GlobalConfig) -> FockVector:
    out: FockVector = {}
    for lam, c in vec.items():
        sign, target = t_infinity_basis(lam, cfg)
        add_to(out, target, c * sign)
    return out


def apply_T_infinity_inverse(vec: FockVector, cfg: GlobalConfig) -> FockVector:
    out: FockVector = {}
    for lam, c in vec.items():
        sign, target = t_infinity_inverse_basis(lam, cfg)
        add_to(out, target, c * sign)
    return out


# basis change ---------------------------------------------------------------


def to_multi(vec: FockVector, cfg: GlobalConfig) -> Dict[ChargedMultipartition, object]:
    """Rewrite a vector of F_M in the basis ``|lam_multi, c> = sign * u_k``."""
    out: Dict[ChargedMultipartition, object] = {}
    for lam, c in vec.items():
        add_to(out, charge_decompose(lam, cfg), c * basis_sign(lam, cfg))
    return out


def from_multi(vec: Dict[ChargedMultipartition, object], N: int, L: int) -> Tuple[FockVector, Optional[int]]:
    """Inverse of :func:`to_multi`; returns ``(vector, M)`` (M is None if empty)."""
    out: FockVector = {}
    M = None
    for cmp, c in vec.items():
        lam, m = charge_compose(cmp, N, L)
        if M is not None and m != M:
            raise ValueError("vector mixes different total charges")
        M = m
        add_to(out, lam, c * basis_sign(lam, GlobalConfig(N, L, m)))
    return out, M


# the assembled action -------------------------------------------------------


class AffineYangianAction:
    """Operators of the affine Yangian on ``F_M = sum F(c)`` for all M.

    Results of generators on basis vectors are cached per ``(generator, M,
    partition)``; composite operators reuse the cache, so relation suites cost
    roughly one evaluation per (generator, basis vector).

    ``node0`` selects how mode-0 node-0 generators are computed: ``"cells"``
    (cell combinatorics) or ``"tinf"`` (conjugation by T_inf).  Positive
    modes at node 0 always go through T_inf.
    """

    def __init__(self, N: int, L: int, nu: Sequence = (), params: Optional[Parameters] = None, node0: str = "cells"):
        if node0 not in ("cells", "tinf"):
            raise ValueError("node0 must be 'cells' or 'tinf'")
        self.N, self.L = N, L
        self.params = params or Parameters()
        self.nu = tuple(self.params.convert(x) for x in nu) if nu else (0,) * L
        if len(self.nu) != L:
            raise ValueError(f"need {L} nu values")
        self.node0 = node0
        self.hbar = self.params.hbar
        self.beta = self.params.beta(N)
        self._cache: Dict[tuple, FockVector] = {}
        self.level_override: Optional[int] = None

    def config(self, M: int) -> GlobalConfig:
        return GlobalConfig(self.N, self.L, M)

    # public ---------------------------------------------------------------

    def act(self, gen: GeneratorId, vec: FockVector, M: int) -> FockVector:
        gen = GeneratorId(gen.kind, gen.node % self.N, gen.mode)
        out: FockVector = {}
        for lam, c in vec.items():
            if not c:
                continue
            for key, v in self._basis(gen, lam, M).items():
                add_to(out, key, c * v)
        return out

    def act_multi(self, gen: GeneratorId, vec: Dict[ChargedMultipartition, object]) -> Dict[ChargedMultipartition, object]:
        """Act on a vector in the basis ``|lam_multi, c>`` of the cell formulas."""
        out: Dict[ChargedMultipartition, object] = {}
        for cmp, c in vec.items():
            lam, M = charge_compose(cmp, self.N, self.L)
            image = self.act(gen, {lam: basis_sign(lam, self.config(M))}, M)
            for key, v in to_multi(image, self.config(M)).items():
                add_to(out, key, c * v)
        return out

    def apply_word(self, word: Sequence[GeneratorId], vec: FockVector, M: int) -> FockVector:
        """``word[0] word[1] ... word[-1]`` acting on vec (rightmost first)."""
        for g in reversed(word):
            vec = self.act(g, vec, M)
        return vec

    # internals ------------------------------------------------------------

    def _basis(self, gen: GeneratorId, lam, M: int) -> FockVector:
        key = (gen, M, lam)
        hit = self._cache.get(key)
        if hit is None:
            hit = self._compute(gen, lam, M)
            self._cache[key] = hit
        return hit

    def _compute(self, gen: GeneratorId, lam, M: int) -> FockVector:
        if gen.node == 0:
            if gen.mode == 0 and self.node0 == "cells":
                return self._cells(gen, lam, M)
            return self._node0(gen, lam, M)
        if gen.mode <= 1:
            return yangian_on_fock(gen, {lam: 1}, self.config(M), self.nu, self.params, level=self.level_override)
        return self._higher_mode(gen, lam, M)

    def _cells(self, gen, lam, M):
        cfg = self.config(M)
        start = {charge_decompose(lam, cfg): basis_sign(lam, cfg)}
        return from_multi(chevalley_action(gen, start, N=self.N), self.N, self.L)[0]

    def _node0(self, gen, lam, M):
        cfg = self.config(M)
        low = self.config(M - self.L)
        sign, pre = t_infinity_inverse_basis(lam, cfg)
        inner: FockVector = {}
        for coeff, g in rho_expand(gen, self.N, self.params):
            for key, v in self.act(g, {pre: sign}, M - self.L).items():
                add_to(inner, key, coeff * v)
        return apply_T_infinity(inner, low)

    def _higher_mode(self, gen, lam, M):
        i, r = gen.node, gen.mode
        v = {lam: 1}
        act = lambda g, x: self.act(g, x, M)
        if gen.kind == CARTAN:
            # H_{i,r} = [X^+_{i,r-1}, X^-_{i,1}]
            xp, xm = GeneratorId(PLUS, i, r - 1), GeneratorId(MINUS, i, 1)
            return combine((1, act(xp, act(xm, v))), (-1, act(xm, act(xp, v))))
        sgn = 1 if gen.kind == PLUS else -1
        prev = gen.with_mode(r - 1)
        h1, h0 = GeneratorId(CARTAN, i, 1), GeneratorId(CARTAN, i, 0)
        bracket = combine((1, act(h1, act(prev, v))), (-1, act(prev, act(h1, v))))
        anti = combine((1, act(h0, act(prev, v))), (1, act(prev, act(h0, v))))
        return combine((Fraction(sgn, 2), bracket), (-self.hbar / 2, anti))


def node0_operator(gen: GeneratorId, vec: FockVector, M: int, model: AffineYangianAction) -> FockVector:
    """Node-0 generator through T_inf, regardless of the model's node-0 mode."""
    if gen.node % model.N != 0:
        raise ValueError("node0_operator needs a node-0 generator")
    out: FockVector = {}
    for lam, c in vec.items():
        for key, v in model._node0(gen, lam, M).items():
            add_to(out, key, c * v)
    return out
