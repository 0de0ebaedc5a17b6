"""Relation and identity suites over enumerated basis windows.

A :class:`RelationCheck` names one identity (a Yangian relation at fixed
nodes and modes, a DAHA relation family, or one of the structural checks
below) together with the window it is evaluated on.  :func:`run_check`
evaluates it on every basis vector of the window and reports the first
nonzero residual.

Structural check ids:

* ``DD``     divided differences against exact Laurent division
* ``STAB``   finite-node operators agree between truncation levels l, l+1
* ``DEG``    finite-node operators preserve the degree pieces V_{M,n}^d
* ``KEY``    T X (v ^ v_LN) ^ tail = T (X v ^ v_LN) ^ tail (and the T^2 form)
* ``CYC``    T_inf^{-1} X T_inf = rho(X), T_inf^{-2} X T_inf^2 = rho^2(X)
* ``LEVEL``  sum_i H_{i,0} = L on the window
* ``CELLX``  wedge-pipeline Chevalley generators equal the cell formulas
* ``TINF``   T_inf^{-1} T_inf = id, truncation independence, L=1 shift
* ``BIJ``    partition <-> charged multipartition round trip
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import mutations
from .affine import (
    AffineYangianAction,
    apply_T,
    from_multi,
    rho_expand,
    t_infinity_basis,
    t_infinity_inverse_basis,
    to_multi,
    v_LN,
    v_LN_minus,
)
from .coeff import ParamPoly, Parameters, coeff_from_json, coeff_to_json
from .combinatorics import ChargedMultipartition, chevalley_action, fock_basis, partitions_up_to
from .daha import DahaConfig, add_to, check_daha_relations, combine, divided_difference
from .generators import CARTAN, MINUS, PLUS, GeneratorId, cartan
from .schurweyl import finite_mode_operator, yangian_on_fock
from .wedge import (
    GlobalConfig,
    charge_compose,
    charge_decompose,
    normal_order,
    partition_to_word,
    required_level,
    vacuum_exponents,
    v_basis,
    word_degree,
    word_to_partition,
)

# generic points with denominators >= 7, away from c = 0
SAMPLE_POINTS = (
    (Fraction(3, 7), Fraction(5, 11)),
    (Fraction(-2, 9), Fraction(7, 13)),
    (Fraction(11, 17), Fraction(-4, 19)),
)

YANGIAN_IDS = tuple(f"Y{k}" for k in range(1, 13))
DAHA_IDS = ("H1", "H2", "H3", "H4")
STRUCTURAL_IDS = ("DD", "STAB", "DEG", "KEY", "CYC", "LEVEL", "CELLX", "TINF", "BIJ")
AFFINE_PAIRS = {"Y6": "shift", "Y7": "shift", "Y8": "shift", "Y9": "shift", "Y10": "swap", "Y11": "swap"}


@dataclass(frozen=True)
class RelationCheck:
    """One identity on one window; serializable and deterministic.

    ``nodes`` and ``modes`` are interpreted per relation: ``(i, j)`` and
    ``(r, s)`` for most Yangian relations, ``(r1, r2, s)`` for the
    ``a_ij = -1`` Serre relation.  ``level`` is the truncation level for
    ``DEG`` and the exponent bound for DAHA and ``DD`` checks.
    """

    id: str
    N: int = 3
    L: int = 1
    charges: Tuple[int, ...] = (0,)
    max_boxes: int = 2
    nodes: Tuple[int, ...] = ()
    modes: Tuple[int, ...] = ()
    sign: str = ""
    mode: str = "symbolic"
    level: int = 1
    nu: Tuple = ()

    def __post_init__(self):
        known = YANGIAN_IDS + DAHA_IDS + STRUCTURAL_IDS
        if self.id not in known:
            raise ValueError(f"unknown check id {self.id!r}")
        if self.mode not in ("symbolic", "sampled"):
            raise ValueError("mode must be 'symbolic' or 'sampled'")
        if self.id not in DAHA_IDS + ("DD", "BIJ") and len(self.charges) != self.L:
            raise ValueError(f"{self.id}: need {self.L} charges, got {self.charges}")

    def params(self) -> dict:
        out = {
            "N": self.N,
            "L": self.L,
            "charges": list(self.charges),
            "max_boxes": self.max_boxes,
            "nodes": list(self.nodes),
            "modes": list(self.modes),
            "sign": self.sign,
            "mode": self.mode,
            "level": self.level,
        }
        if self.nu:
            out["nu"] = [coeff_to_json(x) for x in self.nu]
        return out

    def to_json(self) -> dict:
        return {"id": self.id, "params": self.params()}

    @classmethod
    def from_json(cls, data: dict) -> "RelationCheck":
        p = data["params"]
        return cls(
            id=data["id"],
            N=p["N"],
            L=p["L"],
            charges=tuple(p["charges"]),
            max_boxes=p["max_boxes"],
            nodes=tuple(p["nodes"]),
            modes=tuple(p["modes"]),
            sign=p.get("sign", ""),
            mode=p.get("mode", "symbolic"),
            level=p.get("level", 1),
            nu=tuple(coeff_from_json(x) for x in p.get("nu", ())),
        )

    def model_key(self):
        return (self.N, self.L, self.nu, self.mode)


class CheckFailure(Exception):
    def __init__(self, detail: dict):
        super().__init__(detail.get("reason", "check failed"))
        self.detail = detail


# serialization of vectors ---------------------------------------------------


def multi_vector_json(vec: Dict[ChargedMultipartition, object]) -> list:
    """``[{components, charges, coeff}]`` sorted for byte-stable output."""
    rows = [dict(k.to_json(), coeff=coeff_to_json(v)) for k, v in vec.items() if v]
    rows.sort(key=lambda r: (r["charges"], [len(p) for p in r["components"]], r["components"]))
    return rows


def multi_vector_from_json(rows: Iterable[dict]) -> Dict[ChargedMultipartition, object]:
    out: Dict[ChargedMultipartition, object] = {}
    for row in rows:
        add_to(out, ChargedMultipartition.from_json(row), coeff_from_json(row["coeff"]))
    return out


def _partition_vector_json(vec) -> list:
    return [{"partition": list(k), "coeff": coeff_to_json(v)} for k, v in sorted(vec.items()) if v]


# relation builders ------------------------------------------------------------


Term = Tuple[object, Tuple[GeneratorId, ...]]


def _bracket(a: GeneratorId, b: GeneratorId, coeff=1) -> List[Term]:
    return [(coeff, (a, b)), (-coeff, (b, a))]


def _shift_relation(A, B, r: int, s: int, c_ab, c_ba) -> List[Term]:
    """``[A_{r+1}, B_s] - [A_r, B_{s+1}] - c_ab A_r B_s - c_ba B_s A_r``."""
    terms = _bracket(A(r + 1), B(s)) + _bracket(A(r), B(s + 1), -1)
    terms += [(-c_ab, (A(r), B(s))), (-c_ba, (B(s), A(r)))]
    return terms


def _nested(gens: Sequence[GeneratorId]) -> List[Term]:
    """Expand ``[g_0, [g_1, ..., [g_{k-1}, g_k]...]]`` into words."""
    terms: List[Term] = [(1, (gens[-1],))]
    for g in reversed(gens[:-1]):
        nxt: List[Term] = []
        for c, w in terms:
            nxt.append((c, (g,) + w))
            nxt.append((-c, w + (g,)))
        terms = nxt
    return terms


def relation_terms(rc: RelationCheck, hbar, beta) -> List[Term]:
    """``sum coeff * word`` whose vanishing is the relation ``rc``."""
    N = rc.N
    i, j = (rc.nodes + (None, None))[:2]
    rid = rc.id
    kind = rc.sign or PLUS

    def gen(k, node):
        return lambda m: GeneratorId(k, node % N, m)

    if rid == "Y1":
        r, s = rc.modes
        return _bracket(GeneratorId(CARTAN, i, r), GeneratorId(CARTAN, j, s))
    if rid == "Y2":
        r, s = rc.modes
        terms = _bracket(GeneratorId(PLUS, i, r), GeneratorId(MINUS, j, s))
        if i % N == j % N:
            terms.append((-1, (GeneratorId(CARTAN, i, r + s),)))
        return terms
    if rid == "Y3":
        (s,) = rc.modes[-1:]
        sgn = 1 if kind == PLUS else -1
        terms = _bracket(GeneratorId(CARTAN, i, 0), GeneratorId(kind, j, s))
        terms.append((-sgn * cartan(i, j, N), (GeneratorId(kind, j, s),)))
        return terms
    if rid in ("Y4", "Y5"):
        if _is_affine_pair(i, j, N):
            raise ValueError(f"{rid} does not apply to the pair ({i}, {j})")
        r, s = rc.modes
        sgn = 1 if kind == PLUS else -1
        c = hbar * Fraction(sgn * cartan(i, j, N), 2)
        A = gen(CARTAN if rid == "Y4" else kind, i)
        return _shift_relation(A, gen(kind, j), r, s, c, c)
    if rid in AFFINE_PAIRS:
        allowed = [(1, 0), (0, N - 1)] if AFFINE_PAIRS[rid] == "shift" else [(0, 1), (N - 1, 0)]
        if (i % N, j % N) not in allowed:
            raise ValueError(f"{rid} applies to the pairs {allowed}")
        r, s = rc.modes
        table = {
            "Y6": (CARTAN, PLUS, beta - hbar, -beta),
            "Y7": (CARTAN, MINUS, beta, hbar - beta),
            "Y8": (PLUS, PLUS, beta - hbar, -beta),
            "Y9": (MINUS, MINUS, beta, hbar - beta),
            "Y10": (CARTAN, PLUS, -beta, beta - hbar),
            "Y11": (CARTAN, MINUS, hbar - beta, beta),
        }
        ka, kb, c_ab, c_ba = table[rid]
        return _shift_relation(gen(ka, i), gen(kb, j), r, s, c_ab, c_ba)
    if rid == "Y12":
        a = cartan(i, j, N)
        if i % N == j % N:
            raise ValueError("Serre relations need i != j")
        *rs, s = rc.modes
        if len(rs) != 1 - a:
            raise ValueError(f"Y12 at a_ij={a} needs {1 - a} modes r plus s")
        terms: List[Term] = []
        for perm in sorted(set(permutations(rs))):
            mult = sum(1 for p in permutations(rs) if p == perm)
            chain = [GeneratorId(kind, i, r) for r in perm] + [GeneratorId(kind, j, s)]
            terms += [(c * mult, w) for c, w in _nested(chain)]
        return terms
    raise ValueError(f"{rid} is not a Yangian relation")


def _is_affine_pair(i: int, j: int, N: int) -> bool:
    return (i % N, j % N) in {(1, 0), (0, 1), (N - 1, 0), (0, N - 1)}


# check evaluation --------------------------------------------------------------


def _points(rc: RelationCheck) -> List[Parameters]:
    if rc.mode == "symbolic":
        return [Parameters()]
    return [Parameters(t, c) for t, c in SAMPLE_POINTS]


def _window(rc: RelationCheck):
    for cmp in fock_basis(rc.charges, rc.max_boxes):
        vec, M = from_multi({cmp: 1}, rc.N, rc.L)
        yield cmp, vec, M


def _fail(reason: str, **detail) -> CheckFailure:
    return CheckFailure(dict(reason=reason, **detail))


def _point_json(params: Parameters):
    if params.symbolic:
        return None
    return {"t": str(params.t), "c": str(params.c)}


class _Models:
    """Models shared between checks with the same configuration."""

    def __init__(self):
        self._models: Dict[tuple, AffineYangianAction] = {}

    def get(self, rc: RelationCheck, params: Parameters, node0: str = "cells") -> AffineYangianAction:
        key = (rc.N, rc.L, rc.nu, params.key(), node0, mutations.ACTIVE)
        model = self._models.get(key)
        if model is None:
            model = AffineYangianAction(rc.N, rc.L, rc.nu, params, node0=node0)
            self._models[key] = model
        return model


def _check_yangian(rc, models, params):
    model = models.get(rc, params)
    terms = relation_terms(rc, params.hbar, params.beta(rc.N))
    for cmp, vec, M in _window(rc):
        residual = combine(*((c, model.apply_word(w, vec, M)) for c, w in terms))
        if residual:
            raise _fail(
                "nonzero residual",
                vector=cmp.to_json(),
                residual=multi_vector_json(to_multi(residual, model.config(M))),
            )


def _check_daha(rc, models, params):
    nu = rc.nu or ()
    for n in range(1, rc.max_boxes + 1):
        cfg = DahaConfig(n, rc.L, nu or None)
        report = check_daha_relations(cfg, rc.level, params, only=rc.id)
        if report["status"] != "pass":
            raise _fail("nonzero residual", n=n, **report["counterexample"])


def laurent_quotient(num: Dict[Tuple[int, int], object], shift: Tuple[int, int] = (0, 0)):
    """Exact division of a Laurent polynomial in (z_1, z_2) by ``z_1 - z_2``.

    Long division in z_1 with coefficients in C[z_2^{+-1}]; raises
    ArithmeticError if the division is not exact.  Used as the oracle for
    divided differences.
    """
    if not num:
        return {}
    lo1 = min(e[0] for e in num)
    by_power: Dict[int, Dict[int, object]] = {}
    for (e1, e2), v in num.items():
        add_to(by_power.setdefault(e1 - lo1, {}), e2, v)
    top = max(by_power)
    quotient: Dict[Tuple[int, int], object] = {}
    carry: Dict[int, object] = {}
    # synthetic division by (z_1 - z_2): q_{k-1} = p_k + z_2 q_k
    for k in range(top, 0, -1):
        coeffs = dict(by_power.get(k, {}))
        for e2, v in carry.items():
            add_to(coeffs, e2 + 1, v)
        for e2, v in coeffs.items():
            add_to(quotient, (k - 1 + lo1, e2), v)
        carry = coeffs
    rem = dict(by_power.get(0, {}))
    for e2, v in carry.items():
        add_to(rem, e2 + 1, v)
    if rem:
        raise ArithmeticError("division by z_1 - z_2 is not exact")
    return quotient


def divided_difference_oracle(e1: int, e2: int) -> Dict[Tuple[int, int], object]:
    """``z_2 (z_1^e1 z_2^e2 - z_1^e2 z_2^e1) / (z_1 - z_2)`` by long division."""
    num: Dict[Tuple[int, int], object] = {}
    add_to(num, (e1, e2 + 1), 1)
    add_to(num, (e2, e1 + 1), -1)
    return laurent_quotient(num)


def _check_dd(rc, models, params):
    b = rc.level
    for e1, e2 in product(range(-b, b + 1), repeat=2):
        ours = divided_difference(1, 2, {((e1, e2), (1, 1)): 1})
        ours = {e: v for (e, _), v in ours.items()}
        oracle = divided_difference_oracle(e1, e2)
        if ours != oracle:
            raise _fail("mismatch with exact division", exponents=[e1, e2])


def _finite_gens(N: int, modes=(0, 1)) -> List[GeneratorId]:
    return [GeneratorId(k, i, r) for i in range(1, N) for r in modes for k in (PLUS, MINUS, CARTAN)]


def _check_stab(rc, models, params):
    nu = tuple(params.convert(x) for x in rc.nu) or (0,) * rc.L
    for cmp, vec, M in _window(rc):
        cfg = GlobalConfig(rc.N, rc.L, M)
        (lam,) = vec
        lvl = required_level(lam, cfg)
        for g in _finite_gens(rc.N):
            a = yangian_on_fock(g, vec, cfg, nu, params, level=lvl)
            for extra in (1, 2) if rc.mode == "symbolic" else (1,):
                b = yangian_on_fock(g, vec, cfg, nu, params, level=lvl + extra)
                if a != b:
                    raise _fail(
                        "truncation dependence",
                        vector=cmp.to_json(),
                        generator=g.label(),
                        levels=[lvl, lvl + extra],
                    )


def _check_deg(rc, models, params):
    nu = tuple(params.convert(x) for x in rc.nu) or (0,) * rc.L
    M = sum(rc.charges)
    cfg = GlobalConfig(rc.N, rc.L, M)
    n = cfg.length(rc.level)
    m0 = vacuum_exponents(rc.N, rc.L, M, n)
    from .wedge import z_exponent

    for d in range(rc.level + 1):
        for word in v_basis(cfg, n, d):
            for g in _finite_gens(rc.N):
                for out in finite_mode_operator(g, {word: 1}, rc.N, rc.L, nu, params):
                    ok = all(z_exponent(k, rc.N, rc.L) <= m for k, m in zip(out, m0))
                    if not ok or word_degree(out, rc.N, rc.L, M) != d:
                        raise _fail(
                            "left V^d", word=list(word), generator=g.label(), image=list(out), degree=d
                        )


def _key_sides(g, lam, cfg: GlobalConfig, nu, params, variant: int):
    N, L, M = cfg.N, cfg.L, cfg.M
    n = cfg.length(required_level(lam, cfg))
    m = (n - M) // cfg.NL
    v = partition_to_word(lam, M, n)
    block = v_LN(m, N, L) if variant == 1 else v_LN_minus(m, N, L)
    target = M + len(block)

    def finish(vec, out):
        # apply T (or T^2), then wedge with the tail |-mNL>
        for word, c in vec.items():
            sign = 1
            for _ in range(variant):
                sign_t, word = apply_T(word, N, L)
                sign *= sign_t
            lam2 = word_to_partition(word, target)
            if lam2 is not None:
                add_to(out, lam2, c * sign)

    lhs: dict = {}
    finish(finite_mode_operator(g, {v + block: 1}, N, L, nu, params), lhs)
    rhs: dict = {}
    for word, c in finite_mode_operator(g, {v: 1}, N, L, nu, params).items():
        res = normal_order(word + block)
        if res is not None:
            finish({res[1]: c * res[0]}, rhs)
    return lhs, rhs, target


def key_generators(N: int) -> List[Tuple[GeneratorId, int]]:
    """Generators of the key identity, with 1 for the v_LN form and 2 for v_{L,N-1}."""
    out = []
    for i in range(1, N):
        variant = 1 if i <= N - 2 else 2
        for g in (GeneratorId(PLUS, i, 0), GeneratorId(MINUS, i, 0), GeneratorId(CARTAN, i, 0)):
            out.append((g, variant))
        for k in (MINUS, PLUS, CARTAN):
            out.append((GeneratorId(k, i, 1), variant))
    return out


def _check_key(rc, models, params):
    nu = tuple(params.convert(x) for x in rc.nu) or (0,) * rc.L
    for cmp, vec, M in _window(rc):
        cfg = GlobalConfig(rc.N, rc.L, M)
        (lam,) = vec
        for g, variant in key_generators(rc.N):
            lhs, rhs, target = _key_sides(g, lam, cfg, nu, params, variant)
            if lhs != rhs:
                raise _fail(
                    "key identity fails",
                    vector=cmp.to_json(),
                    generator=g.label(),
                    variant="v_LN" if variant == 1 else "v_LN-1",
                    difference=_partition_vector_json(combine((1, lhs), (-1, rhs))),
                )


def _t_inf_power(vec, M, L, N, power):
    """``T_inf^power`` (power may be negative); returns (vector, new M)."""
    for _ in range(abs(power)):
        cfg = GlobalConfig(N, L, M)
        out: dict = {}
        for lam, c in vec.items():
            sgn, mu = t_infinity_basis(lam, cfg) if power > 0 else t_infinity_inverse_basis(lam, cfg)
            add_to(out, mu, c * sgn)
        vec, M = out, M + (L if power > 0 else -L)
    return vec, M


def _check_cyc(rc, models, params):
    model = models.get(rc, params)
    N, L = rc.N, rc.L
    gens = [GeneratorId(k, i, r) for i in range(1, N) for r in (0, 1) for k in (PLUS, MINUS, CARTAN)]
    for cmp, vec, M in _window(rc):
        for g in gens:
            power = 2 if g.node == 1 else 1
            up, Mu = _t_inf_power(vec, M, L, N, power)
            lhs, _ = _t_inf_power(model.act(g, up, Mu), Mu, L, N, -power)
            rhs: dict = {}
            for c, h in rho_expand(g, N, params, power=power):
                for key, v in model.act(h, vec, M).items():
                    add_to(rhs, key, c * v)
            if lhs != rhs:
                raise _fail(
                    "T_inf conjugation differs from rho",
                    vector=cmp.to_json(),
                    generator=g.label(),
                    power=power,
                    difference=multi_vector_json(to_multi(combine((1, lhs), (-1, rhs)), model.config(M))),
                )


def _check_level(rc, models, params):
    model = models.get(rc, params, node0="tinf")
    for cmp, vec, M in _window(rc):
        total = combine(*((1, model.act(GeneratorId(CARTAN, i, 0), vec, M)) for i in range(rc.N)))
        diff = combine((1, total), (-rc.L, vec))
        if diff:
            raise _fail("sum of H_i is not L", vector=cmp.to_json(), residual=_partition_vector_json(diff))


def _check_cellx(rc, models, params):
    model = models.get(rc, params, node0="tinf")
    gens = [GeneratorId(k, i, 0) for i in range(rc.N) for k in (PLUS, MINUS, CARTAN)]
    for cmp, vec, M in _window(rc):
        for g in gens:
            ours = to_multi(model.act(g, vec, M), model.config(M))
            cells = chevalley_action(g, {cmp: 1}, rc.N)
            if combine((1, ours), (-1, cells)):
                raise _fail(
                    "wedge action differs from cell formula",
                    vector=cmp.to_json(),
                    generator=g.label(),
                    wedge=multi_vector_json(ours),
                    cells=multi_vector_json(cells),
                )


def _check_tinf(rc, models, params):
    N, L = rc.N, rc.L
    for cmp, vec, M in _window(rc):
        (lam,) = vec
        cfg = GlobalConfig(N, L, M)
        sgn, mu = t_infinity_basis(lam, cfg)
        for extra in (1, 2):
            if t_infinity_basis(lam, cfg, extra) != (sgn, mu):
                raise _fail("T_inf depends on the truncation", vector=cmp.to_json(), extra_levels=extra)
        back = t_infinity_inverse_basis(mu, GlobalConfig(N, L, M + L))
        if (back[0] * sgn, back[1]) != (1, lam):
            raise _fail("T_inf^{-1} T_inf is not the identity", vector=cmp.to_json())
        if L == 1:
            # the global index shift u_{k+1}: same partition, charge M+1
            if (sgn, mu) != (1, lam):
                raise _fail("T_inf is not the global shift at L=1", vector=cmp.to_json())
        if charge_decompose(mu, GlobalConfig(N, L, M + L)).total_charge != M + L:
            raise _fail("T_inf image has the wrong charge", vector=cmp.to_json())


def _check_bij(rc, models, params):
    N, L = rc.N, rc.L
    for M in range(-N * L, N * L + 1):
        cfg = GlobalConfig(N, L, M)
        seen = set()
        for lam in partitions_up_to(rc.max_boxes):
            cmp = charge_decompose(lam, cfg)
            if cmp.total_charge != M:
                raise _fail("charges do not sum to M", partition=list(lam), M=M)
            if charge_compose(cmp, N, L) != (lam, M):
                raise _fail("compose(decompose(lam)) != lam", partition=list(lam), M=M)
            if cmp in seen:
                raise _fail("decompose is not injective", partition=list(lam), M=M)
            seen.add(cmp)


_RUNNERS = {
    "DD": _check_dd,
    "STAB": _check_stab,
    "DEG": _check_deg,
    "KEY": _check_key,
    "CYC": _check_cyc,
    "LEVEL": _check_level,
    "CELLX": _check_cellx,
    "TINF": _check_tinf,
    "BIJ": _check_bij,
}
for _rid in YANGIAN_IDS:
    _RUNNERS[_rid] = _check_yangian
for _rid in DAHA_IDS:
    _RUNNERS[_rid] = _check_daha


def run_check(rc: RelationCheck, models: Optional[_Models] = None, timing: bool = True) -> dict:
    """Evaluate one check; returns ``{id, params, status, counterexample?, millis}``.

    Status is ``pass``, ``fail`` (with the first counterexample) or
    ``error`` (an exception while evaluating, e.g. a malformed T_inf image).
    """
    models = models or _Models()
    start = time.perf_counter()
    report = {"id": rc.id, "params": rc.params(), "status": "pass"}
    try:
        for params in _points(rc):
            try:
                _RUNNERS[rc.id](rc, models, params)
            except CheckFailure as exc:
                detail = dict(exc.detail)
                point = _point_json(params)
                if point:
                    detail["point"] = point
                report["status"] = "fail"
                report["counterexample"] = detail
                break
    except (ArithmeticError, ValueError) as exc:
        report["status"] = "error"
        report["counterexample"] = {"reason": f"{type(exc).__name__}: {exc}"}
    report["millis"] = round((time.perf_counter() - start) * 1000) if timing else None
    return report


# profiles ---------------------------------------------------------------------


DEFAULT_CHARGES = {(3, 1): (0,), (3, 2): (-1, 1), (4, 1): (0,), (4, 2): (0, 1), (3, 3): (-1, 0, 1)}


def finite_relation_checks(N: int, L: int, charges, max_boxes: int, mode="symbolic", nu=(), max_mode: int = 1) -> List[RelationCheck]:
    """(Y1)-(Y5), (Y12) at the finite nodes, modes r, s <= max_mode."""
    base = dict(N=N, L=L, charges=tuple(charges), max_boxes=max_boxes, mode=mode, nu=tuple(nu))
    nodes = range(1, N)
    out = []
    for i, j in product(nodes, nodes):
        for r, s in product(range(max_mode + 1), repeat=2):
            out.append(RelationCheck("Y1", nodes=(i, j), modes=(r, s), **base))
            out.append(RelationCheck("Y2", nodes=(i, j), modes=(r, s), **base))
            for sign in (PLUS, MINUS):
                out.append(RelationCheck("Y4", nodes=(i, j), modes=(r, s), sign=sign, **base))
                out.append(RelationCheck("Y5", nodes=(i, j), modes=(r, s), sign=sign, **base))
        for s in range(max_mode + 1):
            for sign in (PLUS, MINUS):
                out.append(RelationCheck("Y3", nodes=(i, j), modes=(0, s), sign=sign, **base))
        if i != j:
            a = cartan(i, j, N)
            for sign in (PLUS, MINUS):
                for modes in product(range(max_mode + 1), repeat=2 - a):
                    if a == -1 and modes[0] > modes[1]:
                        continue  # symmetric in r1, r2
                    out.append(RelationCheck("Y12", nodes=(i, j), modes=modes, sign=sign, **base))
    return out


def affine_relation_checks(N: int, L: int, charges, max_boxes: int, mode="sampled", nu=(), max_mode: int = 1) -> List[RelationCheck]:
    """(Y6)-(Y11) at their node pairs, modes r, s <= max_mode."""
    base = dict(N=N, L=L, charges=tuple(charges), max_boxes=max_boxes, mode=mode, nu=tuple(nu))
    out = []
    for rid in ("Y6", "Y7", "Y8", "Y9", "Y10", "Y11"):
        pairs = [(1, 0), (0, N - 1)] if AFFINE_PAIRS[rid] == "shift" else [(0, 1), (N - 1, 0)]
        for (i, j), (r, s) in product(pairs, product(range(max_mode + 1), repeat=2)):
            out.append(RelationCheck(rid, nodes=(i, j), modes=(r, s), **base))
    return out


def node0_relation_checks(N: int, L: int, charges, max_boxes: int, mode="sampled", nu=(), max_mode: int = 1) -> List[RelationCheck]:
    """The remaining relations that involve node 0, modes r, s <= max_mode."""
    base = dict(N=N, L=L, charges=tuple(charges), max_boxes=max_boxes, mode=mode, nu=tuple(nu))
    out = []
    for i, j in product(range(N), repeat=2):
        if 0 not in (i, j):
            continue
        for r, s in product(range(max_mode + 1), repeat=2):
            out.append(RelationCheck("Y1", nodes=(i, j), modes=(r, s), **base))
            out.append(RelationCheck("Y2", nodes=(i, j), modes=(r, s), **base))
            if not _is_affine_pair(i, j, N):
                for sign in (PLUS, MINUS):
                    out.append(RelationCheck("Y4", nodes=(i, j), modes=(r, s), sign=sign, **base))
                    out.append(RelationCheck("Y5", nodes=(i, j), modes=(r, s), sign=sign, **base))
        for sign in (PLUS, MINUS):
            for s in range(max_mode + 1):
                out.append(RelationCheck("Y3", nodes=(i, j), modes=(0, s), sign=sign, **base))
    return out


def symbolic_nu(L: int) -> Tuple[ParamPoly, ...]:
    """A generic affine-linear symbolic nu used to exercise the DAHA checks."""
    from .coeff import C, T

    return tuple(T * Fraction(b, 3) + C * Fraction(2 * b - 1, 7) + Fraction(5, 11) for b in range(1, L + 1))


def profile_checks(profile: str = "quick", nu=()) -> List[RelationCheck]:
    """The checks of a profile.  ``quick`` is the acceptance set."""
    if profile not in ("quick", "full"):
        raise ValueError("profile must be 'quick' or 'full'")
    full = profile == "full"
    nu = tuple(nu)
    checks: List[RelationCheck] = []
    # cheap structural checks first so seeded faults are found fast
    checks.append(RelationCheck("DD", charges=(), level=4))
    for N, L in ((3, 1), (3, 2), (4, 2)):
        checks.append(RelationCheck("BIJ", N=N, L=L, charges=(), max_boxes=6))
    for L in (1, 2):
        for N in (3, 4):
            checks.append(RelationCheck("TINF", N=N, L=L, charges=DEFAULT_CHARGES[(N, L)], max_boxes=4))
    for N, L in ((3, 1), (3, 2)):
        c = DEFAULT_CHARGES[(N, L)]
        checks.append(RelationCheck("CELLX", N=N, L=L, charges=c, max_boxes=4, nu=nu))
        checks.append(RelationCheck("LEVEL", N=N, L=L, charges=c, max_boxes=4, nu=nu))
    for N, L in ((3, 1), (3, 2), (4, 2)):
        c = DEFAULT_CHARGES[(N, L)]
        checks.append(RelationCheck("KEY", N=N, L=L, charges=c, max_boxes=2, nu=nu))
        checks.append(RelationCheck("CYC", N=N, L=L, charges=c, max_boxes=2, nu=nu))
    for N, L in ((3, 1), (3, 2), (4, 2)):
        c = DEFAULT_CHARGES[(N, L)]
        checks += affine_relation_checks(N, L, c, 2, mode="sampled", nu=nu)
        checks += affine_relation_checks(N, L, c, 2, mode="symbolic", nu=nu)
    checks += node0_relation_checks(3, 2, DEFAULT_CHARGES[(3, 2)], 2, mode="symbolic", nu=nu)
    for N, L in ((3, 1), (3, 2)):
        c = DEFAULT_CHARGES[(N, L)]
        checks.append(RelationCheck("STAB", N=N, L=L, charges=c, max_boxes=3, nu=nu))
        checks.append(RelationCheck("DEG", N=N, L=L, charges=c, level=2 if L == 1 else 1, nu=nu))
    for N, L in ((3, 1), (3, 2)):
        checks += finite_relation_checks(N, L, DEFAULT_CHARGES[(N, L)], 3, nu=nu)
    checks += finite_relation_checks(3, 2, (0, 0), 3, nu=nu)
    for rid in DAHA_IDS:
        for L in (1, 2):
            checks.append(RelationCheck(rid, L=L, charges=(), max_boxes=3, level=2))
            checks.append(RelationCheck(rid, L=L, charges=(), max_boxes=3, level=2, nu=symbolic_nu(L)))
    if full:
        checks += node0_relation_checks(4, 1, DEFAULT_CHARGES[(4, 1)], 2, mode="symbolic", nu=nu)
        checks += node0_relation_checks(3, 3, DEFAULT_CHARGES[(3, 3)], 2, mode="sampled", nu=nu)
        checks += affine_relation_checks(3, 3, DEFAULT_CHARGES[(3, 3)], 2, mode="sampled", nu=nu)
        checks += affine_relation_checks(3, 2, DEFAULT_CHARGES[(3, 2)], 3, mode="sampled", nu=nu)
        checks += finite_relation_checks(4, 1, DEFAULT_CHARGES[(4, 1)], 3, nu=nu)
        for N, L in ((3, 3), (4, 1)):
            c = DEFAULT_CHARGES[(N, L)]
            checks.append(RelationCheck("CELLX", N=N, L=L, charges=c, max_boxes=4, nu=nu))
            checks.append(RelationCheck("KEY", N=N, L=L, charges=c, max_boxes=3, nu=nu))
            checks.append(RelationCheck("CYC", N=N, L=L, charges=c, max_boxes=3, nu=nu))
    return checks


def _run_group(payload):
    checks, active, timing, stop_on_failure = payload
    with mutations.seeded(*active):
        models = _Models()
        out = []
        for rc in checks:
            rep = run_check(rc, models, timing)
            out.append(rep)
            if stop_on_failure and rep["status"] != "pass":
                break
        return out


def run_checks(
    checks: Sequence[RelationCheck], jobs: int = 1, timing: bool = True, stop_on_failure: bool = False
) -> List[dict]:
    """Run checks, sharing operator caches between checks on the same model.

    With ``jobs > 1`` groups of checks with the same model run in worker
    processes; results come back in input order either way.
    """
    groups: Dict[tuple, List[int]] = {}
    for idx, rc in enumerate(checks):
        groups.setdefault(rc.model_key(), []).append(idx)
    order = list(groups.values())
    active = tuple(sorted(mutations.ACTIVE))
    payloads = [([checks[i] for i in idxs], active, timing, stop_on_failure) for idxs in order]
    if jobs > 1 and len(payloads) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_group, payloads))
    else:
        results = []
        for p in payloads:
            results.append(_run_group(p))
            if stop_on_failure and any(r["status"] != "pass" for r in results[-1]):
                break
    reports: List[Optional[dict]] = [None] * len(checks)
    for idxs, reps in zip(order, results):
        for i, rep in zip(idxs, reps):
            reports[i] = rep
    return [r for r in reports if r is not None]


def summarize(reports: Sequence[dict]) -> dict:
    counts: Dict[str, Dict[str, int]] = {}
    for rep in reports:
        per = counts.setdefault(rep["id"], {"pass": 0, "fail": 0, "error": 0})
        per[rep["status"]] += 1
    ok = all(r["status"] == "pass" for r in reports)
    return {"status": "pass" if ok else "fail", "total": len(reports), "by_id": dict(sorted(counts.items()))}


def run_all(profile: str = "quick", jobs: int = 1, timing: bool = True, nu=(), stop_on_failure: bool = False) -> dict:
    """Run a profile; returns ``{"checks": [...], "summary": {...}}``."""
    reports = run_checks(profile_checks(profile, nu), jobs=jobs, timing=timing, stop_on_failure=stop_on_failure)
    return {"checks": reports, "summary": summarize(reports)}


def mutation_sensitivity(profile: str = "quick", jobs: int = 1) -> Dict[str, Optional[dict]]:
    """For each catalogued mutation, the first check of the profile that fails.

    ``None`` for a mutation means the profile did not notice it.
    """
    out: Dict[str, Optional[dict]] = {}
    checks = profile_checks(profile)
    for name in mutations.CATALOG:
        with mutations.seeded(name):
            reports = run_checks(checks, jobs=jobs, timing=False, stop_on_failure=True)
        caught = next((r for r in reports if r["status"] != "pass"), None)
        out[name] = caught
    return out
