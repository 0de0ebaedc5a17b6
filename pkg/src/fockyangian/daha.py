"""The right action of the degenerate DAHA on C[z^{+-1}] (x) W^{(x)n}.

Basis labels are ``(exps, colors)``: the monomial ``z_1^{m_1}...z_n^{m_n}``
tensored with ``w_{b_1} (x) ... (x) w_{b_n}``.  Vectors are dicts from labels
to coefficients.  Positions are 1-based in the public functions, as in the
formulas; the generators act as

    s_i -> -K_{i,i+1} P_{i,i+1},  x_i -> z_i,  u_i -> -d_i^{(n)}.

Operator words are applied left to right (right module: w.(ab) = (w.a).b).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import mutations
from .coeff import Parameters

Label = Tuple[Tuple[int, ...], Tuple[int, ...]]
Vector = Dict[Label, object]

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class DahaConfig:
    n: int
    L: int
    nu: Tuple = field(default=())

    def __post_init__(self):
        nu = tuple(self.nu) if self.nu else (0,) * self.L
        if len(nu) != self.L:
            raise ValueError(f"need {self.L} nu values, got {len(nu)}")
        object.__setattr__(self, "nu", nu)

    def with_n(self, n: int) -> "DahaConfig":
        return DahaConfig(n, self.L, self.nu)


def add_to(out: Dict, key, coeff) -> None:
    s = out.get(key)
    s = coeff if s is None else s + coeff
    if s:
        out[key] = s
    else:
        out.pop(key, None)


def combine(*scaled: Tuple[object, Dict]) -> Dict:
    """Linear combination ``sum coeff * vector``."""
    out: Dict = {}
    for coeff, vec in scaled:
        if not coeff:
            continue
        for key, v in vec.items():
            add_to(out, key, coeff * v)
    return out


def is_zero(vec: Dict) -> bool:
    return not any(bool(v) for v in vec.values())


# elementary pieces --------------------------------------------------------


def quotient_terms(num: int, p: int, q: int, exps: Sequence[int]) -> List[Tuple[int, Tuple[int, ...]]]:
    """``z_num / (z_p - z_q) * (1 - K_pq)`` applied to ``z^exps`` (0-based).

    Returns ``[(sign, exps')]``.  Uses the telescoped geometric sum
    ``(z_p^A z_q^B - z_p^B z_q^A) / (z_p - z_q)``.
    """
    A, B = exps[p], exps[q]
    if A == B:
        return []
    if A > B:
        if mutations.active("dd_upper_case_zero"):
            return []
        sign, lo, span = 1, B, A - B
    else:
        sign, lo, span = -1, A, B - A
    out = []
    base = list(exps)
    for r in range(span):
        e = base[:]
        e[p] = lo + r
        e[q] = lo + span - 1 - r
        e[num] += 1
        out.append((sign, tuple(e)))
    return out


def divided_difference(i: int, j: int, vec: Vector) -> Vector:
    """``(z_j/(z_i - z_j)) (1 - K_ij)`` for positions ``i < j`` (1-based)."""
    if not i < j:
        raise ValueError("need i < j")
    out: Vector = {}
    for (exps, colors), coeff in vec.items():
        for sign, e in quotient_terms(j - 1, i - 1, j - 1, exps):
            add_to(out, (e, colors), coeff * sign)
    return out


def _swap(t: Tuple[int, ...], i: int, j: int) -> Tuple[int, ...]:
    lst = list(t)
    lst[i], lst[j] = lst[j], lst[i]
    return tuple(lst)


def _r_terms(first: int, second: int, colors: Tuple[int, ...]):
    """``r_{first,second}`` on ``w_colors`` (0-based, first < second)."""
    bi, bj = colors[first], colors[second]
    if bi == bj:
        return [(HALF, colors)]
    if bi > bj:
        return [(1, _swap(colors, first, second))]
    return []


def apply_r(i: int, j: int, vec: Vector) -> Vector:
    if not i < j:
        raise ValueError("need i < j")
    out: Vector = {}
    for (exps, colors), coeff in vec.items():
        for w, cols in _r_terms(i - 1, j - 1, colors):
            add_to(out, (exps, cols), coeff * w)
    return out


def apply_s(i: int, j: int, vec: Vector) -> Vector:
    """The transposition ``s_ij`` acting as ``-K_ij P_ij``."""
    out: Vector = {}
    a, b = i - 1, j - 1
    for (exps, colors), coeff in vec.items():
        add_to(out, (_swap(exps, a, b), _swap(colors, a, b)), -coeff)
    return out


def apply_x(i: int, vec: Vector, power: int = 1) -> Vector:
    out: Vector = {}
    for (exps, colors), coeff in vec.items():
        e = list(exps)
        e[i - 1] += power
        add_to(out, (tuple(e), colors), coeff)
    return out


def dunkl_terms(i: int, label: Label, cfg: DahaConfig, params: Parameters) -> Vector:
    """``d_i^{(n)}`` on a single basis label (0-based position ``i``)."""
    exps, colors = label
    n = len(exps)
    t, c = params.t, params.c
    r_sign = -1 if mutations.active("dunkl_r_sign") else 1
    inner: Vector = {}
    const = params.convert(cfg.nu[colors[i] - 1]) + Fraction(n, 2 * cfg.L) - HALF
    if const:
        inner[label] = const
    for j in range(n):
        if j == i:
            continue
        pcols = _swap(colors, i, j)
        if j < i:
            # z_i/(z_i - z_j) (1 - K_ji) P_ji - r_ji
            for sign, e in quotient_terms(i, i, j, exps):
                add_to(inner, (e, pcols), sign)
            for w, cols in _r_terms(j, i, colors):
                add_to(inner, (exps, cols), -w * r_sign)
        else:
            # z_j/(z_i - z_j) (1 - K_ij) P_ij + r_ij
            for sign, e in quotient_terms(j, i, j, exps):
                add_to(inner, (e, pcols), sign)
            for w, cols in _r_terms(i, j, colors):
                add_to(inner, (exps, cols), w * r_sign)
    out: Vector = {}
    for key, v in inner.items():
        add_to(out, key, -c * v)
    if exps[i]:
        add_to(out, label, t * exps[i])
    return out


def apply_dunkl(i: int, vec: Vector, cfg: DahaConfig, params: Parameters) -> Vector:
    out: Vector = {}
    for label, coeff in vec.items():
        for key, v in dunkl_terms(i - 1, label, cfg, params).items():
            add_to(out, key, coeff * v)
    return out


def apply_u(i: int, vec: Vector, cfg: DahaConfig, params: Parameters) -> Vector:
    return combine((-1, apply_dunkl(i, vec, cfg, params)))


def y_terms(i: int, label: Label, cfg: DahaConfig, params: Parameters) -> Vector:
    """``y_i^{(n)} = u_i + (c/2)(sum_{i<j} s_ij - sum_{j<i} s_ji)`` on a label (0-based i)."""
    exps, colors = label
    out: Vector = {}
    for key, v in dunkl_terms(i, label, cfg, params).items():
        add_to(out, key, -v)
    half_c = params.c * HALF
    if mutations.active("y_exchange_sign"):
        half_c = -half_c
    for j in range(len(exps)):
        if j == i:
            continue
        # s_ij -> -K_ij P_ij; enters with + for j > i and - for j < i
        sign = -1 if j > i else 1
        add_to(out, (_swap(exps, i, j), _swap(colors, i, j)), half_c * sign)
    return out


def apply_y(i: int, vec: Vector, cfg: DahaConfig, params: Parameters) -> Vector:
    out: Vector = {}
    for label, coeff in vec.items():
        for key, v in y_terms(i - 1, label, cfg, params).items():
            add_to(out, key, coeff * v)
    return out


# relation checker ---------------------------------------------------------

Op = Tuple  # ('s', i) | ('sij', i, j) | ('x', i) | ('xinv', i) | ('u', i)


def apply_word(word: Sequence[Op], vec: Vector, cfg: DahaConfig, params: Parameters) -> Vector:
    """Apply the generators of ``word`` left to right (right action)."""
    for op in word:
        kind = op[0]
        if kind == "s":
            vec = apply_s(op[1], op[1] + 1, vec)
        elif kind == "sij":
            vec = apply_s(op[1], op[2], vec)
        elif kind == "x":
            vec = apply_x(op[1], vec, 1)
        elif kind == "xinv":
            vec = apply_x(op[1], vec, -1)
        elif kind == "u":
            vec = apply_u(op[1], vec, cfg, params)
        else:
            raise ValueError(f"unknown DAHA generator {op!r}")
    return vec


def daha_relations(n: int, params: Parameters) -> List[Tuple[str, str, List[Tuple[object, Tuple[Op, ...]]]]]:
    """Relations (H1)-(H4) as ``(id, description, [(coeff, word)])`` with
    ``sum coeff * word = 0``."""
    t, c = params.t, params.c
    rels = []

    def rel(rid, text, terms):
        rels.append((rid, text, terms))

    for i in range(1, n):
        rel("H1", f"s{i}^2 = 1", [(1, (("s", i), ("s", i))), (-1, ())])
        for j in range(i + 2, n):
            rel("H1", f"s{i}s{j} = s{j}s{i}", [(1, (("s", i), ("s", j))), (-1, (("s", j), ("s", i)))])
        if i + 1 < n:
            rel(
                "H1",
                f"s{i}s{i+1}s{i} = s{i+1}s{i}s{i+1}",
                [(1, (("s", i), ("s", i + 1), ("s", i))), (-1, (("s", i + 1), ("s", i), ("s", i + 1)))],
            )
    for i in range(1, n + 1):
        rel("H2", f"x{i}x{i}^-1 = 1", [(1, (("x", i), ("xinv", i))), (-1, ())])
        rel("H2", f"x{i}^-1x{i} = 1", [(1, (("xinv", i), ("x", i))), (-1, ())])
        for j in range(i + 1, n + 1):
            rel("H2", f"x{i}x{j} = x{j}x{i}", [(1, (("x", i), ("x", j))), (-1, (("x", j), ("x", i)))])
    for i in range(1, n):
        rel("H2", f"s{i}x{i} = x{i+1}s{i}", [(1, (("s", i), ("x", i))), (-1, (("x", i + 1), ("s", i)))])
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                rel("H2", f"s{i}x{j} = x{j}s{i}", [(1, (("s", i), ("x", j))), (-1, (("x", j), ("s", i)))])
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            rel("H3", f"u{i}u{j} = u{j}u{i}", [(1, (("u", i), ("u", j))), (-1, (("u", j), ("u", i)))])
    for i in range(1, n):
        rel("H3", f"s{i}u{i} - u{i+1}s{i} = -c", [(1, (("s", i), ("u", i))), (-1, (("u", i + 1), ("s", i))), (c, ())])
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                rel("H3", f"s{i}u{j} = u{j}s{i}", [(1, (("s", i), ("u", j))), (-1, (("u", j), ("s", i)))])
    for i in range(1, n + 1):
        terms = [(1, (("u", i), ("x", i))), (-1, (("x", i), ("u", i))), (-t, (("x", i),))]
        for j in range(1, i):
            terms.append((-c, (("x", j), ("sij", j, i))))
        for j in range(i + 1, n + 1):
            terms.append((-c, (("x", i), ("sij", i, j))))
        rel("H4", f"[u{i},x{i}]", terms)
        for j in range(1, n + 1):
            if j == i:
                continue
            lo, hi = min(i, j), max(i, j)
            x_pos = i if i < j else j
            rel(
                "H4",
                f"[u{i},x{j}]",
                [(1, (("u", i), ("x", j))), (-1, (("x", j), ("u", i))), (c, (("x", x_pos), ("sij", lo, hi)))],
            )
    return rels


def labels(n: int, L: int, bound: int) -> Iterable[Label]:
    for exps in product(range(-bound, bound + 1), repeat=n):
        for colors in product(range(1, L + 1), repeat=n):
            yield exps, colors


def check_daha_relations(
    cfg: DahaConfig, bound: int, params: Optional[Parameters] = None, only: Optional[str] = None
) -> dict:
    """Check (H1)-(H4) (or just ``only``) on every label with ``|m_i| <= bound``.

    Returns ``{"status": "pass"|"fail", "checked": int, "relations": {...},
    "counterexample": ...}`` with the first failing relation, label and residual.
    """
    params = params or Parameters()
    rels = [r for r in daha_relations(cfg.n, params) if only is None or r[0] == only]
    report = {"status": "pass", "checked": 0, "relations": {}}
    for rid, _, _ in rels:
        report["relations"].setdefault(rid, "pass")
    for label in labels(cfg.n, cfg.L, bound):
        vec = {label: 1}
        for rid, text, terms in rels:
            residual = combine(*((coeff, apply_word(word, vec, cfg, params)) for coeff, word in terms))
            report["checked"] += 1
            if not is_zero(residual):
                report["status"] = "fail"
                report["relations"][rid] = "fail"
                report["counterexample"] = {
                    "relation": rid,
                    "instance": text,
                    "label": {"exps": list(label[0]), "colors": list(label[1])},
                    "residual": {repr(k): str(v) for k, v in residual.items()},
                }
                return report
    return report
