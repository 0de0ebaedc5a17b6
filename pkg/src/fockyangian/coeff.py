"""Exact coefficients: rationals and polynomials in the parameters t and c.

Every coefficient in the library is either a :class:`fractions.Fraction`
(sampled mode, t and c specialized to rationals) or a :class:`ParamPoly`
(symbolic mode).  Both support ``+ - *`` with ints and Fractions, so the
operator code never needs to know which mode it runs in.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Tuple, Union

Scalar = Union[int, Fraction]
Exponent = Tuple[int, int]


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot convert {x!r} to an exact rational")


class ParamPoly:
    """Sparse polynomial in ``t`` and ``c`` with rational coefficients.

    Stored as a dict ``{(deg_t, deg_c): Fraction}`` with no zero entries, so
    equality of canonical maps is equality of polynomials.  Instances are
    treated as immutable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Dict[Exponent, Scalar] | None = None):
        clean = {}
        if terms:
            for e, v in terms.items():
                v = to_fraction(v)
                if v:
                    clean[(int(e[0]), int(e[1]))] = v
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Exponent, Fraction]) -> "ParamPoly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, value: Scalar) -> "ParamPoly":
        value = to_fraction(value)
        return cls._raw({(0, 0): value} if value else {})

    @property
    def terms(self) -> Dict[Exponent, Fraction]:
        return dict(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {(0, 0)}

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((0, 0), Fraction(0))

    def degree(self) -> int:
        return max((a + b for a, b in self._terms), default=-1)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, ParamPoly):
            if not other._terms:
                return self
            if not self._terms:
                return other
            out = dict(self._terms)
            for e, v in other._terms.items():
                s = out.get(e)
                if s is None:
                    out[e] = v
                else:
                    s += v
                    if s:
                        out[e] = s
                    else:
                        del out[e]
            return ParamPoly._raw(out)
        if isinstance(other, (int, Fraction)):
            if not other:
                return self
            return self + ParamPoly.const(other)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly._raw({e: -v for e, v in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (ParamPoly, int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, ParamPoly):
            out: Dict[Exponent, Fraction] = {}
            for (a1, b1), v1 in self._terms.items():
                for (a2, b2), v2 in other._terms.items():
                    e = (a1 + a2, b1 + b2)
                    s = out.get(e, 0) + v1 * v2
                    if s:
                        out[e] = s
                    else:
                        out.pop(e, None)
            return ParamPoly._raw(out)
        if isinstance(other, (int, Fraction)):
            if not other:
                return ParamPoly._raw({})
            if other == 1:
                return self
            return ParamPoly._raw({e: v * other for e, v in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = ParamPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    # comparison -----------------------------------------------------------

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, ParamPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({(0, 0): Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # evaluation / serialization ---------------------------------------------

    def specialize(self, t_val: Scalar, c_val: Scalar) -> Fraction:
        t_val, c_val = to_fraction(t_val), to_fraction(c_val)
        total = Fraction(0)
        for (a, b), v in self._terms.items():
            total += v * t_val**a * c_val**b
        return total

    def to_json(self) -> list:
        return [
            {"t": a, "c": b, "num": str(v.numerator), "den": str(v.denominator)}
            for (a, b), v in sorted(self._terms.items())
        ]

    @classmethod
    def from_json(cls, data: Iterable[dict]) -> "ParamPoly":
        terms: Dict[Exponent, Fraction] = {}
        for term in data:
            e = (int(term["t"]), int(term["c"]))
            terms[e] = terms.get(e, Fraction(0)) + Fraction(int(term["num"]), int(term["den"]))
        return cls(terms)

    def __repr__(self):
        return f"ParamPoly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (a, b), v in sorted(self._terms.items(), reverse=True):
            mono = "*".join(
                x for x in (_power("t", a), _power("c", b)) if x
            )
            if not mono:
                parts.append(str(v))
            elif v == 1:
                parts.append(mono)
            elif v == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{v}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _power(name: str, k: int) -> str:
    if k == 0:
        return ""
    return name if k == 1 else f"{name}^{k}"


T = ParamPoly._raw({(1, 0): Fraction(1)})
C = ParamPoly._raw({(0, 1): Fraction(1)})


def specialize(p, t_val: Scalar, c_val: Scalar) -> Fraction:
    """Evaluate a coefficient at ``t = t_val, c = c_val`` exactly."""
    if isinstance(p, ParamPoly):
        return p.specialize(t_val, c_val)
    return to_fraction(p)


def derived_params(N: int) -> Tuple[ParamPoly, ParamPoly]:
    """Return ``(hbar, beta)`` as polynomials in t, c.

    hbar = c and beta = t/2 - N c/4 + c/2.
    """
    hbar = C
    beta = T / 2 - C * Fraction(N, 4) + C / 2
    return hbar, beta


def coeff_to_json(x):
    """Serialize a coefficient: ParamPoly as a term list, rationals as a string."""
    if isinstance(x, ParamPoly):
        return x.to_json()
    return str(to_fraction(x))


def coeff_from_json(data):
    if isinstance(data, list):
        return ParamPoly.from_json(data)
    return to_fraction(data)


def parse_coeff(text: str) -> ParamPoly:
    """Parse a small linear expression such as ``"t/2 - 3c/4 + 1"``.

    Only sums of terms ``q``, ``q*t``, ``q*c`` (and ``qt``, ``t/2``) are
    accepted; it exists so CLI users can pass symbolic nu values.
    """
    import re

    s = text.replace(" ", "").replace("*", "")
    if not s:
        raise ValueError("empty coefficient")
    if s[0] not in "+-":
        s = "+" + s
    out = ParamPoly()
    for sign, body in re.findall(r"([+-])([^+-]+)", s):
        m = re.fullmatch(r"(\d+)?([tc])?(?:/(\d+))?", body)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise ValueError(f"cannot parse coefficient term {body!r} in {text!r}")
        num = int(m.group(1)) if m.group(1) else 1
        den = int(m.group(3)) if m.group(3) else 1
        v = Fraction(num, den) * (-1 if sign == "-" else 1)
        var = m.group(2)
        base = T if var == "t" else C if var == "c" else ParamPoly.const(1)
        out = out + base * v
    return out


class Parameters:
    """Values substituted for t and c: symbols (ParamPoly) or rationals."""

    __slots__ = ("t", "c")

    def __init__(self, t=None, c=None):
        self.t = T if t is None else (t if isinstance(t, ParamPoly) else to_fraction(t))
        self.c = C if c is None else (c if isinstance(c, ParamPoly) else to_fraction(c))

    @property
    def symbolic(self) -> bool:
        return isinstance(self.t, ParamPoly) or isinstance(self.c, ParamPoly)

    @property
    def hbar(self):
        from . import mutations

        return -self.c if mutations.active("hbar_negated") else self.c

    def beta(self, N: int):
        from . import mutations

        beta = self.t / 2 - self.c * Fraction(N, 4)
        if mutations.active("beta_wrong"):
            return beta
        return beta + self.c / 2

    def convert(self, p):
        """Bring a symbolic coefficient into this parameter mode."""
        if isinstance(p, ParamPoly) and not self.symbolic:
            return p.specialize(self.t, self.c)
        return p

    def key(self):
        return (str(self.t), str(self.c))

    def __repr__(self):
        return f"Parameters(t={self.t}, c={self.c})"
