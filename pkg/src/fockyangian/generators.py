"""Names of affine Yangian generators and the affine Cartan matrix."""

from __future__ import annotations

import re
from typing import NamedTuple

PLUS, MINUS, CARTAN = "+", "-", "H"
KINDS = (PLUS, MINUS, CARTAN)


class GeneratorId(NamedTuple):
    """``X^+_{node,mode}``, ``X^-_{node,mode}`` or ``H_{node,mode}``."""

    kind: str
    node: int
    mode: int = 0

    def label(self) -> str:
        head = "H" if self.kind == CARTAN else "X" + self.kind
        return f"{head} i={self.node} r={self.mode}"

    def with_mode(self, mode: int) -> "GeneratorId":
        return GeneratorId(self.kind, self.node, mode)

    def with_node(self, node: int) -> "GeneratorId":
        return GeneratorId(self.kind, node, self.mode)


def X(sign: str, node: int, mode: int = 0) -> GeneratorId:
    return GeneratorId(sign, node, mode)


def H(node: int, mode: int = 0) -> GeneratorId:
    return GeneratorId(CARTAN, node, mode)


_GEN_RE = re.compile(r"^\s*(X\+|X-|H)\s+i\s*=\s*(-?\d+)(?:\s+r\s*=\s*(\d+))?\s*$")


def parse_generator(text: str, N: int | None = None) -> GeneratorId:
    """Parse strings like ``"X+ i=1 r=1"`` or ``"H i=0"``."""
    m = _GEN_RE.match(text)
    if not m:
        raise ValueError(f"bad generator {text!r}; expected e.g. 'X+ i=1 r=0'")
    head, node, mode = m.groups()
    kind = CARTAN if head == "H" else head[1]
    node = int(node)
    if N is not None:
        node %= N
    return GeneratorId(kind, node, int(mode or 0))


def cartan(i: int, j: int, N: int) -> int:
    """Entry a_ij of the affine Cartan matrix of type A_{N-1}^{(1)}, N >= 3."""
    i %= N
    j %= N
    if i == j:
        return 2
    if (i - j) % N in (1, N - 1):
        return -1
    return 0
