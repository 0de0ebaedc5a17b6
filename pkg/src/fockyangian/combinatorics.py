"""Partitions, charged multipartitions and the cell action of affine sl_N.

Partitions are plain tuples of positive, weakly decreasing ints.  Cells are
``(s, x, y)`` with 1-based component ``s``, row ``x`` and column ``y``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Dict, Iterator, List, Sequence, Tuple

from .generators import CARTAN, MINUS, PLUS, GeneratorId

Partition = Tuple[int, ...]
Cell = Tuple[int, int, int]


def is_partition(parts: Sequence[int]) -> bool:
    return all(p > 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def make_partition(parts: Sequence[int]) -> Partition:
    """Normalize ``parts`` (trailing zeros dropped) and validate it."""
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if not is_partition(parts):
        raise ValueError(f"{list(parts)} is not a partition")
    return parts


@lru_cache(maxsize=None)
def partitions(n: int) -> Tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if n == 0:
        return ((),)
    out = []

    def rec(remaining, largest, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(remaining, largest), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(n, n, [])
    return tuple(out)


def partitions_up_to(max_boxes: int) -> Iterator[Partition]:
    for n in range(max_boxes + 1):
        yield from partitions(n)


def multipartitions(n: int, L: int) -> Iterator[Tuple[Partition, ...]]:
    """All ``L``-tuples of partitions with ``n`` boxes in total."""
    if L == 1:
        for p in partitions(n):
            yield (p,)
        return
    for first in range(n, -1, -1):
        for head in partitions(first):
            for rest in multipartitions(n - first, L - 1):
                yield (head,) + rest


@dataclass(frozen=True)
class ChargedMultipartition:
    components: Tuple[Partition, ...]
    charges: Tuple[int, ...]

    def __post_init__(self):
        comps = tuple(make_partition(p) for p in self.components)
        charges = tuple(int(c) for c in self.charges)
        if len(comps) != len(charges) or not comps:
            raise ValueError("need as many charges as components, at least one")
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "charges", charges)

    @property
    def level(self) -> int:
        return len(self.components)

    @property
    def total_charge(self) -> int:
        return sum(self.charges)

    def size(self) -> int:
        return sum(sum(p) for p in self.components)

    def to_json(self) -> dict:
        return {
            "components": [list(p) for p in self.components],
            "charges": list(self.charges),
        }

    @classmethod
    def from_json(cls, data: dict) -> "ChargedMultipartition":
        return cls(tuple(tuple(p) for p in data["components"]), tuple(data["charges"]))

    def replace_component(self, s: int, part: Partition) -> "ChargedMultipartition":
        comps = list(self.components)
        comps[s - 1] = part
        return ChargedMultipartition(tuple(comps), self.charges)


def residue(cell: Cell, charges: Sequence[int], N: int) -> int:
    s, x, y = cell
    return (charges[s - 1] + y - x) % N


def _corners(part: Partition):
    """Addable and removable (row, col) corners of one partition."""
    add, rem = [], []
    rows = len(part)
    for x in range(1, rows + 2):
        cur = part[x - 1] if x <= rows else 0
        above = part[x - 2] if x >= 2 else None
        if above is None or above > cur:
            add.append((x, cur + 1))
        below = part[x] if x < rows else 0
        if x <= rows and cur > below:
            rem.append((x, cur))
    return add, rem


def addable_cells(lam: ChargedMultipartition, i: int, N: int) -> List[Cell]:
    out = []
    for s, part in enumerate(lam.components, start=1):
        for x, y in _corners(part)[0]:
            if (lam.charges[s - 1] + y - x) % N == i % N:
                out.append((s, x, y))
    return out


def removable_cells(lam: ChargedMultipartition, i: int, N: int) -> List[Cell]:
    out = []
    for s, part in enumerate(lam.components, start=1):
        for x, y in _corners(part)[1]:
            if (lam.charges[s - 1] + y - x) % N == i % N:
                out.append((s, x, y))
    return out


def add_cell(lam: ChargedMultipartition, cell: Cell) -> ChargedMultipartition:
    s, x, _ = cell
    parts = list(lam.components[s - 1])
    if x == len(parts) + 1:
        parts.append(1)
    else:
        parts[x - 1] += 1
    return lam.replace_component(s, tuple(parts))


def remove_cell(lam: ChargedMultipartition, cell: Cell) -> ChargedMultipartition:
    s, x, _ = cell
    parts = list(lam.components[s - 1])
    parts[x - 1] -= 1
    return lam.replace_component(s, make_partition(parts))


def chevalley_action(gen: GeneratorId, vec: Dict, N: int) -> Dict:
    """Mode-0 generator acting on a vector ``{ChargedMultipartition: coeff}``.

    X^+_i removes i-cells, X^-_i adds them, H_i multiplies by
    #addable - #removable.
    """
    if gen.mode != 0:
        raise ValueError("the cell action only covers mode 0")
    out: Dict = {}
    i = gen.node % N
    for lam, coeff in vec.items():
        if gen.kind == CARTAN:
            w = len(addable_cells(lam, i, N)) - len(removable_cells(lam, i, N))
            if w:
                _accumulate(out, lam, coeff * w)
        elif gen.kind == PLUS:
            for cell in removable_cells(lam, i, N):
                _accumulate(out, remove_cell(lam, cell), coeff)
        elif gen.kind == MINUS:
            for cell in addable_cells(lam, i, N):
                _accumulate(out, add_cell(lam, cell), coeff)
        else:
            raise ValueError(f"unknown generator kind {gen.kind!r}")
    return out


def _accumulate(out: Dict, key, coeff) -> None:
    s = out.get(key)
    s = coeff if s is None else s + coeff
    if s:
        out[key] = s
    else:
        out.pop(key, None)


def fock_basis(charges: Sequence[int], max_boxes: int) -> List[ChargedMultipartition]:
    """Basis of F(charges) up to ``max_boxes`` boxes, ordered by size then
    component-lex (components compared in reverse-lex partition order)."""
    charges = tuple(charges)
    L = len(charges)
    out = []
    for n in range(max_boxes + 1):
        for comps in multipartitions(n, L):
            out.append(ChargedMultipartition(comps, charges))
    return out


def charge_vectors(M: int, L: int, spread: int) -> Iterator[Tuple[int, ...]]:
    """Multicharges with sum ``M`` and entries within ``spread`` of M/L."""
    base = M // L
    for head in product(range(base - spread, base + spread + 1), repeat=L - 1):
        last = M - sum(head)
        yield head + (last,)
