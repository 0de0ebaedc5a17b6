"""Index calculus for finite and semi-infinite wedges.

The basis vector ``z^m w_b v_a`` of ``U = C[z^{+-1}] (x) W (x) V`` is
``u_k`` with ``k = a - N(b + L m)``.  A finite wedge basis vector is a
strictly decreasing tuple of such indices (a *word*); a basis vector of the
semi-infinite space ``F_M`` is stored as a partition ``lam`` via
``k_i = M + lam_i - i + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from .combinatorics import ChargedMultipartition, Partition, make_partition

Word = Tuple[int, ...]


@dataclass(frozen=True)
class GlobalConfig:
    N: int
    L: int
    M: int = 0

    def __post_init__(self):
        if self.N < 3:
            raise ValueError("N must be at least 3")
        if self.L < 1:
            raise ValueError("L must be at least 1")

    @property
    def NL(self) -> int:
        return self.N * self.L

    @property
    def s(self) -> int:
        """The residue of M in {0, ..., NL-1}."""
        return self.M % self.NL

    def length(self, level: int) -> int:
        """Truncation length ``n = s + level*NL``."""
        return self.s + level * self.NL

    def tail_exponent(self, level: int) -> int:
        """The ``m`` with ``M - (s + level*NL) = -m*NL``."""
        return -(self.M - self.length(level)) // self.NL

    def shifted(self, dM: int) -> "GlobalConfig":
        return GlobalConfig(self.N, self.L, self.M + dM)


def encode_index(m: int, b: int, a: int, N: int, L: int) -> int:
    return a - N * (b + L * m)


def decode_index(k: int, N: int, L: int) -> Tuple[int, int, int]:
    """Return ``(m, b, a)`` with ``a`` in 1..N, ``b`` in 1..L."""
    a = (k - 1) % N + 1
    q = (a - k) // N
    b = (q - 1) % L + 1
    return (q - b) // L, b, a


def z_exponent(k: int, N: int, L: int) -> int:
    return (-k) // (N * L)


def normal_order(ks: Sequence[int]) -> Optional[Tuple[int, Word]]:
    """Sort ``ks`` into strictly decreasing order.

    Returns ``None`` when an index repeats (the wedge vanishes), otherwise
    ``(sign, word)`` where sign is the parity of the sorting permutation.
    """
    n = len(ks)
    order = sorted(range(n), key=lambda i: -ks[i])
    word = tuple(ks[i] for i in order)
    for i in range(n - 1):
        if word[i] == word[i + 1]:
            return None
    seen = [False] * n
    parity = 0
    for i in range(n):
        if not seen[i]:
            j = i
            length = 0
            while not seen[j]:
                seen[j] = True
                j = order[j]
                length += 1
            parity += length - 1
    return (-1 if parity & 1 else 1), word


def partition_to_word(lam: Partition, M: int, n: int) -> Word:
    if n < len(lam):
        raise ValueError(f"length {n} is shorter than the partition {lam}")
    return tuple(M + (lam[i] if i < len(lam) else 0) - i for i in range(n))


def word_to_partition(word: Word, M: int) -> Optional[Partition]:
    """Partition of ``word ^ |M - n>``; ``None`` when the wedge vanishes."""
    n = len(word)
    if n and word[-1] <= M - n:
        return None
    return make_partition([k - M + i for i, k in enumerate(word)])


def extend_word(word: Word, M: int, n_new: int) -> Word:
    n = len(word)
    if n_new < n:
        raise ValueError("cannot shorten a word")
    if n and word[-1] <= M - n:
        raise ValueError(
            f"word ends at {word[-1]} <= {M - n}; appending the vacuum tail would repeat an index"
        )
    return tuple(word) + tuple(M - i for i in range(n, n_new))


@lru_cache(maxsize=4096)
def vacuum_exponents(N: int, L: int, M: int, n: int) -> Tuple[int, ...]:
    """``m_i^0`` for i = 1..n: z-exponents of the vacuum word of charge M."""
    NL = N * L
    return tuple((-(M - i)) // NL for i in range(n))


def word_degree(word: Word, N: int, L: int, M: int) -> int:
    m0 = vacuum_exponents(N, L, M, len(word))
    NL = N * L
    return sum(m0[i] - (-k) // NL for i, k in enumerate(word))


def degree(lam: Partition, cfg: GlobalConfig) -> int:
    return word_degree(partition_to_word(lam, cfg.M, len(lam)), cfg.N, cfg.L, cfg.M)


def required_level(lam: Partition, cfg: GlobalConfig) -> int:
    """Smallest truncation level that represents ``lam`` faithfully."""
    d = degree(lam, cfg)
    level = max(d, 1)
    while cfg.length(level) < len(lam):
        level += 1
    return level


def v_basis(cfg: GlobalConfig, n: int, d: int) -> List[Word]:
    """Words of length n with m_i(k) <= m_i^0 for all i and degree exactly d."""
    if d < 0:
        return []
    N, L, NL = cfg.N, cfg.L, cfg.NL
    m0 = vacuum_exponents(N, L, cfg.M, n)
    out: List[Word] = []
    word: List[int] = []

    def rec(i: int, budget: int, upper: Optional[int]):
        if i == n:
            if budget == 0:
                out.append(tuple(word))
            return
        lo = -NL * (m0[i] + 1) + 1
        hi = -NL * (m0[i] - budget)
        if upper is not None:
            hi = min(hi, upper - 1)
        for k in range(hi, lo - 1, -1):
            cost = m0[i] - (-k) // NL
            word.append(k)
            rec(i + 1, budget - cost, k)
            word.pop()

    rec(0, d, None)
    return out


# charge bijection ---------------------------------------------------------


def _color_index(a: int, m: int, N: int) -> int:
    """Per-color index: each color is read as its own level-1 wedge."""
    return a - N * (1 + m)


def _global_from_color(kc: int, b: int, N: int, L: int) -> int:
    a = (kc - 1) % N + 1
    m = (a - kc) // N - 1
    return encode_index(m, b, a, N, L)


def charge_decompose(lam: Partition, cfg: GlobalConfig) -> ChargedMultipartition:
    N, L, M = cfg.N, cfg.L, cfg.M
    word = partition_to_word(lam, M, len(lam) + cfg.NL)
    seqs: List[List[int]] = [[] for _ in range(L)]
    for k in word:
        m, b, a = decode_index(k, N, L)
        seqs[b - 1].append(_color_index(a, m, N))
    comps, charges = [], []
    for seq in seqs:
        c = seq[-1] + len(seq) - 1
        charges.append(c)
        comps.append(make_partition([kc - c + i for i, kc in enumerate(seq)]))
    return ChargedMultipartition(tuple(comps), tuple(charges))


def charge_compose(cmp: ChargedMultipartition, N: int, L: int) -> Tuple[Partition, int]:
    """Inverse of :func:`charge_decompose`; returns ``(lam, M)``."""
    if cmp.level != L:
        raise ValueError(f"expected {L} components, got {cmp.level}")
    M = cmp.total_charge
    occupied = set()
    theta = None
    top = None
    for b, (part, c) in enumerate(zip(cmp.components, cmp.charges), start=1):
        for i, p in enumerate(part):
            occupied.add(_global_from_color(c + p - i, b, N, L))
        vac_top = _global_from_color(c - len(part), b, N, L)
        theta = vac_top if theta is None else min(theta, vac_top)
        head = _global_from_color(c + (part[0] if part else 0), b, N, L)
        top = head if top is None else max(top, head)

    def is_occupied(g: int) -> bool:
        m, b, a = decode_index(g, N, L)
        kc = _color_index(a, m, N)
        part, c = cmp.components[b - 1], cmp.charges[b - 1]
        return kc <= c - len(part) or g in occupied

    word = [g for g in range(top, theta, -1) if is_occupied(g)]
    if theta != M - len(word):
        raise ValueError(f"charges {cmp.charges} are inconsistent with this normalization")
    lam = make_partition([k - M + i for i, k in enumerate(word)])
    return lam, M


def _color_parity(word: Word, N: int, L: int) -> int:
    """Parity of the stable sort of ``word`` by W-color."""
    seen = [0] * (L + 1)
    inversions = 0
    for k in word:
        b = decode_index(k, N, L)[1]
        inversions += sum(seen[b + 1:])
        seen[b] += 1
    return inversions % 2


def basis_sign(lam: Partition, cfg: GlobalConfig) -> int:
    """Sign ``e`` with ``|lam_multi, c> = e * u_k`` for the cell-combinatorial basis.

    Reading the wedge as a graded tensor product of its L single-color
    wedges means moving every factor of color 1 to the front, then color 2,
    and so on.  The sign of that reshuffle, normalized to +1 on the empty
    multipartition with the same charges, is the sign relating the two bases;
    the cell formulas hold with coefficient 1 only after it is applied.
    It is trivial for L = 1.
    """
    if cfg.L == 1:
        return 1
    cmp = charge_decompose(lam, cfg)
    empty = ChargedMultipartition(tuple(() for _ in cmp.components), cmp.charges)
    vac, _ = charge_compose(empty, cfg.N, cfg.L)
    n = cfg.length(0)
    while n < max(len(lam), len(vac)):
        n += cfg.NL
    p = _color_parity(partition_to_word(lam, cfg.M, n), cfg.N, cfg.L)
    p0 = _color_parity(partition_to_word(vac, cfg.M, n), cfg.N, cfg.L)
    return -1 if (p + p0) % 2 else 1
