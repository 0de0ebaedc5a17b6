"""Seeded faults used to check that the verification suites have teeth.

Production code consults :data:`ACTIVE` at a handful of points; it is empty
unless a test or ``verify --mutation`` switches one on.
"""

from __future__ import annotations

from contextlib import contextmanager

CATALOG = {
    "T_drop_sign": "apply_T ignores the reordering sign",
    "T_mod_NL": "apply_T branches on k = 0 mod NL instead of a = N",
    "beta_wrong": "beta loses its +c/2 term",
    "omega_minus_dropped": "X^-_{i,1} omits the hbar/4 omega correction",
    "omega_plus_sign": "X^+_{i,1} adds the omega correction with the wrong sign",
    "omega_H_square_dropped": "H_{i,1} omits the -2 H_i^2 term",
    "dunkl_r_sign": "the r_ij terms of the Dunkl operator enter with flipped sign",
    "y_exchange_sign": "y_k uses +(c/2) exchange terms with the opposite sign",
    "dd_upper_case_zero": "divided difference drops the m_i > m_j case",
    "hbar_negated": "the Yangian parameter hbar is taken to be -c",
}

ACTIVE: frozenset = frozenset()


@contextmanager
def seeded(*names: str):
    global ACTIVE
    unknown = set(names) - set(CATALOG)
    if unknown:
        raise KeyError(f"unknown mutations: {sorted(unknown)}")
    previous = ACTIVE
    ACTIVE = previous | frozenset(names)
    try:
        yield
    finally:
        ACTIVE = previous


def active(name: str) -> bool:
    return name in ACTIVE
