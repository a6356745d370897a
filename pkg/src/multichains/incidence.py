"""Incidence-algebra computations: zeta, Moebius, zeta polynomial, chain counts.

All counting is exact over Python integers; the zeta polynomial is carried in
the binomial basis (anchored chain counts), which evaluates exactly at
negative integers without rational arithmetic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BadMultiplicity, DegenerateBounds, NotBounded
from .poset import Poset


def binomial(t: int, k: int) -> int:
    """C(t, k) = t(t-1)...(t-k+1) / k! for any integer t and k >= 0, exactly."""
    if k < 0:
        raise ValueError("k must be non-negative")
    num = 1
    for i in range(k):
        num *= t - i
    return num // math.factorial(k)


def zeta_matrix(p: Poset) -> np.ndarray:
    """The order indicator as an integer matrix (object dtype, exact)."""
    return p.leq.astype(object)


def mobius_matrix(p: Poset) -> np.ndarray:
    """Moebius function by its defining recurrence; inverse of the zeta matrix."""
    n = p.n
    leq = p.leq
    mu = np.zeros((n, n), dtype=object)
    for a in range(n):
        mu[a, a] = 1
        row = leq[a]
        for b in range(a + 1, n):
            if not row[b]:
                continue
            zs = np.flatnonzero(row & leq[:, b])
            # zs is sorted and ends at b itself
            mu[a, b] = -sum(mu[a, z] for z in zs[:-1].tolist())
    return mu


def mobius(p: Poset) -> int:
    """mu(bottom, top)."""
    bot, top = p.bottom(), p.top()
    return int(mobius_matrix(p)[bot, top])


@dataclass(frozen=True)
class ChainProfile:
    """c[k] = number of chains bottom = x_0 < x_1 < ... < x_k = top.

    The vector has length(P) + 1 entries; it is the zeta polynomial in the
    binomial basis: Z(P, t) = sum_k c[k] * C(t, k).
    """

    c: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.c) - 1


def chain_profile(p: Poset) -> ChainProfile:
    """Count anchored strict chains by dynamic programming over the strict order."""
    bot, top = p.bottom(), p.top()
    if bot == top:
        return ChainProfile((1,))
    n = p.n
    leq = p.leq
    preds = [np.flatnonzero(leq[:, j] & (np.arange(n) != j)).tolist() for j in range(n)]
    ell = p.length()
    c = [0] * (ell + 1)
    v = [0] * n
    v[bot] = 1
    for k in range(1, ell + 1):
        w = [0] * n
        for j in range(n):
            w[j] = sum(v[i] for i in preds[j])
        c[k] = w[top]
        v = w
    return ChainProfile(tuple(c))


def zeta_polynomial_eval(p: Poset, t: int) -> int:
    """Evaluate the zeta polynomial at any integer t, exactly."""
    prof = chain_profile(p)
    return sum(ck * binomial(t, k) for k, ck in enumerate(prof.c))


def count_multichains(p: Poset, m: int) -> int:
    """Number of weakly increasing m-tuples, via the zeta polynomial at m + 1."""
    if m < 1:
        raise BadMultiplicity(f"multiplicity must be positive, got {m}")
    if not p.is_bounded():
        raise NotBounded("multichain counting requires a bounded poset")
    return zeta_polynomial_eval(p, m + 1)


def reduced_euler_characteristic(p: Poset) -> int:
    """Reduced Euler characteristic of the order complex of the proper part.

    Computed as the alternating sum over chain sizes of the open interval,
    with the empty face contributing -1; cross-checked against mu(bottom, top).
    """
    bot, top = p.bottom(), p.top()
    if bot == top:
        raise DegenerateBounds("proper part is undefined when bottom == top")
    n = p.n
    leq = p.leq
    proper = np.flatnonzero(leq[bot] & leq[:, top])[1:-1].tolist()
    pos = {x: i for i, x in enumerate(proper)}
    preds = [[pos[i] for i in proper if i != j and leq[i, j]] for j in proper]
    chi = -1
    sign = 1
    v = [1] * len(proper)
    while any(v):
        chi += sign * sum(v)
        sign = -sign
        v = [sum(v[i] for i in preds[jj]) for jj in range(len(proper))]
    assert chi == mobius(p), "alternating chain count must agree with the Moebius value"
    return chi
