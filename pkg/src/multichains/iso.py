"""Exact poset isomorphism via invariant refinement plus backtracking."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import IsoBudgetExceeded, NotBijective
from .poset import Poset

DEFAULT_NODE_BUDGET = 10**7


@dataclass(frozen=True)
class IsoWitness:
    """Either an explicit index bijection or a refusal with the distinguishing invariant."""

    mapping: tuple[int, ...] | None
    refusal: str | None = None

    def __bool__(self) -> bool:
        return self.mapping is not None


def verify_order_isomorphism(p: Poset, q: Poset, f: Sequence[int]) -> bool:
    """Exhaustive two-sided check: a <= b iff f(a) <= f(b)."""
    fv = list(int(x) for x in f)
    if len(fv) != p.n or p.n != q.n or sorted(fv) != list(range(q.n)):
        raise NotBijective("map is not a bijection between the element sets")
    ix = np.asarray(fv)
    return bool(np.array_equal(p.leq, q.leq[np.ix_(ix, ix)]))


def _initial_invariants(p: Poset) -> list[tuple[int, ...]]:
    n = p.n
    up_deg = [0] * n
    down_deg = [0] * n
    for a, b in p.covers:
        up_deg[a] += 1
        down_deg[b] += 1
    upset = p.leq.sum(axis=1)
    downset = p.leq.sum(axis=0)
    h = p._height_vector()
    hd = p.dual()._height_vector()[::-1]  # depth below maximal elements
    return [(int(up_deg[v]), int(down_deg[v]), int(upset[v]), int(downset[v]),
             int(h[v]), int(hd[v])) for v in range(n)]


def _refine_colors(p: Poset, q: Poset) -> tuple[list[int], list[int]]:
    """Iterated neighborhood refinement over both posets with a shared palette."""
    cols = _initial_invariants(p) + _initial_invariants(q)
    palette: dict = {}
    colors = [palette.setdefault(c, len(palette)) for c in cols]
    up_p, down_p = _cover_adj(p)
    up_q, down_q = _cover_adj(q)
    ups = up_p + [[x + p.n for x in adj] for adj in up_q]
    downs = down_p + [[x + p.n for x in adj] for adj in down_q]
    while True:
        fresh: dict = {}
        new = []
        for v in range(len(colors)):
            sig = (colors[v],
                   tuple(sorted(colors[w] for w in ups[v])),
                   tuple(sorted(colors[w] for w in downs[v])))
            new.append(fresh.setdefault(sig, len(fresh)))
        if len(fresh) == len(set(colors)):
            return new[:p.n], new[p.n:]
        colors = new


def _cover_adj(p: Poset) -> tuple[list[list[int]], list[list[int]]]:
    up: list[list[int]] = [[] for _ in range(p.n)]
    down: list[list[int]] = [[] for _ in range(p.n)]
    for a, b in p.covers:
        up[a].append(b)
        down[b].append(a)
    return up, down


def are_isomorphic(p: Poset, q: Poset,
                   node_budget: int = DEFAULT_NODE_BUDGET) -> IsoWitness:
    """Decide isomorphism exactly; a returned mapping is always re-verified.

    Raises IsoBudgetExceeded (undecided, never a verdict) if backtracking
    spends more than `node_budget` assignments.
    """
    if p.n != q.n:
        return IsoWitness(None, f"size: {p.n} != {q.n}")
    if p.n == 0:
        return IsoWitness(())
    col_p, col_q = _refine_colors(p, q)
    if sorted(col_p) != sorted(col_q):
        return IsoWitness(None, "invariant refinement: rank/degree color profiles differ")

    candidates: dict[int, list[int]] = {}
    for w, c in enumerate(col_q):
        candidates.setdefault(c, []).append(w)
    # most-constrained first; ties broken by index for determinism
    order = sorted(range(p.n), key=lambda v: (len(candidates[col_p[v]]), col_p[v], v))

    leq_p, leq_q = p.leq, q.leq
    assigned_p: list[int] = []
    assigned_q: list[int] = []
    used = [False] * q.n
    mapping = [-1] * p.n
    nodes = 0

    def backtrack(depth: int) -> bool:
        nonlocal nodes
        if depth == p.n:
            return True
        v = order[depth]
        ap = np.asarray(assigned_p, dtype=np.intp)
        aq = np.asarray(assigned_q, dtype=np.intp)
        row_v = leq_p[v, ap]
        col_v = leq_p[ap, v]
        for w in candidates[col_p[v]]:
            if used[w]:
                continue
            nodes += 1
            if nodes > node_budget:
                raise IsoBudgetExceeded(
                    f"undecided: search exceeded {node_budget} nodes")
            if not (np.array_equal(row_v, leq_q[w, aq])
                    and np.array_equal(col_v, leq_q[aq, w])):
                continue
            mapping[v] = w
            used[w] = True
            assigned_p.append(v)
            assigned_q.append(w)
            if backtrack(depth + 1):
                return True
            assigned_p.pop()
            assigned_q.pop()
            used[w] = False
            mapping[v] = -1
        return False

    if backtrack(0):
        witness = tuple(mapping)
        if not verify_order_isomorphism(p, q, witness):
            raise AssertionError("search produced a map that fails verification")
        return IsoWitness(witness)
    return IsoWitness(None, "exhausted: no bijection consistent with the order relation")
