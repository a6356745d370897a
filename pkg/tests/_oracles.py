"""Independent from-definition implementations used as test oracles.

Everything here recomputes from the raw order relation with plain Python
loops and never calls the library's optimized paths.
"""
from __future__ import annotations


def closure_floyd(n: int, edges) -> list[list[bool]]:
    leq = [[i == j for j in range(n)] for i in range(n)]
    for a, b in edges:
        leq[a][b] = True
    for k in range(n):
        for i in range(n):
            if leq[i][k]:
                row_k = leq[k]
                row_i = leq[i]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    return leq


def reduction_cubic(leq) -> set[tuple[int, int]]:
    n = len(leq)
    covers = set()
    for a in range(n):
        for b in range(n):
            if a == b or not leq[a][b]:
                continue
            if not any(c != a and c != b and leq[a][c] and leq[c][b] for c in range(n)):
                covers.add((a, b))
    return covers


def maximal_chains_between(leq, covers, a, b):
    up = {}
    for x, y in covers:
        up.setdefault(x, []).append(y)
    out = []

    def walk(path):
        v = path[-1]
        if v == b:
            out.append(tuple(path))
            return
        for w in sorted(up.get(v, [])):
            if leq[w][b]:
                walk(path + [w])

    walk([a])
    return out


def interval_graded(p) -> bool:
    """All maximal chains of every closed interval have one common length."""
    leq = p.leq.tolist()
    covers = list(p.covers)
    for a in range(p.n):
        for b in range(p.n):
            if not leq[a][b]:
                continue
            lengths = {len(c) for c in maximal_chains_between(leq, covers, a, b)}
            if len(lengths) != 1:
                return False
    return True


def join_from_leq(leq, a, b):
    n = len(leq)
    ubs = [c for c in range(n) if leq[a][c] and leq[b][c]]
    for c in ubs:
        if all(leq[c][d] for d in ubs):
            return c
    return None


def meet_from_leq(leq, a, b):
    n = len(leq)
    lbs = [c for c in range(n) if leq[c][a] and leq[c][b]]
    for c in lbs:
        if all(leq[d][c] for d in lbs):
            return c
    return None


def is_lattice_from_leq(leq) -> bool:
    n = len(leq)
    return all(join_from_leq(leq, a, b) is not None and
               meet_from_leq(leq, a, b) is not None
               for a in range(n) for b in range(n))


def distributive_from_leq(leq):
    n = len(leq)
    if not is_lattice_from_leq(leq):
        return None
    j = lambda a, b: join_from_leq(leq, a, b)
    m = lambda a, b: meet_from_leq(leq, a, b)
    return all(m(x, j(y, z)) == j(m(x, y), m(x, z))
               for x in range(n) for y in range(n) for z in range(n))


def modular_from_leq(leq):
    n = len(leq)
    if not is_lattice_from_leq(leq):
        return None
    j = lambda a, b: join_from_leq(leq, a, b)
    m = lambda a, b: meet_from_leq(leq, a, b)
    return all(j(m(x, z), m(y, z)) == m(j(m(x, z), y), z)
               for x in range(n) for y in range(n) for z in range(n))


def join_semidistributive_from_leq(leq):
    n = len(leq)
    if not is_lattice_from_leq(leq):
        return None
    j = lambda a, b: join_from_leq(leq, a, b)
    m = lambda a, b: meet_from_leq(leq, a, b)
    return all(j(x, y) != j(x, z) or j(x, y) == j(x, m(y, z))
               for x in range(n) for y in range(n) for z in range(n))


def lower_semimodular_from_leq(leq, covers):
    n = len(leq)
    if not is_lattice_from_leq(leq):
        return None
    cov = set(covers)
    j = lambda a, b: join_from_leq(leq, a, b)
    m = lambda a, b: meet_from_leq(leq, a, b)
    for p in range(n):
        for q in range(n):
            w = m(p, q)
            if (w, p) in cov and (w, q) in cov:
                v = j(p, q)
                if (p, v) not in cov or (q, v) not in cov:
                    return False
    return True


def count_multichains_brute(leq, m: int) -> int:
    n = len(leq)
    total = 0
    stack = [(x, 1) for x in range(n - 1, -1, -1)]
    while stack:
        last, depth = stack.pop()
        if depth == m:
            total += 1
            continue
        for nxt in range(n):
            if leq[last][nxt]:
                stack.append((nxt, depth + 1))
    return total


def anchored_chain_counts(p) -> list[int]:
    """c[k] = number of chains bottom = x0 < ... < xk = top, by explicit listing."""
    leq = p.leq.tolist()
    bot, top = p.bottom(), p.top()
    counts: dict[int, int] = {}

    def walk(chain):
        v = chain[-1]
        if v == top:
            counts[len(chain) - 1] = counts.get(len(chain) - 1, 0) + 1
            return
        for nxt in range(v + 1, p.n):
            if v != nxt and leq[v][nxt]:
                walk(chain + [nxt])

    if bot == top:
        return [1]
    walk([bot])
    degree = max(counts)
    return [counts.get(k, 0) for k in range(degree + 1)]
