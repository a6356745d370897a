"""Join/meet tables and exhaustive lattice-property checks."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import NotALattice, NotInjective
from .poset import Poset

# cells per vectorized block; keeps temporaries around a few MB
_BLOCK_CELLS = 1 << 22


@dataclass(frozen=True)
class LatticeTables:
    """Total join and meet tables of a lattice, indexed like its poset."""

    join: np.ndarray
    meet: np.ndarray


def _row_blocks(nrows: int, ncols: int, depth: int):
    step = max(1, _BLOCK_CELLS // max(1, ncols * depth))
    for s in range(0, nrows, step):
        yield s, min(nrows, s + step)


def _least_upper_bounds(leq: np.ndarray, rows: np.ndarray, cols: np.ndarray) -> np.ndarray:
    """join[i, j] over rows x cols; raises NotALattice at the first failing pair.

    Exploits the linear extension: the least element of any subset, when it
    exists, is the subset's smallest index.
    """
    n = leq.shape[0]
    up_r = leq[rows]
    up_c = leq[cols]
    out = np.empty((len(rows), len(cols)), dtype=np.int32)
    for s, e in _row_blocks(len(rows), len(cols), n):
        ub = up_r[s:e, None, :] & up_c[None, :, :]
        has = ub.any(axis=2)
        cand = ub.argmax(axis=2)
        bad = ~has | (ub & ~leq[cand]).any(axis=2)
        if bad.any():
            i, j = np.argwhere(bad)[0]
            raise NotALattice(int(rows[s + i]), int(cols[j]), "no-upper-bound-minimum")
        out[s:e] = cand
    return out


def _greatest_lower_bounds(leq: np.ndarray, rows: np.ndarray, cols: np.ndarray) -> np.ndarray:
    """meet[i, j] over rows x cols; the greatest element of a subset is its largest index."""
    n = leq.shape[0]
    down = np.ascontiguousarray(leq.T)
    dn_r = down[rows]
    dn_c = down[cols]
    out = np.empty((len(rows), len(cols)), dtype=np.int32)
    for s, e in _row_blocks(len(rows), len(cols), n):
        lb = dn_r[s:e, None, :] & dn_c[None, :, :]
        has = lb.any(axis=2)
        cand = n - 1 - lb[:, :, ::-1].argmax(axis=2)
        bad = ~has | (lb & ~down[cand]).any(axis=2)
        if bad.any():
            i, j = np.argwhere(bad)[0]
            raise NotALattice(int(rows[s + i]), int(cols[j]), "no-lower-bound-maximum")
        out[s:e] = cand
    return out


def lattice_tables(p: Poset) -> LatticeTables:
    """Compute total join/meet tables, or raise NotALattice with the first bad pair."""
    if p._tables is not None:
        if isinstance(p._tables, NotALattice):
            raise p._tables
        return p._tables
    idx = np.arange(p.n)
    try:
        join = _least_upper_bounds(p.leq, idx, idx)
        meet = _greatest_lower_bounds(p.leq, idx, idx)
    except NotALattice as exc:
        p._tables = exc
        raise
    join.setflags(write=False)
    meet.setflags(write=False)
    tables = LatticeTables(join=join, meet=meet)
    p._tables = tables
    return tables


def is_lattice(p: Poset) -> bool:
    try:
        lattice_tables(p)
    except NotALattice:
        return False
    return True


def is_distributive(p: Poset) -> bool:
    """Exhaustive check of x ^ (y v z) == (x ^ y) v (x ^ z) over all triples."""
    t = lattice_tables(p)
    j, m = t.join, t.meet
    n = p.n
    ar = np.arange(n)
    for s, e in _row_blocks(n, n, n):
        xb = ar[s:e]
        lhs = m[xb[:, None, None], j[None, :, :]]
        rhs = j[m[xb][:, :, None], m[xb][:, None, :]]
        if not np.array_equal(lhs, rhs):
            return False
    return True


def is_modular(p: Poset) -> bool:
    """Exhaustive check of (x ^ z) v (y ^ z) == ((x ^ z) v y) ^ z over all triples."""
    t = lattice_tables(p)
    j, m = t.join, t.meet
    n = p.n
    ar = np.arange(n)
    for s, e in _row_blocks(n, n, n):
        xb = ar[s:e]
        xz = m[xb][:, None, :]                      # (B, 1, n) = x ^ z
        lhs = j[xz, m[None, :, :]]                  # (x ^ z) v (y ^ z)
        step = j[xz, ar[None, :, None]]             # (x ^ z) v y
        rhs = m[step, ar[None, None, :]]
        if not np.array_equal(lhs, rhs):
            return False
    return True


def is_join_semidistributive(p: Poset) -> bool:
    """Exhaustive check: x v y == x v z implies x v y == x v (y ^ z)."""
    t = lattice_tables(p)
    j, m = t.join, t.meet
    n = p.n
    ar = np.arange(n)
    for s, e in _row_blocks(n, n, n):
        xb = ar[s:e]
        jy = j[xb][:, :, None]                      # x v y
        jz = j[xb][:, None, :]                      # x v z
        jmz = j[xb[:, None, None], m[None, :, :]]   # x v (y ^ z)
        if ((jy == jz) & (jy != jmz)).any():
            return False
    return True


def is_meet_semidistributive(p: Poset) -> bool:
    # single code path: the meet version is the join version on the dual
    return is_join_semidistributive(p.dual())


def _cover_matrix(p: Poset) -> np.ndarray:
    cov = np.zeros((p.n, p.n), dtype=bool)
    for a, b in p.covers:
        cov[a, b] = True
    return cov


def is_lower_semimodular(p: Poset) -> bool:
    """Exhaustive pair check: p ^ q covered by both implies both covered by p v q."""
    t = lattice_tables(p)
    j, m = t.join, t.meet
    n = p.n
    cov = _cover_matrix(p)
    ar = np.arange(n)
    premise = cov[m, ar[:, None]] & cov[m, ar[None, :]]
    conclusion = cov[ar[:, None], j] & cov[ar[None, :], j]
    return not (premise & ~conclusion).any()


def is_upper_semimodular(p: Poset) -> bool:
    return is_lower_semimodular(p.dual())


def is_sublattice(p: Poset, q: Poset, embedding: Sequence[int]) -> bool:
    """True iff the injective map p -> q preserves all pairwise joins and meets."""
    emb = np.asarray(list(embedding), dtype=np.int64)
    if emb.shape != (p.n,) or (emb < 0).any() or (emb >= q.n).any():
        raise ValueError("embedding must map every element of p into q")
    if len(set(emb.tolist())) != p.n:
        raise NotInjective("embedding is not injective")
    tp = lattice_tables(p)
    join_q = _least_upper_bounds(q.leq, emb, emb)
    meet_q = _greatest_lower_bounds(q.leq, emb, emb)
    return bool(np.array_equal(emb[tp.join], join_q)
                and np.array_equal(emb[tp.meet], meet_q))


def is_lattice_homomorphism(p: Poset, q: Poset, f: Sequence[int]) -> tuple[bool, bool]:
    """Check join/meet preservation of a total map p -> q.

    Returns (preserves_joins_and_meets, is_surjective).
    """
    fv = np.asarray(list(f), dtype=np.int64)
    if fv.shape != (p.n,) or (fv < 0).any() or (fv >= q.n).any():
        raise ValueError("f must map every element of p into q")
    tp = lattice_tables(p)
    join_q = _least_upper_bounds(q.leq, fv, fv)
    meet_q = _greatest_lower_bounds(q.leq, fv, fv)
    preserved = bool(np.array_equal(fv[tp.join], join_q)
                     and np.array_equal(fv[tp.meet], meet_q))
    surjective = len(set(fv.tolist())) == q.n
    return preserved, surjective
