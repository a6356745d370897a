"""Finite posets over dense boolean order matrices, indexed by a linear extension."""
from __future__ import annotations

import heapq
from typing import Iterable, Sequence

import numpy as np

from .errors import CycleDetected, NotBounded, NotComparable, SizeCap

#: Default guard for constructors whose element count is a product of sizes.
DEFAULT_ELEMENT_CAP = 10**6

# float32 matmul is exact for path counts below 2**24 and uses BLAS.
_MATMUL_DTYPE = np.float32


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


def _toposort(n: int, edges: Iterable[tuple[int, int]]) -> list[int]:
    """Lexicographically smallest topological order of 0..n-1 under `edges`."""
    succ: list[list[int]] = [[] for _ in range(n)]
    indeg = [0] * n
    for a, b in edges:
        succ[a].append(b)
        indeg[b] += 1
    heap = [v for v in range(n) if indeg[v] == 0]
    heapq.heapify(heap)
    order: list[int] = []
    while heap:
        v = heapq.heappop(heap)
        order.append(v)
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    if len(order) != n:
        raise CycleDetected("edge relation contains a directed cycle")
    return order


def transitive_reduction(leq: np.ndarray) -> list[tuple[int, int]]:
    """Cover pairs of a (transitively closed) order matrix, in lexicographic order."""
    n = leq.shape[0]
    if n <= 1:
        return []
    lt = leq & ~np.eye(n, dtype=bool)
    f = lt.astype(_MATMUL_DTYPE)
    between = (f @ f) > 0.5
    red = lt & ~between
    return [(int(a), int(b)) for a, b in np.argwhere(red)]


class Poset:
    """Immutable finite poset.

    Elements are the indices 0..n-1, stored in a linear extension: a <= b in
    the order implies a <= b as integers.  The relation is a dense boolean
    matrix; the cover relation (transitive reduction) is derived lazily and
    cached.  Instances never mutate after construction, so they are safe for
    concurrent shared reads.

    The raw constructor trusts its input to be transitively closed; use
    :meth:`from_covers` or :meth:`from_leq` for unvalidated data.
    """

    __slots__ = ("_leq", "_covers", "_labels", "_up_lists", "_heights", "_tables")

    def __init__(self, leq, covers=None, labels=None):
        leq = np.ascontiguousarray(leq, dtype=bool)
        if leq.ndim != 2 or leq.shape[0] != leq.shape[1]:
            raise ValueError("leq must be a square boolean matrix")
        n = leq.shape[0]
        if not leq[np.diag_indices(n)].all():
            raise ValueError("leq must be reflexive")
        if n > 1 and np.tril(leq, -1).any():
            raise ValueError("index order must be a linear extension")
        self._leq = _freeze(leq)
        self._covers = None if covers is None else tuple((int(a), int(b)) for a, b in covers)
        self._labels = None if labels is None else tuple(str(x) for x in labels)
        self._up_lists = None
        self._heights = None
        self._tables = None

    # -- construction ------------------------------------------------------

    @classmethod
    def from_covers(cls, n: int, edges: Iterable[tuple[int, int]],
                    labels: Sequence[str] | None = None) -> "Poset":
        """Build a poset from directed edges a -> b meaning a < b.

        Edges may contain redundant (non-cover) pairs; they are absorbed by
        transitive reduction.  Elements are re-indexed into the
        lexicographically smallest linear extension.
        """
        edges = [(int(a), int(b)) for a, b in edges]
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge ({a}, {b}) out of range for n={n}")
            if a == b:
                raise CycleDetected(f"self-loop at element {a}")
        if labels is not None and len(labels) != n:
            raise ValueError("labels must have one entry per element")
        order = _toposort(n, edges)
        pos = [0] * n
        for k, old in enumerate(order):
            pos[old] = k
        redges = sorted({(pos[a], pos[b]) for a, b in edges})
        leq = np.eye(n, dtype=bool)
        succ: list[list[int]] = [[] for _ in range(n)]
        for a, b in redges:
            succ[a].append(b)
        for a in range(n - 1, -1, -1):
            row = leq[a]
            for b in succ[a]:
                row |= leq[b]
        covers = transitive_reduction(leq)
        relabels = None if labels is None else [labels[order[k]] for k in range(n)]
        return cls(leq, covers=covers, labels=relabels)

    @classmethod
    def from_leq(cls, leq, labels: Sequence[str] | None = None) -> "Poset":
        """Build a poset from a full relation matrix, validating and re-indexing."""
        leq = np.asarray(leq, dtype=bool)
        n = leq.shape[0]
        if leq.ndim != 2 or leq.shape[1] != n:
            raise ValueError("leq must be square")
        if not leq[np.diag_indices(n)].all():
            raise ValueError("relation is not reflexive")
        if (leq & leq.T & ~np.eye(n, dtype=bool)).any():
            raise ValueError("relation is not antisymmetric")
        f = leq.astype(_MATMUL_DTYPE)
        if (((f @ f) > 0.5) & ~leq).any():
            raise ValueError("relation is not transitive")
        strict = [(int(a), int(b)) for a, b in np.argwhere(leq & ~np.eye(n, dtype=bool))]
        order = _toposort(n, strict)
        perm = np.asarray(order)
        new_leq = leq[np.ix_(perm, perm)]
        new_labels = None if labels is None else [labels[i] for i in order]
        return cls(new_leq, labels=new_labels)

    # -- basic queries -----------------------------------------------------

    @property
    def n(self) -> int:
        return self._leq.shape[0]

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"Poset(n={self.n}, covers={len(self.covers)})"

    @property
    def leq(self) -> np.ndarray:
        """Read-only n x n boolean matrix; leq[a, b] iff a <= b."""
        return self._leq

    @property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """Cover pairs (a, b) with a covered by b, lexicographically sorted."""
        if self._covers is None:
            self._covers = tuple(transitive_reduction(self._leq))
        return self._covers

    @property
    def labels(self) -> tuple[str, ...] | None:
        return self._labels

    def label(self, i: int) -> str:
        return self._labels[i] if self._labels is not None else str(i)

    def le(self, a: int, b: int) -> bool:
        return bool(self._leq[a, b])

    def lt(self, a: int, b: int) -> bool:
        return a != b and bool(self._leq[a, b])

    # -- bounds ------------------------------------------------------------

    def bottom(self) -> int:
        # a least element is below everything, hence has index 0
        if self.n > 0 and self._leq[0].all():
            return 0
        raise NotBounded("no unique least element")

    def top(self) -> int:
        if self.n > 0 and self._leq[:, self.n - 1].all():
            return self.n - 1
        raise NotBounded("no unique greatest element")

    def is_bounded(self) -> bool:
        return self.n > 0 and bool(self._leq[0].all() and self._leq[:, self.n - 1].all())

    # -- derived posets ----------------------------------------------------

    def interval(self, a: int, b: int) -> "IntervalPoset":
        """Induced subposet on {x : a <= x <= b}; keeps a map to parent indices."""
        if not self._leq[a, b]:
            raise NotComparable(f"elements {a} and {b} are not comparable")
        sel = np.flatnonzero(self._leq[a] & self._leq[:, b])
        sub = self._leq[np.ix_(sel, sel)]
        covers = None
        if self._covers is not None:
            inset = {int(x): k for k, x in enumerate(sel)}
            covers = [(inset[x], inset[y]) for x, y in self._covers
                      if x in inset and y in inset]
        labels = None if self._labels is None else [self._labels[i] for i in sel]
        return IntervalPoset(sub, covers=covers, labels=labels,
                             parent=tuple(int(x) for x in sel))

    def direct_product(self, other: "Poset",
                       element_cap: int = DEFAULT_ELEMENT_CAP) -> "Poset":
        """Componentwise order on pairs; (p, q) gets index p * other.n + q."""
        n, m = self.n, other.n
        if n * m > element_cap:
            raise SizeCap(f"product would have {n * m} elements (cap {element_cap})")
        leq = np.kron(self._leq, other._leq).astype(bool)
        covers = []
        for a, b in self.covers:
            covers.extend((a * m + q, b * m + q) for q in range(m))
        for c, d in other.covers:
            covers.extend((p * m + c, p * m + d) for p in range(n))
        labels = None
        if self._labels is not None or other._labels is not None:
            labels = [f"({self.label(p)},{other.label(q)})"
                      for p in range(n) for q in range(m)]
        return Poset(leq, covers=sorted(covers), labels=labels)

    def dual(self) -> "Poset":
        """Order-reversed poset, re-indexed to restore the linear extension."""
        n = self.n
        leq = np.ascontiguousarray(self._leq[::-1, ::-1].T)
        covers = None
        if self._covers is not None:
            covers = sorted((n - 1 - b, n - 1 - a) for a, b in self._covers)
        labels = None if self._labels is None else self._labels[::-1]
        return Poset(leq, covers=covers, labels=labels)

    # -- chains and grading ------------------------------------------------

    def _up_cover_lists(self) -> list[list[int]]:
        if self._up_lists is None:
            up: list[list[int]] = [[] for _ in range(self.n)]
            for a, b in self.covers:
                up[a].append(b)
            self._up_lists = up
        return self._up_lists

    def _height_vector(self) -> np.ndarray:
        """heights[v] = longest saturated-chain length from a minimal element to v."""
        if self._heights is None:
            h = np.zeros(self.n, dtype=np.int64)
            for a, b in sorted(self.covers, key=lambda e: e[1]):
                if h[a] + 1 > h[b]:
                    h[b] = h[a] + 1
            self._heights = _freeze(h)
        return self._heights

    def is_graded(self) -> bool:
        """True iff all maximal chains have the same length.

        For bounded posets this is equivalent to every closed interval having
        maximal chains of one common length.
        """
        if self.n <= 1:
            return True
        h = self._height_vector()
        for a, b in self.covers:
            if h[b] != h[a] + 1:
                return False
        has_up = np.zeros(self.n, dtype=bool)
        for a, _ in self.covers:
            has_up[a] = True
        sinks = h[~has_up]
        return bool((sinks == sinks[0]).all())

    def rank(self, a: int) -> int:
        """Length of the longest chain from the least element to `a`."""
        self.bottom()
        return int(self._height_vector()[a])

    def length(self) -> int:
        """Maximal length of a maximal chain (bounded posets)."""
        self.bottom()
        return int(self._height_vector()[self.top()])

    def saturated_chains(self, a: int, b: int) -> list[tuple[int, ...]]:
        """All cover-paths from a to b, in lexicographic order of index sequences."""
        if not self._leq[a, b]:
            raise NotComparable(f"elements {a} and {b} are not comparable")
        up = self._up_cover_lists()
        leq = self._leq
        out: list[tuple[int, ...]] = []
        path = [a]

        def walk(v: int) -> None:
            if v == b:
                out.append(tuple(path))
                return
            for w in up[v]:
                if leq[w, b]:
                    path.append(w)
                    walk(w)
                    path.pop()

        walk(a)
        return out

    def maximal_chains(self) -> list[tuple[int, ...]]:
        return self.saturated_chains(self.bottom(), self.top())


class IntervalPoset(Poset):
    """A closed interval [a, b] of a parent poset; bounded by construction."""

    __slots__ = ("parent",)

    def __init__(self, leq, covers=None, labels=None, parent=()):
        super().__init__(leq, covers=covers, labels=labels)
        #: parent[i] = index of element i in the ambient poset
        self.parent: tuple[int, ...] = tuple(parent)
