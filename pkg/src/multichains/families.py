"""Generators for standard poset families and their explicit multichain bijections.

Chains carry 1-based element values, matching the tuple coordinates used by
the grid-ideal and Boolean bijections below; poset indices remain 0-based.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from .errors import (BadTuple, NotAChainOfSets, NotAnAntichain, NotComparable,
                     SizeCap)
from .poset import DEFAULT_ELEMENT_CAP, Poset


# -- generators -------------------------------------------------------------

def chain(k: int) -> Poset:
    """The chain with k elements, labeled 1..k."""
    if k < 1:
        raise ValueError("a chain needs at least one element")
    leq = np.triu(np.ones((k, k), dtype=bool))
    covers = [(i, i + 1) for i in range(k - 1)]
    return Poset(leq, covers=covers, labels=[str(i + 1) for i in range(k)])


def _subset_label(mask: int, n: int) -> str:
    if mask == 0:
        return "{}"
    members = [str(i + 1) for i in range(n) if mask >> i & 1]
    return "".join(members) if n <= 9 else "{" + ",".join(members) + "}"


def boolean_lattice(n: int, element_cap: int = DEFAULT_ELEMENT_CAP) -> Poset:
    """Subsets of {1..n} under inclusion; element index is the subset bitmask."""
    if n < 0:
        raise ValueError("n must be non-negative")
    size = 1 << n
    if size > element_cap:
        raise SizeCap(f"boolean lattice would have {size} elements (cap {element_cap})")
    masks = np.arange(size)
    leq = (masks[:, None] & ~masks[None, :]) == 0
    covers = sorted((s, s | (1 << i))
                    for s in range(size) for i in range(n) if not s >> i & 1)
    labels = [_subset_label(s, n) for s in range(size)]
    return Poset(leq, covers=covers, labels=labels)


def grid(a: int, b: int, element_cap: int = DEFAULT_ELEMENT_CAP) -> Poset:
    """The product of an a-chain and a b-chain; (i, j) gets index (i-1)*b + (j-1)."""
    return chain(a).direct_product(chain(b), element_cap)


class IdealLatticePoset(Poset):
    """Lattice of order ideals; keeps each ideal as a bitmask over base indices."""

    __slots__ = ("ideals",)

    def __init__(self, leq, covers=None, labels=None, ideals=()):
        super().__init__(leq, covers=covers, labels=labels)
        self.ideals: tuple[int, ...] = tuple(ideals)

    def index_of_ideal(self, members: Iterable[int]) -> int:
        mask = 0
        for x in members:
            mask |= 1 << x
        return self.ideals.index(mask)


def ideal_lattice(p: Poset, element_cap: int = DEFAULT_ELEMENT_CAP) -> IdealLatticePoset:
    """All downward-closed subsets of p, ordered by inclusion."""
    n = p.n
    strict_down = []
    for e in range(n):
        mask = 0
        for x in np.flatnonzero(p.leq[:, e]).tolist():
            if x != e:
                mask |= 1 << x
        strict_down.append(mask)
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for ideal in frontier:
            for e in range(n):
                if ideal >> e & 1:
                    continue
                if strict_down[e] & ~ideal:
                    continue
                new = ideal | (1 << e)
                if new not in seen:
                    seen.add(new)
                    nxt.append(new)
        if len(seen) > element_cap:
            raise SizeCap(f"ideal lattice exceeds the element cap ({element_cap})")
        frontier = nxt
    ideals = sorted(seen, key=lambda m: (bin(m).count("1"), m))
    arr = np.asarray(ideals)
    leq = (arr[:, None] & ~arr[None, :]) == 0
    labels = ["{" + ",".join(str(i) for i in range(n) if m >> i & 1) + "}" for m in ideals]
    return IdealLatticePoset(leq, labels=labels, ideals=ideals)


class FaceLatticePoset(Poset):
    """Face lattice of the n-cube with an adjoined least element.

    Faces are strings over {0, 1, x}; the least element is None.  A face F
    lies below G exactly when F matches G on every coordinate G fixes, so
    vertices sit just above the adjoined bottom and the all-x face is the top.
    """

    __slots__ = ("faces", "dim")

    def __init__(self, leq, covers=None, labels=None, faces=(), dim=0):
        super().__init__(leq, covers=covers, labels=labels)
        self.faces: tuple[str | None, ...] = tuple(faces)
        self.dim: int = dim

    def index_of_face(self, face: str | None) -> int:
        return self.faces.index(face)


def _face_below(e: str, f: str) -> bool:
    return all(fc == "x" or ec == fc for ec, fc in zip(e, f))


def hypercube_face_lattice(n: int, element_cap: int = DEFAULT_ELEMENT_CAP) -> FaceLatticePoset:
    """Faces of the n-cube as {0,1,x}-strings plus an adjoined empty face."""
    if n < 0:
        raise ValueError("n must be non-negative")
    size = 3 ** n + 1
    if size > element_cap:
        raise SizeCap(f"face lattice would have {size} elements (cap {element_cap})")
    cubes = sorted(("".join(t) for t in product("01x", repeat=n)),
                   key=lambda s: (s.count("x"), s))
    codes = np.asarray([[{"0": 0, "1": 1, "x": 2}[c] for c in s] for s in cubes],
                       dtype=np.uint8).reshape(len(cubes), n)
    below = ((codes[None, :, :] == 2) | (codes[:, None, :] == codes[None, :, :])).all(axis=2)
    leq = np.zeros((size, size), dtype=bool)
    leq[0, :] = True
    leq[0, 0] = True
    leq[1:, 1:] = below
    faces: list[str | None] = [None] + cubes
    labels = ["{}"] + cubes
    return FaceLatticePoset(leq, labels=labels, faces=faces, dim=n)


def hypercube_interval_type(e: str | None, f: str | None) -> tuple[str, int]:
    """Classify the interval [e, f] as ("boolean", k) or ("hypercube", k)."""
    for face in (e, f):
        if face is not None and any(c not in "01x" for c in face):
            raise ValueError(f"not a face string: {face!r}")
    if e == f:
        return ("boolean", 0)
    if f is None or (e is not None and (len(e) != len(f) or not _face_below(e, f))):
        raise NotComparable("faces are not comparable")
    if e is None:
        return ("hypercube", f.count("x"))
    return ("boolean", f.count("x") - e.count("x"))


def hypercube_multichain_count(n: int, m: int) -> int:
    """Closed-form count of m-multichains in the n-cube face lattice."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    return sum((2 * i + 1) ** n for i in range(m + 1))


# -- chain multichains vs. grid ideals ---------------------------------------

def ascent_positions(x: Sequence[int]) -> set[int]:
    """1-based positions s with x_s < x_{s+1}."""
    return {s + 1 for s in range(len(x) - 1) if x[s] < x[s + 1]}


@dataclass(frozen=True)
class GridIdeal:
    """An order ideal of a grid, encoded by the antichain of its maximal elements.

    Pairs (i, j) are 1-based with i strictly increasing (hence j strictly
    decreasing); the empty tuple encodes the empty ideal.
    """

    pairs: tuple[tuple[int, int], ...]


def grid_ideal(pairs: Iterable[tuple[int, int]], n: int, m: int) -> GridIdeal:
    """Validate and normalize an antichain in the (n-1)-by-m grid."""
    norm = sorted((int(i), int(j)) for i, j in pairs)
    for i, j in norm:
        if not (1 <= i <= n - 1 and 1 <= j <= m):
            raise NotAnAntichain(f"pair ({i}, {j}) outside the {n - 1} x {m} grid")
    for (i1, j1), (i2, j2) in zip(norm, norm[1:]):
        if i1 == i2 or j1 <= j2:
            raise NotAnAntichain(f"pairs ({i1},{j1}) and ({i2},{j2}) are comparable")
    return GridIdeal(tuple(norm))


def grid_ideal_members(a: GridIdeal, n: int, m: int) -> frozenset[int]:
    """All grid(n-1, m) element indices lying below some pair of the antichain."""
    out = set()
    for i, j in a.pairs:
        for i2 in range(1, i + 1):
            for j2 in range(1, j + 1):
                out.add((i2 - 1) * m + (j2 - 1))
    return frozenset(out)


def grid_ideal_from_members(members: Iterable[int], n: int, m: int) -> GridIdeal:
    """Recover the antichain of maximal elements from an ideal's member indices."""
    pts = {(idx // m + 1, idx % m + 1) for idx in members}
    maximal = [(i, j) for (i, j) in pts
               if not any((i2, j2) != (i, j) and i2 >= i and j2 >= j for i2, j2 in pts)]
    return grid_ideal(maximal, n, m)


def grid_ideal_to_multichain(a: GridIdeal | Iterable[tuple[int, int]],
                             n: int, m: int) -> tuple[int, ...]:
    """Map a grid ideal to a weakly increasing m-tuple over the n-chain.

    The antichain (i_1, j_1) > ... > (i_k, j_k) in heights produces the block
    tuple: 1 repeated m - j_1 times, then i_s + 1 repeated j_s - j_{s+1}
    times for each s, with j_{k+1} = 0.  The empty ideal maps to all ones.
    """
    if not isinstance(a, GridIdeal):
        a = grid_ideal(a, n, m)
    else:
        grid_ideal(a.pairs, n, m)
    out: list[int] = []
    js = [j for _, j in a.pairs] + [0]
    out.extend([1] * (m - (js[0] if a.pairs else 0)))
    for s, (i, _) in enumerate(a.pairs):
        out.extend([i + 1] * (js[s] - js[s + 1]))
    return tuple(out)


def multichain_to_grid_ideal(x: Sequence[int], n: int, m: int) -> GridIdeal:
    """Inverse of grid_ideal_to_multichain, read off the ascent set.

    With ascents j_1 < ... < j_k and j_{k+1} = m, the pairs are
    (x_{j_t} - 1, m - j_{t-1}) for t = 1..k+1 (j_0 = 0), dropping the first
    pair when its value coordinate is 0.
    """
    x = tuple(int(v) for v in x)
    if len(x) != m or not x or x[0] < 1 or x[-1] > n or any(
            x[s] > x[s + 1] for s in range(m - 1)):
        raise BadTuple(f"not a weakly increasing tuple over 1..{n}: {x}")
    js = sorted(ascent_positions(x)) + [m]
    pairs = []
    prev = 0
    for j in js:
        i = x[j - 1] - 1
        if i > 0:
            pairs.append((i, m - prev))
        prev = j
    return grid_ideal(pairs, n, m)


# -- Boolean multichains vs. chain-power tuples -------------------------------

def boolean_multichain_to_tuple(sets: Sequence[Iterable[int]], n: int) -> tuple[int, ...]:
    """Map an increasing chain of m subsets of {1..n} to a tuple in {1..m+1}^n.

    Coordinate i records in how many of the sets i occurs, plus one.
    """
    chain_sets = [frozenset(int(v) for v in s) for s in sets]
    for s in chain_sets:
        if not s <= set(range(1, n + 1)):
            raise NotAChainOfSets(f"set {sorted(s)} is not a subset of 1..{n}")
    for s, t in zip(chain_sets, chain_sets[1:]):
        if not s <= t:
            raise NotAChainOfSets("sets do not increase under inclusion")
    return tuple(sum(1 for s in chain_sets if i in s) + 1 for i in range(1, n + 1))


def tuple_to_boolean_multichain(js: Sequence[int], m: int) -> tuple[frozenset[int], ...]:
    """Inverse map: the k-th set collects the coordinates i with j_i >= m + 2 - k."""
    js = tuple(int(v) for v in js)
    if any(not 1 <= j <= m + 1 for j in js):
        raise BadTuple(f"tuple entries must lie in 1..{m + 1}: {js}")
    n = len(js)
    return tuple(frozenset(i for i in range(1, n + 1) if js[i - 1] >= m + 2 - k)
                 for k in range(1, m + 1))


def poset_power(p: Poset, k: int, element_cap: int = DEFAULT_ELEMENT_CAP) -> Poset:
    """The k-fold direct product of p with itself (left-associated)."""
    if k < 1:
        raise ValueError("power must be positive")
    out = p
    for _ in range(k - 1):
        out = out.direct_product(p, element_cap)
    return out


def power_index(entries: Sequence[int], n: int) -> int:
    """Index of a tuple inside poset_power, by mixed-radix position."""
    idx = 0
    for e in entries:
        idx = idx * n + int(e)
    return idx
