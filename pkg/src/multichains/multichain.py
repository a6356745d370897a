"""The poset of m-multichains of a bounded poset, and its lifted structure maps."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import BadMultiplicity, NotAHomomorphism, NotBounded, NotGraded, SizeCap
from .incidence import count_multichains
from .lattice import LatticeTables, is_lattice_homomorphism, lattice_tables
from .iso import IsoWitness, verify_order_isomorphism
from .poset import DEFAULT_ELEMENT_CAP, Poset


@dataclass(frozen=True)
class MultichainPoset:
    """All weakly increasing m-tuples of a bounded poset, ordered componentwise.

    Elements are generated by depth-first extension in increasing index
    order, so the element list is in lexicographic (hence linear-extension)
    order and indexing is deterministic.
    """

    base: Poset
    m: int
    poset: Poset
    elements: tuple[tuple[int, ...], ...]
    _index: dict = field(repr=False)

    @property
    def n(self) -> int:
        return self.poset.n

    def decode(self, i: int) -> tuple[int, ...]:
        return self.elements[i]

    def index_of(self, entries: Sequence[int]) -> int:
        return self._index[tuple(entries)]


def _weakly_increasing_tuples(leq: np.ndarray, m: int) -> list[tuple[int, ...]]:
    n = leq.shape[0]
    ups = [np.flatnonzero(leq[i]).tolist() for i in range(n)]
    out: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def extend(last: int) -> None:
        if len(prefix) == m:
            out.append(tuple(prefix))
            return
        for nxt in ups[last]:
            prefix.append(nxt)
            extend(nxt)
            prefix.pop()

    for first in range(n):
        prefix.append(first)
        extend(first)
        prefix.pop()
    return out


def multichain_poset(p: Poset, m: int,
                     element_cap: int = DEFAULT_ELEMENT_CAP) -> MultichainPoset:
    """Construct the poset of m-multichains of a bounded poset."""
    if m < 1:
        raise BadMultiplicity(f"multiplicity must be positive, got {m}")
    if not p.is_bounded():
        raise NotBounded("multichain posets are defined for bounded posets")
    count = count_multichains(p, m)
    if count > element_cap:
        raise SizeCap(f"multichain poset would have {count} elements (cap {element_cap})")
    elements = _weakly_increasing_tuples(p.leq, m)
    ent = np.asarray(elements, dtype=np.intp)
    n_mc = len(elements)
    leq = np.ones((n_mc, n_mc), dtype=bool)
    for k in range(m):
        col = ent[:, k]
        leq &= p.leq[np.ix_(col, col)]
    labels = ["(" + ",".join(p.label(x) for x in t) + ")" for t in elements]
    poset = Poset(leq, labels=labels)
    index = {t: i for i, t in enumerate(elements)}
    return MultichainPoset(base=p, m=m, poset=poset,
                           elements=tuple(elements), _index=index)


def multichain_rank(mp: MultichainPoset, element) -> int:
    """Rank of a multichain element as the sum of base ranks of its entries."""
    if not mp.base.is_graded():
        raise NotGraded("rank sums require a graded base poset")
    entries = mp.decode(element) if isinstance(element, (int, np.integer)) else tuple(element)
    return sum(mp.base.rank(x) for x in entries)


def multichain_lattice_tables(mp: MultichainPoset) -> LatticeTables:
    """Componentwise join/meet tables, certified against the generic tables."""
    base_tables = lattice_tables(mp.base)
    ent = np.asarray(mp.elements, dtype=np.intp)
    n = len(mp.elements)
    bj, bm = base_tables.join, base_tables.meet
    idx = mp._index
    join = np.empty((n, n), dtype=np.int32)
    meet = np.empty((n, n), dtype=np.int32)
    for i in range(n):
        # bj[ent[i], ent] broadcasts to the componentwise joins against every element
        join[i] = [idx[t] for t in map(tuple, bj[ent[i], ent].tolist())]
        meet[i] = [idx[t] for t in map(tuple, bm[ent[i], ent].tolist())]
    generic = lattice_tables(mp.poset)
    if not (np.array_equal(join, generic.join) and np.array_equal(meet, generic.meet)):
        raise AssertionError("componentwise tables disagree with the generic tables")
    join.setflags(write=False)
    meet.setflags(write=False)
    return LatticeTables(join=join, meet=meet)


@dataclass(frozen=True)
class LiftedHomomorphism:
    """A componentwise lift of a surjective lattice homomorphism to multichain posets."""

    domain: MultichainPoset
    codomain: MultichainPoset
    mapping: tuple[int, ...]


def lift_homomorphism(p: Poset, q: Poset, f: Sequence[int], m: int,
                      element_cap: int = DEFAULT_ELEMENT_CAP) -> LiftedHomomorphism:
    """Lift a surjective lattice homomorphism f: p -> q componentwise.

    The lift is re-verified exhaustively to be a surjective lattice
    homomorphism between the two multichain posets.
    """
    fv = [int(x) for x in f]
    preserved, surjective = is_lattice_homomorphism(p, q, fv)
    if not preserved:
        raise NotAHomomorphism("map does not preserve joins and meets")
    if not surjective:
        raise NotAHomomorphism("map is not surjective")
    mp_p = multichain_poset(p, m, element_cap)
    mp_q = multichain_poset(q, m, element_cap)
    lifted = tuple(mp_q.index_of(tuple(fv[x] for x in t)) for t in mp_p.elements)
    ok, onto = is_lattice_homomorphism(mp_p.poset, mp_q.poset, lifted)
    if not (ok and onto):
        raise AssertionError("componentwise lift failed re-verification")
    return LiftedHomomorphism(domain=mp_p, codomain=mp_q, mapping=lifted)


def product_commutes(p: Poset, q: Poset, m: int,
                     element_cap: int = DEFAULT_ELEMENT_CAP) -> IsoWitness:
    """Explicit interleaving isomorphism between the multichain poset of a
    direct product and the direct product of the multichain posets.

    The witness maps each multichain of pairs to the pair of coordinate
    multichains; it is verified to be an order isomorphism before returning.
    """
    pq = p.direct_product(q, element_cap)
    if count_multichains(pq, m) > element_cap:
        raise SizeCap("multichain poset of the product exceeds the element cap")
    mp_pq = multichain_poset(pq, m, element_cap)
    mp_p = multichain_poset(p, m, element_cap)
    mp_q = multichain_poset(q, m, element_cap)
    pair = mp_p.poset.direct_product(mp_q.poset, element_cap)
    nq = q.n
    mapping = []
    for t in mp_pq.elements:
        pt = tuple(e // nq for e in t)
        qt = tuple(e % nq for e in t)
        mapping.append(mp_p.index_of(pt) * mp_q.n + mp_q.index_of(qt))
    if pair.n != mp_pq.n or not verify_order_isomorphism(mp_pq.poset, pair, mapping):
        raise AssertionError("interleaving map failed order-isomorphism verification")
    return IsoWitness(tuple(mapping))
