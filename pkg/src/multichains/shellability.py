"""Edge labelings, exhaustive EL verification, and the multichain product labeling."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import InvalidLabeling, NotGraded, PartialLabeling
from .multichain import MultichainPoset, multichain_poset
from .poset import DEFAULT_ELEMENT_CAP, Poset


class EdgeLabeling:
    """A total map from cover edges to fixed-width tuples of non-negative integers.

    Base labelings have width 1 (scalar values are accepted and wrapped);
    product labelings have width m.  Labels compare lexicographically.
    """

    def __init__(self, mapping: Mapping[tuple[int, int], object], width: int | None = None):
        self.mapping: dict[tuple[int, int], tuple[int, ...]] = {}
        for edge, value in mapping.items():
            a, b = (int(edge[0]), int(edge[1]))
            label = (int(value),) if isinstance(value, int) else tuple(int(v) for v in value)
            if any(v < 0 for v in label):
                raise InvalidLabeling(f"negative label {label} on edge ({a}, {b})")
            if width is None:
                width = len(label)
            elif len(label) != width:
                raise InvalidLabeling(
                    f"label width {len(label)} on edge ({a}, {b}), expected {width}")
            self.mapping[(a, b)] = label
        if width is None:
            raise InvalidLabeling("cannot infer label width from an empty labeling")
        self.width = width

    def __getitem__(self, edge: tuple[int, int]) -> tuple[int, ...]:
        return self.mapping[edge]

    def items(self) -> list[tuple[tuple[int, int], tuple[int, ...]]]:
        return sorted(self.mapping.items())

    def __eq__(self, other) -> bool:
        return isinstance(other, EdgeLabeling) and self.mapping == other.mapping

    def __len__(self) -> int:
        return len(self.mapping)


def _require_total(p: Poset, labeling: EdgeLabeling) -> None:
    covers = set(p.covers)
    missing = covers - set(labeling.mapping)
    if missing:
        raise PartialLabeling(f"unlabeled cover edges: {sorted(missing)}")
    stray = set(labeling.mapping) - covers
    if stray:
        raise InvalidLabeling(f"labels on non-cover edges: {sorted(stray)}")


@dataclass(frozen=True)
class ELResult:
    """Outcome of an EL check; carries the first bad interval in index order."""

    ok: bool
    failure_kind: str | None = None   # no-rising | multiple-rising | rising-not-lex-first
    interval: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def _is_rising(seq: Sequence[tuple[int, ...]]) -> bool:
    return all(seq[i] < seq[i + 1] for i in range(len(seq) - 1))


def is_el_labeling(p: Poset, labeling: EdgeLabeling) -> ELResult:
    """Exhaustively verify the EL property on every closed interval.

    Each interval must contain exactly one maximal chain with a strictly
    increasing label sequence, and that sequence must be lexicographically
    least among the interval's maximal chains.
    """
    if not p.is_graded():
        raise NotGraded("EL verification requires a graded poset")
    p.bottom()
    _require_total(p, labeling)
    lab = labeling.mapping
    for a in range(p.n):
        for b in range(a + 1, p.n):
            if not p.leq[a, b]:
                continue
            seqs = [tuple(lab[(c, d)] for c, d in zip(ch, ch[1:]))
                    for ch in p.saturated_chains(a, b)]
            rising = [s for s in seqs if _is_rising(s)]
            if not rising:
                return ELResult(False, "no-rising", (a, b))
            if len(rising) > 1:
                return ELResult(False, "multiple-rising", (a, b))
            if any(s < rising[0] for s in seqs):
                return ELResult(False, "rising-not-lex-first", (a, b))
    return ELResult(True)


def product_labeling_on(mp: MultichainPoset, labeling: EdgeLabeling) -> EdgeLabeling:
    """Spread a base labeling over the covers of an existing multichain poset.

    Every multichain cover raises exactly one coordinate by a base cover; the
    edge gets the base label in that coordinate and the formal bottom label 0
    elsewhere, so base labels must be at least 1.
    """
    _require_total(mp.base, labeling)
    if labeling.width != 1:
        raise InvalidLabeling("product labelings are built from width-1 base labelings")
    if any(v == 0 for (v,) in labeling.mapping.values()):
        raise InvalidLabeling("base labels must be >= 1; 0 is the reserved bottom label")
    out: dict[tuple[int, int], tuple[int, ...]] = {}
    for i, j in mp.poset.covers:
        s, t = mp.elements[i], mp.elements[j]
        diff = [k for k in range(mp.m) if s[k] != t[k]]
        assert len(diff) == 1, "a multichain cover must change exactly one coordinate"
        k = diff[0]
        label = [0] * mp.m
        label[k] = labeling.mapping[(s[k], t[k])][0]
        out[(i, j)] = tuple(label)
    return EdgeLabeling(out, width=mp.m)


def product_labeling(p: Poset, labeling: EdgeLabeling, m: int,
                     element_cap: int = DEFAULT_ELEMENT_CAP) -> EdgeLabeling:
    """Build the width-m labeling on the poset of m-multichains of p."""
    return product_labeling_on(multichain_poset(p, m, element_cap), labeling)


def _pivot_tuples(s: tuple[int, ...], t: tuple[int, ...], m: int) -> list[tuple[int, ...]]:
    # coordinates are raised from the last to the first; pivot i has the last
    # i coordinates already at their targets
    return [s[:m - i] + t[m - i:] for i in range(1, m + 1)]


def verify_el_transfer(p: Poset, labeling: EdgeLabeling, m: int,
                       element_cap: int = DEFAULT_ELEMENT_CAP) -> bool:
    """Check that the product labeling is an EL-labeling of the multichain poset.

    Also verifies the structural factoring: in every interval, the unique
    rising chain passes through all pivot elements obtained by replacing a
    suffix of the lower endpoint with the corresponding suffix of the upper
    endpoint.
    """
    base = is_el_labeling(p, labeling)
    if not base:
        raise InvalidLabeling(
            f"base labeling is not an EL-labeling: {base.failure_kind} on {base.interval}")
    mp = multichain_poset(p, m, element_cap)
    plab = product_labeling_on(mp, labeling)
    result = is_el_labeling(mp.poset, plab)
    if not result:
        return False
    lab = plab.mapping
    for i in range(mp.n):
        for j in range(i, mp.n):
            if not mp.poset.leq[i, j]:
                continue
            rising = None
            for ch in mp.poset.saturated_chains(i, j):
                seq = [lab[(c, d)] for c, d in zip(ch, ch[1:])]
                if _is_rising(seq):
                    rising = set(ch)
                    break
            assert rising is not None
            pivots = _pivot_tuples(mp.elements[i], mp.elements[j], mp.m)
            if any(mp.index_of(z) not in rising for z in pivots):
                return False
    return True
