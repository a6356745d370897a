"""Exception types shared across the package."""


class PosetError(Exception):
    """Base class for all domain errors raised by this package."""


class CycleDetected(PosetError):
    """The supplied edge relation contains a directed cycle."""


class NotBounded(PosetError):
    """The poset lacks a unique least or greatest element."""


class NotComparable(PosetError):
    """The two elements are not related by the order."""


class SizeCap(PosetError):
    """A construction would exceed the configured element cap."""


class NotGraded(PosetError):
    """The operation requires a graded poset."""


class NotALattice(PosetError):
    """Some pair of elements lacks a join or a meet.

    Carries the first offending pair and a reason, either
    ``"no-upper-bound-minimum"`` or ``"no-lower-bound-maximum"``.
    """

    def __init__(self, a: int, b: int, reason: str):
        self.pair = (a, b)
        self.reason = reason
        super().__init__(f"not a lattice: pair ({a}, {b}): {reason}")


class NotInjective(PosetError):
    """The supplied map is not injective."""


class NotBijective(PosetError):
    """The supplied map is not a bijection."""


class NotAHomomorphism(PosetError):
    """The supplied map is not a surjective lattice homomorphism."""


class BadMultiplicity(PosetError):
    """Multichain length m must be a positive integer."""


class PartialLabeling(PosetError):
    """The edge labeling does not cover every cover edge."""


class InvalidLabeling(PosetError):
    """The edge labeling violates a structural requirement."""


class NotAnAntichain(PosetError):
    """The supplied grid pairs are not pairwise incomparable."""


class BadTuple(PosetError):
    """The supplied tuple is not a valid weakly increasing chain tuple."""


class NotAChainOfSets(PosetError):
    """The supplied sets do not form an increasing chain under inclusion."""


class DegenerateBounds(PosetError):
    """The poset has coinciding least and greatest elements."""


class IsoBudgetExceeded(PosetError):
    """Isomorphism search exceeded its node budget; result is undecided."""


class FormatError(PosetError):
    """A text input (.poset / .labels) is malformed."""
