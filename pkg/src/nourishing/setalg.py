"""Finite integer-set algebra: sumsets, difference sets, and difference chains.

Sets here are always finite, nonempty sets of non-negative integers.  The
difference set of a set A collects the positive absolute differences of
distinct elements, so a singleton has an empty difference set.  Two sets A, B
satisfy |A+B| = |A|*|B| exactly when their difference sets are disjoint; that
equivalence is the strong-pair criterion everything downstream leans on.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator


class IntSet:
    """An immutable, canonically sorted, nonempty set of non-negative integers."""

    __slots__ = ("elements",)

    elements: tuple[int, ...]

    def __init__(self, elements: Iterable[int]):
        elems = tuple(sorted(set(elements)))
        if not elems:
            raise ValueError("IntSet must be nonempty")
        if elems[0] < 0:
            raise ValueError(f"IntSet elements must be non-negative, got {elems[0]}")
        object.__setattr__(self, "elements", elems)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("IntSet is immutable")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self.elements

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntSet):
            return self.elements == other.elements
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"IntSet({{{', '.join(map(str, self.elements))}}})"

    def translate(self, t: int) -> "IntSet":
        """Return the translate A + {t}."""
        if t < 0 and -t > self.elements[0]:
            raise ValueError("translation would produce a negative element")
        return IntSet(x + t for x in self.elements)

    def to_json(self) -> list[int]:
        return list(self.elements)

    @classmethod
    def from_json(cls, data: Iterable[int]) -> "IntSet":
        return cls(data)


def sumset(a: IntSet, b: IntSet) -> IntSet:
    """The sumset A + B = {x + y : x in A, y in B}."""
    return IntSet(x + y for x in a for y in b)


def difference_set(a: IntSet) -> frozenset[int]:
    """All positive absolute differences of distinct elements of ``a``.

    Empty for singletons.  Zero is never a member: differences are taken over
    distinct element pairs only.
    """
    return frozenset(y - x for x, y in combinations(a.elements, 2))


def is_strong_pair(a: IntSet, b: IntSet) -> bool:
    """True iff |A+B| = |A|*|B|, i.e. the sumset is maximally large.

    Equivalent to difference_set(a) and difference_set(b) being disjoint.
    """
    return len(sumset(a, b)) == len(a) * len(b)


def _primes_above(floor: int) -> Iterator[int]:
    """Yield primes strictly greater than ``floor`` in increasing order."""
    candidate = max(floor, 1) + 1
    while True:
        if candidate >= 2 and all(candidate % d for d in range(2, int(candidate**0.5) + 1)):
            yield candidate
        candidate += 1


def make_difference_chain(k: int, s: int) -> list[IntSet]:
    """Build ``k`` distinct ``s``-element sets with pairwise disjoint difference sets.

    Construction: the i-th set is the arithmetic progression
    {0, p_i, 2*p_i, ..., (s-1)*p_i} where p_i is the i-th prime strictly greater
    than s-1.  A collision k1*p_i = k2*p_j with both multipliers below s <= p_i
    would force p_i | k2, impossible; so the difference sets
    {p_i, 2*p_i, ..., (s-1)*p_i} are pairwise disjoint.  Deterministic in (k, s).

    For s = 1 the progressions would all collapse to {0}; distinct singletons
    {0}, {1}, ..., {k-1} are returned instead (empty difference sets are
    vacuously disjoint).
    """
    if k < 1:
        raise ValueError(f"chain length must be >= 1, got {k}")
    if s < 1:
        raise ValueError(f"set size must be >= 1, got {s}")
    if s == 1:
        return [IntSet([i]) for i in range(k)]
    chain: list[IntSet] = []
    primes = _primes_above(s - 1)
    for _ in range(k):
        p = next(primes)
        chain.append(IntSet(j * p for j in range(s)))
    return chain
