"""Shared fixtures and independent oracles for the test suite."""

from __future__ import annotations

from itertools import combinations

from nourishing.families import FamilySpec
from nourishing.graphcore import Graph
from nourishing.setalg import IntSet


def brute_force_clique_number(g: Graph) -> int:
    """Exhaustive subset enumeration; independent of the search-based solver."""
    for size in range(g.n, 0, -1):
        for subset in combinations(range(g.n), size):
            if all(g.has_edge(u, v) for u, v in combinations(subset, 2)):
                return size
    return 0


def brute_force_sumset(a: IntSet, b: IntSet) -> set[int]:
    out = set()
    for x in a:
        for y in b:
            out.add(x + y)
    return out


def brute_force_difference_set(a: IntSet) -> set[int]:
    return {abs(x - y) for x in a for y in a if x != y}


def smallest_specs(family: str) -> list[FamilySpec]:
    """The three smallest parameter settings per family (lexicographic)."""
    if family == "path":
        return [FamilySpec.make("path", m=m) for m in (1, 2, 3)]
    if family in ("cycle", "wheel", "helm", "sun", "csun", "sunlet"):
        return [FamilySpec.make(family, n=n) for n in (3, 4, 5)]
    if family == "complete":
        return [FamilySpec.make("complete", n=n) for n in (1, 2, 3)]
    if family == "friendship":
        return [FamilySpec.make("friendship", n=n) for n in (1, 2, 3)]
    if family in ("kmn", "fan"):
        return [FamilySpec.make(family, m=1, n=n) for n in (1, 2, 3)]
    if family == "ksplit":
        return [FamilySpec.make("ksplit", c=1, s=s) for s in (1, 2, 3)]
    if family == "split":
        return [
            FamilySpec.make("split", c=1, adj=[(0,)]),
            FamilySpec.make("split", c=2, adj=[(0,), (1,)]),
            FamilySpec.make("split", c=2, adj=[(0, 1)]),
        ]
    raise ValueError(family)
