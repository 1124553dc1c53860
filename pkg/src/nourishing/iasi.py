"""Construct and verify strong integer additive set-indexers.

A labeling assigns each vertex a finite set of non-negative integers; the
induced edge label is the sumset of the endpoint labels.  The labeling is an
IASI when both the vertex map and the induced edge map are injective, and
strong when every edge sumset has maximal cardinality |f(u)|*|f(v)|, which is
equivalent to adjacent labels having disjoint difference sets.

The constructor works in three deterministic steps:

1. greedily properly color the graph in descending-degree order (k classes);
2. build k base sets of size s with pairwise disjoint difference sets;
3. give vertex v the base set of its class translated by M*a_v, where a_v is
   the v-th term of the greedy Sidon (Mian-Chowla-style) sequence starting at
   1 and M exceeds twice the largest base element.

Distinct translates keep vertices injective; Sidon offsets place every edge
sumset in its own disjoint window, so edge labels are injective; translation
leaves difference sets untouched, so adjacent vertices (different classes)
keep disjoint difference sets.  No retry loop is ever needed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from nourishing.graphcore import Graph
from nourishing.setalg import IntSet, difference_set, make_difference_chain, sumset


class MissingLabelError(ValueError):
    """A labeling does not cover every vertex of the graph."""


@dataclass(frozen=True)
class Labeling:
    """A total vertex -> IntSet map, indexed by vertex.

    ``label_size`` is the common cardinality used by the constructor.
    ``chain_length`` is the number of base sets (color classes) the
    constructor used, i.e. the length of its difference chain; 0 for
    labelings not produced by the constructor.
    """

    labels: tuple[IntSet, ...]
    label_size: int
    chain_length: int = field(default=0)

    def __post_init__(self) -> None:
        if self.label_size < 1:
            raise ValueError(f"label size must be >= 1, got {self.label_size}")

    def __getitem__(self, v: int) -> IntSet:
        return self.labels[v]

    def __len__(self) -> int:
        return len(self.labels)

    def restrict(self, vertices: Sequence[int]) -> "Labeling":
        """Labels for an induced subgraph on ``vertices`` (relabeled in order)."""
        return Labeling(
            tuple(self.labels[v] for v in vertices),
            self.label_size,
            self.chain_length,
        )

    def distinct_difference_sets(self) -> int:
        return len({difference_set(a) for a in self.labels})

    def to_json(self) -> dict:
        return {"s": self.label_size, "labels": [a.to_json() for a in self.labels]}

    @classmethod
    def from_json(cls, data: dict) -> "Labeling":
        return cls(
            tuple(IntSet.from_json(a) for a in data["labels"]),
            int(data["s"]),
        )


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking a labeling, with every violation enumerated.

    Failure kinds: ``vertex-collision`` (two vertices share a label),
    ``edge-collision`` (two edges share a sumset), and
    ``non-multiplicative-edge`` (an edge sumset smaller than |f(u)|*|f(v)|).
    Witnesses name the offending vertices or edges, deterministically ordered.
    """

    is_iasi: bool
    is_strong: bool
    failures: tuple[tuple[str, tuple], ...]

    def to_json(self) -> dict:
        return {
            "is_iasi": self.is_iasi,
            "is_strong": self.is_strong,
            "failures": [
                {"kind": kind, "witness": _witness_json(witness)}
                for kind, witness in self.failures
            ],
        }


def _witness_json(witness: tuple) -> list:
    return [list(w) if isinstance(w, tuple) else w for w in witness]


def greedy_coloring(g: Graph) -> list[int]:
    """Proper coloring; vertices processed in descending degree, index tiebreak."""
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    color = [-1] * g.n
    for v in order:
        taken = {color[w] for w in g.neighbors(v) if color[w] >= 0}
        c = 0
        while c in taken:
            c += 1
        color[v] = c
    return color


def sidon_sequence(count: int) -> list[int]:
    """First ``count`` terms of the greedy Sidon sequence 1, 2, 4, 8, 13, 21, ...

    Each new term is the smallest integer keeping all pairwise sums of the
    sequence distinct (equivalently, all pairwise differences distinct).
    """
    terms: list[int] = []
    diffs: set[int] = set()
    candidate = 1
    while len(terms) < count:
        new_diffs = {candidate - t for t in terms}
        if len(new_diffs) == len(terms) and not (new_diffs & diffs):
            terms.append(candidate)
            diffs |= new_diffs
        candidate += 1
    return terms


def construct_strong_iasi(g: Graph, s: int = 2) -> Labeling:
    """A deterministic strong set-indexer with all labels of size ``s``."""
    if s < 1:
        raise ValueError(f"set size must be >= 1, got {s}")
    color = greedy_coloring(g)
    k = max(color) + 1
    bases = make_difference_chain(k, s)
    max_base = max(a.elements[-1] for a in bases)
    offset_unit = 1 + 2 * max_base
    offsets = sidon_sequence(g.n)
    labels = tuple(
        bases[color[v]].translate(offset_unit * offsets[v]) for v in range(g.n)
    )
    return Labeling(labels, s, chain_length=k)


def induced_edge_labels(g: Graph, labeling: Labeling) -> dict[tuple[int, int], IntSet]:
    """Each edge mapped to the sumset of its endpoint labels."""
    _check_total(g, labeling)
    return {
        (u, v): sumset(labeling[u], labeling[v]) for u, v in g.sorted_edges()
    }


def verify_strong_iasi(g: Graph, labeling: Labeling) -> VerificationReport:
    """Check injectivity and the strong (maximal-sumset) condition.

    ``is_iasi`` and ``is_strong`` are computed independently: the strong check
    runs per edge even when injectivity already failed.
    """
    _check_total(g, labeling)
    failures: list[tuple[str, tuple]] = []

    seen_vertex: dict[IntSet, int] = {}
    for v in range(g.n):
        a = labeling[v]
        if a in seen_vertex:
            failures.append(("vertex-collision", (seen_vertex[a], v)))
        else:
            seen_vertex[a] = v

    edge_labels = induced_edge_labels(g, labeling)
    seen_edge: dict[IntSet, tuple[int, int]] = {}
    for e, lab in edge_labels.items():
        if lab in seen_edge:
            failures.append(("edge-collision", (seen_edge[lab], e)))
        else:
            seen_edge[lab] = e

    is_iasi = not failures

    strong_ok = True
    for (u, v), lab in edge_labels.items():
        if len(lab) != len(labeling[u]) * len(labeling[v]):
            failures.append(("non-multiplicative-edge", ((u, v),)))
            strong_ok = False

    return VerificationReport(
        is_iasi=is_iasi,
        is_strong=is_iasi and strong_ok,
        failures=tuple(failures),
    )


def _check_total(g: Graph, labeling: Labeling) -> None:
    if len(labeling) != g.n:
        raise MissingLabelError(
            f"labeling covers {len(labeling)} vertices, graph has {g.n}"
        )
