"""Strong set-indexer construction and verification."""

from __future__ import annotations

import random

import pytest

from nourishing.families import FamilySpec, generate
from nourishing.graphcore import Graph, clique_number, power
from nourishing.iasi import (
    Labeling,
    MissingLabelError,
    construct_strong_iasi,
    greedy_coloring,
    induced_edge_labels,
    sidon_sequence,
    verify_strong_iasi,
)
from nourishing.setalg import IntSet, difference_set


def single_edge() -> Graph:
    return Graph(2, [(0, 1)])


class TestSidonSequence:
    def test_known_prefix(self):
        assert sidon_sequence(8) == [1, 2, 4, 8, 13, 21, 31, 45]

    def test_pairwise_sums_distinct(self):
        terms = sidon_sequence(12)
        sums = [terms[i] + terms[j] for i in range(12) for j in range(i + 1, 12)]
        assert len(sums) == len(set(sums))


class TestGreedyColoring:
    def test_proper(self):
        g = power(generate(FamilySpec.make("cycle", n=9)), 2)
        color = greedy_coloring(g)
        assert all(color[u] != color[v] for u, v in g.edges)

    def test_even_cycle_two_classes(self):
        color = greedy_coloring(generate(FamilySpec.make("cycle", n=8)))
        assert max(color) + 1 == 2


class TestInducedEdgeLabels:
    def test_singletons(self):
        lab = Labeling((IntSet([0]), IntSet([5])), 1)
        assert induced_edge_labels(single_edge(), lab) == {(0, 1): IntSet([5])}

    def test_hand_enumerated(self):
        lab = Labeling((IntSet([1, 2]), IntSet([1, 3])), 2)
        assert induced_edge_labels(single_edge(), lab)[(0, 1)] == IntSet([2, 3, 4, 5])

    def test_path_distinct_edge_labels(self):
        g = Graph(3, [(0, 1), (1, 2)])
        lab = Labeling((IntSet([0]), IntSet([1]), IntSet([2])), 1)
        labels = induced_edge_labels(g, lab)
        assert labels == {(0, 1): IntSet([1]), (1, 2): IntSet([3])}

    def test_missing_label(self):
        with pytest.raises(MissingLabelError):
            induced_edge_labels(Graph(3, [(0, 1)]), Labeling((IntSet([0]),), 1))


class TestVerifier:
    def test_non_multiplicative_edge(self):
        report = verify_strong_iasi(
            single_edge(), Labeling((IntSet([1, 2]), IntSet([2, 3])), 2)
        )
        assert report.is_iasi
        assert not report.is_strong
        assert ("non-multiplicative-edge", ((0, 1),)) in report.failures

    def test_strong_edge(self):
        report = verify_strong_iasi(
            single_edge(), Labeling((IntSet([0, 1]), IntSet([0, 2])), 2)
        )
        assert report.is_strong and report.is_iasi and not report.failures

    def test_vertex_collision(self):
        report = verify_strong_iasi(
            Graph(2, []), Labeling((IntSet([0, 1]), IntSet([0, 1])), 2)
        )
        assert not report.is_iasi
        assert ("vertex-collision", (0, 1)) in report.failures

    def test_edge_collision(self):
        g = Graph(4, [(0, 1), (2, 3)])
        lab = Labeling((IntSet([0]), IntSet([3]), IntSet([1]), IntSet([2])), 1)
        report = verify_strong_iasi(g, lab)
        assert not report.is_iasi
        kinds = [kind for kind, _ in report.failures]
        assert "edge-collision" in kinds

    def test_report_json_shape(self):
        report = verify_strong_iasi(
            single_edge(), Labeling((IntSet([1, 2]), IntSet([2, 3])), 2)
        )
        data = report.to_json()
        assert data["is_strong"] is False
        assert data["failures"][0]["kind"] == "non-multiplicative-edge"


class TestConstructor:
    @pytest.mark.parametrize("s", [1, 2, 3])
    def test_k3_strong(self, s):
        g = generate(FamilySpec.make("complete", n=3))
        lab = construct_strong_iasi(g, s)
        assert verify_strong_iasi(g, lab).is_strong
        if s >= 2:
            diffs = [difference_set(a) for a in lab.labels]
            assert not (diffs[0] & diffs[1] or diffs[0] & diffs[2] or diffs[1] & diffs[2])

    def test_single_vertex(self):
        g = Graph(1, [])
        lab = construct_strong_iasi(g, 1)
        assert verify_strong_iasi(g, lab).is_strong
        assert len(lab[0]) == 1

    def test_even_cycle_uses_two_classes(self):
        g = generate(FamilySpec.make("cycle", n=4))
        lab = construct_strong_iasi(g, 2)
        assert verify_strong_iasi(g, lab).is_strong
        assert lab.chain_length == 2
        assert lab.distinct_difference_sets() == 2

    @pytest.mark.parametrize(
        "family,kwargs",
        [("helm", {"n": 5}), ("friendship", {"n": 3}), ("sunlet", {"n": 6})],
    )
    @pytest.mark.parametrize("r", [1, 2])
    def test_family_powers_strong(self, family, kwargs, r):
        g = power(generate(FamilySpec.make(family, **kwargs)), r)
        lab = construct_strong_iasi(g, 2)
        assert verify_strong_iasi(g, lab).is_strong

    def test_chain_length_bounds(self):
        g = power(generate(FamilySpec.make("wheel", n=5)), 1)
        lab = construct_strong_iasi(g, 2)
        maxdeg = max(g.degree(v) for v in range(g.n))
        assert clique_number(g) <= lab.chain_length <= 1 + maxdeg

    def test_labels_json_round_trip(self):
        g = generate(FamilySpec.make("cycle", n=5))
        lab = construct_strong_iasi(g, 3)
        back = Labeling.from_json(lab.to_json())
        assert back.labels == lab.labels
        assert back.label_size == 3


class TestHereditariness:
    def test_restriction_stays_strong(self):
        rng = random.Random(7)
        g = power(generate(FamilySpec.make("helm", n=6)), 2)
        lab = construct_strong_iasi(g, 2)
        for _ in range(25):
            k = rng.randint(1, g.n)
            verts = sorted(rng.sample(range(g.n), k))
            sub = g.induced_subgraph(verts)
            assert verify_strong_iasi(sub, lab.restrict(verts)).is_strong


class TestTranslationLemma:
    def test_translation_preserves_multiplicativity_only(self):
        g = generate(FamilySpec.make("cycle", n=5))
        lab = construct_strong_iasi(g, 2)
        # translating one label keeps every per-edge multiplicativity check
        shifted = list(lab.labels)
        shifted[2] = shifted[2].translate(17)
        report = verify_strong_iasi(g, Labeling(tuple(shifted), 2))
        assert all(kind != "non-multiplicative-edge" for kind, _ in report.failures)

    def test_translation_collision_detected(self):
        # translation keeps edges multiplicative but can break injectivity;
        # the verifier must flag exactly the collision
        path = Graph(3, [(0, 1), (1, 2)])
        strong = Labeling((IntSet([0, 1]), IntSet([0, 2]), IntSet([10, 11])), 2)
        assert verify_strong_iasi(path, strong).is_strong
        collided = Labeling(
            (strong[0].translate(10), strong[1], strong[2]), 2
        )  # vertex 0 now duplicates vertex 2
        report = verify_strong_iasi(path, collided)
        assert not report.is_iasi
        assert ("vertex-collision", (0, 2)) in report.failures
        assert all(kind != "non-multiplicative-edge" for kind, _ in report.failures)
