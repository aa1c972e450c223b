import pytest

from pathdeg import build_graph, complete, cycle
from pathdeg.enumeration import (
    ALL_GRAPH_COUNTS,
    CONNECTED_COUNTS,
    all_graphs,
    canonical_key,
    connected_graphs,
)
from pathdeg.graph import is_connected


class TestCanonicalKey:
    def test_relabeling_invariance(self, rng):
        for _ in range(150):
            n = rng.randint(1, 8)
            edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.45]
            g = build_graph(n, edges)
            perm = list(range(n))
            rng.shuffle(perm)
            h = build_graph(n, [(perm[u], perm[v]) for u, v in edges])
            assert canonical_key(g) == canonical_key(h)

    def test_distinguishes_nonisomorphic(self):
        # same degree sequence, different graphs: C6 vs two triangles
        g = cycle(6)
        h = build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
        assert canonical_key(g) != canonical_key(h)

    def test_regular_pair(self):
        # K(3,3) vs prism: both cubic on 6 vertices
        from pathdeg import fixture

        assert canonical_key(fixture("k33")) != canonical_key(fixture("prism"))

    def test_order_matters(self):
        assert canonical_key(build_graph(3, [])) != canonical_key(build_graph(4, []))


class TestGeneration:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_counts_small(self, n):
        assert sum(1 for _ in all_graphs(n)) == ALL_GRAPH_COUNTS[n]
        assert sum(1 for _ in connected_graphs(n)) == CONNECTED_COUNTS[n]

    def test_counts_n6(self):
        assert sum(1 for _ in connected_graphs(6)) == CONNECTED_COUNTS[6]

    def test_generated_graphs_are_distinct(self):
        keys = [canonical_key(g) for g in connected_graphs(5)]
        assert len(keys) == len(set(keys))

    def test_contains_known_graphs(self):
        keys = {canonical_key(g) for g in connected_graphs(5)}
        assert canonical_key(cycle(5)) in keys
        assert canonical_key(complete(5)) in keys


class TestBuiltinCorpus:
    def test_counts_per_order(self, exhaustive_corpus):
        by_n = {}
        for g in exhaustive_corpus:
            by_n[g.n] = by_n.get(g.n, 0) + 1
        assert by_n == CONNECTED_COUNTS

    def test_all_connected(self, exhaustive_corpus):
        assert all(is_connected(g) for g in exhaustive_corpus)

    def test_no_isomorphic_duplicates_upto6(self, exhaustive_corpus):
        keys = [canonical_key(g) for g in exhaustive_corpus if g.n <= 6]
        assert len(keys) == len(set(keys))

    def test_matches_regeneration_upto6(self, exhaustive_corpus):
        regen = {canonical_key(g) for n in range(1, 7) for g in connected_graphs(n)}
        shipped = {canonical_key(g) for g in exhaustive_corpus if g.n <= 6}
        assert regen == shipped
