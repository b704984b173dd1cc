"""CSR graph construction, edge-file parsing, and degeneracy ordering."""

import gzip

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geoclique import InvalidParameter, InvalidVertex, MalformedLine
from geoclique.graph import (
    Graph,
    degeneracy_ordering,
    from_edges,
    from_labeled_edges,
    read_edge_file,
)


def k(n):
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


class TestConstruction:
    def test_small_graph(self):
        g = from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 2)])
        assert g.n == 4 and g.m == 4
        assert list(g.neighbors(2)) == [0, 1, 3]
        assert g.degree(0) == 2 and g.degree(3) == 1
        assert g.has_edge(0, 2) and g.has_edge(2, 0)
        assert not g.has_edge(0, 3)
        assert not g.has_edge(1, 1)

    def test_duplicates_and_loops_dropped(self):
        g = from_edges(3, [(0, 1), (1, 0), (0, 1), (2, 2)])
        assert g.m == 1
        assert list(g.neighbors(2)) == []

    def test_empty_and_edgeless(self):
        g0 = from_edges(0, [])
        assert g0.n == 0 and g0.m == 0
        g = from_edges(5, [])
        assert g.n == 5 and g.m == 0
        assert list(g.neighbors(3)) == []

    def test_out_of_range_vertex(self):
        with pytest.raises(InvalidVertex):
            from_edges(3, [(0, 3)])
        with pytest.raises(InvalidVertex):
            from_edges(3, [(-1, 0)])
        g = from_edges(3, [(0, 1)])
        with pytest.raises(InvalidVertex):
            g.neighbors(3)
        with pytest.raises(InvalidVertex):
            g.has_edge(0, -1)

    def test_bad_shape(self):
        with pytest.raises(InvalidParameter):
            from_edges(3, [(0, 1, 2)])
        with pytest.raises(InvalidParameter):
            from_edges(-1, [])

    def test_common_neighbors(self):
        g = from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3)])
        assert list(g.common_neighbors(0, 1)) == [2, 3]
        assert list(g.common_neighbors(2, 3)) == [0, 1]
        assert list(g.common_neighbors(0, 4)) == []

    def test_adjacency_is_immutable(self):
        g = from_edges(3, [(0, 1)])
        with pytest.raises(ValueError):
            g.indices[0] = 2
        with pytest.raises(ValueError):
            g.neighbors(0)[0] = 2

    def test_relabeling(self):
        g, labels = from_labeled_edges([(101, 17), (17, 23), (101, 23)])
        assert list(labels) == [17, 23, 101]
        assert g.n == 3 and g.m == 3
        assert g.has_edge(0, 2)  # 17 -- 101

    def test_relabel_empty(self):
        g, labels = from_labeled_edges([])
        assert g.n == 0 and len(labels) == 0


class TestEdgeFile:
    def write(self, tmp_path, text, name="edges.txt", compress=False):
        p = tmp_path / name
        data = text.encode()
        p.write_bytes(gzip.compress(data) if compress else data)
        return p

    CONTENT = (
        "# comment line\n"
        "# FromNodeId\tToNodeId\n"
        "101\t17\n"
        "17 23\n"
        "\n"
        "23\t101\n"
        "101\t23\n"  # duplicate in reverse
        "5\t5\n"      # self-loop
    )

    def check(self, g, labels):
        assert list(labels) == [5, 17, 23, 101]
        assert g.n == 4 and g.m == 3
        assert g.degree(0) == 0  # the self-loop vertex keeps its id only

    def test_plain_text(self, tmp_path):
        g, labels = read_edge_file(self.write(tmp_path, self.CONTENT))
        self.check(g, labels)

    def test_gzipped(self, tmp_path):
        path = self.write(tmp_path, self.CONTENT, name="edges.txt.gz",
                          compress=True)
        g, labels = read_edge_file(path)
        self.check(g, labels)

    def test_malformed_token(self, tmp_path):
        p = self.write(tmp_path, "1\t2\n3\tx\n")
        with pytest.raises(MalformedLine) as exc:
            read_edge_file(p)
        assert exc.value.line_no == 2
        assert exc.value.text == "3\tx"

    def test_wrong_field_count(self, tmp_path):
        p = self.write(tmp_path, "1 2 3\n")
        with pytest.raises(MalformedLine) as exc:
            read_edge_file(p)
        assert exc.value.line_no == 1


class TestDegeneracy:
    def test_path(self):
        g = from_edges(5, [(i, i + 1) for i in range(4)])
        order, d = degeneracy_ordering(g)
        assert d == 1
        assert sorted(order.tolist()) == list(range(5))

    def test_complete(self):
        _, d = degeneracy_ordering(k(6))
        assert d == 5

    def test_cycle(self):
        g = from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
        assert degeneracy_ordering(g)[1] == 2

    def test_star(self):
        g = from_edges(7, [(0, i) for i in range(1, 7)])
        assert degeneracy_ordering(g)[1] == 1

    def test_empty(self):
        order, d = degeneracy_ordering(from_edges(0, []))
        assert len(order) == 0 and d == 0

    def test_edgeless(self):
        order, d = degeneracy_ordering(from_edges(4, []))
        assert d == 0 and sorted(order.tolist()) == [0, 1, 2, 3]

    @given(st.integers(0, 2 ** 32 - 1), st.integers(2, 40),
           st.floats(0.05, 0.9))
    @settings(max_examples=60, deadline=None)
    def test_order_bound_property(self, seed, n, p):
        # Every vertex has at most `degeneracy` neighbors later in the order.
        rng = np.random.default_rng(seed)
        mask = rng.random((n, n)) < p
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)
                 if mask[i, j]]
        g = from_edges(n, edges)
        order, d = degeneracy_ordering(g)
        position = np.empty(n, dtype=np.int64)
        position[order] = np.arange(n)
        later_max = 0
        for v in range(n):
            later = int(np.sum(position[g.neighbors(v)] > position[v]))
            later_max = max(later_max, later)
        assert later_max <= d
        # d is tight: some vertex attains it at its removal step, so the
        # subgraph of the last vertices in order contains a vertex of
        # degree d there; d can never exceed the max degree.
        assert d <= int(g.degrees.max(initial=0))
