import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from expanderlp import Graph, Graph6Error, SizeCapError, parse_graph6, write_graph6


def k_n(n):
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


class TestKnownWords:
    def test_k5(self):
        assert write_graph6(k_n(5)) == b"D~{"
        g = parse_graph6(b"D~{")
        assert g.n == 5 and g.edge_count() == 10

    def test_single_vertex(self):
        assert write_graph6(Graph.from_edges(1, [])) == b"@"
        assert parse_graph6("@").n == 1

    def test_empty_graph(self):
        assert write_graph6(Graph.from_edges(0, [])) == b"?"
        assert parse_graph6("?").n == 0

    def test_two_vertices(self):
        assert write_graph6(Graph.from_edges(2, [])) == b"A?"
        assert write_graph6(Graph.from_edges(2, [(0, 1)])) == b"A_"
        assert parse_graph6("A_").has_edge(0, 1)

    def test_header_accepted(self):
        g = parse_graph6(b">>graph6<<D~{")
        assert g.n == 5 and g.edge_count() == 10

    def test_str_input(self):
        assert parse_graph6("D~{").n == 5


class TestSizeField:
    def test_63_vertex_prefix(self):
        word = write_graph6(Graph.from_edges(63, []))
        assert word[0:1] == b"~"
        assert len(word) == 4 + (63 * 62 // 2 + 5) // 6
        assert parse_graph6(word).n == 63

    def test_62_single_byte(self):
        word = write_graph6(Graph.from_edges(62, []))
        assert word[0] == 62 + 63

    def test_write_cap(self):
        with pytest.raises(SizeCapError):
            write_graph6(Graph.from_edges(200001, []))


class TestMalformed:
    def test_empty_input(self):
        with pytest.raises(Graph6Error) as exc:
            parse_graph6(b"")
        assert exc.value.offset == 0

    def test_truncated_adjacency(self):
        with pytest.raises(Graph6Error) as exc:
            parse_graph6(b"D~")
        assert "truncated" in str(exc.value)
        assert "byte offset" in str(exc.value)

    def test_trailing_garbage(self):
        with pytest.raises(Graph6Error) as exc:
            parse_graph6(b"@A")
        assert exc.value.offset == 1

    def test_truncated_size_field(self):
        with pytest.raises(Graph6Error):
            parse_graph6(b"~")
        with pytest.raises(Graph6Error):
            parse_graph6(b"~~A")

    def test_out_of_range_byte(self):
        with pytest.raises(Graph6Error) as exc:
            parse_graph6(b"D~\x1f")
        assert exc.value.offset == 2

    def test_nonzero_padding(self):
        # n = 2 uses one bit; the remaining five must be zero
        with pytest.raises(Graph6Error) as exc:
            parse_graph6(b"A~")
        assert "padding" in str(exc.value)

    def test_no_giant_allocation_on_lying_header(self):
        # claims ~2.6e8 vertices with no adjacency bytes; must fail fast
        with pytest.raises((Graph6Error, SizeCapError)):
            parse_graph6(b"~~~~~~~~")


def random_graph(rng, n):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4]
    return Graph.from_edges(n, edges)


class TestRoundTrip:
    def test_corpus(self):
        import random

        rng = random.Random(20240901)
        sizes = [0, 1, 2, 3, 5, 8, 13, 21, 34, 55, 62, 63, 64, 70]
        count = 0
        for n in sizes:
            for _ in range(4):
                g = random_graph(rng, n)
                assert parse_graph6(write_graph6(g)) == g
                count += 1
        assert count >= 50

    @given(st.integers(0, 30), st.integers(0, 2**31 - 1))
    @settings(max_examples=60, deadline=None)
    def test_round_trip_property(self, n, seed):
        import random

        g = random_graph(random.Random(seed), n)
        word = write_graph6(g)
        assert all(63 <= b <= 126 for b in word)
        assert parse_graph6(word) == g
