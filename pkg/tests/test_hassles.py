import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.core.exceptions import PreconditionViolation
from src.models.domain import Hassle
from src.services.arrays import build_tassel, is_c_tassel, neck_bits, random_padded_pattern, strand_from_pattern
from src.services.graph_ops import graph_from_edges
from src.services.hassles import (
    check_hassle,
    hassle_from_cluster,
    hassle_from_tassel,
    is_c_hassle,
    random_meager_cluster,
    tassel_from_hassle_walk,
    tassel_from_walk,
)
from src.services.probes import cluster_example, is_cluster, is_d_meager
from src.services.rng import SplitMix64


def _hassle_with_chord() -> Hassle:
    """Шея 0 и два обхода; хорда внутри первого обхода делает его не 3-растянутым"""
    edges = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 3), (7, 8), (8, 9), (9, 10), (10, 11), (11, 12)]
    edges += [(0, 4), (0, 10)]
    G = graph_from_edges(13, edges)
    return Hassle(graph=G, neck=0, walks=((1, 2, 3, 4, 5, 6), (7, 8, 9, 10, 11, 12)))


class TestCheckHassle:

    def test_tassel_is_a_hassle(self):
        T = build_tassel(strand_from_pattern("00100"), 2)
        assert is_c_hassle(hassle_from_tassel(T), 2)

    def test_stretched_violation(self):
        H = _hassle_with_chord()
        assert is_c_hassle(H, 2)
        result = check_hassle(H, 3)
        assert result.clause == "stretched"
        assert result.vertex == 1

    def test_walks_may_be_joined(self):
        H = _hassle_with_chord()
        G = graph_from_edges(13, H.graph.edges() + [(3, 9)])
        assert is_c_hassle(Hassle(graph=G, neck=0, walks=H.walks), 2)

    def test_walks_must_be_disjoint(self):
        H = _hassle_with_chord()
        overlapping = Hassle(graph=H.graph, neck=0, walks=(H.walks[0], (6, 5)))
        assert check_hassle(overlapping, 1).clause == "disjoint"

    def test_walk_count(self):
        T = build_tassel(strand_from_pattern("00100"), 1)
        assert check_hassle(hassle_from_tassel(T), 2).clause == "walk-count"

    def test_padding(self):
        T = build_tassel(strand_from_pattern("000100000"), 3)
        assert check_hassle(hassle_from_tassel(T), 4).clause == "padding"


class TestTasselFromWalk:

    def test_worked_example(self):
        T = tassel_from_walk([10, 11, 12, 13, 14], "00100", 2)
        assert is_c_tassel(T, 2)
        assert len(T.paths) == 2
        assert all(neck_bits(T.graph, T.neck, p) == "00100" for p in T.paths)

    def test_rejects_unpadded_bits(self):
        with pytest.raises(PreconditionViolation):
            tassel_from_walk([0, 1, 2, 3], "0100", 2)

    def test_rejects_length_mismatch(self):
        with pytest.raises(PreconditionViolation):
            tassel_from_walk([0, 1, 2], "00100", 1)

    def test_from_hassle_walk(self):
        H = _hassle_with_chord()
        T = tassel_from_hassle_walk(H, 1, 2)
        assert is_c_tassel(T, 2)
        assert neck_bits(T.graph, T.neck, T.paths[0]) == "000100"

    @given(st.integers(1, 3), st.integers(0, 2**32))
    def test_random_bits(self, c, seed):
        rng = SplitMix64(seed)
        bits = random_padded_pattern(c, rng.randint(2 * c + 1, 2 * c + 8), rng)
        T = tassel_from_walk(list(range(len(bits))), bits, c)
        assert is_c_tassel(T, c)
        assert all(neck_bits(T.graph, T.neck, p) == bits for p in T.paths)


class TestHassleFromCluster:

    @pytest.mark.parametrize("c,d", [(1, 2), (2, 2)])
    @pytest.mark.parametrize("seed", range(4))
    def test_random_meager_clusters(self, c, d, seed):
        G, cluster = random_meager_cluster(c, d, seed)
        assert is_cluster(G, cluster.apexes, cluster.paths)
        assert is_d_meager(G, cluster.apexes, cluster.paths, d)
        H = hassle_from_cluster(G, cluster.apexes, cluster.paths, c, d)
        assert is_c_hassle(H, c)
        assert H.origin is not None
        assert H.graph.vertex_count == len(H.origin)

    def test_meager_cluster_needs_d_at_least_two(self):
        with pytest.raises(PreconditionViolation):
            random_meager_cluster(1, 1, 0)

    def test_wrong_sizes_rejected(self):
        G, cluster = cluster_example()
        with pytest.raises(PreconditionViolation):
            hassle_from_cluster(G, cluster.apexes, cluster.paths, 1, 2)

    def test_path_count_mismatch_rejected(self):
        G, cluster = random_meager_cluster(1, 2, 7)
        with pytest.raises(PreconditionViolation) as error:
            hassle_from_cluster(G, cluster.apexes, cluster.paths, 2, 1)
        assert error.value.clause == "cluster-size"

    def test_neck_chosen_by_path_ends_only(self):
        """Апексы 48..51 смежны с p1..p4 каждого пути p0..p5; концевые вершины ни с кем не смежны"""
        edges = []
        for k in range(8):
            path = list(range(6 * k, 6 * k + 6))
            edges.extend(zip(path, path[1:]))
            edges.extend((path[i + 1], 48 + i) for i in range(4))
        G = graph_from_edges(52, edges)
        paths = [tuple(range(6 * k, 6 * k + 6)) for k in range(8)]
        H = hassle_from_cluster(G, (48, 49, 50, 51), paths, 1, 2)
        assert H.origin[H.neck] == 48
        assert len(H.walks) == 8
        assert is_c_hassle(H, 1)

    def test_joined_paths_rejected(self):
        G, cluster = random_meager_cluster(1, 2, 3)
        a, b = cluster.paths[0][0], cluster.paths[1][0]
        H = graph_from_edges(G.vertex_count, G.edges() + [(a, b)])
        with pytest.raises(PreconditionViolation) as error:
            hassle_from_cluster(H, cluster.apexes, cluster.paths, 1, 2)
        assert error.value.clause == "anticomplete"
