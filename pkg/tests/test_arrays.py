from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.core.exceptions import PreconditionViolation
from src.models.domain import ArrayWitness, SearchStatus, Strand, Tassel
from src.models.graph import mask_of
from src.services.arrays import (
    array_from_tassel,
    build_tassel,
    check_array,
    check_strand,
    check_tassel,
    is_c_strand,
    is_c_tassel,
    is_n_array,
    neck_bits,
    random_array,
    random_padded_pattern,
    random_tassel,
    strand_from_pattern,
    tassel_strand,
)
from src.services.graph_ops import graph_from_edges
from src.services.isomorphism import find_induced
from src.services.language import string_of_strand
from src.services.obstructions import complete, complete_bipartite
from src.services.rng import SplitMix64
from src.services.treewidth import treewidth_exact


# ============================================================
# Пряжи
# ============================================================


class TestStrand:

    def test_from_pattern(self):
        strand = strand_from_pattern("00100")
        assert strand.neck == 5
        assert neck_bits(strand.graph, strand.neck, strand.path_order) == "00100"
        assert is_c_strand(strand, 2)
        assert not is_c_strand(strand, 3)

    def test_all_zero_pattern_rejected(self):
        with pytest.raises(PreconditionViolation):
            strand_from_pattern("000")

    def test_neck_on_path(self):
        strand = strand_from_pattern("010")
        broken = Strand(graph=strand.graph, neck=1, path_order=strand.path_order)
        assert check_strand(broken).clause == "neck"

    def test_path_must_be_induced(self):
        G = graph_from_edges(4, [(0, 1), (1, 2), (0, 2), (3, 1)])
        strand = Strand(graph=G, neck=3, path_order=(0, 1, 2))
        assert check_strand(strand).clause == "path_order"

    def test_string_round_trip_up_to_twelve(self):
        for length in range(1, 13):
            for bits in product("01", repeat=length):
                pattern = "".join(bits)
                if "1" not in pattern:
                    continue
                assert string_of_strand(strand_from_pattern(pattern)) in (pattern, pattern[::-1])


# ============================================================
# Кисточки
# ============================================================


class TestTassel:

    def test_build_layout(self):
        T = build_tassel(strand_from_pattern("0010100"), 3)
        assert T.neck == 0
        assert T.paths[1] == tuple(range(8, 15))
        assert is_c_tassel(T, 2)
        assert not is_c_tassel(T, 3)
        assert check_tassel(T, 3).clause == "padding"

    def test_path_count(self):
        T = build_tassel(strand_from_pattern("00100"), 1)
        assert check_tassel(T, 2).clause == "path-count"

    def test_reversed_copy_is_allowed(self):
        T = build_tassel(strand_from_pattern("00110000"), 2)
        flipped = Tassel(graph=T.graph, neck=T.neck, paths=(T.paths[0], tuple(reversed(T.paths[1]))))
        assert is_c_tassel(flipped, 2)

    def test_different_copies_rejected(self):
        G = graph_from_edges(9, [(1, 2), (2, 3), (3, 4), (5, 6), (6, 7), (7, 8), (0, 2), (0, 8)])
        T = Tassel(graph=G, neck=0, paths=((1, 2, 3, 4), (5, 6, 7, 8)))
        assert check_tassel(T, 1).clause == "copies"

    def test_joined_paths_rejected(self):
        T = build_tassel(strand_from_pattern("010"), 2)
        G = graph_from_edges(T.graph.vertex_count, T.graph.edges() + [(1, 4)])
        assert check_tassel(Tassel(graph=G, neck=0, paths=T.paths), 1).clause == "anticomplete"

    def test_tassel_strand(self):
        T = build_tassel(strand_from_pattern("0011"), 2)
        strand = tassel_strand(T)
        assert neck_bits(strand.graph, strand.neck, strand.path_order) == "0011"

    @given(st.integers(1, 3), st.integers(0, 2**32))
    def test_random_tassels_are_valid(self, c, seed):
        T = random_tassel(c, c + 1, (2 * c + 1, 2 * c + 5), seed)
        assert is_c_tassel(T, c)

    @given(st.integers(1, 4), st.integers(9, 20), st.integers(0, 2**32))
    def test_random_padded_pattern(self, c, length, seed):
        pattern = random_padded_pattern(c, length, SplitMix64(seed))
        assert len(pattern) == length
        assert pattern[:c] == "0" * c and pattern[-c:] == "0" * c
        assert "1" in pattern

    def test_random_tassel_needs_enough_paths(self):
        with pytest.raises(PreconditionViolation):
            random_tassel(3, 2, (7, 9), 0)


# ============================================================
# Массивы
# ============================================================


class TestArray:

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_random_array_is_valid(self, n):
        G, w = random_array(n, (n, 8), seed=11)
        assert is_n_array(G, w, n)

    def test_random_array_is_reproducible(self):
        assert random_array(3, (3, 6), 5) == random_array(3, (3, 6), 5)

    def test_random_array_range_checked(self):
        with pytest.raises(PreconditionViolation):
            random_array(3, (2, 6), 0)

    @pytest.mark.parametrize("seed", range(5))
    def test_two_arrays_are_three_clean_and_wide(self, seed):
        G, _ = random_array(2, (2, 8), seed)
        assert find_induced(complete(4), G).status == SearchStatus.ABSENT
        assert find_induced(complete_bipartite(3, 3), G).status == SearchStatus.ABSENT
        assert treewidth_exact(G)[0] >= 2

    def test_order_violation(self):
        G, w = random_array(2, (2, 6), 3)
        swapped = ArrayWitness(graph=G, paths=w.paths, apexes=tuple(reversed(w.apexes)))
        assert check_array(G, swapped, 2).clause == "order"

    def test_missing_apex_neighbour(self):
        G, w = random_array(2, (2, 6), 4)
        path = mask_of(w.paths[1])
        apex = w.apexes[0]
        edges = [(u, v) for u, v in G.edges() if not ({u, v} & {apex} and (path >> u & 1 or path >> v & 1))]
        H = graph_from_edges(G.vertex_count, edges)
        result = check_array(H, ArrayWitness(graph=H, paths=w.paths, apexes=w.apexes), 2)
        assert result.clause == "apex-neighbour"
        assert result.vertex == apex

    def test_wrong_order(self):
        G, w = random_array(2, (2, 6), 1)
        assert check_array(G, w, 3).clause == "paths"


class TestArrayFromTassel:

    @pytest.mark.parametrize("d", [3, 4, 5])
    def test_construction(self, d):
        T = random_tassel(3, d, (7, 9), seed=d)
        G, w = array_from_tassel(T)
        assert G.vertex_count == d * T.graph.vertex_count
        assert is_n_array(G, w, d)

    @pytest.mark.parametrize("seed", range(200))
    def test_seeded_tassels_give_arrays(self, seed):
        c = 1 + seed % 4
        d = c + (seed // 4) % (6 - c)
        T = random_tassel(c, d, (2 * c + 1, 2 * c + 5), seed)
        G, w = array_from_tassel(T)
        assert is_n_array(G, w, d)

    def test_paths_run_through_every_copy(self):
        T = build_tassel(strand_from_pattern("010"), 3)
        G, w = array_from_tassel(T)
        assert is_n_array(G, w, 3)
        assert [len(p) for p in w.paths] == [9, 9, 9]
        assert w.apexes == (0, 10, 20)
        assert find_induced(complete(4), G).status == SearchStatus.ABSENT

    def test_rejects_non_tassel(self):
        T = build_tassel(strand_from_pattern("010"), 2)
        G = graph_from_edges(T.graph.vertex_count, T.graph.edges() + [(1, 4)])
        with pytest.raises(PreconditionViolation):
            array_from_tassel(Tassel(graph=G, neck=0, paths=T.paths))
