import pytest
from hypothesis import given
from hypothesis import strategies as st
from pydantic import ValidationError

from src.core.exceptions import BudgetExceeded, PreconditionViolation, UnsupportedQuery
from src.models.language import PatternSet, canonical, is_padded
from src.services.arrays import build_tassel, strand_from_pattern, tassel_strand
from src.services.automaton import PatternAutomaton
from src.services.graph_ops import components, cycle_graph, disjoint_union, empty_graph, induced_subgraph, path_graph
from src.services.isomorphism import find_induced
from src.services.language import (
    _Coverage,
    brute_force_unavoidable,
    hab_family,
    minimal_c,
    neck_decompositions,
    neck_width,
    necks_of,
    string_of_strand,
    strings_of_neck,
    tassel_oracle,
    tasselled_decide,
    tasselled_search,
    unavoidable,
)
from src.services.obstructions import complete, complete_bipartite
from src.services.oracles import avoids, padded_strings

NINE_STRINGS = (
    "00011", "0001000", "1010", "010010", "111", "110011", "11011", "110010011", "00010011001000",
)

pattern_sets = st.lists(st.text(alphabet="01", min_size=1, max_size=4), min_size=1, max_size=3)


def _family(*patterns):
    return [strand_from_pattern(p).graph for p in patterns]


# ============================================================
# Строки и автомат
# ============================================================


class TestPatterns:

    def test_duplicates_dropped_in_order(self):
        assert PatternSet(patterns=["01", "1", "01"]).patterns == ("01", "1")

    def test_closure_adds_reverses(self):
        assert PatternSet(patterns=["001", "010"]).closure() == ("001", "010", "100")

    @pytest.mark.parametrize("bad", [[], [""], ["012"], [1]])
    def test_invalid_sets_rejected(self, bad):
        with pytest.raises(ValidationError):
            PatternSet(patterns=bad)

    def test_padding_and_canonical(self):
        assert is_padded("0010", 1)
        assert not is_padded("0010", 2)
        assert not is_padded("000", 1)
        assert canonical("0011") == "0011"
        assert canonical("1100") == "0011"


class TestAutomaton:

    def test_reverse_shares_a_bit(self):
        automaton = PatternAutomaton(["01"])
        assert automaton.state_count == 5
        assert automaton.scan("0110") == 1
        assert automaton.scan("1110") == 1
        assert automaton.scan("111") == 0

    def test_masks_per_pattern(self):
        automaton = PatternAutomaton(["11", "000"])
        assert automaton.scan("0110") == 1
        assert automaton.scan("0001") == 2
        assert automaton.scan("00011") == 3
        assert automaton.scan("0101") == 0


# ============================================================
# Шеи
# ============================================================


class TestNecks:

    def test_every_vertex_of_a_path(self):
        assert necks_of(path_graph(3)) == [0, 1, 2]

    def test_cycle_and_clique(self):
        assert necks_of(cycle_graph(4)) == [0, 1, 2, 3]
        assert necks_of(complete(4)) == []

    def test_disconnected_rejected(self):
        with pytest.raises(PreconditionViolation):
            necks_of(empty_graph(2))

    def test_strings_of_cycle_neck(self):
        assert strings_of_neck(cycle_graph(5), 0) == ["1001"]

    def test_strings_of_claw_centre(self):
        claw = complete_bipartite(1, 3)
        assert strings_of_neck(claw, 0) == ["1", "1", "1"]
        assert strings_of_neck(claw, 1) == ["010"]
        assert neck_width([claw]) == 3

    def test_non_neck_rejected(self):
        assert strings_of_neck(complete(3), 0) == ["11"]
        with pytest.raises(PreconditionViolation):
            strings_of_neck(complete(4), 0)

    def test_decompositions_per_component(self):
        options = neck_decompositions(disjoint_union(complete(3), empty_graph(1)))
        assert [len(o) for o in options] == [3, 1]
        assert options[0][0].strings == ("11",)
        assert options[1][0].neck == 3
        assert options[1][0].strings == ()

    def test_strand_string(self):
        assert string_of_strand(strand_from_pattern("01100")) == "00110"

    def test_hab_family(self):
        family = hab_family(2, 2)
        assert [string_of_strand(s) for s in family] == ["00100", "00101", "00110", "00111"]
        with pytest.raises(PreconditionViolation):
            hab_family(-1, 2)


# ============================================================
# c-неизбежность
# ============================================================


class TestUnavoidable:

    def test_single_pattern_witness(self):
        verdict = unavoidable(["001"], 1)
        assert not verdict.unavoidable
        assert verdict.witness == "010"

    def test_single_one_is_unavoidable(self):
        assert unavoidable(["1"], 3).unavoidable

    def test_nine_strings(self):
        assert unavoidable(NINE_STRINGS, 3).unavoidable

    def test_run_truncation(self):
        truncation = tuple("0" + "1" * k + "0" for k in range(1, 5))
        assert unavoidable(truncation, 1).witness == "0111110"
        assert unavoidable(truncation, 2).witness == "001111100"

    def test_state_limit(self):
        with pytest.raises(BudgetExceeded):
            unavoidable(["11"], 1, state_limit=1)

    def test_rejects_c_zero(self):
        with pytest.raises(PreconditionViolation):
            unavoidable(["1"], 0)

    def test_minimal_c(self):
        result = minimal_c(["0001"])
        assert result.c_min == 3
        assert result.s == 4
        assert [v.unavoidable for v in result.checked] == [True, True, False]

    def test_minimal_c_absent(self):
        result = minimal_c(["11"])
        assert result.c_min is None
        assert result.checked[0].witness == "00100"

    def test_brute_force_length_cap(self):
        with pytest.raises(BudgetExceeded):
            brute_force_unavoidable(["0" * 11], 1)

    @given(pattern_sets, st.integers(1, 3))
    def test_automaton_matches_brute_force(self, patterns, c):
        fast = unavoidable(patterns, c)
        slow = brute_force_unavoidable(patterns, c)
        assert fast.unavoidable == slow.unavoidable
        assert fast.witness == slow.witness

    @given(pattern_sets, st.integers(1, 2))
    def test_witness_is_first_avoiding_string(self, patterns, c):
        verdict = unavoidable(patterns, c)
        limit = 10 if verdict.witness is None else min(len(verdict.witness), 10)
        first = next((s for s in padded_strings(c, limit) if avoids(s, patterns)), None)
        if verdict.witness is None or len(verdict.witness) <= 10:
            assert first == verdict.witness

    @given(pattern_sets, st.integers(1, 3))
    def test_monotone_in_padding(self, patterns, c):
        if unavoidable(patterns, c).unavoidable:
            assert unavoidable(patterns, c + 1).unavoidable

    @given(pattern_sets, st.integers(1, 3))
    def test_reversal_closure_keeps_verdict(self, patterns, c):
        closed = PatternSet(patterns=tuple(patterns)).closure()
        plain, full = unavoidable(patterns, c), unavoidable(closed, c)
        assert plain.unavoidable == full.unavoidable
        if plain.witness is not None:
            assert len(plain.witness) == len(full.witness)
            assert avoids(plain.witness, closed)

    @given(pattern_sets)
    def test_witness_at_s_persists_for_larger_c(self, patterns):
        s = PatternSet(patterns=tuple(patterns)).s
        if unavoidable(patterns, s).unavoidable:
            return
        for c in (s + 1, s + 2):
            verdict = brute_force_unavoidable(patterns, c)
            assert not verdict.unavoidable
            assert is_padded(verdict.witness, c)
            assert avoids(verdict.witness, patterns)


# ============================================================
# Кисточность семейств
# ============================================================


class TestTasselled:

    def test_h11_from_one(self):
        search = tasselled_search(_family("010", "011"))
        assert search.tasselled
        assert search.c_min == 1

    def test_h22(self):
        family = [s.graph for s in hab_family(2, 2)]
        search = tasselled_search(family)
        assert search.tasselled
        assert search.c_min <= 2
        assert tassel_oracle(family, search.c_min, strand_len_max=7).all_covered

    @pytest.mark.parametrize("c", [1, 2, 3])
    def test_single_triangle_strand_fails(self, c):
        verdict = tasselled_decide(_family("011"), c)
        assert not verdict.tasselled
        assert verdict.witness == "0" * c + "1" + "0" * c
        assert verdict.explanation

    def test_search_reports_bound(self):
        search = tasselled_search(_family("011"))
        assert not search.tasselled
        assert search.bound == 3
        assert len(search.verdicts) == 3

    def test_adding_a_graph_keeps_coverage(self):
        family = _family("010", "011")
        assert tasselled_decide(family, 1).tasselled
        assert tasselled_decide(family + [complete(3)], 1).tasselled

    def test_mask_width_limit(self):
        with pytest.raises(UnsupportedQuery):
            tasselled_decide([s.graph for s in hab_family(1, 5)], 1)

    def test_empty_family_rejected(self):
        with pytest.raises(PreconditionViolation):
            tasselled_decide([], 1)


class TestTasselOracle:

    def test_counterexample_matches_witness(self):
        family = _family("011")
        oracle = tassel_oracle(family, 2, strand_len_max=7)
        assert not oracle.all_covered
        assert oracle.counterexample == "00100"
        assert oracle.counterexample == tasselled_decide(family, 2).witness
        assert len(oracle.tassel.paths) == oracle.paths == 2

    def test_paths_follow_neck_width(self):
        family = [s.graph for s in hab_family(2, 2)]
        assert tassel_oracle(family, 1, strand_len_max=5).paths == neck_width(family)

    def test_h11_covered(self):
        oracle = tassel_oracle(_family("010", "011"), 1, strand_len_max=6)
        assert oracle.all_covered
        assert oracle.tassels_checked > 0

    def test_too_few_paths_rejected(self):
        with pytest.raises(PreconditionViolation):
            tassel_oracle(_family("010"), 2, strand_len_max=5, paths=1)


class TestGraphStringBridge:

    FAMILIES = [
        (("011",), 1),
        (("011",), 2),
        (("010", "011"), 1),
        (("0110",), 1),
        (("0110",), 2),
        (("00101",), 1),
    ]

    @staticmethod
    def _embeds(family, tassel):
        for H in family:
            parts = [induced_subgraph(H, part)[0] for part in components(H)]
            if all(find_induced(K, tassel.graph).found for K in parts):
                return True
        return False

    @pytest.mark.parametrize("patterns, c", FAMILIES)
    def test_oracle_counterexample_is_bad_string(self, patterns, c):
        family = _family(*patterns)
        oracle = tassel_oracle(family, c, strand_len_max=7)
        if oracle.all_covered:
            return
        bits = string_of_strand(tassel_strand(oracle.tassel))
        assert bits == oracle.counterexample
        assert is_padded(bits, c)
        assert not _Coverage(family).covered_by_scan(bits)
        verdict = tasselled_decide(family, c)
        assert not verdict.tasselled
        assert len(verdict.witness) <= len(bits)

    @pytest.mark.parametrize("patterns, c", FAMILIES)
    def test_short_witness_tassel_is_uncovered(self, patterns, c):
        family = _family(*patterns)
        verdict = tasselled_decide(family, c)
        if verdict.tasselled or len(verdict.witness) > 7:
            return
        tassel = build_tassel(strand_from_pattern(verdict.witness), max(c, neck_width(family)))
        assert not self._embeds(family, tassel)
        assert not tassel_oracle(family, c, strand_len_max=7).all_covered

    def test_h11_agrees_both_ways(self):
        family = [s.graph for s in hab_family(1, 1)]
        assert tasselled_decide(family, 1).tasselled
        assert tassel_oracle(family, 1, strand_len_max=7).all_covered
