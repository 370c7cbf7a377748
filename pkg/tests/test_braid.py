import pytest
from hypothesis import given, strategies as st

from espalier.braid import (
    BandGenerator,
    BraidWord,
    Permutation,
    closure_components,
    concat,
    conjugate,
    cyclic_rotations,
    exponent_sum,
    exponent_sum_by_edge,
    format_braid,
    free_reduce,
    invert,
    parse_braid,
    to_artin,
    underlying_permutation,
)
from espalier.errors import ParseError, StrandMismatch

SAMPLE_WORD = "a(1,3)^2 a(2,3)^2 a(4,5)^2 a(1,4)^-3 a(4,5)^2 a(2,3) a(1,3) a(4,5)"


class TestParsing:
    def test_artin_shorthand(self):
        w = parse_braid("s1^3", strands=2)
        assert w.strands == 2
        assert w.letters == (BandGenerator(1, 2),) * 3

    def test_a_shorthand_matches_table_convention(self):
        assert parse_braid("a2", 3) == parse_braid("a(2,3)", 3)

    def test_band_word(self):
        w = parse_braid(SAMPLE_WORD)
        assert w.strands == 5
        assert len(w.letters) == 14
        assert w.letters[6] == BandGenerator(1, 4, -1)

    def test_reversed_indices_rejected(self):
        with pytest.raises(ParseError, match="i < j"):
            parse_braid("a(3,1)")

    def test_syntax_error_position(self):
        with pytest.raises(ParseError) as err:
            parse_braid("a(1,2) b3")
        assert err.value.position == 7

    def test_declared_strands_too_small(self):
        with pytest.raises(ParseError, match="strands"):
            parse_braid("a(2,5)", strands=3)

    def test_zero_index_rejected(self):
        with pytest.raises(ParseError):
            parse_braid("s0")

    def test_empty_word(self):
        w = parse_braid("", strands=4)
        assert w.strands == 4 and w.letters == ()

    def test_exponent_zero_contributes_nothing(self):
        assert parse_braid("a(1,2)^0 s2", 3) == parse_braid("s2", 3)

    def test_round_trip(self):
        w = parse_braid(SAMPLE_WORD)
        assert parse_braid(format_braid(w), w.strands) == w


@st.composite
def words(draw, max_strands=6, max_len=12, signed=True):
    n = draw(st.integers(2, max_strands))
    length = draw(st.integers(0, max_len))
    letters = []
    for _ in range(length):
        i = draw(st.integers(1, n - 1))
        j = draw(st.integers(i + 1, n))
        sign = draw(st.sampled_from([1, -1])) if signed else 1
        letters.append(BandGenerator(i, j, sign))
    return BraidWord(n, tuple(letters))


@given(words())
def test_serializer_round_trips(w):
    assert parse_braid(format_braid(w), w.strands) == w


@given(words())
def test_free_reduce_idempotent_and_permutation_safe(w):
    reduced = free_reduce(w)
    assert free_reduce(reduced) == reduced
    assert underlying_permutation(reduced) == underlying_permutation(w)


@given(words())
def test_to_artin_preserves_permutation_and_exponent_sum(w):
    artin = to_artin(w)
    assert all(g.is_adjacent for g in artin.letters)
    assert underlying_permutation(artin) == underlying_permutation(w)
    assert exponent_sum(artin) == exponent_sum(w)


class TestArtinExpansion:
    def test_adjacent_band_is_itself(self):
        assert to_artin(parse_braid("a(2,3)", 3)).letters == (BandGenerator(2, 3),)

    def test_width_two_band(self):
        assert to_artin(parse_braid("a(1,3)", 3)) == parse_braid("s1 s2 s1^-1", 3)

    def test_width_three_band(self):
        assert to_artin(parse_braid("a(1,4)", 4)) == parse_braid("s1 s2 s3 s2^-1 s1^-1", 4)


class TestFreeReduce:
    def test_cancelling_pair(self):
        assert free_reduce(parse_braid("a(1,2) a(1,2)^-1", 2)).letters == ()

    def test_inner_cancellation(self):
        got = free_reduce(parse_braid("a(1,3) a(2,4) a(2,4)^-1", 4))
        assert got == parse_braid("a(1,3)", 4)

    def test_reduced_word_unchanged(self):
        w = parse_braid("a(1,3) a(2,4)", 4)
        assert free_reduce(w) == w


class TestExponentSums:
    def test_sample_word(self):
        w = parse_braid(SAMPLE_WORD)
        assert exponent_sum_by_edge(w) == {(1, 3): 3, (2, 3): 3, (4, 5): 5, (1, 4): -3}
        assert exponent_sum(w) == 8

    def test_empty(self):
        assert exponent_sum_by_edge(BraidWord(3)) == {}
        assert exponent_sum(BraidWord(3)) == 0

    def test_power(self):
        assert exponent_sum_by_edge(parse_braid("s1^3", 2)) == {(1, 2): 3}


class TestPermutations:
    def test_identity_components(self):
        assert closure_components(BraidWord(3)) == 3

    def test_trefoil_is_knot(self):
        w = parse_braid("s1^3", 2)
        assert underlying_permutation(w) == Permutation((2, 1))
        assert closure_components(w) == 1

    def test_granny_components_via_transposition_oracle(self):
        # direct transposition composition: (1 2) then (2 3) is a 3-cycle,
        # so the granny closed braid is a knot
        w = parse_braid("s1^3 s2^3", 3)
        perm = Permutation.identity(3)
        for g in w.letters:
            perm = perm.then(Permutation.transposition(3, g.i, g.j))
        assert underlying_permutation(w) == perm
        assert closure_components(w) == perm.cycle_count() == 1

    def test_components_depend_only_on_permutation_product(self):
        a = parse_braid("a(1,3) s2", 3)
        b = parse_braid("s1 s2 s1", 3)
        assert underlying_permutation(concat(a, b)) == underlying_permutation(a).then(
            underlying_permutation(b)
        )


class TestGroupOperations:
    def test_invert_reverses_and_flips(self):
        w = parse_braid("a(1,3) a(2,3)", 3)
        assert invert(w) == parse_braid("a(2,3)^-1 a(1,3)^-1", 3)

    def test_concat_identity(self):
        w = parse_braid("a(1,3) s2", 3)
        assert concat(BraidWord(3), w) == w

    def test_concat_strand_mismatch(self):
        with pytest.raises(StrandMismatch):
            concat(BraidWord(2), BraidWord(3))

    def test_rotation_count(self):
        w = parse_braid("s1 s2 s1", 3)
        assert len(cyclic_rotations(w)) == 3
        assert cyclic_rotations(BraidWord(3)) == [BraidWord(3)]

    def test_conjugate_preserves_closure_components(self):
        w = parse_braid("s1^3", 3)
        by = parse_braid("s2 a(1,3)^-1", 3)
        assert closure_components(conjugate(w, by)) == closure_components(w)
