import json
import random
from importlib import resources

import pytest
from hypothesis import given, strategies as st

from espalier.braid import BraidWord, concat, conjugate, cyclic_rotations, parse_braid
from espalier.compose import connected_sum_words
from espalier.errors import ExactDivisionError, MultiComponentClosure, ToolkitError
from espalier.invariants import (
    alexander_of_closure,
    fibered_degree_check,
    reduced_burau,
    satellite_alexander,
    torus_alexander,
)
from espalier.laurent import ONE, ZERO, LaurentPolynomial, T
from oracles import fox_alexander, random_knot_word


def lp(min_deg, coeffs):
    return LaurentPolynomial.from_coefficients(min_deg, coeffs)


class TestLaurentArithmetic:
    def test_substitute_power(self):
        f = lp(-1, [1, -1, 1])  # t^-1 - 1 + t
        assert f.substitute_power(2) == lp(-2, [1, 0, -1, 0, 1])

    def test_equal_up_to_units(self):
        assert lp(0, [1, -1, 1]).equal_up_to_units(lp(-1, [1, -1, 1]))
        assert lp(0, [1, -1, 1]).equal_up_to_units(lp(3, [-1, 1, -1]))
        assert not lp(0, [1, -1, 1]).equal_up_to_units(lp(0, [1, 1, 1]))

    def test_symmetric_normalize(self):
        assert lp(0, [-1, 1, -1]).symmetric_normalize() == lp(-1, [1, -1, 1])
        assert lp(5, [1]).symmetric_normalize() == ONE

    def test_symmetric_normalize_rejects_npalindromes(self):
        with pytest.raises(ToolkitError):
            lp(0, [1, 2]).symmetric_normalize()

    def test_exact_division(self):
        product = lp(0, [1, -1]) * lp(-2, [2, 0, 5])
        assert product.divide_exact(lp(-2, [2, 0, 5])) == lp(0, [1, -1])
        with pytest.raises(ExactDivisionError):
            lp(0, [1, 1, 1]).divide_exact(lp(0, [1, 1]))

    def test_str(self):
        assert str(lp(-1, [1, -1, 1])) == "t^-1 - 1 + t"
        assert str(ZERO) == "0"


small_ints = st.integers(-6, 6)


@st.composite
def polys(draw):
    return lp(draw(st.integers(-4, 4)), draw(st.lists(small_ints, max_size=6)))


@given(polys(), polys(), polys())
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) * h == f * h + g * h
    assert f + ZERO == f
    assert f * ONE == f
    assert f - f == ZERO


@given(polys(), st.integers(1, 4))
def test_substitution_is_multiplicative(f, p):
    g = lp(0, [1, 1])
    assert (f * g).substitute_power(p) == f.substitute_power(p) * g.substitute_power(p)


class TestBurau:
    def test_generator_convention(self):
        m = reduced_burau(parse_braid("s1", 2))
        assert m.entries == ((-T,),) == (((ONE * -1) * T,),)

    def test_braid_relations_up_to_six_strands(self):
        for n in range(3, 7):
            for i in range(1, n - 1):
                lhs = reduced_burau(parse_braid(f"s{i} s{i+1} s{i}", n))
                rhs = reduced_burau(parse_braid(f"s{i+1} s{i} s{i+1}", n))
                assert lhs == rhs
            for i in range(1, n):
                for j in range(i + 2, n):
                    assert reduced_burau(parse_braid(f"s{i} s{j}", n)) == reduced_burau(
                        parse_braid(f"s{j} s{i}", n)
                    )

    def test_power(self):
        m = reduced_burau(parse_braid("s1^3", 2))
        assert m.entries == ((lp(3, [-1]),),)

    def test_inverse_letters(self):
        n = 4
        rng = random.Random(3)
        for _ in range(20):
            w = random_knot_word(rng, (n, n), (1, 6))
            identity = reduced_burau(BraidWord(n))
            back = BraidWord(n, tuple(g.inverse() for g in reversed(w.letters)))
            assert reduced_burau(concat(w, back)) == identity


class TestAlexander:
    def test_trefoil(self):
        assert alexander_of_closure(parse_braid("s1^3", 2)) == lp(-1, [1, -1, 1])

    def test_unknot(self):
        assert alexander_of_closure(parse_braid("s1", 2)) == ONE

    def test_figure_eight(self):
        # s1 s2^-1 s1 s2^-1 closes to 4_1 with polynomial -t^-1 + 3 - t
        got = alexander_of_closure(parse_braid("s1 s2^-1 s1 s2^-1", 3))
        assert got == lp(-1, [-1, 3, -1])

    def test_reference_row_from_data_file(self):
        rows = json.loads(resources.files("espalier.data").joinpath("table1.json").read_text())
        row = next(r for r in rows if r["name"] == "10_161")
        w = parse_braid(row["braid"]["word"], row["braid"]["n"])
        ref = lp(row["alexander"]["min_deg"], row["alexander"]["coeffs"])
        assert alexander_of_closure(w).equal_up_to_units(ref)

    def test_multi_component_rejected_with_determinant(self):
        with pytest.raises(MultiComponentClosure) as err:
            alexander_of_closure(parse_braid("s1^2", 2))
        assert err.value.components == 2
        assert err.value.determinant is not None

    def test_markov_stabilization_invariance(self):
        rng = random.Random(17)
        for _ in range(20):
            w = random_knot_word(rng, (2, 4), (1, 7))
            stabilized = concat(
                BraidWord(w.strands + 1, w.letters),
                parse_braid(f"s{w.strands}", w.strands + 1),
            )
            assert alexander_of_closure(stabilized) == alexander_of_closure(w)

    def test_conjugation_and_rotation_invariance(self):
        rng = random.Random(18)
        for _ in range(15):
            w = random_knot_word(rng, (2, 4), (1, 6))
            poly = alexander_of_closure(w)
            for rotated in cyclic_rotations(w):
                assert alexander_of_closure(rotated) == poly
            for _ in range(3):
                by = random_knot_word(rng, (w.strands, w.strands), (0, 3))
                assert alexander_of_closure(conjugate(w, by)) == poly

    def test_symmetry_and_value_at_one(self):
        rng = random.Random(19)
        for _ in range(25):
            poly = alexander_of_closure(random_knot_word(rng, (2, 5), (1, 8)))
            assert poly.coefficients == tuple(reversed(poly.coefficients))
            assert poly(1) == 1

    def test_agrees_with_fox_calculus(self):
        rng = random.Random(20)
        for _ in range(40):
            w = random_knot_word(rng, (2, 4), (1, 8))
            mine = alexander_of_closure(w)
            fox = fox_alexander(w)
            assert list(mine.coefficients) == fox or list(mine.coefficients) == [-c for c in fox]


class TestTorusAndSatellite:
    def test_small_torus_knots(self):
        assert torus_alexander(2, 3) == lp(-1, [1, -1, 1])
        assert torus_alexander(1, 9) == ONE
        assert torus_alexander(3, 4) == alexander_of_closure(parse_braid("a1^3 a2 a1^3 a2", 3))

    def test_torus_rejects_non_coprime(self):
        with pytest.raises(ToolkitError):
            torus_alexander(2, 4)

    def test_satellite_formula(self):
        trefoil = torus_alexander(2, 3)
        got = satellite_alexander(trefoil, 2, 3)
        assert got == (trefoil.substitute_power(2) * trefoil).symmetric_normalize()

    def test_multiplicativity_under_connected_sum(self):
        rng = random.Random(23)
        for _ in range(20):
            a = random_knot_word(rng, (2, 3), (1, 6))
            b = random_knot_word(rng, (2, 3), (1, 6))
            total = alexander_of_closure(connected_sum_words(a, b))
            assert total.equal_up_to_units(alexander_of_closure(a) * alexander_of_closure(b))


class TestFiberedDegreeCheck:
    def test_torus_words(self):
        assert fibered_degree_check(parse_braid("s1^3", 2))
        assert fibered_degree_check(parse_braid("s1^5", 2))

    def test_inefficient_word_fails(self):
        # unknot written with three letters: the chi-genus overshoots the span
        assert not fibered_degree_check(parse_braid("s1^2 s1^-1", 2))

    def test_non_monic_extremes_fail(self):
        # a 4-strand closure with Alexander 4t^-1 - 7 + 4t
        w = parse_braid("a(3,4) a(2,4) a(2,3)^-1 a(3,4) a(2,3) a(1,2) a(1,3)", 4)
        assert alexander_of_closure(w) == lp(-1, [4, -7, 4])
        assert not fibered_degree_check(w)
