"""Bound formulas and brute-force cross-validation at desk scale."""

import pytest

from conftest import random_irreducible
from goppa_orbits.action import _pgl_orbit_members
from goppa_orbits.enumeration import (
    bound,
    brute_force_orbit_count,
    fixed_orbit_count_formula,
    make_table,
    pgl_orbit_count_formula,
)
from goppa_orbits.errors import GuardError, HypothesisError
from goppa_orbits.gf2field import make_field
from goppa_orbits.polyq import Parameters, divisor_polynomials, poly_frobenius

TABLE_N7 = {
    5: 469,
    11: 935870030557051,
    13: 12974326183623782445,
    17: 2663294067654074513871726265,
    19: 39042208951344950852613887707059,
}


class TestBound:
    def test_headline_value(self):
        rep = bound(Parameters(5, 7))
        assert rep.bound == 29991
        assert rep.fixed_orbit_count == 3
        assert rep.pgl_orbit_count == 149943

    @pytest.mark.parametrize("r,expected", sorted(TABLE_N7.items()))
    def test_length_129_table(self, r, expected):
        assert bound(Parameters(7, r)).bound == expected

    def test_term_breakdown(self):
        from fractions import Fraction

        rep = bound(Parameters(5, 7))
        assert rep.fixed_term == Fraction(12, 5)
        assert rep.pgl_term == Fraction(149943, 5)
        assert rep.fixed_term + rep.pgl_term == 29991

    def test_decomposition_identity(self):
        # bound*n - fixed*(n-1) = total PGL orbit count
        for n, r in [(5, 7), (7, 5), (7, 11), (11, 7), (13, 5)]:
            rep = bound(Parameters(n, r))
            assert rep.bound * n - rep.fixed_orbit_count * (n - 1) == rep.pgl_orbit_count

    def test_relaxed_parameters_refused(self):
        with pytest.raises(HypothesisError):
            bound(Parameters(3, 5, strict=False))

    def test_monotone_in_r(self):
        values = [bound(Parameters(7, r)).bound for r in sorted(TABLE_N7)]
        assert values == sorted(values)
        assert all(v >= 1 for v in values)


class TestOrbitCountFormulas:
    def test_pgl_orbit_count(self):
        assert pgl_orbit_count_formula(Parameters(5, 7)) == 149943
        assert 149943 * 32736 == 4908534048

    def test_relaxed_formula_matches_brute_force(self, gf8):
        # q = 8, r = 5 is outside the strict hypotheses but every
        # stabilizer is still trivial, so the division is exact
        count = pgl_orbit_count_formula(Parameters(3, 5, strict=False))
        assert count == 6552 // 504 == 13
        assert count == brute_force_orbit_count(gf8, 5, "PGL", "polynomials")

    def test_fixed_orbit_count(self):
        assert fixed_orbit_count_formula(Parameters(5, 7)) == 3
        assert fixed_orbit_count_formula(Parameters(7, 5)) == 1
        assert fixed_orbit_count_formula(Parameters(7, 11)) == 2046 // 66 == 31


class TestMakeTable:
    def test_length_129_rows(self):
        rows, rejected = make_table(7, [5, 11, 13, 17, 19])
        assert not rejected
        assert [rep.bound for rep in rows] == [TABLE_N7[r] for r in (5, 11, 13, 17, 19)]

    def test_r3_rejected_for_gcd(self):
        # 128^2 - 1 = 16383 = 3 * 43 * 127, so gcd(3, q(q^2-1)) = 3
        rows, rejected = make_table(7, [3, 5])
        assert len(rows) == 1
        assert rejected[0][0] == 3
        assert "gcd" in rejected[0][1]

    def test_single_row(self):
        rows, _ = make_table(5, [7])
        assert rows[0].bound == 29991


class TestBruteForce:
    def test_binary_cubics_single_orbit(self, gf2):
        # regression value recorded from the harness itself: the two
        # binary cubics x^3+x+1 and x^3+x^2+1 are swapped by x -> 1/x
        assert brute_force_orbit_count(gf2, 3, "PGL", "polynomials") == 1

    def test_pgl_on_quintics_matches_formula(self, gf8):
        assert brute_force_orbit_count(gf8, 5, "PGL", "polynomials") == 13
        assert 13 == 6552 // 504

    def test_semilinear_matches_on_small_field(self):
        gf4 = make_field(2)
        polys = brute_force_orbit_count(gf4, 3, "PGammaL", "polynomials")
        elems = brute_force_orbit_count(gf4, 3, "PGammaL", "elements")
        assert polys == elems

    def test_guards(self, gf32):
        with pytest.raises(GuardError):
            brute_force_orbit_count(gf32, 7, "PGL", "polynomials")
        with pytest.raises(GuardError):
            brute_force_orbit_count(gf32, 4, "PGL", "elements")

    def test_unknown_inputs(self, gf2):
        with pytest.raises(ValueError):
            brute_force_orbit_count(gf2, 3, "GL", "polynomials")
        with pytest.raises(ValueError):
            brute_force_orbit_count(gf2, 3, "PGL", "codes")


class TestGaloisOrbitSizes:
    def test_sigma_r_orbit_sizes_are_1_or_n(self, gf32, tower_5_7, rng):
        # follow sigma^r translates of PGL-orbits until they return:
        # the 3 fixed orbits return immediately, sampled others after n = 5
        params = Parameters(5, 7)
        divisors = divisor_polynomials(params, tower=tower_5_7)
        seeds = [divisors[0], divisors[6], divisors[12]]
        seeds += [random_irreducible(gf32, 7, rng) for _ in range(20)]
        for f in seeds:
            members = set(_pgl_orbit_members(gf32, f))
            g = f
            period = 0
            while True:
                g = poly_frobenius(gf32, g, 7)
                period += 1
                if g in members:
                    break
                assert period <= 5
            assert period in (1, 5)
