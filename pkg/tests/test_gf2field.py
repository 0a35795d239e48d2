"""Field-tower tests.

The brute-force oracles here (trial-division irreducibility over GF(2),
repeated-multiplication element orders) are deliberately independent of
the library's own fast paths.
"""

import pytest

from goppa_orbits.errors import GuardError
from goppa_orbits.gf2field import (
    GF2m,
    Tower,
    elem_from_bits,
    elem_to_bits,
    make_field,
    make_tower,
    modulus_from_text,
    modulus_to_bits,
    modulus_to_text,
    smallest_irreducible,
    subfield_elements,
)
from goppa_orbits.polyq import Parameters, divisor_polynomials


# -- oracle: GF(2)[x] trial division on bit-packed ints ---------------------

def _gf2_divides(d, f):
    dd, df = d.bit_length() - 1, f.bit_length() - 1
    while df >= dd:
        f ^= d << (df - dd)
        df = f.bit_length() - 1
    return f == 0


def _oracle_irreducible(f):
    m = f.bit_length() - 1
    if m < 1:
        return False
    for d in range(2, 1 << m):
        if d.bit_length() - 1 >= 1 and _gf2_divides(d, f):
            return False
    return True


def _oracle_smallest_irreducible(m):
    for low in range(1 << m):
        f = (1 << m) | low
        if _oracle_irreducible(f):
            return f
    raise AssertionError


class TestModulusSelection:
    @pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6, 7, 8])
    def test_matches_exhaustive_scan(self, m):
        assert smallest_irreducible(m) == _oracle_smallest_irreducible(m)

    def test_binary_irreducibility_matches_trial_division(self):
        from goppa_orbits.gf2field import gf2_is_irreducible

        for f in range(2, 1 << 9):
            assert gf2_is_irreducible(f) == _oracle_irreducible(f), bin(f)

    def test_known_moduli(self):
        assert smallest_irreducible(1) == 0b10  # x
        assert smallest_irreducible(3) == 0b1011  # x^3+x+1
        assert smallest_irreducible(5) == 0b100101  # x^5+x^2+1

    def test_degree_guard(self):
        with pytest.raises(GuardError):
            make_field(0)
        with pytest.raises(GuardError):
            make_field(65)

    def test_reducible_modulus_rejected(self):
        with pytest.raises(ValueError):
            GF2m(3, 0b1111)  # x^3+x^2+x+1 = (x+1)(x^2+1)

    def test_text_forms_round_trip(self):
        mod = smallest_irreducible(3)
        assert modulus_to_text(mod) == "x^3+x+1"
        assert modulus_to_bits(mod) == "1101"
        assert modulus_from_text("x^3+x+1") == mod
        assert modulus_from_text("1101") == mod


class TestArithmetic:
    @pytest.mark.parametrize("m", [1, 3, 6, 11, 20, 35])
    def test_field_axioms_sampled(self, m, rng):
        gf = make_field(m)
        for _ in range(200):
            a = rng.randrange(gf.order)
            b = rng.randrange(gf.order)
            assert gf.add(a, a) == 0
            assert gf.mul(a, b) == gf.mul(b, a)
            if a:
                assert gf.mul(a, gf.inv(a)) == 1

    def test_hand_reduction_in_gf8(self, gf8):
        # x * x^2 = x^3 = x + 1 mod x^3+x+1
        assert gf8.mul(0b010, 0b100) == 0b011

    def test_pow(self, gf8, rng):
        for a in range(1, 8):
            assert gf8.pow(a, 7) == 1
            assert gf8.pow(a, 10**30) == gf8.pow(a, 10**30 % 7)
            assert gf8.pow(a, -1) == gf8.inv(a)
        assert gf8.pow(0, 0) == 1
        assert gf8.pow(0, 5) == 0

    def test_inv_zero_raises(self, gf8):
        with pytest.raises(ZeroDivisionError):
            gf8.inv(0)

    def test_out_of_range_rejected(self, gf8):
        with pytest.raises(ValueError):
            gf8.mul(8, 1)

    def test_table_and_clmul_paths_agree(self, rng):
        gf = make_field(9)
        for _ in range(300):
            a, b = rng.randrange(512), rng.randrange(512)
            assert gf.mul(a, b) == gf._mul_raw(a, b)


class TestFrobeniusAndTrace:
    @pytest.mark.parametrize("m", [1, 3, 5, 8])
    def test_frobenius_is_automorphism(self, m, rng):
        gf = make_field(m)
        for _ in range(100):
            a, b = rng.randrange(gf.order), rng.randrange(gf.order)
            k = rng.randrange(2 * m)
            assert gf.frobenius(a, 0) == a
            assert gf.frobenius(a, m) == a
            assert gf.frobenius(a ^ b, k) == gf.frobenius(a, k) ^ gf.frobenius(b, k)
            assert gf.frobenius(gf.mul(a, b), k) == gf.mul(gf.frobenius(a, k), gf.frobenius(b, k))

    def test_trace_values(self, gf8):
        assert gf8.trace(0) == 0
        for a in gf8.elements():
            assert gf8.trace(gf8.square(a) ^ a) == 0
        assert sum(1 for a in gf8.elements() if gf8.trace(a) == 0) == 4

    @pytest.mark.parametrize("n,r", [(3, 5), (3, 7), (5, 7), (5, 9)])
    def test_trace_image_identity(self, n, r):
        # {h^2 + h} and {h^(2^r) + h} coincide when gcd(r, n) = 1
        gf = make_field(n)
        squares = {gf.square(h) ^ h for h in gf.elements()}
        powers = {gf.frobenius(h, r) ^ h for h in gf.elements()}
        assert squares == powers


class TestTower:
    def test_embed_fixes_identity(self, tower_3_2):
        assert tower_3_2.embed(0) == 0
        assert tower_3_2.embed(1) == 1

    def test_embed_is_homomorphism_exhaustive(self, tower_3_2):
        t = tower_3_2
        for a in range(8):
            for b in range(8):
                assert t.embed(t.base.mul(a, b)) == t.ext.mul(t.embed(a), t.embed(b))
                assert t.embed(a ^ b) == t.embed(a) ^ t.embed(b)

    def test_embed_is_homomorphism_gf32_exhaustive(self, tower_5_7):
        t = tower_5_7
        for a in range(32):
            for b in range(32):
                assert t.embed(t.base.mul(a, b)) == t.ext.mul(t.embed(a), t.embed(b))

    def test_tower_coherence(self, tower_3_2, tower_5_7):
        # embedded base elements are fixed by the q-power Frobenius
        for t in (tower_3_2, tower_5_7):
            for a in range(t.base.order):
                assert t.frob_q(t.embed(a)) == t.embed(a)

    def test_embedded_generator_order(self, tower_3_2):
        # brute-force multiplication oracle for the order
        t = tower_3_2
        eg = t.embed(2)
        order, v = 1, eg
        while v != 1:
            v = t.ext.mul(v, eg)
            order += 1
        assert order == 7

    def test_root_is_smallest(self, tower_3_2):
        t = tower_3_2
        roots = [
            z
            for z in subfield_elements(t.ext, 3)
            if _eval_base_modulus(t, z) == 0
        ]
        assert t.root == min(roots)
        assert len(roots) == 3

    def test_unembed_round_trip(self, tower_5_7):
        t = tower_5_7
        for a in range(32):
            assert t.unembed(t.embed(a)) == a

    def test_unembed_outside_image_raises(self, tower_3_2):
        t = tower_3_2
        img = {t.embed(a) for a in range(8)}
        outside = next(y for y in range(t.ext.order) if y not in img)
        with pytest.raises(ValueError):
            t.unembed(outside)

    def test_degree_overflow_guard(self):
        with pytest.raises(GuardError):
            make_tower(5, 13)  # 65 bits

    def test_bad_root_rejected(self, tower_3_2):
        with pytest.raises(ValueError):
            Tower(tower_3_2.base, tower_3_2.ext, tower_3_2.root ^ 1)


def _eval_base_modulus(t, z):
    acc = 0
    mod = t.base.modulus
    for i in range(mod.bit_length() - 1, -1, -1):
        acc = t.ext.mul(acc, z)
        if (mod >> i) & 1:
            acc ^= 1
    return acc


class TestDegreeAndMinimalPolynomial:
    def test_degree_of_zero(self, tower_3_5):
        assert tower_3_5.degree_over(0) == 1

    def test_degree_of_full_generator(self, tower_3_5):
        # a multiplicative generator of GF(2^15)* has full degree (r = 5 prime)
        assert tower_3_5.degree_over(tower_3_5.ext.generator) == 5

    def test_degree_counts(self, tower_3_5):
        # exhaustive count of degree-5 elements vs the Möbius value 8^5 - 8
        count = sum(1 for a in range(tower_3_5.ext.order) if tower_3_5.degree_over(a) == 5)
        assert count == 32768 - 8 == 32760

    def test_base_elements_give_linear_minpoly(self, tower_3_2):
        t = tower_3_2
        for a in range(8):
            assert t.minimal_polynomial(t.embed(a)) == (a, 1)

    def test_minpoly_vanishes_at_argument(self, tower_3_5, rng):
        t = tower_3_5
        for _ in range(50):
            alpha = rng.randrange(t.ext.order)
            mp = t.minimal_polynomial(alpha)
            assert len(mp) - 1 == t.degree_over(alpha)
            acc = 0
            for c in reversed(mp):
                acc = t.ext.mul(acc, alpha) ^ t.embed(c)
            assert acc == 0

    def test_minpoly_irreducible_by_trial_division(self, tower_3_5, rng):
        # oracle: no factor of degree <= 2 over GF(8)
        from goppa_orbits.polyq import poly_mod

        t = tower_3_5
        gf = t.base
        small = [(a, 1) for a in range(8)]
        small += [
            (c0, c1, 1)
            for c0 in range(8)
            for c1 in range(8)
            if all(poly_eval_oracle(gf, (c0, c1, 1), a) for a in range(8))
        ]
        for _ in range(10):
            alpha = rng.randrange(t.ext.order)
            if t.degree_over(alpha) != 5:
                continue
            mp = t.minimal_polynomial(alpha)
            assert all(poly_mod(gf, mp, d) != () for d in small)


def poly_eval_oracle(gf, f, a):
    acc = 0
    for c in reversed(f):
        acc = gf.mul(acc, a) ^ c
    return acc


class TestEmbeddingIndependence:
    def test_second_root_gives_identical_divisor_set(self):
        params = Parameters(3, 5, strict=False)
        first = divisor_polynomials(params, tower=make_tower(3, 5, root_choice=0))
        second = divisor_polynomials(params, tower=make_tower(3, 5, root_choice=1))
        assert first == second

    def test_second_root_is_still_homomorphism(self):
        t = make_tower(3, 2, root_choice=1)
        for a in range(8):
            for b in range(8):
                assert t.embed(t.base.mul(a, b)) == t.ext.mul(t.embed(a), t.embed(b))


class TestElementBits:
    def test_round_trip(self):
        assert elem_to_bits(0b011, 3) == "110"
        assert elem_from_bits("110") == 0b011
        assert elem_from_bits(elem_to_bits(37, 6)) == 37
