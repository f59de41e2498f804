"""The oracle layer itself: group law, endomorphism, and primality helpers."""

import random

import pytest

from cm7prime.jk_sequence import jk_closed
from cm7prime.mont_curve import ModulusCtx, sqrt_minus7
from cm7prime.refcheck import (AffinePoint, alpha_endomorphism, curve_rhs,
                               enumerate_points, on_curve, probable_prime,
                               sqrt_mod, trial_division, weier_add,
                               weier_scalar_mult)
from cm7prime.twist_tables import select_twist

PRIME_KS = (2, 3, 4, 5, 7, 9, 10, 17, 18)


def _twist_start(k: int):
    t = select_twist(k)
    return t.a, AffinePoint(*t.point)


class TestTrialDivision:
    def test_examples(self):
        assert trial_division(8327, 10**4) == 11
        assert trial_division(275, 10**4) == 5
        assert trial_division(524087, 10**3) is None
        assert trial_division(524087, 10**6) is None
        assert trial_division(11, 10**4) is None  # a prime has no proper factor
        assert trial_division(121, 12) == 11
        assert trial_division(121, 10) is None  # bound too small

    def test_rejects_tiny(self):
        with pytest.raises(ValueError):
            trial_division(1, 100)

    def test_random_products(self):
        rng = random.Random(0xFAC7)
        primes = [p for p in range(2, 500)
                  if all(p % q for q in range(2, p))]
        for _ in range(200):
            p, q = rng.choice(primes), rng.choice(primes)
            found = trial_division(p * q, 500)
            assert found == min(p, q)


class TestProbablePrime:
    def test_examples(self):
        assert probable_prime(524087)
        assert probable_prime(1046579)
        assert not probable_prime(8327)
        assert probable_prime(11)
        assert not probable_prime(275)

    def test_rejects_even_and_tiny(self):
        with pytest.raises(ValueError):
            probable_prime(10)
        with pytest.raises(ValueError):
            probable_prime(1)

    def test_matches_trial_division_to_ten_thousand(self):
        for n in range(3, 10**4, 2):
            assert probable_prime(n) == (trial_division(n, n) is None), n


class TestGroupLaw:
    def test_identity_and_inverse(self):
        a, P = _twist_start(3)
        p = 23
        assert weier_add(P, None, a, p) == P
        assert weier_add(None, P, a, p) == P
        neg = AffinePoint(P.x, (-P.y) % p)
        assert weier_add(P, neg, a, p) is None

    def test_commutative_and_associative_samples(self):
        p = 524087
        a, P = _twist_start(17)
        pts = [weier_scalar_mult(e, P, a, p) for e in (1, 5, 11, 123, 4567)]
        for A in pts:
            for B in pts:
                assert weier_add(A, B, a, p) == weier_add(B, A, a, p)
        for A, B, C in zip(pts, pts[1:], pts[2:]):
            lhs = weier_add(weier_add(A, B, a, p), C, a, p)
            rhs = weier_add(A, weier_add(B, C, a, p), a, p)
            assert lhs == rhs

    def test_scalar_mult_basics(self):
        a, P = _twist_start(3)
        p = 23
        assert weier_scalar_mult(1, P, a, p) == P
        assert weier_scalar_mult(0, P, a, p) is None
        two_p = weier_scalar_mult(2, P, a, p)
        assert two_p == weier_add(P, P, a, p)
        assert weier_scalar_mult(-1, P, a, p) == AffinePoint(P.x, (-P.y) % p)

    def test_off_curve_rejected(self):
        with pytest.raises(ValueError):
            weier_scalar_mult(2, AffinePoint(0, 1), -1, 23)

    def test_bad_moduli_rejected(self):
        a, P = _twist_start(3)
        with pytest.raises(ValueError):
            weier_scalar_mult(2, P, a, 7)  # 7 divides the discriminant
        with pytest.raises(ValueError):
            weier_scalar_mult(2, P, a, 2)
        with pytest.raises(ValueError):
            weier_scalar_mult(2, P, -6, 3)  # p | a

    def test_start_point_order_is_two_to_k_plus_one(self):
        for k in PRIME_KS:
            p = jk_closed(k).value
            a, P = _twist_start(k)
            assert on_curve(P, a, p)
            assert weier_scalar_mult(2 ** (k + 1), P, a, p) is None, k
            assert weier_scalar_mult(2 ** k, P, a, p) is not None, k

    def test_order_sixteen_mod_23(self):
        a, P = _twist_start(3)
        assert weier_scalar_mult(16, P, a, 23) is None
        assert weier_scalar_mult(8, P, a, 23) is not None


class TestAlphaEndomorphism:
    def test_composition_with_conjugate_is_doubling(self):
        for p in (23, 524087):
            k = 3 if p == 23 else 17
            a, P0 = _twist_start(k)
            d = sqrt_minus7(ModulusCtx(p))
            rng = random.Random(p)
            for _ in range(50):
                e = rng.randrange(1, 2 ** (k + 1))
                P = weier_scalar_mult(e, P0, a, p)
                img = alpha_endomorphism(alpha_endomorphism(P, a, d, p),
                                         a, (-d) % p, p)
                assert img == weier_scalar_mult(2 * e, P0, a, p), (p, e)

    def test_image_lands_on_curve(self):
        p = 524087
        a, P0 = _twist_start(17)
        d = sqrt_minus7(ModulusCtx(p))
        for e in (1, 2, 3, 1000, 99999):
            img = alpha_endomorphism(weier_scalar_mult(e, P0, a, p), a, d, p)
            assert on_curve(img, a, p)

    def test_identity_maps_to_identity(self):
        d = sqrt_minus7(ModulusCtx(23))
        assert alpha_endomorphism(None, -1, d, 23) is None

    def test_kernel_is_a_single_two_torsion_point(self):
        p = 23
        a = -1
        d = sqrt_minus7(ModulusCtx(p))
        two_torsion = [P for P in enumerate_points(a, p)
                       if P is not None and P.y == 0]
        killed = [P for P in two_torsion
                  if alpha_endomorphism(P, a, d, p) is None]
        assert len(killed) == 1  # degree 2: kernel = {O, one 2-torsion point}
        survivors = [P for P in two_torsion if P not in killed]
        for P in survivors:
            assert alpha_endomorphism(P, a, d, p) is not None

    def test_rejects_wrong_d(self):
        with pytest.raises(ValueError):
            alpha_endomorphism(AffinePoint(1, 8), -1, 3, 23)  # 9 != -7 mod 23

    def test_homomorphism_samples(self):
        p = 151
        a, P0 = _twist_start(5)
        d = sqrt_minus7(ModulusCtx(p))
        rng = random.Random(151)
        for _ in range(30):
            e1, e2 = rng.randrange(64), rng.randrange(64)
            A = weier_scalar_mult(e1, P0, a, p)
            B = weier_scalar_mult(e2, P0, a, p)
            lhs = alpha_endomorphism(weier_add(A, B, a, p), a, d, p)
            rhs = weier_add(alpha_endomorphism(A, a, d, p),
                            alpha_endomorphism(B, a, d, p), a, p)
            assert lhs == rhs


class TestSqrtMod:
    def test_examples(self):
        assert sqrt_mod(2, 23) in (5, 18)  # 5^2 = 25 = 2 = 18^2 mod 23
        assert sqrt_mod(-7, 23) in (4, 19)
        assert sqrt_mod(5, 23) is None  # 5 is a non-residue mod 23

    def test_rejects_one_mod_four(self):
        with pytest.raises(ValueError):
            sqrt_mod(2, 13)

    def test_all_residues_mod_151(self):
        squares = {x * x % 151 for x in range(151)}
        for n in range(151):
            r = sqrt_mod(n, 151)
            if n in squares:
                assert r is not None and r * r % 151 == n
            else:
                assert r is None


class TestEnumeratePoints:
    def test_count_matches_curve_order(self):
        # over F_{J_k} with the selected twist the group has order 2^(k+2)
        # (structure Z/2^(k+1) x Z/2; the start point generates the big part)
        for k in (2, 3, 4):
            p = jk_closed(k).value
            a, _ = _twist_start(k)
            count = sum(1 for _ in enumerate_points(a, p))
            assert count == 2 ** (k + 2), k

    def test_count_matches_quadratic_character_sum(self):
        p = 67
        a = -1
        squares = {x * x % p for x in range(1, p)}
        expected = 1  # identity
        for x in range(p):
            r = curve_rhs(x, a, p)
            expected += 2 if r in squares else (1 if r == 0 else 0)
        assert sum(1 for _ in enumerate_points(a, p)) == expected

    def test_every_point_is_on_the_curve(self):
        for P in enumerate_points(-5, 67):
            assert on_curve(P, -5, 67)

    def test_identity_comes_first(self):
        it = enumerate_points(-1, 23)
        assert next(it) is None
