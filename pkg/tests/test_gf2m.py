import random
from itertools import product

import pytest

from oracles import (
    build_exp_log_tables,
    naive_poly_divmod,
    naive_poly_mul,
    table_mul,
    trial_division_irreducible,
)
from qmauth.errors import FormatError, NotInvertibleError, ParamError, ZeroInverseError
from qmauth.gf2m import (
    FieldParams,
    P_ONE,
    P_X,
    P_ZERO,
    fe_inv,
    fe_mul,
    fe_pow,
    is_irreducible,
    poly_add,
    poly_deg,
    poly_divmod,
    poly_eea_bounded,
    poly_eval,
    poly_from_text,
    poly_inv_mod,
    poly_mod,
    poly_mul,
    poly_mul_mod,
    poly_sqrt_mod,
    poly_to_text,
    random_irreducible,
)

FP4 = FieldParams.for_degree(4)
FP5 = FieldParams.for_degree(5)


def random_poly(max_deg, fp, rng):
    from qmauth.gf2m import poly_norm

    return poly_norm(rng.randrange(fp.order) for _ in range(rng.randrange(max_deg + 1)))


class TestFieldElems:
    def test_mul_identity_and_zero(self):
        for x in range(FP4.order):
            assert fe_mul(x, 1, FP4) == x
            assert fe_mul(x, 0, FP4) == 0

    def test_z_times_z3_reduces(self):
        # z * z^3 = z^4 = z + 1 mod z^4+z+1
        assert fe_mul(0x2, 0x8, FP4) == 0x3

    def test_mul_matches_table_oracle(self):
        exp, log = build_exp_log_tables(4, FP4.modulus)
        for a, b in product(range(16), repeat=2):
            assert fe_mul(a, b, FP4) == table_mul(a, b, exp, log)

    def test_inv_of_one(self):
        assert fe_inv(1, FP4) == 1

    def test_inv_example(self):
        # z * (z^3 + 1) = z^4 + z = 1 mod z^4+z+1
        assert fe_inv(0x2, FP4) == 0x9

    @pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
    def test_inv_exhaustive(self, m):
        fp = FieldParams.for_degree(m)
        for a in range(1, fp.order):
            assert fe_mul(a, fe_inv(a, fp), fp) == 1

    def test_inv_of_zero(self):
        with pytest.raises(ZeroInverseError):
            fe_inv(0, FP4)

    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_field_axioms_exhaustive(self, m):
        fp = FieldParams.for_degree(m)
        elems = range(fp.order)
        for a, b, c in product(elems, repeat=3):
            assert fe_mul(fe_mul(a, b, fp), c, fp) == fe_mul(a, fe_mul(b, c, fp), fp)
            assert fe_mul(a, b ^ c, fp) == fe_mul(a, b, fp) ^ fe_mul(a, c, fp)

    def test_pow(self):
        fp = FP4
        for a in range(1, fp.order):
            assert fe_pow(a, fp.order - 1, fp) == 1

    def test_unknown_degree(self):
        with pytest.raises(ParamError):
            FieldParams.for_degree(9)


class TestPolyMulMod:
    def test_times_one(self):
        rng = random.Random(30)
        g = random_irreducible(3, FP4, rng)
        for _ in range(20):
            a = random_poly(2, FP4, rng)
            assert poly_mul_mod(a, P_ONE, g, FP4) == poly_mod(a, g, FP4)

    def test_times_zero(self):
        g = (1, 0, 1, 1)
        assert poly_mul_mod((3, 5), P_ZERO, g, FP4) == P_ZERO

    def test_against_naive_oracle(self):
        rng = random.Random(31)
        mul = lambda x, y: fe_mul(x, y, FP4)
        inv = lambda x: fe_inv(x, FP4)
        g = random_irreducible(3, FP4, rng)
        for _ in range(50):
            a = random_poly(2, FP4, rng)
            b = random_poly(2, FP4, rng)
            _, expect = naive_poly_divmod(naive_poly_mul(a, b, mul), g, mul, inv)
            assert poly_mul_mod(a, b, g, FP4) == expect


class TestPolyInvMod:
    def test_one(self):
        g = (2, 0, 1)
        assert poly_inv_mod(P_ONE, g, FP4) == P_ONE

    def test_multiply_back(self):
        rng = random.Random(32)
        g = random_irreducible(3, FP4, rng)
        for _ in range(50):
            f = random_poly(2, FP4, rng)
            if not f:
                continue
            assert poly_mul_mod(f, poly_inv_mod(f, g, FP4), g, FP4) == P_ONE

    def test_zero_not_invertible(self):
        g = random_irreducible(2, FP4, random.Random(33))
        with pytest.raises(NotInvertibleError):
            poly_inv_mod(P_ZERO, g, FP4)
        with pytest.raises(NotInvertibleError):
            poly_inv_mod(poly_mul(g, (3,), FP4), g, FP4)


class TestPolySqrtMod:
    def test_sqrt_of_one(self):
        g = random_irreducible(2, FP4, random.Random(34))
        assert poly_sqrt_mod(P_ONE, g, FP4) == P_ONE

    @pytest.mark.parametrize("m,t,seed", [(4, 2, 35), (5, 3, 36)])
    def test_square_then_sqrt(self, m, t, seed):
        fp = FieldParams.for_degree(m)
        rng = random.Random(seed)
        g = random_irreducible(t, fp, rng)
        for _ in range(500):
            h = poly_mod(random_poly(t - 1, fp, rng), g, fp)
            assert poly_sqrt_mod(poly_mul_mod(h, h, g, fp), g, fp) == h

    @pytest.mark.parametrize("m,t,seed", [(4, 2, 37), (5, 3, 38)])
    def test_sqrt_then_square(self, m, t, seed):
        fp = FieldParams.for_degree(m)
        rng = random.Random(seed)
        g = random_irreducible(t, fp, rng)
        for _ in range(500):
            f = poly_mod(random_poly(t - 1, fp, rng), g, fp)
            r = poly_sqrt_mod(f, g, fp)
            assert poly_mul_mod(r, r, g, fp) == f


class TestEeaBounded:
    def test_zero_b(self):
        assert poly_eea_bounded((0, 0, 1), P_ZERO, 0, FP4) == (P_ZERO, P_ZERO)

    def test_exact_division(self):
        # a = z^2, b = z: remainder 0 with coefficient z
        r, u = poly_eea_bounded((0, 0, 1), P_X, 0, FP4)
        assert r == P_ZERO
        assert u == P_X

    @pytest.mark.parametrize("m,t,seed", [(4, 2, 40), (5, 3, 41), (4, 4, 42)])
    def test_congruence_and_degree_bounds(self, m, t, seed):
        fp = FieldParams.for_degree(m)
        rng = random.Random(seed)
        g = random_irreducible(t, fp, rng)
        stop = t // 2
        for _ in range(200):
            b = poly_mod(random_poly(t - 1, fp, rng), g, fp)
            r, u = poly_eea_bounded(g, b, stop, fp)
            assert poly_deg(r) <= stop
            # r = u*b (mod g)
            assert poly_mod(poly_add(r, poly_mul(u, b, fp)), g, fp) == P_ZERO
            if b:
                assert poly_deg(u) <= t - stop - 1 or poly_deg(r) == poly_deg(b)


class TestRandomIrreducible:
    def test_degree_one_always(self):
        rng = random.Random(43)
        for _ in range(10):
            g = random_irreducible(1, FP4, rng)
            assert poly_deg(g) == 1 and g[-1] == 1

    def test_no_field_roots(self):
        rng = random.Random(44)
        for t in (2, 3):
            g = random_irreducible(t, FP5, rng)
            assert all(poly_eval(g, a, FP5) != 0 for a in range(FP5.order))

    def test_trial_division_oracle_m4_t2(self):
        rng = random.Random(45)
        mul = lambda x, y: fe_mul(x, y, FP4)
        inv = lambda x: fe_inv(x, FP4)
        for _ in range(10):
            g = random_irreducible(2, FP4, rng)
            assert trial_division_irreducible(g, FP4.order, mul, inv)

    @pytest.mark.parametrize("m", [3, 4, 5])
    @pytest.mark.parametrize("t", [2, 3])
    def test_trial_division_oracle_sweep(self, m, t):
        fp = FieldParams.for_degree(m)
        rng = random.Random(46 + m * 10 + t)
        mul = lambda x, y: fe_mul(x, y, fp)
        inv = lambda x: fe_inv(x, fp)
        g = random_irreducible(t, fp, rng)
        assert trial_division_irreducible(g, fp.order, mul, inv)

    def test_is_irreducible_rejects_products(self):
        rng = random.Random(47)
        a = random_irreducible(1, FP4, rng)
        b = random_irreducible(2, FP4, rng)
        assert not is_irreducible(poly_mul(a, b, FP4), FP4)


class TestPolyText:
    def test_roundtrip(self):
        rng = random.Random(48)
        for _ in range(30):
            p = random_poly(5, FP5, rng)
            assert poly_from_text(poly_to_text(p)) == p

    def test_zero(self):
        assert poly_to_text(P_ZERO) == ""
        assert poly_from_text("") == P_ZERO

    def test_degree_zero_first(self):
        assert poly_to_text((8, 7, 1)) == "8,7,1"

    def test_rejects_trailing_zero(self):
        with pytest.raises(FormatError):
            poly_from_text("1,0")

    def test_rejects_garbage(self):
        with pytest.raises(FormatError):
            poly_from_text("1,zz")


def test_divmod_reconstructs():
    rng = random.Random(49)
    for _ in range(100):
        a = random_poly(6, FP4, rng)
        b = random_poly(4, FP4, rng)
        if not b:
            continue
        q, r = poly_divmod(a, b, FP4)
        assert poly_add(poly_mul(q, b, FP4), r) == a
        assert poly_deg(r) < poly_deg(b)
