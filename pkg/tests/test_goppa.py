import random

import pytest

from oracles import coset_leader_table, naive_syndrome, rowspace, vectors_of_weight
from qmauth.errors import DecodeFailure, DimError, ParamError
from qmauth.gf2 import BitMatrix, BitVector, mat_mul, rank
from qmauth.gf2m import poly_deg, poly_eval
from qmauth.goppa import GoppaCode


@pytest.fixture(scope="module")
def toy():
    return GoppaCode.generate(4, 2, random.Random(71))


@pytest.fixture(scope="module")
def leaders(toy):
    return coset_leader_table(toy)


class TestConstruction:
    def test_toy_shape_and_invariants(self, toy):
        assert toy.n == 16
        assert toy.n1 == 8
        assert toy.syndrome_bits == 8
        assert poly_deg(toy.g) == 2
        assert toy.support == tuple(range(16))
        assert rank(toy.H) == 8
        assert rank(toy.G) == 8
        assert mat_mul(toy.G, toy.H.transpose()).is_zero()
        assert mat_mul(toy.G, toy.G_rinv) == BitMatrix.identity(8)
        assert all(poly_eval(toy.g, a, toy.field) != 0 for a in toy.support)

    def test_generator_rows_are_codewords(self, toy):
        for i in range(toy.G.nrows):
            assert toy.syndrome(toy.G.row(i)).bits == 0

    def test_minimum_distance(self, toy):
        # every nonzero codeword has weight >= 2t+1 = 5
        span = rowspace(toy.G)
        assert len(span) == 1 << 8
        assert min(v.bit_count() for v in span if v) >= 5

    def test_minimum_distance_small_code(self):
        code = GoppaCode.generate(3, 2, random.Random(72))
        assert code.n1 == 2
        span = rowspace(code.G)
        assert min(v.bit_count() for v in span if v) >= 5

    def test_demo_scale(self):
        code = GoppaCode.generate(5, 3, random.Random(73))
        assert (code.n, code.n1, code.syndrome_bits) == (32, 17, 15)
        assert rank(code.H) == 15
        assert mat_mul(code.G, code.H.transpose()).is_zero()
        assert mat_mul(code.G, code.G_rinv) == BitMatrix.identity(17)

    @pytest.mark.parametrize("m,t", [(1, 2), (7, 2), (4, 1), (4, 4), (5, 7)])
    def test_param_errors(self, m, t):
        with pytest.raises(ParamError):
            GoppaCode.generate(m, t, random.Random(0))

    def test_deterministic_from_polynomial(self, toy):
        again = GoppaCode.from_polynomial(4, 2, toy.g)
        assert again.H == toy.H
        assert again.G == toy.G
        assert again.G_rinv == toy.G_rinv


class TestEncodeSyndrome:
    def test_encode_zero(self, toy):
        assert toy.encode(BitVector(0, 8)) == BitVector(0, 16)

    def test_encode_unit_vectors(self, toy):
        for i in range(8):
            assert toy.encode(BitVector(1 << i, 8)) == toy.G.row(i)

    def test_random_encodings_have_zero_syndrome(self, toy):
        rng = random.Random(74)
        for _ in range(50):
            u = BitVector(rng.getrandbits(8), 8)
            assert toy.syndrome(toy.encode(u)).bits == 0

    def test_syndrome_zero_word(self, toy):
        assert toy.syndrome(BitVector(0, 16)).bits == 0

    def test_syndrome_matches_naive_oracle(self, toy):
        rng = random.Random(75)
        h_lists = toy.H.to_lists()
        for _ in range(100):
            y = BitVector(rng.getrandbits(16), 16)
            assert toy.syndrome(y).bits == naive_syndrome(y.to_bits(), h_lists)

    def test_coset_invariance_exhaustive(self, toy):
        span = sorted(rowspace(toy.G))
        for e in vectors_of_weight(16, 2):
            s = toy.syndrome(e)
            for cw in span:
                assert toy.syndrome(BitVector(cw ^ e.bits, 16)) == s

    def test_dim_errors(self, toy):
        with pytest.raises(DimError):
            toy.encode(BitVector(0, 7))
        with pytest.raises(DimError):
            toy.syndrome(BitVector(0, 15))


class TestDecode:
    def test_zero_syndrome(self, toy):
        assert toy.decode_syndrome(BitVector(0, 8)) == BitVector(0, 16)

    def test_exhaustive_weight_le_t(self, toy):
        count = 0
        for w in range(toy.t + 1):
            for e in vectors_of_weight(16, w):
                assert toy.decode_syndrome(toy.syndrome(e)) == e
                count += 1
        assert count == 1 + 16 + 120

    def test_undecodable_syndromes_fail(self, toy, leaders):
        misses = 0
        for s in range(1 << 8):
            if s in leaders:
                continue
            misses += 1
            with pytest.raises(DecodeFailure):
                toy.decode_syndrome(BitVector(s, 8))
        assert misses > 0

    def test_decode_agrees_with_leader_table(self, toy, leaders):
        for s, ebits in leaders.items():
            assert toy.decode_syndrome(BitVector(s, 8)).bits == ebits

    def test_depends_only_on_syndrome(self, toy):
        rng = random.Random(76)
        span = sorted(rowspace(toy.G))
        for _ in range(100):
            e = BitVector.from_positions(rng.sample(range(16), rng.randrange(3)), 16)
            cw = span[rng.randrange(len(span))]
            got = toy.decode_syndrome(toy.syndrome(BitVector(cw ^ e.bits, 16)))
            assert got == e

    def test_demo_scale_roundtrip(self):
        code = GoppaCode.generate(5, 3, random.Random(77))
        rng = random.Random(78)
        for _ in range(200):
            e = BitVector.from_positions(rng.sample(range(32), rng.randrange(4)), 32)
            assert code.decode_syndrome(code.syndrome(e)) == e

    @pytest.mark.parametrize("m,t", [(4, 3), (5, 4), (6, 2), (6, 5), (6, 10)])
    def test_full_parameter_range_roundtrip(self, m, t):
        # odd and even t exercise both error-locator split branches
        code = GoppaCode.generate(m, t, random.Random(m * 100 + t))
        rng = random.Random(79)
        for _ in range(60):
            w = rng.randrange(t + 1)
            e = BitVector.from_positions(rng.sample(range(code.n), w), code.n)
            assert code.decode_syndrome(code.syndrome(e)) == e

    def test_syndrome_length_checked(self, toy):
        with pytest.raises(DimError):
            toy.decode_syndrome(BitVector(0, 7))
