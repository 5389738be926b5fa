"""Systematic pre-code layer: a random standard-form [n, k] linear code.

The generator is G = [I_k | A] for a uniformly random k x (n-k) mixing
block A, so a codeword carries its message in the first k positions and
the parity check H = [A^T | I_{n-k}] is immediate.  The code needs no
error-correcting capability; it only marks membership, which is what the
authentication check tests.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property

from .errors import DimError, NotACodewordError, ParamError
from .gf2 import BitMatrix, BitVector, vec_mat


@dataclass(frozen=True)
class SystematicCode:
    k: int
    n: int
    A: BitMatrix        # k x (n-k) mixing block
    G: BitMatrix        # [I_k | A]
    H: BitMatrix        # [A^T | I_{n-k}]
    G_rinv: BitMatrix   # [I_k on top of a zero block], n x k

    @classmethod
    def from_mixing(cls, k: int, n: int, a: BitMatrix) -> "SystematicCode":
        if not 1 <= k < n:
            raise ParamError(f"need 1 <= k < n, got k={k}, n={n}")
        if a.nrows != k or a.cols != n - k:
            raise DimError(f"mixing block must be {k}x{n - k}, got {a.nrows}x{a.cols}")
        gen = BitMatrix(tuple((1 << i) | (a.rows[i] << k) for i in range(k)), n)
        a_t = a.transpose()
        chk = BitMatrix(tuple(a_t.rows[j] | (1 << (k + j)) for j in range(n - k)), n)
        rinv = BitMatrix(tuple(1 << i for i in range(k)) + (0,) * (n - k), k)
        return cls(k, n, a, gen, chk, rinv)

    @classmethod
    def random(cls, k: int, n: int, rng: random.Random) -> "SystematicCode":
        if not 1 <= k < n:
            raise ParamError(f"need 1 <= k < n, got k={k}, n={n}")
        a = BitMatrix(tuple(rng.getrandbits(n - k) for _ in range(k)), n - k)
        return cls.from_mixing(k, n, a)

    @cached_property
    def H_t(self) -> BitMatrix:
        return self.H.transpose()

    def encode(self, s: BitVector) -> BitVector:
        """s @ G; the first k bits of the result equal s."""
        if s.n != self.k:
            raise DimError(f"message length {s.n} != k={self.k}")
        return vec_mat(s, self.G)

    def check(self, x: BitVector) -> BitVector:
        """Parity check value x @ H^T (zero exactly on codewords)."""
        if x.n != self.n:
            raise DimError(f"word length {x.n} != n={self.n}")
        bits = 0
        for j, row in enumerate(self.H.rows):
            if (row & x.bits).bit_count() & 1:
                bits |= 1 << j
        return BitVector(bits, self.n - self.k)

    def verify(self, x: BitVector) -> bool:
        return self.check(x).bits == 0

    def recover(self, x: BitVector) -> BitVector:
        """Message of a codeword: its first k bits (equal to x @ G_rinv)."""
        if not self.verify(x):
            raise NotACodewordError("parity check failed")
        return x.prefix(self.k)
