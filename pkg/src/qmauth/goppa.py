"""Binary irreducible Goppa codes: construction and syndrome decoding.

The code is defined by an irreducible degree-t polynomial g over GF(2^m)
and the full support L = (0, 1, ..., 2^m - 1) in value order.  The
parity check over GF(2^m) has entry (i, j) = L_j^i / g(L_j); expanding
each entry into m binary rows gives the (m*t) x n binary check H.  The
generator G is the deterministic echelon nullspace basis of H, so
n1 = n - m*t data bits enter each codeword.

decode_syndrome is a Patterson decoder: it maps a binary syndrome to the
unique error pattern of weight <= t in that coset, or raises
DecodeFailure when no such pattern exists.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property

from . import gf2m
from .errors import DecodeFailure, DimError, ParamError, RankError
from .gf2 import BitMatrix, BitVector, nullspace, rank, right_inverse, solve
from .gf2m import (
    FieldParams,
    P_X,
    P_ZERO,
    Poly,
    fe_inv,
    fe_mul,
    poly_add,
    poly_deg,
    poly_eea_bounded,
    poly_eval,
    poly_inv_mod,
    poly_mul,
    poly_shift,
    poly_sqrt_mod,
)

MAX_M = 6


@dataclass(frozen=True)
class GoppaCode:
    field: FieldParams
    t: int
    g: Poly
    support: tuple[int, ...]
    H: BitMatrix          # (m*t) x n binary parity check
    G: BitMatrix          # n1 x n generator, echelon nullspace basis of H
    G_rinv: BitMatrix     # n x n1 right inverse of G
    locator_invs: tuple[Poly, ...]  # (z + L_i)^-1 mod g, per support position

    @property
    def n(self) -> int:
        return len(self.support)

    @property
    def n1(self) -> int:
        return self.G.nrows

    @property
    def syndrome_bits(self) -> int:
        return self.field.m * self.t

    @cached_property
    def H_t(self) -> BitMatrix:
        return self.H.transpose()

    @classmethod
    def from_polynomial(cls, m: int, t: int, g: Poly) -> "GoppaCode":
        """Deterministic construction from a fixed Goppa polynomial."""
        _check_params(m, t)
        if poly_deg(g) != t:
            raise ParamError(f"polynomial degree {poly_deg(g)} != t={t}")
        fp = FieldParams.for_degree(m)
        n = fp.order
        support = tuple(range(n))
        g_at = [poly_eval(g, a, fp) for a in support]
        if any(v == 0 for v in g_at):
            raise ParamError("Goppa polynomial vanishes on the support")

        # Parity check over GF(2^m): row i, column j holds L_j^i / g(L_j).
        g_inv_at = [fe_inv(v, fp) for v in g_at]
        powers = [1] * n
        rows_bin = []
        for i in range(t):
            if i:
                powers = [fe_mul(p, a, fp) for p, a in zip(powers, support)]
            entries = [fe_mul(p, d, fp) for p, d in zip(powers, g_inv_at)]
            for bit in range(m):
                rowbits = 0
                for j, e in enumerate(entries):
                    if e >> bit & 1:
                        rowbits |= 1 << j
                rows_bin.append(rowbits)
        H = BitMatrix(tuple(rows_bin), n)
        if rank(H) != m * t:
            raise RankError("binary parity check is rank deficient")

        G = nullspace(H)
        locator_invs = tuple(poly_inv_mod((a, 1), g, fp) for a in support)
        return cls(fp, t, g, support, H, G, right_inverse(G), locator_invs)

    @classmethod
    def generate(cls, m: int, t: int, rng: random.Random) -> "GoppaCode":
        """Draw irreducible g until the binary check has full rank m*t."""
        _check_params(m, t)
        fp = FieldParams.for_degree(m)
        while True:
            g = gf2m.random_irreducible(t, fp, rng)
            try:
                return cls.from_polynomial(m, t, g)
            except RankError:
                continue

    def encode(self, u: BitVector) -> BitVector:
        if u.n != self.n1:
            raise DimError(f"encode: message length {u.n} != {self.n1}")
        acc = 0
        x = u.bits
        while x:
            j = (x & -x).bit_length() - 1
            acc ^= self.G.rows[j]
            x &= x - 1
        return BitVector(acc, self.n)

    def syndrome(self, y: BitVector) -> BitVector:
        """y @ H^T; identical for every member of y's coset."""
        if y.n != self.n:
            raise DimError(f"syndrome: word length {y.n} != {self.n}")
        bits = 0
        for i, row in enumerate(self.H.rows):
            if (row & y.bits).bit_count() & 1:
                bits |= 1 << i
        return BitVector(bits, self.syndrome_bits)

    def decode_syndrome(self, s: BitVector) -> BitVector:
        """Error pattern of weight <= t with the given syndrome.

        Raises DecodeFailure when the coset has no such pattern (the
        caller treats that as a protocol rejection, not a fault).
        """
        if s.n != self.syndrome_bits:
            raise DimError(f"syndrome length {s.n} != {self.syndrome_bits}")
        fp, g = self.field, self.g

        # 1. Any word with this syndrome (free variables zero).
        rep = solve(self.H, s)

        # 2. Syndrome polynomial S(z) = sum over set positions of 1/(z + L_i).
        sp: Poly = P_ZERO
        x = rep.bits
        while x:
            i = (x & -x).bit_length() - 1
            sp = poly_add(sp, self.locator_invs[i])
            x &= x - 1

        # 3. Zero syndrome polynomial means the representative is a codeword.
        if not sp:
            return BitVector(0, self.n)

        # 4. Error locator sigma via the Patterson split
        #    sigma = a^2 + z*b^2 with a = sqrt(S^-1 + z) * b mod g.
        t_poly = poly_inv_mod(sp, g, fp)
        if t_poly == P_X:
            sigma: Poly = P_X
        else:
            r = poly_sqrt_mod(poly_add(t_poly, P_X), g, fp)
            a, b = poly_eea_bounded(g, r, self.t // 2, fp)
            sigma = poly_add(poly_mul(a, a, fp), poly_shift(poly_mul(b, b, fp), 1))

        # 5. Error positions are the support roots of sigma.
        ebits = 0
        count = 0
        for i, alpha in enumerate(self.support):
            if poly_eval(sigma, alpha, fp) == 0:
                ebits |= 1 << i
                count += 1
        e = BitVector(ebits, self.n)

        # 6. Undecodable syndromes make Patterson emit garbage; verify.
        if count != poly_deg(sigma) or self.syndrome(e) != s:
            raise DecodeFailure("no error pattern of weight <= t matches the syndrome")
        return e


def _check_params(m: int, t: int) -> None:
    if not 2 <= m <= MAX_M:
        raise ParamError(f"m={m} outside supported range 2..{MAX_M}")
    if t < 2:
        # A degree-1 Goppa polynomial always has its root inside the full
        # support, which the construction cannot tolerate.
        raise ParamError("t must be >= 2 for the full-support construction")
    if m * t >= 1 << m:
        raise ParamError(f"m*t = {m * t} must stay below n = {1 << m}")
