"""Classical authentication pipeline.

Encoding masks the pre-coded message with the disguised generator and a
random weight-bounded error; decoding strips the permutation, corrects
the error through the Goppa decoder, unwinds the scrambler, and accepts
only words that pass the pre-code parity check.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass

from .errors import DecodeFailure, DimError
from .gf2 import BitVector, vec_mat
from .keys import ErrorWeightPolicy, PrivateKey, SenderKey


class RejectReason(enum.Enum):
    DECODE_FAILURE = "decode-failure"
    AUTH_CHECK_FAILED = "auth-check-failed"
    RESIDUE_NONZERO = "residue-nonzero"


@dataclass(frozen=True)
class ClassicalVerdict:
    accepted: bool
    message: BitVector | None = None
    reason: RejectReason | None = None

    @classmethod
    def accept(cls, message: BitVector) -> "ClassicalVerdict":
        return cls(True, message=message)

    @classmethod
    def reject(cls, reason: RejectReason) -> "ClassicalVerdict":
        return cls(False, reason=reason)


def random_error_vector(n: int, t: int, policy: ErrorWeightPolicy, rng: random.Random) -> BitVector:
    """Random error: weight exactly t, or uniform weight in 0..t."""
    w = t if policy is ErrorWeightPolicy.EXACTLY_T else rng.randrange(t + 1)
    bits = 0
    count = 0
    while count < w:
        p = rng.randrange(n)
        if not bits >> p & 1:
            bits |= 1 << p
            count += 1
    return BitVector(bits, n)


def c_encode(
    s: BitVector,
    sk: SenderKey,
    rng: random.Random | None = None,
    policy: ErrorWeightPolicy = ErrorWeightPolicy.EXACTLY_T,
    error: BitVector | None = None,
) -> tuple[BitVector, BitVector]:
    """Authenticated word for message s, plus the error that was added.

    The error is returned for experiment introspection only; it is not
    part of what travels to the receiver.  ``error`` forces a specific
    pattern instead of drawing one.
    """
    if s.n != sk.params.k:
        raise DimError(f"message length {s.n} != k={sk.params.k}")
    n = sk.G_pub.cols
    word = vec_mat(sk.precode.encode(s), sk.G_pub)
    if error is None:
        if rng is None:
            raise ValueError("either rng or a forced error is required")
        error = random_error_vector(n, sk.t, policy, rng)
    elif error.n != n:
        raise DimError(f"error length {error.n} != n={n}")
    return word ^ error, error


def c_decode(ct: BitVector, priv: PrivateKey) -> ClassicalVerdict:
    """Decode and authenticate a received word."""
    if ct.n != priv.params.n:
        raise DimError(f"word length {ct.n} != n={priv.params.n}")
    y = priv.P_inv.apply(ct)
    try:
        e = priv.goppa.decode_syndrome(priv.goppa.syndrome(y))
    except DecodeFailure:
        return ClassicalVerdict.reject(RejectReason.DECODE_FAILURE)
    u = vec_mat(y ^ e, priv.goppa.G_rinv)
    x = vec_mat(u, priv.S_inv)
    if not priv.precode.verify(x):
        return ClassicalVerdict.reject(RejectReason.AUTH_CHECK_FAILED)
    return ClassicalVerdict.accept(priv.precode.recover(x))
