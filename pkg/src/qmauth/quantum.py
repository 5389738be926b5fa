"""Quantum authentication pipeline over the register machine.

Encoding entangles nothing: it writes the masked codeword of each basis
message into register II, uncomputes register I through the right
inverses, and flips a random weight-bounded error onto II.  Decoding
measures the Goppa syndrome (a constant across the superposition, so the
message is undisturbed), corrects, then unwinds scrambler and pre-code
while checking that every work register returns to |0>.

The channel model is a constant XOR on register II; replacing the state
wholesale is modeled by simply feeding a different state file into
decode.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .classical import RejectReason, random_error_vector
from .errors import DecodeFailure, DimError
from .gf2 import BitVector
from .keys import ErrorWeightPolicy, PrivateKey, SenderKey
from .qsim import QState, QuantumMessage, RegisterLayout


@dataclass(frozen=True)
class TransmittedState:
    """What leaves the sender: payload in register II, everything else |0>.

    ``error`` is the pattern the encoder flipped onto the payload; it is
    kept for experiment introspection only and is not transmitted.
    """

    state: QState
    error: BitVector | None = None


@dataclass(frozen=True)
class QuantumVerdict:
    accepted: bool
    message: QuantumMessage | None = None
    reason: RejectReason | None = None

    @classmethod
    def accept(cls, message: QuantumMessage) -> "QuantumVerdict":
        return cls(True, message=message)

    @classmethod
    def reject(cls, reason: RejectReason) -> "QuantumVerdict":
        return cls(False, reason=reason)


def scheme_layout(params) -> RegisterLayout:
    return RegisterLayout.for_scheme(params.k, params.n, params.n1)


def q_encode(
    msg: QuantumMessage,
    sk: SenderKey,
    rng: random.Random | None = None,
    policy: ErrorWeightPolicy = ErrorWeightPolicy.EXACTLY_T,
    error: BitVector | None = None,
) -> TransmittedState:
    """Prepare the transmitted state for a message superposition."""
    params = sk.params
    st = QState.from_message(msg, scheme_layout(params))

    st.xor_linear("I", "II", sk.encode_matrix)       # II = m Gs Gp per branch
    st.xor_linear("II", "I", sk.uncompute_matrix)    # I ^= II (Gs Gp)^-R = m, clearing I
    residue = st.constant_value("I")
    if residue is None or residue.bits:
        raise AssertionError("encoder failed to uncompute register I")  # pragma: no cover

    if error is None:
        if rng is None:
            raise ValueError("either rng or a forced error is required")
        error = random_error_vector(params.n, params.t, policy, rng)
    st.xor_const("II", error)
    return TransmittedState(st, error)


def channel_tamper(ts: TransmittedState, d: BitVector) -> None:
    """Constant bit-flip attack on the payload register; d = 0 is a clean channel."""
    ts.state.xor_const("II", d)


def q_decode(
    ts: TransmittedState,
    priv: PrivateKey,
    rng: random.Random,
    trace: dict | None = None,
) -> QuantumVerdict:
    """Decode, authenticate, and extract the message superposition.

    ``trace``, when given, receives measurement-level diagnostics
    (syndrome, support sizes around the syndrome measurement, the
    corrected error, the final parity check value).
    """
    params = priv.params
    st = ts.state
    if st.layout != scheme_layout(params):
        raise DimError(f"state layout {st.layout.describe()} does not match the key")
    code = priv.goppa
    pre = priv.precode
    mt = code.syndrome_bits

    # Undo the permutation, then compute the syndrome into III.  The
    # syndrome depends only on the error coset, so III is classical and
    # measuring it cannot collapse the message superposition.
    st.apply_invertible("II", priv.P_inv.to_matrix())
    st.xor_linear("II", "III", code.H_t)
    support_before = st.support_size
    measured = st.measure_register("III", rng)
    support_after = st.support_size
    st.xor_const("III", measured)                    # classical reset of III
    syndrome = BitVector(measured.bits & ((1 << mt) - 1), mt)
    if trace is not None:
        trace["syndrome"] = syndrome
        trace["support_before_syndrome"] = support_before
        trace["support_after_syndrome"] = support_after

    try:
        e_hat = code.decode_syndrome(syndrome)
    except DecodeFailure:
        return QuantumVerdict.reject(RejectReason.DECODE_FAILURE)
    if trace is not None:
        trace["error_estimate"] = e_hat

    # Correct, pull the codeword's message into IV, and clear II.
    st.xor_const("II", e_hat)
    st.xor_linear("II", "IV", code.G_rinv)
    st.xor_linear("IV", "II", code.G)
    if st.measure_register("II", rng).bits:
        return QuantumVerdict.reject(RejectReason.RESIDUE_NONZERO)

    # Unscramble, recover the message into V, and run the parity check.
    st.apply_invertible("IV", priv.S_inv)
    st.xor_linear("IV", "V", pre.G_rinv)
    st.xor_linear("IV", "III", pre.H_t)
    chi = st.measure_register("III", rng)
    if trace is not None:
        trace["auth_check"] = chi
    if chi.bits:
        return QuantumVerdict.reject(RejectReason.AUTH_CHECK_FAILED)

    # A passing check means IV carries exactly the pre-code encoding of V.
    st.xor_linear("V", "IV", pre.G)
    if st.measure_register("IV", rng).bits:
        return QuantumVerdict.reject(RejectReason.RESIDUE_NONZERO)

    return QuantumVerdict.accept(st.extract_amplitudes("V"))


def q_roundtrip(
    msg: QuantumMessage,
    sk: SenderKey,
    priv: PrivateKey,
    d: BitVector | None,
    rng: random.Random,
    policy: ErrorWeightPolicy = ErrorWeightPolicy.EXACTLY_T,
    error: BitVector | None = None,
    trace: dict | None = None,
) -> QuantumVerdict:
    """Encode, optionally tamper with register II, and decode."""
    ts = q_encode(msg, sk, rng, policy, error)
    if d is not None:
        channel_tamper(ts, d)
    return q_decode(ts, priv, rng, trace)
