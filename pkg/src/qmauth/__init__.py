"""Quantum message authentication from a systematic pre-code under a
Goppa-code trapdoor, with classical and simulated-quantum pipelines."""

from .classical import ClassicalVerdict, RejectReason, c_decode, c_encode, random_error_vector
from .errors import (
    DecodeFailure,
    DimError,
    FormatError,
    ModeMismatchError,
    NormError,
    NotACodewordError,
    NotInvertibleError,
    ParamError,
    QmauthError,
    RankError,
    ResidueError,
    SameRegisterError,
    SingularError,
    ZeroInverseError,
)
from .gf2 import (
    BitMatrix,
    BitVector,
    Permutation,
    invert,
    mat_mul,
    nullspace,
    rank,
    random_invertible,
    random_permutation,
    right_inverse,
    solve,
    vec_mat,
    weight,
)
from .gf2m import FieldParams
from .goppa import GoppaCode
from .keys import (
    ErrorWeightPolicy,
    Mode,
    PrivateKey,
    PublicKey,
    SchemeParams,
    SenderKey,
    keygen,
    load_private_key,
    load_public_key,
    load_shared_key,
    save_private_key,
    save_public_key,
    save_shared_key,
    sender_key,
)
from .qsim import QState, QuantumMessage, RegisterLayout
from .quantum import QuantumVerdict, TransmittedState, channel_tamper, q_decode, q_encode, q_roundtrip
from .syscode import SystematicCode

__version__ = "0.1.0"
