"""Key material for both scheme modes, plus the text key-file format.

Public-integrity mode publishes the pre-code together with the disguised
generator, so anyone can authenticate-and-send; hybrid mode keeps the
pre-code as a shared secret between sender and receiver, binding the
message to its origin.

Key files are UTF-8 text with LF line endings:

    QMA1 <public|private|shared>
    mode: <public-integrity|hybrid-auth>
    m: <int>
    t: <int>
    k: <int>
    <sections>

Sections: matrices (``Gp:``, ``S:``, ``A:``) are one hex line per row;
``g:`` is the comma-separated coefficient list of the Goppa polynomial,
degree 0 first; ``P:`` is the comma-separated permutation image.  The
public file stores Gp and t (plus A in public-integrity mode), the
private file stores S, g, P and A, the shared file stores A.  Everything
else is recomputed deterministically on load.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

from .errors import FormatError, ModeMismatchError, ParamError
from .gf2 import BitMatrix, Permutation, invert, mat_mul, random_invertible, random_permutation, right_inverse
from .gf2m import poly_from_text, poly_to_text
from .goppa import MAX_M, GoppaCode
from .syscode import SystematicCode


class Mode(enum.Enum):
    PUBLIC_INTEGRITY = "public-integrity"
    HYBRID_AUTH = "hybrid-auth"


class ErrorWeightPolicy(enum.Enum):
    EXACTLY_T = "exactly-t"
    UP_TO_T = "up-to-t"


@dataclass(frozen=True)
class SchemeParams:
    m: int
    t: int
    k: int
    mode: Mode = Mode.PUBLIC_INTEGRITY
    error_weight_policy: ErrorWeightPolicy = ErrorWeightPolicy.EXACTLY_T

    def __post_init__(self) -> None:
        if not 2 <= self.m <= MAX_M:
            raise ParamError(f"m={self.m} outside supported range 2..{MAX_M}")
        if self.t < 2 or self.m * self.t >= self.n:
            raise ParamError(f"t={self.t} invalid for m={self.m}")
        if not 1 <= self.k < self.n1:
            raise ParamError(f"need 1 <= k < n1={self.n1}, got k={self.k}")

    @property
    def n(self) -> int:
        return 1 << self.m

    @property
    def n1(self) -> int:
        return self.n - self.m * self.t


@dataclass(frozen=True)
class PublicKey:
    params: SchemeParams
    G_pub: BitMatrix             # n1 x n disguised generator S @ G @ P
    G_pub_rinv: BitMatrix        # n x n1
    precode: SystematicCode | None  # present only in public-integrity mode

    @property
    def t(self) -> int:
        return self.params.t


@dataclass(frozen=True)
class PrivateKey:
    params: SchemeParams
    S: BitMatrix
    S_inv: BitMatrix
    P: Permutation
    P_inv: Permutation
    goppa: GoppaCode
    precode: SystematicCode

    def public_matrix(self) -> BitMatrix:
        return self.P.apply_cols(mat_mul(self.S, self.goppa.G))


@dataclass(frozen=True)
class SenderKey:
    """Everything the sending side needs: disguised generator plus pre-code."""

    params: SchemeParams
    G_pub: BitMatrix
    G_pub_rinv: BitMatrix
    precode: SystematicCode

    @property
    def t(self) -> int:
        return self.params.t

    @cached_property
    def encode_matrix(self) -> BitMatrix:
        """Pre-code generator times disguised generator (k x n)."""
        return mat_mul(self.precode.G, self.G_pub)

    @cached_property
    def uncompute_matrix(self) -> BitMatrix:
        """Right inverse of encode_matrix built from the two right inverses (n x k)."""
        return mat_mul(self.G_pub_rinv, self.precode.G_rinv)


def keygen(params: SchemeParams, rng: random.Random) -> tuple[PublicKey, PrivateKey]:
    """Generate a key pair: Goppa code, scrambler S, permutation P, pre-code."""
    code = GoppaCode.generate(params.m, params.t, rng)
    s = random_invertible(params.n1, rng)
    p = random_permutation(params.n, rng)
    g_pub = p.apply_cols(mat_mul(s, code.G))
    g_pub_rinv = right_inverse(g_pub)
    precode = SystematicCode.random(params.k, params.n1, rng)
    pub_precode = precode if params.mode is Mode.PUBLIC_INTEGRITY else None
    pub = PublicKey(params, g_pub, g_pub_rinv, pub_precode)
    priv = PrivateKey(params, s, invert(s), p, p.inverse(), code, precode)
    return pub, priv


def sender_key(pk: PublicKey, shared_precode: SystematicCode | None = None) -> SenderKey:
    """Package a public key (plus the shared pre-code in hybrid mode) for sending."""
    if pk.params.mode is Mode.PUBLIC_INTEGRITY:
        if shared_precode is not None:
            raise ModeMismatchError("public-integrity mode carries its own pre-code")
        precode = pk.precode
    else:
        if shared_precode is None:
            raise ModeMismatchError("hybrid mode needs the shared pre-code")
        precode = shared_precode
    if precode is None:
        raise ModeMismatchError("public key lacks a pre-code")
    return SenderKey(pk.params, pk.G_pub, pk.G_pub_rinv, precode)


# --- text serialization ----------------------------------------------------

_MAGIC = "QMA1"


def _header(kind: str, params: SchemeParams) -> list[str]:
    return [
        f"{_MAGIC} {kind}",
        f"mode: {params.mode.value}",
        f"m: {params.m}",
        f"t: {params.t}",
        f"k: {params.k}",
    ]


def public_key_text(pk: PublicKey) -> str:
    lines = _header("public", pk.params)
    lines.append("Gp:")
    lines.extend(pk.G_pub.to_hex_lines())
    if pk.params.mode is Mode.PUBLIC_INTEGRITY:
        lines.append("A:")
        lines.extend(pk.precode.A.to_hex_lines())
    return "\n".join(lines) + "\n"


def private_key_text(priv: PrivateKey) -> str:
    lines = _header("private", priv.params)
    lines.append("S:")
    lines.extend(priv.S.to_hex_lines())
    lines.append(f"g: {poly_to_text(priv.goppa.g)}")
    lines.append(f"P: {','.join(str(i) for i in priv.P.image)}")
    lines.append("A:")
    lines.extend(priv.precode.A.to_hex_lines())
    return "\n".join(lines) + "\n"


def shared_key_text(precode: SystematicCode, params: SchemeParams) -> str:
    lines = _header("shared", params)
    lines.append("A:")
    lines.extend(precode.A.to_hex_lines())
    return "\n".join(lines) + "\n"


class _Reader:
    def __init__(self, text: str, kind: str):
        self.lines = text.splitlines()
        self.pos = 0
        first = self.next()
        if first != f"{_MAGIC} {kind}":
            raise FormatError(f"expected '{_MAGIC} {kind}' header, got {first!r}")

    def next(self) -> str:
        if self.pos >= len(self.lines):
            raise FormatError("unexpected end of key file")
        line = self.lines[self.pos]
        self.pos += 1
        return line

    def field(self, name: str) -> str:
        line = self.next()
        prefix = f"{name}:"
        if not line.startswith(prefix):
            raise FormatError(f"expected '{name}:' line, got {line!r}")
        return line[len(prefix):].strip()

    def params(self) -> SchemeParams:
        mode = Mode(self.field("mode"))
        m = int(self.field("m"))
        t = int(self.field("t"))
        k = int(self.field("k"))
        return SchemeParams(m, t, k, mode)

    def matrix(self, name: str, nrows: int, cols: int) -> BitMatrix:
        if self.field(name):
            raise FormatError(f"matrix section '{name}:' takes no inline value")
        return BitMatrix.from_hex_lines([self.next() for _ in range(nrows)], cols)


def parse_public_key(text: str) -> PublicKey:
    rd = _Reader(text, "public")
    params = rd.params()
    g_pub = rd.matrix("Gp", params.n1, params.n)
    precode = None
    if params.mode is Mode.PUBLIC_INTEGRITY:
        a = rd.matrix("A", params.k, params.n1 - params.k)
        precode = SystematicCode.from_mixing(params.k, params.n1, a)
    return PublicKey(params, g_pub, right_inverse(g_pub), precode)


def parse_private_key(text: str) -> PrivateKey:
    rd = _Reader(text, "private")
    params = rd.params()
    s = rd.matrix("S", params.n1, params.n1)
    g = poly_from_text(rd.field("g"))
    p = Permutation(tuple(int(i) for i in rd.field("P").split(",")))
    a = rd.matrix("A", params.k, params.n1 - params.k)
    code = GoppaCode.from_polynomial(params.m, params.t, g)
    precode = SystematicCode.from_mixing(params.k, params.n1, a)
    return PrivateKey(params, s, invert(s), p, p.inverse(), code, precode)


def parse_shared_key(text: str) -> tuple[SystematicCode, SchemeParams]:
    rd = _Reader(text, "shared")
    params = rd.params()
    a = rd.matrix("A", params.k, params.n1 - params.k)
    return SystematicCode.from_mixing(params.k, params.n1, a), params


def save_public_key(pk: PublicKey, path: str | Path) -> None:
    Path(path).write_text(public_key_text(pk), encoding="utf-8")


def save_private_key(priv: PrivateKey, path: str | Path) -> None:
    Path(path).write_text(private_key_text(priv), encoding="utf-8")


def save_shared_key(precode: SystematicCode, params: SchemeParams, path: str | Path) -> None:
    Path(path).write_text(shared_key_text(precode, params), encoding="utf-8")


def load_public_key(path: str | Path) -> PublicKey:
    return parse_public_key(Path(path).read_text(encoding="utf-8"))


def load_private_key(path: str | Path) -> PrivateKey:
    return parse_private_key(Path(path).read_text(encoding="utf-8"))


def load_shared_key(path: str | Path) -> tuple[SystematicCode, SchemeParams]:
    return parse_shared_key(Path(path).read_text(encoding="utf-8"))
