"""Sparse state-vector simulation over five named bit registers.

Every unitary this protocol needs permutes computational basis states
(XOR by a constant, XOR of a linear image into another register, or an
invertible linear map in place), so a state is just a finite map from
packed basis bitstrings to complex amplitudes.  Cost scales with the
support size, never with 2^(total width), and amplitudes are only ever
moved between keys: the sole floating-point arithmetic on them is the
renormalization after a measurement that actually discards terms.

Register I holds the least significant bits of the packed basis index;
II..V follow contiguously.

State file format (text, LF):

    QMASTATE1
    layout: I=<w>,II=<w>,III=<w>,IV=<w>,V=<w>
    <packed-basis-hex> <re> <im>        (one line per term, keys ascending)

re/im are ``repr`` of Python floats, which round-trips 64-bit values.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from pathlib import Path

from .errors import DimError, FormatError, NormError, ResidueError, SameRegisterError, SingularError
from .gf2 import BitMatrix, BitVector, rank

REGISTER_NAMES = ("I", "II", "III", "IV", "V")

_NORM_TOL = 1e-9


@dataclass(frozen=True)
class RegisterLayout:
    """Widths of registers I..V and their offsets in the packed basis index."""

    widths: tuple[int, int, int, int, int]

    def __post_init__(self) -> None:
        if len(self.widths) != len(REGISTER_NAMES) or any(w < 1 for w in self.widths):
            raise DimError(f"need {len(REGISTER_NAMES)} positive widths, got {self.widths}")

    @classmethod
    def for_scheme(cls, k: int, n: int, n1: int) -> "RegisterLayout":
        # Register III is reused: first for the Goppa syndrome (n - n1
        # bits), then for the pre-code check (n1 - k bits).
        return cls((k, n, max(n - n1, n1 - k), n1, k))

    def index(self, name: str) -> int:
        try:
            return REGISTER_NAMES.index(name)
        except ValueError:
            raise DimError(f"unknown register {name!r}") from None

    def width(self, name: str) -> int:
        return self.widths[self.index(name)]

    def offset(self, name: str) -> int:
        return sum(self.widths[: self.index(name)])

    @property
    def total(self) -> int:
        return sum(self.widths)

    def describe(self) -> str:
        return ",".join(f"{nm}={w}" for nm, w in zip(REGISTER_NAMES, self.widths))

    @classmethod
    def parse(cls, text: str) -> "RegisterLayout":
        widths = []
        parts = text.split(",")
        if len(parts) != len(REGISTER_NAMES):
            raise FormatError(f"layout needs {len(REGISTER_NAMES)} registers: {text!r}")
        for part, nm in zip(parts, REGISTER_NAMES):
            key, _, val = part.partition("=")
            if key != nm or not val.isdigit():
                raise FormatError(f"bad layout entry {part!r}")
            widths.append(int(val))
        return cls(tuple(widths))


@dataclass(frozen=True)
class QuantumMessage:
    """Pure state over k message qubits: basis value -> complex amplitude."""

    k: int
    amplitudes: dict[int, complex]

    def __post_init__(self) -> None:
        if not self.amplitudes:
            raise NormError("message needs at least one amplitude")
        object.__setattr__(self, "amplitudes", dict(self.amplitudes))
        norm_sq = 0.0
        for basis, amp in self.amplitudes.items():
            if not 0 <= basis < 1 << self.k:
                raise DimError(f"basis value {basis:#x} does not fit in {self.k} bits")
            if amp == 0:
                raise NormError(f"zero amplitude stored for basis {basis:#x}")
            norm_sq += abs(amp) ** 2
        if abs(norm_sq - 1.0) > _NORM_TOL:
            raise NormError(f"squared norm {norm_sq} deviates from 1 by more than {_NORM_TOL}")

    @classmethod
    def basis(cls, k: int, value: int) -> "QuantumMessage":
        return cls(k, {value: 1.0 + 0.0j})

    @classmethod
    def uniform(cls, k: int) -> "QuantumMessage":
        amp = complex(1.0 / math.sqrt(1 << k))
        return cls(k, {v: amp for v in range(1 << k)})

    @property
    def support(self) -> int:
        return len(self.amplitudes)


@dataclass
class QState:
    """Sparse register-machine state: packed basis index -> amplitude."""

    layout: RegisterLayout
    table: dict[int, complex] = field(default_factory=dict)

    @classmethod
    def from_message(cls, msg: QuantumMessage, layout: RegisterLayout) -> "QState":
        """Load the message into register I, all other registers zero."""
        if msg.k != layout.width("I"):
            raise DimError(f"message width {msg.k} != register I width {layout.width('I')}")
        return cls(layout, dict(msg.amplitudes))

    def copy(self) -> "QState":
        return QState(self.layout, dict(self.table))

    @property
    def support_size(self) -> int:
        return len(self.table)

    def norm_sq(self) -> float:
        return sum(abs(a) ** 2 for a in self.table.values())

    def register_value(self, key: int, reg: str) -> int:
        return key >> self.layout.offset(reg) & ((1 << self.layout.width(reg)) - 1)

    def constant_value(self, reg: str) -> BitVector | None:
        """The register's value if it is classical across the support, else None."""
        values = {self.register_value(key, reg) for key in self.table}
        if len(values) != 1:
            return None
        return BitVector(values.pop(), self.layout.width(reg))

    # --- basis-permutation operators ---------------------------------

    def xor_linear(self, src: str, dst: str, m: BitMatrix) -> None:
        """XOR the linear image of src into dst's low bits: |u>|v> -> |u>|v ^ uM>."""
        if src == dst:
            raise SameRegisterError(f"src and dst are both {src!r}")
        so, sw = self.layout.offset(src), self.layout.width(src)
        do, dw = self.layout.offset(dst), self.layout.width(dst)
        if m.nrows != sw or m.cols > dw:
            raise DimError(f"matrix {m.nrows}x{m.cols} does not map {src} ({sw}) into {dst} ({dw})")
        smask = (1 << sw) - 1
        rows = m.rows
        new = {}
        for key, amp in self.table.items():
            x = key >> so & smask
            acc = 0
            while x:
                j = (x & -x).bit_length() - 1
                acc ^= rows[j]
                x &= x - 1
            new[key ^ (acc << do)] = amp
        self.table = new

    def xor_const(self, reg: str, c: BitVector) -> None:
        """XOR a constant into a register (a tensor of bit flips)."""
        if c.n != self.layout.width(reg):
            raise DimError(f"constant length {c.n} != register {reg} width {self.layout.width(reg)}")
        if c.bits == 0:
            return
        shifted = c.bits << self.layout.offset(reg)
        self.table = {key ^ shifted: amp for key, amp in self.table.items()}

    def apply_invertible(self, reg: str, m: BitMatrix) -> None:
        """Replace a register's value by its image under an invertible map."""
        w = self.layout.width(reg)
        if m.nrows != w or m.cols != w:
            raise DimError(f"matrix {m.nrows}x{m.cols} is not {w}x{w}")
        if rank(m) != w:
            raise SingularError("in-place register map must be invertible")
        off = self.layout.offset(reg)
        mask = ((1 << w) - 1) << off
        rows = m.rows
        new = {}
        for key, amp in self.table.items():
            x = key >> off & ((1 << w) - 1)
            acc = 0
            while x:
                j = (x & -x).bit_length() - 1
                acc ^= rows[j]
                x &= x - 1
            new[(key & ~mask) | (acc << off)] = amp
        self.table = new

    # --- measurement and extraction ----------------------------------

    def measure_register(self, reg: str, rng: random.Random) -> BitVector:
        """Projective measurement of one register in the computational basis.

        Samples an outcome with Born probability, drops non-matching
        terms, renormalizes.  When the register is classical across the
        support the state (and every amplitude) is left untouched, so a
        deterministic measurement costs no floating-point precision.
        """
        off, w = self.layout.offset(reg), self.layout.width(reg)
        mask = (1 << w) - 1
        probs: dict[int, float] = {}
        for key, amp in self.table.items():
            v = key >> off & mask
            probs[v] = probs.get(v, 0.0) + amp.real * amp.real + amp.imag * amp.imag
        if len(probs) == 1:
            return BitVector(next(iter(probs)), w)
        outcomes = sorted(probs)
        r = rng.random() * sum(probs.values())
        acc = 0.0
        outcome = outcomes[-1]
        for v in outcomes:
            acc += probs[v]
            if r < acc:
                outcome = v
                break
        scale = 1.0 / math.sqrt(probs[outcome])
        self.table = {
            key: amp * scale
            for key, amp in self.table.items()
            if key >> off & mask == outcome
        }
        return BitVector(outcome, w)

    def extract_amplitudes(self, reg: str) -> QuantumMessage:
        """Amplitude map over one register, requiring all others to be zero."""
        off, w = self.layout.offset(reg), self.layout.width(reg)
        mask = (1 << w) - 1
        amps: dict[int, complex] = {}
        for key, amp in self.table.items():
            if key ^ (key & (mask << off)):
                raise ResidueError(f"register other than {reg} is nonzero in term {key:#x}")
            amps[key >> off & mask] = amp
        return QuantumMessage(w, amps)

    # --- serialization ------------------------------------------------

    def to_text(self) -> str:
        digits = (self.layout.total + 3) // 4
        lines = ["QMASTATE1", f"layout: {self.layout.describe()}"]
        for key in sorted(self.table):
            amp = self.table[key]
            lines.append(f"{key:0{digits}x} {amp.real!r} {amp.imag!r}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "QState":
        lines = text.splitlines()
        if not lines or lines[0] != "QMASTATE1":
            raise FormatError("missing QMASTATE1 header")
        if len(lines) < 2 or not lines[1].startswith("layout: "):
            raise FormatError("missing layout line")
        layout = RegisterLayout.parse(lines[1][len("layout: "):])
        table: dict[int, complex] = {}
        for line in lines[2:]:
            if not line:
                continue
            parts = line.split(" ")
            if len(parts) != 3:
                raise FormatError(f"bad state term line: {line!r}")
            try:
                key = int(parts[0], 16)
                amp = complex(float(parts[1]), float(parts[2]))
            except ValueError as exc:
                raise FormatError(f"bad state term line: {line!r}") from exc
            if key >> layout.total:
                raise FormatError(f"basis index {parts[0]} exceeds layout width")
            if key in table:
                raise FormatError(f"duplicate basis index {parts[0]}")
            table[key] = amp
        st = cls(layout, table)
        if abs(st.norm_sq() - 1.0) > _NORM_TOL:
            raise NormError("state file is not normalized")
        return st

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.to_text(), encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "QState":
        return cls.from_text(Path(path).read_text(encoding="utf-8"))
